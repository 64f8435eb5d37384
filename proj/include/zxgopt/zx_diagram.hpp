// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/phase.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zxgopt {

enum class VertexType { Z, X, Boundary };
enum class EdgeType { Simple, Hadamard };

using VertexId = std::uint32_t;

/// Open graph of Z/X/boundary spiders with rational phases. Between any two
/// vertices the edge state is a pair of bits (simple present, hadamard
/// parity): parallel Hadamard edges between same-colour spiders cancel
/// pairwise and parallel simple edges collapse, so two bits represent every
/// combination that can arise during rewriting. Vertex ids are never reused
/// within a diagram's lifetime, which makes stale rule matches detectable.
class ZXDiagram {
public:
    struct EdgeBits {
        bool simple = false;
        bool had = false;
        bool any() const { return simple || had; }
    };

    VertexId add_vertex(VertexType t, Phase p = {}, int qubit = -1, int row = 0);
    void remove_vertex(VertexId v);

    /// Adds one edge of the given type, combining with an existing edge
    /// state: simple is idempotent, hadamard toggles. A hadamard self-loop
    /// adds pi to the vertex phase; a simple self-loop vanishes.
    void add_edge(VertexId u, VertexId v, EdgeType t);
    void remove_edges(VertexId u, VertexId v);
    void set_edge(VertexId u, VertexId v, EdgeType t); // replace whole state
    EdgeBits edge(VertexId u, VertexId v) const;
    bool connected(VertexId u, VertexId v) const { return edge(u, v).any(); }

    bool alive(VertexId v) const { return v < verts_.size() && verts_[v].alive; }
    VertexType type_of(VertexId v) const { return verts_[v].type; }
    void set_type(VertexId v, VertexType t) { verts_[v].type = t; }
    const Phase& phase(VertexId v) const { return verts_[v].phase; }
    void set_phase(VertexId v, Phase p) { verts_[v].phase = p; }
    void add_to_phase(VertexId v, const Phase& p) { verts_[v].phase += p; }
    int qubit_hint(VertexId v) const { return verts_[v].qubit; }
    int row_hint(VertexId v) const { return verts_[v].row; }
    void set_hints(VertexId v, int qubit, int row) { verts_[v].qubit = qubit; verts_[v].row = row; }

    std::size_t degree(VertexId v) const { return adj_[v].size(); }
    bool is_boundary(VertexId v) const { return verts_[v].type == VertexType::Boundary; }

    const std::vector<VertexId>& inputs() const { return inputs_; }
    const std::vector<VertexId>& outputs() const { return outputs_; }
    void set_inputs(std::vector<VertexId> v) { inputs_ = std::move(v); }
    void set_outputs(std::vector<VertexId> v) { outputs_ = std::move(v); }

    /// Alive vertex ids in ascending order.
    std::vector<VertexId> vertices() const;
    /// Neighbour ids of v in ascending order.
    std::vector<VertexId> neighbors(VertexId v) const;
    /// Edge list as (u, v, bits) with u < v, ascending.
    std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeBits>> edges() const;

    std::size_t vertex_count() const { return alive_count_; }
    int count_hadamard_edges() const;
    std::size_t next_id() const { return verts_.size(); }

    /// Graph-like predicate: only Z spiders, spider-spider edges hadamard,
    /// boundary edges simple, boundaries degree 1 with phase 0, no pending
    /// mixed edge states. Direct input-output wires are permitted.
    bool is_graph_like(std::string* why = nullptr) const;

    /// DOT dump for inspection; not a stability contract.
    std::string to_dot() const;

private:
    struct VertexData {
        VertexType type = VertexType::Z;
        Phase phase;
        int qubit = -1;
        int row = 0;
        bool alive = false;
    };

    std::vector<VertexData> verts_;
    std::vector<std::map<VertexId, EdgeBits>> adj_;
    std::vector<VertexId> inputs_, outputs_;
    std::size_t alive_count_ = 0;
};

/// Gate-by-gate circuit translation: H toggles the pending wire edge type,
/// Z-rotations become phased Z spiders, X an X spider with phase pi, CNOT a
/// connected Z(control)/X(target) pair, CZ two Z spiders joined by a
/// hadamard edge.
ZXDiagram to_graph(const Circuit& c);

/// Exhaustive colour change + fusion + identity removal + parallel-edge and
/// self-loop resolution, plus boundary hadamard-edge repair: returns the
/// graph-like form. Used both as the pipeline preprocessing step and as the
/// renormalization pass after each rewrite.
void normalize_graph_like(ZXDiagram& d);

inline ZXDiagram preprocess(ZXDiagram d) {
    normalize_graph_like(d);
    return d;
}

} // namespace zxgopt
