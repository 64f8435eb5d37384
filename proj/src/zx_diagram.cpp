// SPDX-License-Identifier: MIT
#include "zxgopt/zx_diagram.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace zxgopt {

VertexId ZXDiagram::add_vertex(VertexType t, Phase p, int qubit, int row) {
    verts_.push_back({t, p, qubit, row, true});
    adj_.emplace_back();
    ++alive_count_;
    return static_cast<VertexId>(verts_.size() - 1);
}

void ZXDiagram::remove_vertex(VertexId v) {
    if (!alive(v)) return;
    for (auto& [w, bits] : adj_[v]) adj_[w].erase(v);
    adj_[v].clear();
    verts_[v].alive = false;
    --alive_count_;
}

void ZXDiagram::add_edge(VertexId u, VertexId v, EdgeType t) {
    if (u == v) {
        if (t == EdgeType::Hadamard) add_to_phase(u, Phase::pi());
        return;
    }
    EdgeBits bits = edge(u, v);
    if (t == EdgeType::Simple) bits.simple = true;
    else bits.had = !bits.had;
    if (bits.any()) { adj_[u][v] = bits; adj_[v][u] = bits; }
    else remove_edges(u, v);
}

void ZXDiagram::remove_edges(VertexId u, VertexId v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
}

void ZXDiagram::set_edge(VertexId u, VertexId v, EdgeType t) {
    EdgeBits bits;
    if (t == EdgeType::Simple) bits.simple = true;
    else bits.had = true;
    adj_[u][v] = bits;
    adj_[v][u] = bits;
}

ZXDiagram::EdgeBits ZXDiagram::edge(VertexId u, VertexId v) const {
    auto it = adj_[u].find(v);
    return it == adj_[u].end() ? EdgeBits{} : it->second;
}

std::vector<VertexId> ZXDiagram::vertices() const {
    std::vector<VertexId> out;
    out.reserve(alive_count_);
    for (VertexId v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive) out.push_back(v);
    return out;
}

std::vector<VertexId> ZXDiagram::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(adj_[v].size());
    for (const auto& [w, bits] : adj_[v]) out.push_back(w);
    return out;
}

std::vector<std::pair<std::pair<VertexId, VertexId>, ZXDiagram::EdgeBits>> ZXDiagram::edges() const {
    std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeBits>> out;
    for (VertexId u = 0; u < verts_.size(); ++u) {
        if (!verts_[u].alive) continue;
        for (const auto& [v, bits] : adj_[u])
            if (u < v) out.push_back({{u, v}, bits});
    }
    return out;
}

int ZXDiagram::count_hadamard_edges() const {
    int n = 0;
    for (const auto& [pair, bits] : edges())
        if (bits.had) ++n;
    return n;
}

bool ZXDiagram::is_graph_like(std::string* why) const {
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (VertexId v : vertices()) {
        if (type_of(v) == VertexType::X) return reject("X spider present");
        if (is_boundary(v)) {
            if (degree(v) != 1) return reject("boundary vertex with degree != 1");
            if (!phase(v).is_zero()) return reject("boundary vertex with phase");
        }
    }
    for (const auto& [pair, bits] : edges()) {
        const auto [u, v] = pair;
        if (bits.simple && bits.had) return reject("unresolved parallel edge state");
        const bool ub = is_boundary(u), vb = is_boundary(v);
        if (ub && vb) {
            if (bits.had) return reject("hadamard edge between boundaries");
        } else if (ub || vb) {
            if (bits.had) return reject("hadamard edge on a boundary");
        } else {
            if (bits.simple) return reject("simple edge between spiders");
        }
    }
    return true;
}

std::string ZXDiagram::to_dot() const {
    std::ostringstream os;
    os << "graph zx {\n";
    for (VertexId v : vertices()) {
        os << "  v" << v << " [label=\"";
        switch (type_of(v)) {
        case VertexType::Z: os << "Z"; break;
        case VertexType::X: os << "X"; break;
        case VertexType::Boundary: os << "B"; break;
        }
        if (!phase(v).is_zero()) os << ":" << phase(v).str();
        os << "\"";
        if (is_boundary(v)) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& [pair, bits] : edges()) {
        os << "  v" << pair.first << " -- v" << pair.second;
        if (bits.had) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

ZXDiagram to_graph(const Circuit& c) {
    c.validate();
    ZXDiagram d;
    const int n = c.n_qubits;
    std::vector<VertexId> cur(static_cast<std::size_t>(n));
    std::vector<EdgeType> pend(static_cast<std::size_t>(n), EdgeType::Simple);
    std::vector<VertexId> ins, outs;
    for (int q = 0; q < n; ++q) {
        const VertexId b = d.add_vertex(VertexType::Boundary, {}, q, 0);
        ins.push_back(b);
        cur[static_cast<std::size_t>(q)] = b;
    }

    int row = 1;
    auto attach = [&](int q, VertexId v) {
        d.add_edge(cur[static_cast<std::size_t>(q)], v, pend[static_cast<std::size_t>(q)]);
        cur[static_cast<std::size_t>(q)] = v;
        pend[static_cast<std::size_t>(q)] = EdgeType::Simple;
    };

    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case GateKind::H:
            pend[static_cast<std::size_t>(g.q0)] =
                pend[static_cast<std::size_t>(g.q0)] == EdgeType::Simple ? EdgeType::Hadamard
                                                                         : EdgeType::Simple;
            break;
        case GateKind::X:
            attach(g.q0, d.add_vertex(VertexType::X, Phase::pi(), g.q0, row));
            break;
        case GateKind::Y:
            // Y = X * Z up to global phase
            attach(g.q0, d.add_vertex(VertexType::Z, Phase::pi(), g.q0, row));
            attach(g.q0, d.add_vertex(VertexType::X, Phase::pi(), g.q0, row));
            break;
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RZ:
            attach(g.q0, d.add_vertex(VertexType::Z, g.z_phase(), g.q0, row));
            break;
        case GateKind::CNOT: {
            const VertexId vc = d.add_vertex(VertexType::Z, {}, g.q0, row);
            const VertexId vt = d.add_vertex(VertexType::X, {}, g.q1, row);
            attach(g.q0, vc);
            attach(g.q1, vt);
            d.add_edge(vc, vt, EdgeType::Simple);
            break;
        }
        case GateKind::CZ: {
            const VertexId va = d.add_vertex(VertexType::Z, {}, g.q0, row);
            const VertexId vb = d.add_vertex(VertexType::Z, {}, g.q1, row);
            attach(g.q0, va);
            attach(g.q1, vb);
            d.add_edge(va, vb, EdgeType::Hadamard);
            break;
        }
        }
        ++row;
    }

    for (int q = 0; q < n; ++q) {
        const VertexId b = d.add_vertex(VertexType::Boundary, {}, q, row);
        outs.push_back(b);
        d.add_edge(cur[static_cast<std::size_t>(q)], b, pend[static_cast<std::size_t>(q)]);
    }
    d.set_inputs(std::move(ins));
    d.set_outputs(std::move(outs));
    return d;
}

namespace {

/// Fuse v into u along their simple edge; u keeps its hints.
void fuse_into(ZXDiagram& d, VertexId u, VertexId v) {
    d.add_to_phase(u, d.phase(v));
    ZXDiagram::EdgeBits uv = d.edge(u, v);
    d.remove_edges(u, v);
    // A parallel hadamard edge between the fused pair becomes a hadamard
    // self-loop: phase += pi.
    if (uv.had) d.add_to_phase(u, Phase::pi());
    for (VertexId w : d.neighbors(v)) {
        const ZXDiagram::EdgeBits bits = d.edge(v, w);
        if (bits.simple) d.add_edge(u, w, EdgeType::Simple);
        if (bits.had) d.add_edge(u, w, EdgeType::Hadamard);
    }
    d.remove_vertex(v);
}

} // namespace

void normalize_graph_like(ZXDiagram& d) {
    // Colour change first: afterwards every spider is Z and all the Z-only
    // resolution rules below apply uniformly.
    for (VertexId v : d.vertices()) {
        if (d.type_of(v) != VertexType::X) continue;
        d.set_type(v, VertexType::Z);
        for (VertexId w : d.neighbors(v)) {
            ZXDiagram::EdgeBits bits = d.edge(v, w);
            std::swap(bits.simple, bits.had);
            d.remove_edges(v, w);
            if (bits.simple) d.add_edge(v, w, EdgeType::Simple);
            if (bits.had) d.add_edge(v, w, EdgeType::Hadamard);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;

        // Fusion along simple spider-spider edges (resolves mixed edge
        // states as hadamard self-loops).
        for (const auto& [pair, bits] : d.edges()) {
            const auto [u, v] = pair;
            if (!d.alive(u) || !d.alive(v)) continue;
            if (!d.edge(u, v).simple) continue;
            if (d.is_boundary(u) || d.is_boundary(v)) continue;
            fuse_into(d, u, v);
            changed = true;
        }

        // Identity removal: phase-0 Z spiders of degree 2. Skipped when the
        // merged edge would put a hadamard edge on a boundary (that shape is
        // the graph-like representation of a lone wire Hadamard).
        for (VertexId v : d.vertices()) {
            if (!d.alive(v) || d.is_boundary(v)) continue;
            if (!d.phase(v).is_zero() || d.degree(v) != 2) continue;
            const auto nb = d.neighbors(v);
            const VertexId a = nb[0], b = nb[1];
            const ZXDiagram::EdgeBits ea = d.edge(v, a), eb = d.edge(v, b);
            if ((ea.simple && ea.had) || (eb.simple && eb.had)) continue; // fuse first
            const bool merged_had = ea.had != eb.had;
            if (merged_had && (d.is_boundary(a) || d.is_boundary(b))) continue;
            d.remove_vertex(v);
            d.add_edge(a, b, merged_had ? EdgeType::Hadamard : EdgeType::Simple);
            changed = true;
        }

        // Isolated interior spiders are scalar factors; drop them.
        for (VertexId v : d.vertices()) {
            if (!d.is_boundary(v) && d.degree(v) == 0) {
                d.remove_vertex(v);
                changed = true;
            }
        }
    }

    // Boundary repair: a hadamard edge touching a boundary gets a phase-0
    // spider spliced in so boundary edges are simple.
    bool fixed = true;
    while (fixed) {
        fixed = false;
        for (const auto& [pair, bits] : d.edges()) {
            const auto [u, v] = pair;
            if (!bits.had) continue;
            const bool ub = d.is_boundary(u), vb = d.is_boundary(v);
            if (!ub && !vb) continue;
            if (ub && vb) {
                const VertexId w1 = d.add_vertex(VertexType::Z, {}, d.qubit_hint(u), d.row_hint(u));
                const VertexId w2 = d.add_vertex(VertexType::Z, {}, d.qubit_hint(v), d.row_hint(v));
                d.remove_edges(u, v);
                d.add_edge(u, w1, EdgeType::Simple);
                d.add_edge(w1, w2, EdgeType::Hadamard);
                d.add_edge(w2, v, EdgeType::Simple);
            } else {
                const VertexId b = ub ? u : v;
                const VertexId s = ub ? v : u;
                const VertexId w = d.add_vertex(VertexType::Z, {}, d.qubit_hint(b), d.row_hint(b));
                d.remove_edges(u, v);
                d.add_edge(s, w, EdgeType::Hadamard);
                d.add_edge(w, b, EdgeType::Simple);
            }
            fixed = true;
            break;
        }
    }
}

} // namespace zxgopt
