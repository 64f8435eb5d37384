// SPDX-License-Identifier: MIT
#include "zxgopt/extract.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace zxgopt {
namespace {

/// Row-major GF(2) matrix with 64-bit packed rows.
struct Gf2Matrix {
    std::size_t rows = 0, cols = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    Gf2Matrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

    bool get(std::size_t r, std::size_t c) const {
        return (bits[r * words + c / 64] >> (c % 64)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = bits[r * words + c / 64];
        const std::uint64_t m = std::uint64_t{1} << (c % 64);
        if (v) w |= m; else w &= ~m;
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t i = 0; i < words; ++i)
            bits[dst * words + i] ^= bits[src * words + i];
    }
    int row_weight(std::size_t r) const {
        int n = 0;
        for (std::size_t i = 0; i < words; ++i)
            n += std::popcount(bits[r * words + i]);
        return n;
    }
};

/// Gauss-Jordan full reduction, no row swaps. Columns processed in order,
/// pivot = lowest unpivoted row holding a 1. Records (src, dst) row
/// additions dst ^= src.
std::vector<std::pair<std::size_t, std::size_t>> gauss_full_reduce(Gf2Matrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> ops;
    std::vector<bool> pivoted(m.rows, false);
    for (std::size_t c = 0; c < m.cols; ++c) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (!pivoted[r] && m.get(r, c)) { pivot = r; break; }
        }
        if (!pivot) continue;
        pivoted[*pivot] = true;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r != *pivot && m.get(r, c)) {
                m.xor_row(r, *pivot);
                ops.push_back({*pivot, r});
            }
        }
    }
    return ops;
}

constexpr VertexId kDone = 0xffffffffu;

struct Extractor {
    ZXDiagram d;
    std::vector<Gate> rev; // gates in output-to-input emission order
    std::vector<VertexId> frontier; // per output wire; kDone when finished
    int nq;

    explicit Extractor(const ZXDiagram& diagram) : d(diagram) {
        std::string why;
        if (!d.is_graph_like(&why))
            throw std::invalid_argument("extract: diagram is not graph-like: " + why);
        nq = static_cast<int>(d.outputs().size());
        split_shared_outputs();
        frontier.assign(static_cast<std::size_t>(nq), kDone);
        for (int q = 0; q < nq; ++q) {
            const VertexId out = d.outputs()[static_cast<std::size_t>(q)];
            const auto nb = d.neighbors(out);
            if (nb.size() != 1) throw ExtractionError("output with degree != 1");
            if (!d.is_boundary(nb[0])) frontier[static_cast<std::size_t>(q)] = nb[0];
        }
    }

    /// Normalization can fuse the wire spiders of several outputs into one;
    /// the frontier needs a dedicated vertex per wire, so extra output edges
    /// get an identity chain spliced in (hadamard pairs keep the chain
    /// graph-like).
    void split_shared_outputs() {
        std::vector<bool> claimed(d.next_id(), false);
        for (int q = 0; q < nq; ++q) {
            const VertexId out = d.outputs()[static_cast<std::size_t>(q)];
            const auto nb = d.neighbors(out);
            if (nb.size() != 1) throw ExtractionError("output with degree != 1");
            const VertexId v = nb[0];
            if (d.is_boundary(v)) continue;
            if (!claimed[v]) { claimed[v] = true; continue; }
            const auto et = d.edge(v, out);
            d.remove_edges(v, out);
            if (et.had) {
                const VertexId w = d.add_vertex(VertexType::Z, {}, q, d.row_hint(v));
                d.add_edge(v, w, EdgeType::Hadamard);
                d.add_edge(w, out, EdgeType::Simple);
            } else {
                const VertexId w1 = d.add_vertex(VertexType::Z, {}, q, d.row_hint(v));
                const VertexId w2 = d.add_vertex(VertexType::Z, {}, q, d.row_hint(v));
                d.add_edge(v, w1, EdgeType::Hadamard);
                d.add_edge(w1, w2, EdgeType::Hadamard);
                d.add_edge(w2, out, EdgeType::Simple);
            }
        }
    }

    bool is_input(VertexId v) const {
        const auto& ins = d.inputs();
        return std::find(ins.begin(), ins.end(), v) != ins.end();
    }

    VertexId output_of(int q) const { return d.outputs()[static_cast<std::size_t>(q)]; }

    void peel_output_hadamards() {
        for (int q = 0; q < nq; ++q) {
            const VertexId v = frontier[static_cast<std::size_t>(q)];
            if (v == kDone) continue;
            const VertexId out = output_of(q);
            if (d.edge(v, out).had) {
                rev.push_back(Gate::h(q));
                d.set_edge(v, out, EdgeType::Simple);
            }
        }
    }

    void peel_phases() {
        for (int q = 0; q < nq; ++q) {
            const VertexId v = frontier[static_cast<std::size_t>(q)];
            if (v == kDone) continue;
            if (!d.phase(v).is_zero()) {
                rev.push_back(Gate::zrot(q, d.phase(v)));
                d.set_phase(v, {});
            }
        }
    }

    void peel_czs() {
        for (int qa = 0; qa < nq; ++qa) {
            const VertexId va = frontier[static_cast<std::size_t>(qa)];
            if (va == kDone) continue;
            for (int qb = qa + 1; qb < nq; ++qb) {
                const VertexId vb = frontier[static_cast<std::size_t>(qb)];
                if (vb == kDone) continue;
                if (d.edge(va, vb).had) {
                    rev.push_back(Gate::cz(qa, qb));
                    d.remove_edges(va, vb);
                }
            }
        }
    }

    /// Detach frontier vertices from inputs: a vertex whose only remaining
    /// neighbour is an input leaves the frontier; otherwise the input edge
    /// is spaced out with a fresh spider so elimination can treat it as a
    /// normal column.
    void handle_inputs() {
        for (int q = 0; q < nq; ++q) {
            const VertexId v = frontier[static_cast<std::size_t>(q)];
            if (v == kDone) continue;
            VertexId input_nb = kDone;
            std::size_t non_output = 0;
            for (VertexId w : d.neighbors(v)) {
                if (w == output_of(q)) continue;
                ++non_output;
                if (is_input(w)) input_nb = w;
            }
            if (input_nb == kDone) continue;
            if (non_output == 1) {
                frontier[static_cast<std::size_t>(q)] = kDone;
                continue;
            }
            const VertexId b = input_nb;
            const auto et = d.edge(v, b);
            const VertexId w = d.add_vertex(VertexType::Z, {}, d.qubit_hint(b), d.row_hint(b) + 1);
            d.remove_edges(v, b);
            d.add_edge(v, w, EdgeType::Hadamard);
            d.add_edge(w, b, et.had ? EdgeType::Simple : EdgeType::Hadamard);
        }
    }

    std::vector<int> active_rows() const {
        std::vector<int> rows;
        for (int q = 0; q < nq; ++q)
            if (frontier[static_cast<std::size_t>(q)] != kDone) rows.push_back(q);
        return rows;
    }

    std::vector<VertexId> neighbor_columns(const std::vector<int>& rows) const {
        std::vector<VertexId> cols;
        for (int q : rows) {
            const VertexId v = frontier[static_cast<std::size_t>(q)];
            for (VertexId w : d.neighbors(v)) {
                if (w == output_of(q)) continue;
                if (std::find(cols.begin(), cols.end(), w) == cols.end()) cols.push_back(w);
            }
        }
        std::sort(cols.begin(), cols.end());
        return cols;
    }

    /// Advance frontier rows whose biadjacency weight is one; returns the
    /// number of advances.
    int advance(const std::vector<int>& rows, const std::vector<VertexId>& cols,
                const Gf2Matrix& m) {
        int advanced = 0;
        std::vector<bool> claimed(cols.size(), false);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (m.row_weight(r) != 1) continue;
            std::size_t c = 0;
            while (!m.get(r, c)) ++c;
            if (claimed[c]) continue; // a later iteration picks this row up
            claimed[c] = true;
            const int q = rows[r];
            const VertexId v = frontier[static_cast<std::size_t>(q)];
            const VertexId w = cols[c];
            rev.push_back(Gate::h(q));
            d.remove_vertex(v);
            d.add_edge(w, output_of(q), EdgeType::Simple);
            frontier[static_cast<std::size_t>(q)] = w;
            ++advanced;
        }
        return advanced;
    }

    void run() {
        const std::size_t guard = 4 * (d.vertex_count() + static_cast<std::size_t>(nq)) + 16;
        for (std::size_t iter = 0; iter < guard; ++iter) {
            peel_output_hadamards();
            peel_phases();
            peel_czs();
            handle_inputs();

            const auto rows = active_rows();
            if (rows.empty()) { finish(); return; }

            const auto cols = neighbor_columns(rows);
            if (cols.empty()) throw ExtractionError("frontier vertex with no interior neighbours");

            Gf2Matrix m(rows.size(), cols.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const VertexId v = frontier[static_cast<std::size_t>(rows[r])];
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (d.edge(v, cols[c]).had) m.set(r, c, true);
            }

            // A ready row advances without elimination.
            bool ready = false;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (m.row_weight(r) == 1) { ready = true; break; }

            if (!ready) {
                Gf2Matrix reduced = m;
                const auto ops = gauss_full_reduce(reduced);
                for (const auto& [src, dst] : ops)
                    rev.push_back(Gate::cnot(rows[src], rows[dst]));
                // Rewrite frontier adjacency from the reduced matrix.
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    const VertexId v = frontier[static_cast<std::size_t>(rows[r])];
                    for (std::size_t c = 0; c < cols.size(); ++c) {
                        const bool want = reduced.get(r, c);
                        const bool have = d.edge(v, cols[c]).had;
                        if (want != have) {
                            if (want) d.add_edge(v, cols[c], EdgeType::Hadamard);
                            else d.remove_edges(v, cols[c]);
                        }
                    }
                }
                m = std::move(reduced);
            }

            if (advance(rows, cols, m) == 0)
                throw ExtractionError("no extractable vertex after elimination");
        }
        throw ExtractionError("extraction iteration guard exceeded");
    }

    void finish() {
        // Clean up the identity spiders left when wires finished.
        for (int q = 0; q < nq; ++q) {
            const VertexId out = output_of(q);
            auto nb = d.neighbors(out);
            if (nb.size() != 1) throw ExtractionError("output degree changed during extraction");
            VertexId v = nb[0];
            if (d.is_boundary(v)) continue;
            const auto vn = d.neighbors(v);
            if (vn.size() != 2 || !d.phase(v).is_zero())
                throw ExtractionError("unconsumed interior vertex at finish");
            const VertexId b = vn[0] == out ? vn[1] : vn[0];
            if (!is_input(b)) throw ExtractionError("finished wire not anchored at an input");
            const bool had = d.edge(v, b).had != d.edge(v, out).had;
            d.remove_vertex(v);
            d.add_edge(out, b, had ? EdgeType::Hadamard : EdgeType::Simple);
        }

        // Wire hadamards sit at the input side: emitted last, so they lead
        // the reversed circuit.
        std::vector<int> perm(static_cast<std::size_t>(nq), -1);
        for (int q = 0; q < nq; ++q) {
            const VertexId out = output_of(q);
            const auto nb = d.neighbors(out);
            const VertexId b = nb[0];
            if (d.edge(out, b).had) {
                rev.push_back(Gate::h(q));
                d.set_edge(out, b, EdgeType::Simple);
            }
            const auto& ins = d.inputs();
            const auto it = std::find(ins.begin(), ins.end(), b);
            if (it == ins.end()) throw ExtractionError("output not anchored at an input");
            perm[static_cast<std::size_t>(q)] = static_cast<int>(it - ins.begin());
        }

        // Residual permutation as 3-CNOT swaps. The swap block leads the
        // final circuit, so it is appended last here (emission order is
        // reversed at the end); each swap is palindromic.
        std::vector<int> cur(static_cast<std::size_t>(nq)); // input held by each wire
        for (int q = 0; q < nq; ++q) cur[static_cast<std::size_t>(q)] = q;
        std::vector<std::pair<int, int>> swaps;
        for (int q = 0; q < nq; ++q) {
            const int want = perm[static_cast<std::size_t>(q)];
            if (cur[static_cast<std::size_t>(q)] == want) continue;
            int p = q + 1;
            while (cur[static_cast<std::size_t>(p)] != want) ++p;
            swaps.push_back({q, p});
            std::swap(cur[static_cast<std::size_t>(q)], cur[static_cast<std::size_t>(p)]);
        }
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
            rev.push_back(Gate::cnot(it->first, it->second));
            rev.push_back(Gate::cnot(it->second, it->first));
            rev.push_back(Gate::cnot(it->first, it->second));
        }
    }

    Circuit result() {
        run();
        Circuit c(nq);
        c.gates.assign(rev.rbegin(), rev.rend());
        return c;
    }
};

} // namespace

Circuit extract(const ZXDiagram& diagram) { return Extractor(diagram).result(); }

} // namespace zxgopt
