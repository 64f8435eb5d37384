// SPDX-License-Identifier: MIT
#include "zxgopt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zxgopt {
namespace {

using cplx = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

void apply_gate(std::vector<cplx>& v, int n, const Gate& g) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t b0 = std::size_t{1} << g.q0;
    switch (g.kind) {
    case GateKind::H:
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & b0) continue;
            const cplx x = v[i], y = v[i | b0];
            v[i] = kInvSqrt2 * (x + y);
            v[i | b0] = kInvSqrt2 * (x - y);
        }
        break;
    case GateKind::X:
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & b0) continue;
            std::swap(v[i], v[i | b0]);
        }
        break;
    case GateKind::Y:
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & b0) continue;
            const cplx x = v[i], y = v[i | b0];
            v[i] = cplx(0, -1) * y;
            v[i | b0] = cplx(0, 1) * x;
        }
        break;
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ: {
        const double th = g.z_phase().radians();
        const cplx ph = std::polar(1.0, th);
        for (std::size_t i = 0; i < dim; ++i)
            if (i & b0) v[i] *= ph;
        break;
    }
    case GateKind::CNOT: {
        const std::size_t bt = std::size_t{1} << g.q1;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!(i & b0) || (i & bt)) continue;
            std::swap(v[i], v[i | bt]);
        }
        break;
    }
    case GateKind::CZ: {
        const std::size_t b1 = std::size_t{1} << g.q1;
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & b0) && (i & b1)) v[i] = -v[i];
        break;
    }
    }
}

} // namespace

CMat unitary_of(const Circuit& c, int max_qubits) {
    c.validate();
    if (c.n_qubits > max_qubits)
        throw std::length_error("unitary_of: circuit exceeds the oracle qubit limit");
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    CMat u(dim, dim);
    std::vector<cplx> col(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::fill(col.begin(), col.end(), cplx{});
        col[j] = 1.0;
        for (const Gate& g : c.gates) apply_gate(col, c.n_qubits, g);
        for (std::size_t i = 0; i < dim; ++i) u.at(i, j) = col[i];
    }
    return u;
}

Equivalence equivalent(const Circuit& a, const Circuit& b, double tol, int max_qubits) {
    if (a.n_qubits != b.n_qubits) return Equivalence::NotEquivalent;
    if (a.n_qubits > max_qubits) return Equivalence::Unverifiable;
    const CMat ua = unitary_of(a, max_qubits);
    const CMat ub = unitary_of(b, max_qubits);
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < ua.a.size(); ++i) {
        const double m = std::abs(ua.a[i]);
        if (m > best) { best = m; imax = i; }
    }
    if (std::abs(ub.a[imax]) < 1e-12) return Equivalence::NotEquivalent;
    cplx phase = ua.a[imax] / ub.a[imax];
    phase /= std::abs(phase);
    for (std::size_t i = 0; i < ua.a.size(); ++i)
        if (std::abs(ua.a[i] - phase * ub.a[i]) > tol) return Equivalence::NotEquivalent;
    return Equivalence::Equivalent;
}

bool proportional(const CMat& a, const CMat& b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    double ma = 0, mb = 0;
    std::size_t ia = 0;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        const double m = std::abs(a.a[i]);
        if (m > ma) { ma = m; ia = i; }
        mb = std::max(mb, std::abs(b.a[i]));
    }
    if (ma < 1e-14 && mb < 1e-14) return true;
    if (ma < 1e-14 || mb < 1e-14) return false;
    if (std::abs(b.a[ia]) / mb < 1e-9) return false;
    const cplx scale = a.a[ia] / b.a[ia];
    for (std::size_t i = 0; i < a.a.size(); ++i)
        if (std::abs(a.a[i] / ma - scale * b.a[i] / ma) > tol) return false;
    return true;
}

namespace {

struct Axis {
    // Edge axis: (from, to) with `from` absorbed; external axes use
    // to == kExternal and `from` encoding output index (bit 31 set) or
    // input index.
    VertexId from;
    VertexId to;
    static constexpr VertexId kExternal = 0xffffffffu;
};

struct ContractionState {
    std::vector<cplx> amp{1.0};
    std::vector<Axis> axes;
    int limit_bits;

    std::size_t find_axis(VertexId from, VertexId to) const {
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (axes[i].from == from && axes[i].to == to) return i;
        throw std::logic_error("zx_tensor: missing contraction axis");
    }
};

} // namespace

CMat zx_tensor(const ZXDiagram& d, int wire_limit) {
    const int n_in = static_cast<int>(d.inputs().size());
    const int n_out = static_cast<int>(d.outputs().size());
    if (n_in + n_out > wire_limit)
        throw std::length_error("zx_tensor: diagram exceeds the wire limit");

    ContractionState st;
    st.limit_bits = 26;

    std::vector<VertexId> order = d.vertices();
    std::vector<bool> absorbed(d.next_id(), false);

    std::vector<int> out_index(d.next_id(), -1), in_index(d.next_id(), -1);
    for (int i = 0; i < n_in; ++i) in_index[d.inputs()[static_cast<std::size_t>(i)]] = i;
    for (int i = 0; i < n_out; ++i) out_index[d.outputs()[static_cast<std::size_t>(i)]] = i;

    auto effective_had = [&](VertexId u, VertexId v) {
        const auto bits = d.edge(u, v);
        if (bits.simple && bits.had)
            throw std::invalid_argument("zx_tensor: unresolved parallel edge state");
        bool had = bits.had;
        if (d.type_of(u) == VertexType::X) had = !had;
        if (d.type_of(v) == VertexType::X) had = !had;
        return had;
    };

    // Greedy order: absorb next the vertex adding the fewest open axes.
    std::vector<VertexId> remaining = order;
    while (!remaining.empty()) {
        std::size_t pick = 0;
        int best_delta = 1 << 20;
        int best_row = 1 << 20;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            const VertexId v = remaining[i];
            int bound = 0;
            for (VertexId w : d.neighbors(v))
                if (absorbed[w]) ++bound;
            const int fresh = static_cast<int>(d.degree(v)) - bound +
                              (d.is_boundary(v) ? 1 : 0);
            const int delta = fresh - bound;
            const int row = d.row_hint(v);
            if (delta < best_delta || (delta == best_delta && row < best_row)) {
                best_delta = delta;
                best_row = row;
                pick = i;
            }
        }
        const VertexId v = remaining[pick];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));

        // Gather legs.
        std::vector<std::size_t> bound_axes;
        std::vector<std::pair<VertexId, bool>> fresh_legs; // (neighbor, had)
        for (VertexId w : d.neighbors(v)) {
            if (absorbed[w]) bound_axes.push_back(st.find_axis(w, v));
            else fresh_legs.push_back({w, effective_had(v, w)});
        }
        const bool external = d.is_boundary(v);

        const std::size_t m_old = st.axes.size();
        std::vector<bool> is_bound(m_old, false);
        for (std::size_t b : bound_axes) is_bound[b] = true;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m_old; ++i)
            if (!is_bound[i]) keep.push_back(i);

        const std::size_t m_keep = keep.size();
        const std::size_t k_new = fresh_legs.size() + (external ? 1 : 0);
        const std::size_t m_new = m_keep + k_new;
        if (static_cast<int>(m_new) > st.limit_bits)
            throw std::length_error("zx_tensor: intermediate tensor too large");

        const cplx phase_w = std::polar(1.0, d.phase(v).radians());

        std::vector<cplx> out(std::size_t{1} << m_new, cplx{});
        const std::size_t keep_mask = (std::size_t{1} << m_keep) - 1;
        for (std::size_t idx = 0; idx < out.size(); ++idx) {
            const std::size_t keep_bits = idx & keep_mask;
            const std::size_t new_bits = idx >> m_keep;
            cplx acc{};
            for (int x = 0; x < 2; ++x) {
                cplx w = (x == 1) ? phase_w : cplx{1.0};
                bool zero = false;
                std::size_t leg = 0;
                for (; leg < fresh_legs.size(); ++leg) {
                    const int y = static_cast<int>((new_bits >> leg) & 1);
                    if (fresh_legs[leg].second) {
                        w *= kInvSqrt2 * ((x & y) ? -1.0 : 1.0);
                    } else if (y != x) {
                        zero = true;
                        break;
                    }
                }
                if (zero) continue;
                if (external) {
                    const int ext_bit = static_cast<int>((new_bits >> leg) & 1);
                    if (ext_bit != x) continue;
                }
                // Scatter keep bits into surviving old positions; bound
                // positions take the spider value x.
                std::size_t old_idx = 0;
                for (std::size_t i = 0; i < m_keep; ++i)
                    if ((keep_bits >> i) & 1) old_idx |= std::size_t{1} << keep[i];
                if (x)
                    for (std::size_t b : bound_axes) old_idx |= std::size_t{1} << b;
                acc += w * st.amp[old_idx];
            }
            out[idx] = acc;
        }

        // New axis bookkeeping: surviving axes first (renumbered), then
        // fresh legs, then the external axis.
        std::vector<Axis> new_axes;
        new_axes.reserve(m_new);
        for (std::size_t i : keep) new_axes.push_back(st.axes[i]);
        for (const auto& [w, had] : fresh_legs) new_axes.push_back({v, w});
        if (external) {
            const VertexId tag = out_index[v] >= 0
                                     ? (0x80000000u | static_cast<VertexId>(out_index[v]))
                                     : static_cast<VertexId>(in_index[v]);
            new_axes.push_back({tag, Axis::kExternal});
        }
        st.amp = std::move(out);
        st.axes = std::move(new_axes);
        absorbed[v] = true;
    }

    // All edge axes are contracted; only externals remain.
    const std::size_t m = st.axes.size();
    if (m != static_cast<std::size_t>(n_in + n_out))
        throw std::logic_error("zx_tensor: dangling axes after contraction");

    std::vector<int> axis_for_out(static_cast<std::size_t>(n_out), -1);
    std::vector<int> axis_for_in(static_cast<std::size_t>(n_in), -1);
    for (std::size_t i = 0; i < m; ++i) {
        const VertexId tag = st.axes[i].from;
        if (tag & 0x80000000u)
            axis_for_out[tag & 0x7fffffffu] = static_cast<int>(i);
        else
            axis_for_in[tag] = static_cast<int>(i);
    }

    CMat result(std::size_t{1} << n_out, std::size_t{1} << n_in);
    for (std::size_t idx = 0; idx < st.amp.size(); ++idx) {
        std::size_t r = 0, c = 0;
        for (int q = 0; q < n_out; ++q)
            if ((idx >> axis_for_out[static_cast<std::size_t>(q)]) & 1) r |= std::size_t{1} << q;
        for (int q = 0; q < n_in; ++q)
            if ((idx >> axis_for_in[static_cast<std::size_t>(q)]) & 1) c |= std::size_t{1} << q;
        result.at(r, c) = st.amp[idx];
    }
    return result;
}

bool diagram_matches_circuit(const ZXDiagram& d, const Circuit& c, double tol) {
    const CMat t = zx_tensor(d);
    const CMat u = unitary_of(c);
    return proportional(t, u, tol);
}

} // namespace zxgopt
