// SPDX-License-Identifier: MIT
#include "zxgopt/merge_opt.hpp"

#include <algorithm>
#include <stdexcept>

namespace zxgopt {

Circuit merge(const std::vector<Circuit>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge: no parts");
    Circuit out(parts.front().n_qubits);
    for (const Circuit& p : parts) {
        if (p.n_qubits != out.n_qubits)
            throw std::invalid_argument("merge: qubit count mismatch");
        out.gates.insert(out.gates.end(), p.gates.begin(), p.gates.end());
    }
    return out;
}

namespace {

bool supports_disjoint(const Gate& a, const Gate& b) {
    if (a.acts_on(b.q0)) return false;
    if (b.is_two_qubit() && a.acts_on(b.q1)) return false;
    return true;
}

bool is_diagonal(const Gate& g) { return g.is_z_rotation() || g.kind == GateKind::CZ; }

/// May `g` be delayed past `h` (h earlier in the circuit)? Disjoint supports
/// always commute; beyond that only the enumerated rules apply.
bool commutes(const Gate& h, const Gate& g) {
    if (supports_disjoint(h, g)) return true;
    if (is_diagonal(g) && is_diagonal(h)) return true;
    // Diagonal gates pass a CNOT touching them only at its control.
    if (is_diagonal(g) && h.kind == GateKind::CNOT) {
        const bool hits_target = g.acts_on(h.q1);
        return !hits_target;
    }
    if (is_diagonal(h) && g.kind == GateKind::CNOT) {
        const bool hits_target = h.acts_on(g.q1);
        return !hits_target;
    }
    // X passes a CNOT touching it only at its target.
    if (g.kind == GateKind::X && h.kind == GateKind::CNOT) return h.q1 == g.q0;
    if (h.kind == GateKind::X && g.kind == GateKind::CNOT) return g.q1 == h.q0;
    return false;
}

bool cancels(const Gate& h, const Gate& g) {
    if (h.kind != g.kind) return false;
    switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
        return h.q0 == g.q0;
    case GateKind::CNOT:
        return h.q0 == g.q0 && h.q1 == g.q1;
    case GateKind::CZ:
        return (h.q0 == g.q0 && h.q1 == g.q1) || (h.q0 == g.q1 && h.q1 == g.q0);
    default:
        return false;
    }
}

Circuit forward_pass(const Circuit& c) {
    Circuit out(c.n_qubits);
    for (const Gate& g : c.gates) {
        bool absorbed = false;
        for (std::size_t k = out.gates.size(); k-- > 0;) {
            Gate& h = out.gates[k];
            if (cancels(h, g)) {
                out.gates.erase(out.gates.begin() + static_cast<std::ptrdiff_t>(k));
                absorbed = true;
                break;
            }
            if (g.is_z_rotation() && h.is_z_rotation() && h.q0 == g.q0) {
                const Phase sum = h.z_phase() + g.z_phase();
                if (sum.is_zero())
                    out.gates.erase(out.gates.begin() + static_cast<std::ptrdiff_t>(k));
                else
                    h = Gate::zrot(h.q0, sum);
                absorbed = true;
                break;
            }
            if (!commutes(h, g)) break;
        }
        if (!absorbed) out.gates.push_back(g);
    }
    return out;
}

Circuit reversed_inverse(const Circuit& c) {
    Circuit out(c.n_qubits);
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
        out.gates.push_back(it->inverse());
    return out;
}

} // namespace

Circuit basic_optimize(const Circuit& c) {
    Circuit cur = c;
    while (true) {
        const std::size_t before = cur.gates.size();
        cur = forward_pass(cur);
        cur = reversed_inverse(forward_pass(reversed_inverse(cur)));
        if (cur.gates.size() >= before) break;
    }
    return cur;
}

} // namespace zxgopt
