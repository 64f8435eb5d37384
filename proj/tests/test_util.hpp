// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/rng.hpp"

#include <vector>

namespace zxgopt::testutil {

/// Random Clifford+T circuit, uniformly mixing the supported basis.
inline Circuit random_circuit(int n_qubits, int n_gates, Rng& rng, bool with_rz = false) {
    Circuit c(n_qubits);
    for (int i = 0; i < n_gates; ++i) {
        const int pick = static_cast<int>(rng.uniform_int(0, with_rz ? 11 : 10));
        const int q = static_cast<int>(rng.uniform_int(0, n_qubits - 1));
        switch (pick) {
        case 0: c.gates.push_back(Gate::h(q)); break;
        case 1: c.gates.push_back(Gate::x(q)); break;
        case 2: c.gates.push_back(Gate::y(q)); break;
        case 3: c.gates.push_back(Gate::z(q)); break;
        case 4: c.gates.push_back(Gate::s(q)); break;
        case 5: c.gates.push_back(Gate::sdg(q)); break;
        case 6: c.gates.push_back(Gate::t(q)); break;
        case 7: c.gates.push_back(Gate::tdg(q)); break;
        case 8:
        case 9: {
            if (n_qubits < 2) { c.gates.push_back(Gate::h(q)); break; }
            int p = static_cast<int>(rng.uniform_int(0, n_qubits - 2));
            if (p >= q) ++p;
            c.gates.push_back(pick == 8 ? Gate::cnot(q, p) : Gate::cz(q, p));
            break;
        }
        case 10: {
            if (n_qubits < 2) { c.gates.push_back(Gate::t(q)); break; }
            int p = static_cast<int>(rng.uniform_int(0, n_qubits - 2));
            if (p >= q) ++p;
            c.gates.push_back(Gate::cnot(q, p));
            break;
        }
        default:
            c.gates.push_back(Gate::rz(q, Phase(rng.uniform_int(0, 15), 8)));
            break;
        }
    }
    return c;
}

/// Per-qubit gate sequences (by value) coincide: the order-preservation
/// oracle for layering and slicing.
inline bool per_qubit_sequences_equal(const Circuit& a, const Circuit& b) {
    if (a.n_qubits != b.n_qubits) return false;
    for (int q = 0; q < a.n_qubits; ++q) {
        std::vector<Gate> sa, sb;
        for (const Gate& g : a.gates)
            if (g.acts_on(q)) sa.push_back(g);
        for (const Gate& g : b.gates)
            if (g.acts_on(q)) sb.push_back(g);
        if (sa != sb) return false;
    }
    return true;
}

} // namespace zxgopt::testutil
