// SPDX-License-Identifier: MIT
#include "zxgopt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace zxgopt {

double Phase::radians() const { return units_of_pi() * std::numbers::pi; }

std::string Phase::str() const {
    std::ostringstream os;
    if (num_ == 0) return "0";
    if (den_ == 1) {
        if (num_ == 1) return "pi";
        os << num_ << "*pi";
        return os.str();
    }
    if (num_ == 1) os << "pi/" << den_;
    else os << num_ << "*pi/" << den_;
    return os.str();
}

const char* gate_kind_name(GateKind k) {
    switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    }
    return "?";
}

Gate Gate::zrot(int q, Phase p) {
    if (p == Phase(1, 1)) return z(q);
    if (p == Phase(1, 2)) return s(q);
    if (p == Phase(3, 2)) return sdg(q);
    if (p == Phase(1, 4)) return t(q);
    if (p == Phase(7, 4)) return tdg(q);
    return rz(q, p);
}

Phase Gate::z_phase() const {
    switch (kind) {
    case GateKind::Z: return Phase(1, 1);
    case GateKind::S: return Phase(1, 2);
    case GateKind::Sdg: return Phase(3, 2);
    case GateKind::T: return Phase(1, 4);
    case GateKind::Tdg: return Phase(7, 4);
    case GateKind::RZ: return phase;
    default: throw std::logic_error("z_phase on non-Z-rotation gate");
    }
}

Gate Gate::inverse() const {
    switch (kind) {
    case GateKind::S: return sdg(q0);
    case GateKind::Sdg: return s(q0);
    case GateKind::T: return tdg(q0);
    case GateKind::Tdg: return t(q0);
    case GateKind::RZ: return rz(q0, -phase);
    default: return *this; // H, X, Y, Z, CNOT, CZ are self-inverse
    }
}

void Circuit::validate() const {
    if (n_qubits <= 0) throw std::invalid_argument("circuit must have at least one qubit");
    for (const Gate& g : gates) {
        const bool two = g.is_two_qubit();
        if (g.q0 < 0 || g.q0 >= n_qubits)
            throw std::invalid_argument("gate qubit index out of range");
        if (two) {
            if (g.q1 < 0 || g.q1 >= n_qubits)
                throw std::invalid_argument("gate qubit index out of range");
            if (g.q1 == g.q0)
                throw std::invalid_argument("two-qubit gate with identical operands");
        } else if (g.q1 != -1) {
            throw std::invalid_argument("single-qubit gate with a second operand");
        }
        if (g.kind != GateKind::RZ && !g.phase.is_zero())
            throw std::invalid_argument("explicit phase on a non-RZ gate");
    }
}

LayeredCircuit compute_layers(const Circuit& c) {
    std::vector<int> qubit_depth(static_cast<std::size_t>(c.n_qubits), 0);
    LayeredCircuit lc;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        int layer = qubit_depth[static_cast<std::size_t>(g.q0)] + 1;
        if (g.is_two_qubit())
            layer = std::max(layer, qubit_depth[static_cast<std::size_t>(g.q1)] + 1);
        qubit_depth[static_cast<std::size_t>(g.q0)] = layer;
        if (g.is_two_qubit()) qubit_depth[static_cast<std::size_t>(g.q1)] = layer;
        if (static_cast<std::size_t>(layer) > lc.layers.size())
            lc.layers.resize(static_cast<std::size_t>(layer));
        lc.layers[static_cast<std::size_t>(layer) - 1].push_back(i);
    }
    return lc;
}

CostReport gate_stats(const Circuit& c) {
    CostReport r;
    r.total_count = static_cast<int>(c.gates.size());
    for (const Gate& g : c.gates) {
        if (g.is_two_qubit()) ++r.two_qubit_count;
        if (g.kind == GateKind::H) ++r.h_count;
        if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++r.t_count;
    }
    r.depth = static_cast<int>(compute_layers(c).depth());
    return r;
}

std::vector<std::vector<std::size_t>> per_qubit_sequences(const Circuit& c) {
    std::vector<std::vector<std::size_t>> seq(static_cast<std::size_t>(c.n_qubits));
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        seq[static_cast<std::size_t>(g.q0)].push_back(i);
        if (g.is_two_qubit()) seq[static_cast<std::size_t>(g.q1)].push_back(i);
    }
    return seq;
}

} // namespace zxgopt
