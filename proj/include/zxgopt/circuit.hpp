// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/phase.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zxgopt {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, RZ, CNOT, CZ };

const char* gate_kind_name(GateKind k);

/// One gate of the Clifford+T (+RZ, +CZ) basis. Two-qubit gates store
/// (q0, q1) = (control, target) for CNOT; CZ is symmetric but keeps the
/// textual operand order. RZ carries an exact rational phase; the other
/// Z-rotations have their phase implied by the kind.
struct Gate {
    GateKind kind;
    int q0;
    int q1;      // -1 for single-qubit gates
    Phase phase; // nonzero only for RZ

    static Gate h(int q) { return {GateKind::H, q, -1, {}}; }
    static Gate x(int q) { return {GateKind::X, q, -1, {}}; }
    static Gate y(int q) { return {GateKind::Y, q, -1, {}}; }
    static Gate z(int q) { return {GateKind::Z, q, -1, {}}; }
    static Gate s(int q) { return {GateKind::S, q, -1, {}}; }
    static Gate sdg(int q) { return {GateKind::Sdg, q, -1, {}}; }
    static Gate t(int q) { return {GateKind::T, q, -1, {}}; }
    static Gate tdg(int q) { return {GateKind::Tdg, q, -1, {}}; }
    static Gate rz(int q, Phase p) { return {GateKind::RZ, q, -1, p}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t, {}}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, a, b, {}}; }

    /// Z-rotation by `p`, canonicalized to Z/S/Sdg/T/Tdg when the phase
    /// matches one of those gates. Returns no gate (H kind sentinel never
    /// used): callers must skip zero phases themselves.
    static Gate zrot(int q, Phase p);

    bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::CZ; }
    /// True for gates diagonal in the computational basis.
    bool is_z_rotation() const {
        switch (kind) {
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RZ: return true;
        default: return false;
        }
    }
    /// The rotation angle for Z-rotation kinds (implied or explicit).
    Phase z_phase() const;

    Gate inverse() const;

    bool acts_on(int q) const { return q0 == q || q1 == q; }

    bool operator==(const Gate& o) const {
        return kind == o.kind && q0 == o.q0 && q1 == o.q1 && phase == o.phase;
    }
    bool operator!=(const Gate& o) const { return !(*this == o); }
};

/// Ordered gate list over a fixed qubit count; sequence order is execution
/// order. Immutable by convention: operations return new circuits.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}
    Circuit(int n, std::vector<Gate> gs) : n_qubits(n), gates(std::move(gs)) {}

    std::size_t size() const { return gates.size(); }

    /// Throws std::invalid_argument when a gate violates the arity or
    /// qubit-range invariants.
    void validate() const;

    bool operator==(const Circuit& o) const {
        return n_qubits == o.n_qubits && gates == o.gates;
    }
};

/// Depth-indexed partition of a circuit's gates: layers[t] holds indices
/// into the source circuit, gates within one layer act on disjoint qubits.
struct LayeredCircuit {
    std::vector<std::vector<std::size_t>> layers;

    std::size_t depth() const { return layers.size(); }
};

struct CostReport {
    int two_qubit_count = 0;
    int total_count = 0;
    int h_count = 0;
    int t_count = 0;
    int depth = 0;
};

/// Layer index assignment: a gate lands one past the deepest earlier gate
/// sharing any of its qubits (two-qubit gates take the larger of the two).
LayeredCircuit compute_layers(const Circuit& c);

CostReport gate_stats(const Circuit& c);

/// Per-qubit gate index sequences; used to check order preservation.
std::vector<std::vector<std::size_t>> per_qubit_sequences(const Circuit& c);

} // namespace zxgopt
