// SPDX-License-Identifier: MIT
#include "zxgopt/circuit.hpp"
#include "zxgopt/qasm.hpp"
#include "zxgopt/rng.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace zxgopt;

TEST_CASE("phase arithmetic is exact and normalized") {
    CHECK(Phase(1, 2) + Phase(3, 2) == Phase::zero());
    CHECK(Phase(1, 4) + Phase(1, 4) == Phase(1, 2));
    CHECK(Phase(-1, 4) == Phase(7, 4));
    CHECK((-Phase(1, 2)) == Phase(3, 2));
    CHECK(Phase(5, 10) == Phase(1, 2));
    CHECK(Phase(1, -2) == Phase(3, 2));
    CHECK(Phase(1, 2).is_proper_clifford());
    CHECK(Phase(3, 2).is_proper_clifford());
    CHECK_FALSE(Phase(1, 4).is_proper_clifford());
    CHECK(Phase(1, 1).is_pauli());
    CHECK(Phase::zero().is_pauli());
}

TEST_CASE("zrot canonicalizes Clifford+T phases") {
    CHECK(Gate::zrot(0, Phase(1, 2)).kind == GateKind::S);
    CHECK(Gate::zrot(0, Phase(3, 2)).kind == GateKind::Sdg);
    CHECK(Gate::zrot(0, Phase(1, 4)).kind == GateKind::T);
    CHECK(Gate::zrot(0, Phase(7, 4)).kind == GateKind::Tdg);
    CHECK(Gate::zrot(0, Phase(1, 1)).kind == GateKind::Z);
    CHECK(Gate::zrot(0, Phase(3, 8)).kind == GateKind::RZ);
}

TEST_CASE("compute_layers: disjoint supports share a layer") {
    Circuit c(3, {Gate::h(0), Gate::h(1), Gate::h(2)});
    const auto lc = compute_layers(c);
    CHECK(lc.depth() == 1);
    CHECK(lc.layers[0].size() == 3);
}

TEST_CASE("compute_layers: the worked 3-qubit example has depth 9 with one double layer") {
    // Ten gates over three qubits, layered so that only L_3 holds two gates.
    Circuit c(3);
    c.gates.push_back(Gate::h(0));        // g1 L1
    c.gates.push_back(Gate::cnot(0, 1));  // g2 L2
    c.gates.push_back(Gate::t(0));        // g3 L3
    c.gates.push_back(Gate::h(2));        // g4 L3 (after L2 touches nothing on q2... L1)
    c.gates.push_back(Gate::cnot(1, 2));  // g5
    c.gates.push_back(Gate::t(1));        // g6
    c.gates.push_back(Gate::cnot(0, 1));  // g7
    c.gates.push_back(Gate::h(1));        // g8
    c.gates.push_back(Gate::cnot(1, 2));  // g9
    c.gates.push_back(Gate::t(2));        // g10
    const auto lc = compute_layers(c);
    // Layer of each gate equals 1 + max layer of same-qubit predecessors.
    std::vector<int> layer_of(c.gates.size());
    for (std::size_t t = 0; t < lc.depth(); ++t)
        for (std::size_t gi : lc.layers[t]) layer_of[gi] = static_cast<int>(t) + 1;
    CHECK(layer_of[0] == 1);
    CHECK(layer_of[1] == 2);
    CHECK(layer_of[2] == 3);
    CHECK(layer_of[3] == 1);
    CHECK(layer_of[4] == 3);
}

TEST_CASE("compute_layers matches a brute-force predecessor scan on random circuits") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = testutil::random_circuit(4, 30, rng);
        const auto lc = compute_layers(c);
        std::vector<int> layer_of(c.gates.size(), 0);
        for (std::size_t t = 0; t < lc.depth(); ++t)
            for (std::size_t gi : lc.layers[t]) layer_of[gi] = static_cast<int>(t) + 1;
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            int expect = 1;
            for (std::size_t j = 0; j < i; ++j) {
                const bool shares = c.gates[j].acts_on(c.gates[i].q0) ||
                                    (c.gates[i].is_two_qubit() && c.gates[j].acts_on(c.gates[i].q1));
                if (shares) expect = std::max(expect, layer_of[j] + 1);
            }
            CHECK(layer_of[i] == expect);
        }
        // Reconstruction: concatenating layers preserves per-qubit order.
        Circuit rebuilt(c.n_qubits);
        for (const auto& layer : lc.layers)
            for (std::size_t gi : layer) rebuilt.gates.push_back(c.gates[gi]);
        CHECK(testutil::per_qubit_sequences_equal(c, rebuilt));
    }
}

TEST_CASE("gate_stats counts and additivity") {
    Circuit empty(2);
    const auto zero = gate_stats(empty);
    CHECK(zero.total_count == 0);
    CHECK(zero.two_qubit_count == 0);
    CHECK(zero.depth == 0);

    Rng rng(7);
    const Circuit a = testutil::random_circuit(4, 25, rng);
    const Circuit b = testutil::random_circuit(4, 25, rng);
    Circuit ab(4);
    ab.gates = a.gates;
    ab.gates.insert(ab.gates.end(), b.gates.begin(), b.gates.end());
    const auto sa = gate_stats(a), sb = gate_stats(b), sab = gate_stats(ab);
    CHECK(sab.total_count == sa.total_count + sb.total_count);
    CHECK(sab.two_qubit_count == sa.two_qubit_count + sb.two_qubit_count);
    CHECK(sab.h_count == sa.h_count + sb.h_count);
    CHECK(sab.t_count == sa.t_count + sb.t_count);
}

TEST_CASE("parse_qasm basics") {
    const auto r = parse_qasm("qreg q[2]; cx q[0],q[1];");
    CHECK(r.circuit.n_qubits == 2);
    REQUIRE(r.circuit.gates.size() == 1);
    CHECK(r.circuit.gates[0] == Gate::cnot(0, 1));

    const auto r2 = parse_qasm("qreg q[1]; h q[0]; h q[0];");
    REQUIRE(r2.circuit.gates.size() == 2); // no simplification at parse time
    CHECK(r2.circuit.gates[0] == Gate::h(0));
    CHECK(r2.circuit.gates[1] == Gate::h(0));
}

TEST_CASE("parse_qasm handles rz angle forms") {
    const auto r = parse_qasm("qreg q[1]; rz(pi/4) q[0]; rz(-pi/2) q[0]; rz(3*pi/4) q[0];");
    REQUIRE(r.circuit.gates.size() == 3);
    CHECK(r.circuit.gates[0].phase == Phase(1, 4));
    CHECK(r.circuit.gates[1].phase == Phase(3, 2));
    CHECK(r.circuit.gates[2].phase == Phase(3, 4));
    CHECK_FALSE(r.inexact_angles);

    const auto r2 = parse_qasm("qreg q[1]; rz(0.78539816339744831) q[0];");
    CHECK(r2.circuit.gates[0].phase == Phase(1, 4)); // pi/4 in radians
}

TEST_CASE("parse_qasm errors carry positions") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; cy q[0],q[1];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; h q[5];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; measure q[0];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; creg c[2];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("h q[0];"), QasmError);
    try {
        parse_qasm("qreg q[2];\nbadgate q[0];");
        CHECK(false);
    } catch (const QasmError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse_qasm accepts CRLF and comments") {
    const auto r = parse_qasm("OPENQASM 2.0;\r\ninclude \"qelib1.inc\";\r\n// c\r\nqreg q[1];\r\nt q[0];\r\n");
    CHECK(r.circuit.gates.size() == 1);
}

TEST_CASE("qasm round trip: parse(emit(c)) == c") {
    Circuit empty(1);
    CHECK(parse_qasm(emit_qasm(empty)).circuit == empty);

    Circuit single(2, {Gate::cnot(0, 1)});
    CHECK(parse_qasm(emit_qasm(single)).circuit == single);

    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const Circuit c = testutil::random_circuit(5, 40, rng, /*with_rz=*/true);
        CHECK(parse_qasm(emit_qasm(c)).circuit == c);
    }
}
