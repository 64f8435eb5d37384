// SPDX-License-Identifier: MIT
#include "zxgopt/merge_opt.hpp"

#include "zxgopt/verify.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace zxgopt;

TEST_CASE("merge: identity on one part, counts are additive, mismatch rejected") {
    Rng rng(1);
    const Circuit c = testutil::random_circuit(3, 15, rng);
    CHECK(merge({c}) == c);

    const Circuit c2 = testutil::random_circuit(3, 10, rng);
    const Circuit m = merge({c, c2});
    const auto s = gate_stats(m), sa = gate_stats(c), sb = gate_stats(c2);
    CHECK(s.total_count == sa.total_count + sb.total_count);
    CHECK(s.two_qubit_count == sa.two_qubit_count + sb.two_qubit_count);

    CHECK_THROWS_AS(merge({c, Circuit(4)}), std::invalid_argument);
}

TEST_CASE("basic_optimize: adjacent hadamards cancel, including across a merge seam") {
    CHECK(basic_optimize(Circuit(1, {Gate::h(0), Gate::h(0)})).gates.empty());

    // Two parts whose seam holds consecutive hadamards on the same qubit.
    const Circuit c1(3, {Gate::cnot(0, 1), Gate::t(2), Gate::h(1)});
    const Circuit c2(3, {Gate::h(1), Gate::cnot(1, 2), Gate::s(0)});
    const Circuit merged = merge({c1, c2});
    const Circuit opt = basic_optimize(merged);
    CHECK(gate_stats(opt).h_count == 0);
    CHECK(opt.gates.size() == merged.gates.size() - 2);
    CHECK(equivalent(merged, opt, 1e-12) == Equivalence::Equivalent);
}

TEST_CASE("basic_optimize: delayed cancellation through CNOT controls and targets") {
    // T and Tdg separated by a CNOT control merge away.
    const Circuit a(2, {Gate::t(0), Gate::cnot(0, 1), Gate::tdg(0)});
    const Circuit oa = basic_optimize(a);
    CHECK(gate_stats(oa).t_count == 0);
    CHECK(equivalent(a, oa, 1e-12) == Equivalence::Equivalent);

    // X commutes through the CNOT target.
    const Circuit b(2, {Gate::x(1), Gate::cnot(0, 1), Gate::x(1)});
    const Circuit ob = basic_optimize(b);
    CHECK(ob.gates.size() == 1);
    CHECK(equivalent(b, ob, 1e-12) == Equivalence::Equivalent);

    // Diagonal gates pass across CZ.
    const Circuit c(2, {Gate::s(0), Gate::cz(0, 1), Gate::sdg(0)});
    CHECK(basic_optimize(c).gates.size() == 1);

    // A Z-rotation does not pass a CNOT target.
    const Circuit d(2, {Gate::t(1), Gate::cnot(0, 1), Gate::tdg(1)});
    CHECK(basic_optimize(d).gates.size() == 3);
}

TEST_CASE("basic_optimize: CNOT and CZ pair cancellation") {
    const Circuit a(2, {Gate::cnot(0, 1), Gate::cnot(0, 1)});
    CHECK(basic_optimize(a).gates.empty());

    // Opposite orientations do not cancel.
    const Circuit b(2, {Gate::cnot(0, 1), Gate::cnot(1, 0)});
    CHECK(basic_optimize(b).gates.size() == 2);

    // CZ is symmetric.
    const Circuit c(2, {Gate::cz(0, 1), Gate::cz(1, 0)});
    CHECK(basic_optimize(c).gates.empty());

    // CNOTs sharing a control with an intervening diagonal on the control.
    const Circuit d(2, {Gate::cnot(0, 1), Gate::s(0), Gate::cnot(0, 1)});
    const Circuit od = basic_optimize(d);
    CHECK(gate_stats(od).two_qubit_count == 0);
    CHECK(equivalent(d, od, 1e-12) == Equivalence::Equivalent);
}

TEST_CASE("basic_optimize: cancellation cascades reach a fixpoint") {
    // Removing the inner pair exposes the outer pair.
    const Circuit c(2, {Gate::h(0), Gate::cnot(1, 0), Gate::cnot(1, 0), Gate::h(0)});
    CHECK(basic_optimize(c).gates.empty());

    const Circuit d(1, {Gate::t(0), Gate::h(0), Gate::h(0), Gate::tdg(0)});
    CHECK(basic_optimize(d).gates.empty());
}

TEST_CASE("basic_optimize: rotation merging keeps exact phases") {
    const Circuit c(1, {Gate::t(0), Gate::t(0)});
    const Circuit oc = basic_optimize(c);
    REQUIRE(oc.gates.size() == 1);
    CHECK(oc.gates[0].kind == GateKind::S);

    const Circuit d(1, {Gate::rz(0, Phase(1, 8)), Gate::rz(0, Phase(15, 8))});
    CHECK(basic_optimize(d).gates.empty());
}

TEST_CASE("basic_optimize: random circuits stay equivalent, never grow, idempotent") {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 3));
        const Circuit c = testutil::random_circuit(n, 30, rng, /*with_rz=*/true);
        const Circuit oc = basic_optimize(c);
        CHECK(oc.gates.size() <= c.gates.size());
        CHECK(gate_stats(oc).two_qubit_count <= gate_stats(c).two_qubit_count);
        CHECK(equivalent(c, oc, 1e-8) == Equivalence::Equivalent);
        CHECK(basic_optimize(oc) == oc);
    }
}
