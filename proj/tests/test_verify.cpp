// SPDX-License-Identifier: MIT
#include "zxgopt/verify.hpp"

#include "zxgopt/zx_diagram.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace zxgopt;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

TEST_CASE("unitary_of: textbook single-qubit matrices") {
    const CMat h = unitary_of(Circuit(1, {Gate::h(0)}));
    CHECK(std::abs(h.at(0, 0) - kInvSqrt2) < 1e-12);
    CHECK(std::abs(h.at(0, 1) - kInvSqrt2) < 1e-12);
    CHECK(std::abs(h.at(1, 0) - kInvSqrt2) < 1e-12);
    CHECK(std::abs(h.at(1, 1) + kInvSqrt2) < 1e-12);

    const CMat hh = unitary_of(Circuit(1, {Gate::h(0), Gate::h(0)}));
    CHECK(std::abs(hh.at(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(hh.at(0, 1)) < 1e-12);
    CHECK(std::abs(hh.at(1, 1) - 1.0) < 1e-12);
}

TEST_CASE("unitary_of: CNOT self-inverse and little-endian convention") {
    const CMat u = unitary_of(Circuit(2, {Gate::cnot(0, 1), Gate::cnot(0, 1)}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(u.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);

    // CNOT(control 0, target 1): |01> (index 1, qubit 0 set) -> |11> (index 3).
    const CMat cx = unitary_of(Circuit(2, {Gate::cnot(0, 1)}));
    CHECK(std::abs(cx.at(3, 1) - 1.0) < 1e-12);
    CHECK(std::abs(cx.at(1, 3) - 1.0) < 1e-12);
    CHECK(std::abs(cx.at(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(cx.at(2, 2) - 1.0) < 1e-12);
}

TEST_CASE("equivalent: reflexivity, S^2 = Z, HZH = X") {
    Rng rng(11);
    const Circuit c = testutil::random_circuit(3, 20, rng);
    CHECK(equivalent(c, c, 1e-12) == Equivalence::Equivalent);

    CHECK(equivalent(Circuit(1, {Gate::z(0)}), Circuit(1, {Gate::s(0), Gate::s(0)}), 1e-12) ==
          Equivalence::Equivalent);
    CHECK(equivalent(Circuit(1, {Gate::h(0), Gate::z(0), Gate::h(0)}), Circuit(1, {Gate::x(0)}),
                     1e-12) == Equivalence::Equivalent);
    CHECK(equivalent(Circuit(1, {Gate::z(0)}), Circuit(1, {Gate::x(0)}), 1e-9) ==
          Equivalence::NotEquivalent);

    const Circuit big(11);
    CHECK(equivalent(big, big, 1e-9) == Equivalence::Unverifiable);
}

TEST_CASE("zx_tensor: single spiders") {
    // One Z spider, phase pi, 1 in / 1 out: the Z matrix.
    ZXDiagram d;
    const VertexId i0 = d.add_vertex(VertexType::Boundary, {}, 0, 0);
    const VertexId v = d.add_vertex(VertexType::Z, Phase::pi(), 0, 1);
    const VertexId o0 = d.add_vertex(VertexType::Boundary, {}, 0, 2);
    d.add_edge(i0, v, EdgeType::Simple);
    d.add_edge(v, o0, EdgeType::Simple);
    d.set_inputs({i0});
    d.set_outputs({o0});
    const CMat t = zx_tensor(d);
    CHECK(proportional(t, unitary_of(Circuit(1, {Gate::z(0)})), 1e-12));
}

TEST_CASE("zx_tensor: to_graph(CNOT) contracts to CNOT") {
    const Circuit c(2, {Gate::cnot(0, 1)});
    CHECK(diagram_matches_circuit(to_graph(c), c, 1e-9));
}

TEST_CASE("zx_tensor: empty one-qubit circuit is a bare wire") {
    const Circuit c(1);
    const ZXDiagram d = to_graph(c);
    const CMat t = zx_tensor(d);
    CHECK(proportional(t, unitary_of(c), 1e-12));
}

TEST_CASE("zx_tensor agrees with unitary_of on random circuits") {
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_int(1, 4) - 1);
        const Circuit c = testutil::random_circuit(std::max(n, 2), 12, rng, /*with_rz=*/true);
        CHECK(diagram_matches_circuit(to_graph(c), c, 1e-9));
    }
}
