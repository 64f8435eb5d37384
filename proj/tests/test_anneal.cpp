// SPDX-License-Identifier: MIT
#include "zxgopt/anneal.hpp"

#include "zxgopt/verify.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace zxgopt;

TEST_CASE("metropolis_accept: improvements always accepted") {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        CHECK(metropolis_accept(-3, 300.0, rng));
        CHECK(metropolis_accept(0, 1e-3, rng));
    }
}

TEST_CASE("metropolis_accept: worsening accepted at the Boltzmann frequency") {
    Rng rng(2);
    const int trials = 100000;
    int accepted = 0;
    for (int i = 0; i < trials; ++i)
        if (metropolis_accept(5, 300.0, rng)) ++accepted;
    const double freq = static_cast<double>(accepted) / trials;
    const double expect = std::exp(-5.0 / 300.0);
    CHECK(std::abs(freq - expect) < 0.01);
}

namespace {

AnnealConfig small_config(std::uint64_t seed) {
    AnnealConfig cfg;
    cfg.seed = seed;
    cfg.iters_per_level = 4;
    cfg.patience = 2;
    cfg.max_total_iters = 24;
    cfg.lookahead.k = 3;
    cfg.lookahead.j = 4;
    cfg.min_groups = 2;
    cfg.threads = 1;
    return cfg;
}

} // namespace

TEST_CASE("anneal: zero two-qubit circuits stop at the floor unchanged") {
    const Circuit c(3, {Gate::h(0), Gate::t(1), Gate::s(2), Gate::h(0)});
    const auto res = anneal(c, small_config(7));
    CHECK(res.best_circuit == c);
    CHECK(res.best_report.two_qubit_count == 0);
}

TEST_CASE("anneal: never worse, equivalent, trace best is monotone") {
    Rng rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        const Circuit c = testutil::random_circuit(4, 30, rng, /*with_rz=*/true);
        const auto res = anneal(c, small_config(100 + static_cast<std::uint64_t>(trial)));
        CHECK(res.best_report.two_qubit_count <= gate_stats(c).two_qubit_count);
        CHECK(equivalent(c, res.best_circuit, 1e-8) == Equivalence::Equivalent);
        int prev = 1 << 30;
        for (const auto& rec : res.trace) {
            CHECK(rec.best_two_qubit <= prev);
            prev = rec.best_two_qubit;
        }
    }
}

TEST_CASE("anneal: identical config and seed reproduce the trace") {
    Rng rng(4);
    const Circuit c = testutil::random_circuit(4, 28, rng);
    const auto a = anneal(c, small_config(42));
    const auto b = anneal(c, small_config(42));
    CHECK(a.best_circuit == b.best_circuit);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].candidate_two_qubit == b.trace[i].candidate_two_qubit);
        CHECK(a.trace[i].accepted == b.trace[i].accepted);
        CHECK(a.trace[i].n_groups == b.trace[i].n_groups);
    }
}

TEST_CASE("anneal: results do not depend on the thread budget") {
    Rng rng(5);
    const Circuit c = testutil::random_circuit(5, 40, rng);
    AnnealConfig cfg1 = small_config(11);
    AnnealConfig cfg4 = small_config(11);
    cfg4.threads = 4;
    const auto a = anneal(c, cfg1);
    const auto b = anneal(c, cfg4);
    CHECK(a.best_circuit == b.best_circuit);
    CHECK(a.trace.size() == b.trace.size());
}
