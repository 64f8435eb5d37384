// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/lookahead.hpp"
#include "zxgopt/rng.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace zxgopt {

struct AnnealConfig {
    double initial_temperature = 300.0;
    double cooling = 0.95;         // geometric factor per level
    int iters_per_level = 10;
    int patience = 5;              // non-improving levels before stopping
    int min_groups = 5;            // b
    LookaheadParams lookahead;
    std::uint64_t seed = 1;
    std::size_t max_total_iters = std::numeric_limits<std::size_t>::max();
    double temperature_floor = 1e-3;
    int threads = 0;               // 0: use ZXGOPT_THREADS or hardware count
    bool disable_grouping = false; // ablation: always a single group
    bool accept_all = false;       // ablation: skip the Metropolis filter

    void validate() const;
};

struct IterationRecord {
    std::size_t iteration;
    double temperature;
    int n_groups;
    int candidate_two_qubit;
    int delta; // F2q(current) - F2q(candidate); positive means improvement
    bool accepted;
    int best_two_qubit; // global best after this iteration
};

struct OptimizationResult {
    Circuit best_circuit;
    CostReport best_report;
    std::vector<IterationRecord> trace;
    double wall_time_s = 0.0;
    std::size_t iterations = 0;
};

/// Accept when delta <= 0; otherwise with probability exp(-delta / T).
bool metropolis_accept(int delta, double temperature, Rng& rng);

/// Outer loop: regroup the current circuit, optimize every group with the
/// k-step lookahead, merge + peephole, then accept by the Metropolis
/// criterion. The global best never worsens and is the returned circuit.
OptimizationResult anneal(const Circuit& c, const AnnealConfig& cfg);

} // namespace zxgopt
