// SPDX-License-Identifier: MIT
#include "zxgopt/anneal.hpp"

#include "zxgopt/grouping.hpp"
#include "zxgopt/merge_opt.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace zxgopt {

void AnnealConfig::validate() const {
    if (initial_temperature <= 0) throw std::invalid_argument("temperature must be positive");
    if (cooling <= 0 || cooling >= 1) throw std::invalid_argument("cooling must be in (0,1)");
    if (iters_per_level < 1 || patience < 1 || min_groups < 1)
        throw std::invalid_argument("anneal config values must be >= 1");
    lookahead.validate();
}

bool metropolis_accept(int delta, double temperature, Rng& rng) {
    if (temperature <= 0) throw std::invalid_argument("temperature must be positive");
    if (delta <= 0) return true;
    return rng.uniform_double() < std::exp(-static_cast<double>(delta) / temperature);
}

namespace {

int thread_budget(const AnnealConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("ZXGOPT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Optimize the groups of one iteration, possibly concurrently. Each group
/// owns a seed derived from (master seed, iteration, group index), so the
/// result does not depend on scheduling.
std::vector<Circuit> optimize_groups(const std::vector<Circuit>& parts, const AnnealConfig& cfg,
                                     std::size_t iteration) {
    std::vector<Circuit> out(parts.size());
    const int budget = thread_budget(cfg);
    auto work = [&](std::size_t i) {
        Rng rng(Rng::derive(cfg.seed, iteration + 1, i + 1));
        try {
            out[i] = optimize_subcircuit(parts[i], cfg.lookahead, rng);
        } catch (const std::exception&) {
            out[i] = parts[i]; // degrade to the identity transformation
        }
    };
    if (budget <= 1 || parts.size() <= 1) {
        for (std::size_t i = 0; i < parts.size(); ++i) work(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        futs.push_back(std::async(std::launch::async, work, i));
    for (auto& f : futs) f.get();
    return out;
}

} // namespace

OptimizationResult anneal(const Circuit& c, const AnnealConfig& cfg) {
    cfg.validate();
    c.validate();
    const auto t0 = std::chrono::steady_clock::now();

    OptimizationResult result;
    result.best_circuit = c;
    result.best_report = gate_stats(c);

    Circuit current = c;
    int current_cost = result.best_report.two_qubit_count;
    int best_cost = current_cost;

    Rng accept_rng(Rng::derive(cfg.seed, 0x5eedULL));
    Rng group_rng(Rng::derive(cfg.seed, 0x97a9ULL));

    double temperature = cfg.initial_temperature;
    int stale_levels = 0;
    std::size_t iteration = 0;
    bool stop = false;

    while (!stop && temperature >= cfg.temperature_floor) {
        bool improved_this_level = false;
        for (int it = 0; it < cfg.iters_per_level; ++it) {
            if (iteration >= cfg.max_total_iters) { stop = true; break; }

            const LayeredCircuit lc = compute_layers(current);
            const int depth = static_cast<int>(lc.depth());
            if (depth == 0) { stop = true; break; }

            GroupingPlan plan;
            if (cfg.disable_grouping) plan.lengths.push_back(depth);
            else plan = sample_plan(depth, current.n_qubits, cfg.min_groups, group_rng);

            const auto parts = slice_subcircuits(current, lc, plan);
            const auto optimized = optimize_groups(parts, cfg, iteration);
            const Circuit candidate = basic_optimize(merge(optimized));
            const int cand_cost = gate_stats(candidate).two_qubit_count;

            const int delta = current_cost - cand_cost; // positive = improvement
            const bool accepted =
                cfg.accept_all || metropolis_accept(cand_cost - current_cost, temperature, accept_rng);
            if (accepted) {
                current = candidate;
                current_cost = cand_cost;
            }
            if (cand_cost < best_cost) {
                result.best_circuit = candidate;
                best_cost = cand_cost;
                improved_this_level = true;
            }
            result.trace.push_back({iteration, temperature, plan.n_groups(), cand_cost, delta,
                                    accepted, best_cost});
            ++iteration;
        }
        if (best_cost == 0) break; // two-qubit floor reached
        if (improved_this_level) stale_levels = 0;
        else if (++stale_levels >= cfg.patience) break;
        temperature *= cfg.cooling;
    }

    result.best_report = gate_stats(result.best_circuit);
    result.iterations = iteration;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace zxgopt
