// SPDX-License-Identifier: MIT
#include "zxgopt/lookahead.hpp"

#include <stdexcept>

namespace zxgopt {

void LookaheadParams::validate() const {
    if (k < 1 || j < 1 || p < 1)
        throw std::invalid_argument("lookahead parameters must be >= 1");
}

std::optional<ChainResult> lookahead_chain(const ZXDiagram& d0, const LookaheadParams& params,
                                           Rng& rng) {
    params.validate();
    std::vector<ZXDiagram> chain;
    ZXDiagram cur = d0;
    for (int step = 0; step < params.k; ++step) {
        const auto matches = match_rules(cur);
        if (matches.empty()) {
            if (step == 0) return std::nullopt;
            break;
        }
        const std::size_t take = std::min<std::size_t>(matches.size(),
                                                       static_cast<std::size_t>(params.j));
        auto picks = rng.sample_distinct(matches.size(), take);
        // Deterministic tie-breaking: evaluate candidates in match order.
        std::sort(picks.begin(), picks.end());

        std::optional<ZXDiagram> best;
        int best_score = 0;
        for (std::size_t pi : picks) {
            ZXDiagram cand = cur;
            apply_rule(cand, matches[pi]); // renormalizes (identity/fusion cleanup)
            const int score = cand.count_hadamard_edges();
            if (!best || score < best_score) {
                best = std::move(cand);
                best_score = score;
            }
        }
        cur = std::move(*best);
        chain.push_back(cur);
    }

    std::optional<ChainResult> result;
    for (auto& diag : chain) {
        Circuit extracted = extract(diag);
        const int cost = gate_stats(extracted).two_qubit_count;
        if (!result || cost < result->two_qubit_count)
            result = ChainResult{std::move(diag), std::move(extracted), cost};
    }
    return result;
}

Circuit optimize_subcircuit(const Circuit& c, const LookaheadParams& params, Rng& rng) {
    params.validate();
    c.validate();

    ZXDiagram d0 = preprocess(to_graph(c));
    Circuit best = c;
    int best_cost = gate_stats(c).two_qubit_count;
    int best_total = static_cast<int>(c.gates.size());

    const std::size_t initial_matches = match_rules(d0).size();
    const std::size_t invocation_cap =
        static_cast<std::size_t>(params.p) * (initial_matches + static_cast<std::size_t>(params.k));

    int stale_rounds = 0;
    for (std::size_t round = 0; round < std::max<std::size_t>(invocation_cap, 1); ++round) {
        std::optional<ChainResult> res;
        try {
            res = lookahead_chain(d0, params, rng);
        } catch (const ExtractionError&) {
            break; // fall back to the best circuit seen so far
        }
        if (!res) break;
        const int total = static_cast<int>(res->extracted.gates.size());
        if (res->two_qubit_count < best_cost ||
            (res->two_qubit_count == best_cost && total < best_total)) {
            best = res->extracted;
            best_cost = res->two_qubit_count;
            best_total = total;
            stale_rounds = 0;
        } else {
            ++stale_rounds;
        }
        d0 = std::move(res->diagram);
        if (stale_rounds >= params.p) break;
    }
    return best;
}

} // namespace zxgopt
