// SPDX-License-Identifier: MIT
#include "zxgopt/grouping.hpp"

#include <algorithm>
#include <stdexcept>

namespace zxgopt {

int sample_group_count(int d, int n_q, int b, Rng& rng) {
    if (d < 1 || n_q < 1 || b < 1) throw std::invalid_argument("sample_group_count: bad arguments");
    const int lo = std::min(b, d);
    const int hi = std::max(lo, d / n_q);
    return static_cast<int>(rng.uniform_int(lo, hi));
}

GroupingPlan sample_group_lengths(int d, int n_s, int min_len, Rng& rng) {
    if (n_s < 1 || min_len < 1) throw std::invalid_argument("sample_group_lengths: bad arguments");
    if (d < n_s * min_len)
        throw std::invalid_argument("sample_group_lengths: infeasible (d < n_s * min_len)");
    GroupingPlan plan;
    plan.lengths.reserve(static_cast<std::size_t>(n_s));
    int remaining = d;
    for (int i = 0; i < n_s - 1; ++i) {
        const int groups_left = n_s - i - 1;
        const int hi = remaining - groups_left * min_len;
        const int m = static_cast<int>(rng.uniform_int(min_len, hi));
        plan.lengths.push_back(m);
        remaining -= m;
    }
    plan.lengths.push_back(remaining);
    return plan;
}

std::vector<Circuit> slice_subcircuits(const Circuit& c, const LayeredCircuit& lc,
                                       const GroupingPlan& plan) {
    if (plan.total() != static_cast<int>(lc.depth()))
        throw std::invalid_argument("slice_subcircuits: plan does not match circuit depth");
    std::vector<Circuit> parts;
    parts.reserve(plan.lengths.size());
    std::size_t layer = 0;
    for (int m : plan.lengths) {
        std::vector<std::size_t> indices;
        for (int t = 0; t < m; ++t, ++layer)
            indices.insert(indices.end(), lc.layers[layer].begin(), lc.layers[layer].end());
        // Original gate order within the group.
        std::sort(indices.begin(), indices.end());
        Circuit part(c.n_qubits);
        part.gates.reserve(indices.size());
        for (std::size_t i : indices) part.gates.push_back(c.gates[i]);
        parts.push_back(std::move(part));
    }
    return parts;
}

GroupingPlan sample_plan(int d, int n_q, int b, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const int n_s = sample_group_count(d, n_q, b, rng);
        if (d < n_s) continue;
        return sample_group_lengths(d, n_s, 1, rng);
    }
    GroupingPlan plan;
    plan.lengths.push_back(d);
    return plan;
}

} // namespace zxgopt
