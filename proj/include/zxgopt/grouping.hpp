// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/rng.hpp"

#include <vector>

namespace zxgopt {

/// Partition of a layered circuit's depth into consecutive runs: lengths sum
/// to the layer count and every entry is at least one.
struct GroupingPlan {
    std::vector<int> lengths;

    int n_groups() const { return static_cast<int>(lengths.size()); }
    int total() const {
        int s = 0;
        for (int m : lengths) s += m;
        return s;
    }
};

/// N_S uniform in [lo, hi] with lo = min(b, d) and hi = max(lo, d / n_q).
/// Degenerate ranges (short circuits) collapse to a single value rather
/// than fail.
int sample_group_count(int d, int n_q, int b, Rng& rng);

/// First n_s - 1 lengths drawn uniformly from the feasible residual range,
/// remainder assigned to the last group. Throws std::invalid_argument when
/// d < n_s * min_len.
GroupingPlan sample_group_lengths(int d, int n_s, int min_len, Rng& rng);

/// Subcircuits over the full qubit count, group i holding (in original
/// order) the gates of its consecutive layer run.
std::vector<Circuit> slice_subcircuits(const Circuit& c, const LayeredCircuit& lc,
                                       const GroupingPlan& plan);

/// sample_group_count + sample_group_lengths with bounded resampling
/// (falls back to a single group after 100 attempts).
GroupingPlan sample_plan(int d, int n_q, int b, Rng& rng);

} // namespace zxgopt
