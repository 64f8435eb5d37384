// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/extract.hpp"
#include "zxgopt/rng.hpp"
#include "zxgopt/zx_diagram.hpp"
#include "zxgopt/zx_rules.hpp"

#include <optional>

namespace zxgopt {

struct LookaheadParams {
    int k = 4;      // lookahead depth (chained steps)
    int j = 8;      // candidates sampled per step (capped at the match count)
    int p = 5;      // no-improvement patience, in commit rounds

    void validate() const;
};

struct ChainResult {
    ZXDiagram diagram;   // the committed D_t
    Circuit extracted;   // its extraction
    int two_qubit_count; // extraction cost
};

/// One k-step lookahead: at each step draw up to j distinct matches, apply
/// each (with identity/fusion cleanup), keep the diagram with the fewest
/// hadamard edges; after k steps extract every chained diagram and return
/// the one whose extraction has the fewest two-qubit gates (ties by the
/// earliest step). Empty when the starting diagram admits no matches.
std::optional<ChainResult> lookahead_chain(const ZXDiagram& d0, const LookaheadParams& params,
                                           Rng& rng);

/// Repeated chain commits with patience-based termination; never returns a
/// circuit with more two-qubit gates than the input.
Circuit optimize_subcircuit(const Circuit& c, const LookaheadParams& params, Rng& rng);

} // namespace zxgopt
