// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/zx_diagram.hpp"

#include <stdexcept>

namespace zxgopt {

/// Raised when frontier extraction cannot make progress. The rewrite set
/// preserves gflow, so this signals an upstream bug, never a recoverable
/// input condition.
class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frontier-based circuit extraction from a graph-like diagram: peels CZ
/// gates from intra-frontier hadamard edges, emits local phases as
/// Z-rotations, solves frontier-to-interior connectivity by GF(2) Gaussian
/// elimination emitting CNOTs (lowest-id-first pivoting and column order),
/// inserts H when advancing through a hadamard edge, and synthesizes the
/// residual input permutation as 3-CNOT swaps.
Circuit extract(const ZXDiagram& diagram);

} // namespace zxgopt
