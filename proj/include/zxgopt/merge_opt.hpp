// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"

#include <vector>

namespace zxgopt {

/// Plain concatenation in part order; throws std::invalid_argument on a
/// qubit-count mismatch.
Circuit merge(const std::vector<Circuit>& parts);

/// Delayed-placement peephole pass. Each gate floats left past commuting
/// gates to meet a cancellation or merge partner:
///   - involution pairs H.H, X.X, CNOT.CNOT (same orientation), CZ.CZ
///   - Z-rotations (Z, S, Sdg, T, Tdg, RZ) merge by phase addition and
///     vanish at phase 0
/// Commutations used for delaying: diagonal gates through CNOT controls and
/// across CZ, X through CNOT targets; H is a barrier. Sweeps forward then
/// backward (reverse + invert) until a full double sweep removes nothing.
Circuit basic_optimize(const Circuit& c);

} // namespace zxgopt
