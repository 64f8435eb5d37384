// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"
#include "zxgopt/zx_diagram.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace zxgopt {

/// Dense complex matrix, row-major. Row index bits follow the little-endian
/// qubit convention: qubit 0 is the least significant bit.
struct CMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> a;

    CMat() = default;
    CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    std::complex<double>& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline constexpr int kDefaultOracleQubitLimit = 10;
inline constexpr int kDefaultWireLimit = 20;

/// Product of gate matrices in execution order. Throws std::length_error
/// above the qubit limit.
CMat unitary_of(const Circuit& c, int max_qubits = kDefaultOracleQubitLimit);

enum class Equivalence { Equivalent, NotEquivalent, Unverifiable };

/// True result iff U_a = e^{i phi} U_b with max entry deviation <= tol after
/// aligning the phase on the largest-magnitude entry of U_a. Returns
/// Unverifiable (distinct from a negative) above the qubit limit.
Equivalence equivalent(const Circuit& a, const Circuit& b, double tol,
                       int max_qubits = kDefaultOracleQubitLimit);

/// Contraction of spider tensors: Z spider diag(1, e^{i a}) generalized to
/// its arity, X spiders Hadamard-conjugated, hadamard edges insert H. No
/// scalar normalization is applied, so results are meaningful up to an
/// overall nonzero factor; compare with `proportional`.
CMat zx_tensor(const ZXDiagram& d, int wire_limit = kDefaultWireLimit);

/// A = c * B for some nonzero complex c, entrywise within tol after scaling
/// both to unit max magnitude.
bool proportional(const CMat& a, const CMat& b, double tol);

/// Convenience: the diagram's map matches the circuit's unitary up to a
/// scalar.
bool diagram_matches_circuit(const ZXDiagram& d, const Circuit& c, double tol);

} // namespace zxgopt
