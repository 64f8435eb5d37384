// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/circuit.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zxgopt {

/// Parse error with 1-based source position.
class QasmError : public std::runtime_error {
public:
    QasmError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

struct QasmResult {
    Circuit circuit;
    /// Set when an rz angle was not an exact rational multiple of pi and had
    /// to be rounded (denominator capped at 2^20).
    bool inexact_angles = false;
};

/// OpenQASM 2.0 subset: one quantum register, gates
/// {h,x,y,z,s,sdg,t,tdg,rz(theta),cx,cz}, no measurement or classical ops.
/// LF and CRLF both accepted. Gates are kept in textual order; the parser
/// performs no rewriting.
QasmResult parse_qasm(const std::string& text);

std::string emit_qasm(const Circuit& c);

QasmResult read_qasm_file(const std::string& path);
void write_qasm_file(const Circuit& c, const std::string& path);

} // namespace zxgopt
