// SPDX-License-Identifier: MIT
#include "zxgopt/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>

namespace zxgopt {
namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Cursor(const std::string& text) : s(text) {}

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    char advance() {
        char c = s[pos++];
        if (c == '\n') { ++line; col = 1; }
        else ++col;
        return c;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(); continue; }
            if (c == '/' && pos + 1 < s.size() && s[pos + 1] == '/') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            break;
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw QasmError(msg, line, col); }
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_ident(Cursor& cur) {
    std::string out;
    while (!cur.eof() && ident_char(cur.peek())) out.push_back(cur.advance());
    return out;
}

void expect(Cursor& cur, char c) {
    cur.skip_ws_and_comments();
    if (cur.peek() != c) cur.fail(std::string("expected '") + c + "'");
    cur.advance();
}

long read_uint(Cursor& cur) {
    cur.skip_ws_and_comments();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected integer");
    long v = 0;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        v = v * 10 + (cur.advance() - '0');
    return v;
}

/// Best rational approximation of x with denominator <= max_den
/// (continued-fraction convergents).
std::pair<std::int64_t, std::int64_t> approx_rational(double x, std::int64_t max_den) {
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double af = std::floor(v);
        if (af > 9.0e18 || af < -9.0e18) break;
        const std::int64_t a = static_cast<std::int64_t>(af);
        const std::int64_t p2 = a * p1 + p0;
        const std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double rem = v - af;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return {0, 1};
    return {p1, q1};
}

constexpr std::int64_t kMaxDen = 1 << 20;

/// Angle expression: signed combinations of pi, integer/decimal literals,
/// '*' and '/'. Covers the corpus forms pi/4, -pi/2, 3*pi/4, 0.25*pi, 1.5708.
Phase parse_angle(Cursor& cur, bool& inexact) {
    cur.skip_ws_and_comments();
    bool neg = false;
    while (cur.peek() == '+' || cur.peek() == '-') {
        if (cur.advance() == '-') neg = !neg;
        cur.skip_ws_and_comments();
    }

    bool saw_pi = false;
    double num = 1.0;
    bool exact = true;
    std::int64_t inum = 1, iden = 1;

    auto read_factor = [&](bool dividing) {
        cur.skip_ws_and_comments();
        if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            std::string id = read_ident(cur);
            if (id != "pi") cur.fail("unsupported symbol '" + id + "' in angle");
            if (dividing || saw_pi) cur.fail("unsupported pi expression");
            saw_pi = true;
            return;
        }
        if (!std::isdigit(static_cast<unsigned char>(cur.peek())) && cur.peek() != '.')
            cur.fail("expected number or pi in angle");
        std::string lit;
        while (std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '.' ||
               cur.peek() == 'e' || cur.peek() == 'E' ||
               ((cur.peek() == '+' || cur.peek() == '-') && !lit.empty() &&
                (lit.back() == 'e' || lit.back() == 'E')))
            lit.push_back(cur.advance());
        const double v = std::stod(lit);
        if (lit.find('.') == std::string::npos && lit.find('e') == std::string::npos &&
            lit.find('E') == std::string::npos) {
            const std::int64_t iv = std::stoll(lit);
            if (dividing) iden *= iv; else inum *= iv;
        } else {
            exact = false;
        }
        if (dividing) num /= v; else num *= v;
    };

    read_factor(false);
    cur.skip_ws_and_comments();
    while (cur.peek() == '*' || cur.peek() == '/') {
        const bool div = cur.advance() == '/';
        cur.skip_ws_and_comments();
        if (std::isalpha(static_cast<unsigned char>(cur.peek())) && !div) {
            std::string id = read_ident(cur);
            if (id != "pi") cur.fail("unsupported symbol '" + id + "' in angle");
            if (saw_pi) cur.fail("unsupported pi expression");
            saw_pi = true;
        } else {
            read_factor(div);
        }
        cur.skip_ws_and_comments();
    }

    if (saw_pi && exact) {
        if (iden == 0) cur.fail("division by zero in angle");
        return Phase(neg ? -inum : inum, iden);
    }
    // Literal radians (or inexact pi multiple): round to a rational multiple
    // of pi with bounded denominator.
    double units = num * (saw_pi ? 1.0 : 1.0 / std::numbers::pi);
    if (neg) units = -units;
    units = std::fmod(units, 2.0);
    if (units < 0) units += 2.0;
    auto [p, q] = approx_rational(units, kMaxDen);
    const double err = std::abs(units - static_cast<double>(p) / static_cast<double>(q));
    if (err > 1e-12) inexact = true;
    return Phase(p, q);
}

} // namespace

QasmResult parse_qasm(const std::string& text) {
    Cursor cur(text);
    QasmResult result;
    std::string reg_name;
    long reg_size = -1;

    auto read_qubit = [&](const char* what) -> int {
        cur.skip_ws_and_comments();
        std::string name = read_ident(cur);
        if (name.empty()) cur.fail(std::string("expected ") + what);
        if (reg_size < 0) cur.fail("gate before qreg declaration");
        if (name != reg_name) cur.fail("unknown register '" + name + "'");
        expect(cur, '[');
        const long idx = read_uint(cur);
        expect(cur, ']');
        if (idx >= reg_size) cur.fail("qubit index out of range");
        return static_cast<int>(idx);
    };

    while (true) {
        cur.skip_ws_and_comments();
        if (cur.eof()) break;
        const int stmt_line = cur.line, stmt_col = cur.col;
        if (!std::isalpha(static_cast<unsigned char>(cur.peek())))
            cur.fail("expected statement");
        std::string word = read_ident(cur);

        if (word == "OPENQASM") {
            cur.skip_ws_and_comments();
            while (!cur.eof() && cur.peek() != ';') cur.advance();
            expect(cur, ';');
            continue;
        }
        if (word == "include") {
            cur.skip_ws_and_comments();
            if (cur.peek() == '"') {
                cur.advance();
                while (!cur.eof() && cur.peek() != '"') cur.advance();
                expect(cur, '"');
            }
            expect(cur, ';');
            continue;
        }
        if (word == "qreg") {
            if (reg_size >= 0) throw QasmError("multiple quantum registers are not supported", stmt_line, stmt_col);
            cur.skip_ws_and_comments();
            reg_name = read_ident(cur);
            if (reg_name.empty()) cur.fail("expected register name");
            expect(cur, '[');
            reg_size = read_uint(cur);
            expect(cur, ']');
            expect(cur, ';');
            if (reg_size <= 0) throw QasmError("register must have at least one qubit", stmt_line, stmt_col);
            result.circuit.n_qubits = static_cast<int>(reg_size);
            continue;
        }
        if (word == "creg" || word == "measure" || word == "reset" || word == "barrier" ||
            word == "if" || word == "gate" || word == "opaque")
            throw QasmError("unsupported statement '" + word + "' (pure unitary circuits only)",
                            stmt_line, stmt_col);

        // Gate application.
        Phase angle;
        if (word == "rz") {
            expect(cur, '(');
            angle = parse_angle(cur, result.inexact_angles);
            expect(cur, ')');
        }
        if (word == "cx" || word == "cz") {
            const int a = read_qubit("qubit operand");
            expect(cur, ',');
            const int b = read_qubit("qubit operand");
            expect(cur, ';');
            if (a == b) throw QasmError("two-qubit gate with identical operands", stmt_line, stmt_col);
            result.circuit.gates.push_back(word == "cx" ? Gate::cnot(a, b) : Gate::cz(a, b));
            continue;
        }
        const int q = [&]() -> int {
            if (word == "h" || word == "x" || word == "y" || word == "z" || word == "s" ||
                word == "sdg" || word == "t" || word == "tdg" || word == "rz")
                return read_qubit("qubit operand");
            throw QasmError("unsupported gate '" + word + "'", stmt_line, stmt_col);
        }();
        expect(cur, ';');
        if (word == "h") result.circuit.gates.push_back(Gate::h(q));
        else if (word == "x") result.circuit.gates.push_back(Gate::x(q));
        else if (word == "y") result.circuit.gates.push_back(Gate::y(q));
        else if (word == "z") result.circuit.gates.push_back(Gate::z(q));
        else if (word == "s") result.circuit.gates.push_back(Gate::s(q));
        else if (word == "sdg") result.circuit.gates.push_back(Gate::sdg(q));
        else if (word == "t") result.circuit.gates.push_back(Gate::t(q));
        else if (word == "tdg") result.circuit.gates.push_back(Gate::tdg(q));
        else result.circuit.gates.push_back(Gate::rz(q, angle));
    }

    if (reg_size < 0) throw QasmError("missing qreg declaration", cur.line, cur.col);
    result.circuit.validate();
    return result;
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.n_qubits << "];\n";
    for (const Gate& g : c.gates) {
        os << gate_kind_name(g.kind);
        if (g.kind == GateKind::RZ) os << '(' << g.phase.str() << ')';
        os << " q[" << g.q0 << ']';
        if (g.is_two_qubit()) os << ",q[" << g.q1 << ']';
        os << ";\n";
    }
    return os.str();
}

QasmResult read_qasm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_qasm(buf.str());
}

void write_qasm_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << emit_qasm(c);
}

} // namespace zxgopt
