// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zxgopt {

/// An exact rational multiple of pi, reduced and normalized into [0, 2).
/// Phases are the only angle representation used by the rewrite engine;
/// floating point appears only in the verification oracle.
class Phase {
public:
    constexpr Phase() : num_(0), den_(1) {}

    Phase(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Phase: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        reduce();
    }

    static Phase zero() { return {}; }
    static Phase pi() { return {1, 1}; }
    static Phase half_pi() { return {1, 2}; }          // S
    static Phase minus_half_pi() { return {3, 2}; }    // Sdg, normalized
    static Phase quarter_pi() { return {1, 4}; }       // T
    static Phase minus_quarter_pi() { return {7, 4}; } // Tdg, normalized

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_pi() const { return num_ == 1 && den_ == 1; }
    bool is_pauli() const { return is_zero() || is_pi(); }
    /// +pi/2 or -pi/2 (the local-complementation precondition).
    bool is_proper_clifford() const { return den_ == 2; }

    /// Value in units of pi, in [0, 2).
    double units_of_pi() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    /// Value in radians, in [0, 2*pi).
    double radians() const;

    Phase operator+(const Phase& o) const {
        const std::int64_t g = std::gcd(den_, o.den_);
        const std::int64_t d = den_ / g * o.den_;
        return {num_ * (o.den_ / g) + o.num_ * (den_ / g), d};
    }
    Phase operator-() const { return {-num_, den_}; }
    Phase operator-(const Phase& o) const { return *this + (-o); }
    Phase& operator+=(const Phase& o) { return *this = *this + o; }
    Phase& operator-=(const Phase& o) { return *this = *this - o; }

    bool operator==(const Phase& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Phase& o) const { return !(*this == o); }

    std::string str() const;

private:
    void reduce() {
        num_ %= 2 * den_;
        if (num_ < 0) num_ += 2 * den_;
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_; // in [0, 2*den), coprime with den
    std::int64_t den_; // > 0
};

} // namespace zxgopt
