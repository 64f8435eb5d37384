// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

namespace zxgopt {

/// Deterministic 64-bit generator (splitmix64-seeded xoshiro-style core via
/// std-free arithmetic) with platform-independent bounded draws. The std
/// distributions are implementation-defined, which would break the
/// seed-reproducibility contract across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] (inclusive), unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % span);
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit && limit != 0);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// k distinct indices drawn uniformly from [0, n) (partial Fisher-Yates),
    /// returned in draw order.
    std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k);

    /// Derive an independent stream deterministically from this seed and a
    /// sequence of labels; used to give each subcircuit its own generator.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t h = seed ^ 0x2545f4914f6cdd1dULL;
        for (std::uint64_t x : {a + 1, b + 1}) {
            h ^= x * 0xff51afd7ed558ccdULL;
            h = (h ^ (h >> 33)) * 0xc4ceb9fe1a85ec53ULL;
            h ^= h >> 29;
        }
        return h;
    }

private:
    std::uint64_t state_;
};

} // namespace zxgopt
