// SPDX-License-Identifier: MIT
#include "zxgopt/rng.hpp"

#include <numeric>

namespace zxgopt {

std::vector<std::size_t> Rng::sample_distinct(std::size_t n, std::size_t k) {
    if (k > n) k = n;
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(uniform_int(static_cast<std::int64_t>(i),
                                                 static_cast<std::int64_t>(n - 1)));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

} // namespace zxgopt
