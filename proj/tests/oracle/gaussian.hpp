#pragma once

#include <cstdint>

namespace oracle {

/// [n choose k]_q from the product formula prod (q^(n-i) - 1) / (q^(i+1) - 1).
inline std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q)
{
    if (k < 0 || k > n)
        return 0;
    auto qpow = [q](int e) {
        std::uint64_t r = 1;
        while (e-- > 0)
            r *= q;
        return r;
    };
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    return num / den;
}

} // namespace oracle
