#pragma once

#include <cstdint>
#include <vector>

namespace fqcensus::detail {

// Visits every k-subset of {0, ..., n-1} in lexicographic order.
template <class Fn>
void for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::uint32_t> comb(k);
    for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        fn(comb);
        if (k == 0) return;
        std::uint32_t i = k;
        while (i-- > 0) {
            if (comb[i] != i + n - k) {
                ++comb[i];
                for (std::uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace fqcensus::detail
