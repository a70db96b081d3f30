#include "epik/combinatorics.hpp"

#include "epik/error.hpp"

#include <limits>
#include <string>

namespace epik {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // c * (n - k + i) is always divisible by i, so every intermediate value is
    // an exact binomial coefficient. The 128-bit product detects overflow of
    // the final 64-bit result rather than of the intermediate multiply.
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const unsigned __int128 prod = static_cast<unsigned __int128>(c) * (n - k + i);
        const unsigned __int128 next = prod / i;
        if (next > std::numeric_limits<std::uint64_t>::max()) {
            throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds a 64-bit counter");
        }
        c = static_cast<std::uint64_t>(next);
    }
    return c;
}

bool next_combination(std::span<std::uint32_t> combo, std::uint32_t max_value) noexcept {
    const std::size_t r = combo.size();
    std::size_t i = r;
    while (i > 0) {
        --i;
        if (combo[i] < max_value - (r - 1 - i)) {
            ++combo[i];
            for (std::size_t j = i + 1; j < r; ++j) {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace epik
