#pragma once

#include <cstdint>
#include <span>

namespace epik {

// Exact C(n, k). Throws OverflowError if the result does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Advances an ascending combination whose elements are drawn from
// {0, ..., max_value}. Returns false when the last combination was reached.
bool next_combination(std::span<std::uint32_t> combo, std::uint32_t max_value) noexcept;

} // namespace epik
