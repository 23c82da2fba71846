#pragma once

#include <cstdint>

namespace schatten {

/// ln C(k, j). Returns -infinity when j > k (the coefficient is zero).
/// When C(k, j) < 2^53 the value is std::log of the exact integer.
double log_binomial(std::uint64_t k, std::uint64_t j);

/// C(k, j) as a double: exact below 2^53, 0 when j > k, +inf on overflow.
double binomial(std::uint64_t k, std::uint64_t j);

} // namespace schatten
