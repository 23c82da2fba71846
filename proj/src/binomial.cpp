#include <schatten/binomial.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace schatten {

namespace {

constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;

// Exact C(k, j) if it stays below 2^53, otherwise 0. Every intermediate
// C(k-j+i, i) divides exactly and is bounded by the final value.
std::uint64_t exact_binomial(std::uint64_t k, std::uint64_t j) {
	unsigned __int128 c = 1;
	for (std::uint64_t i = 1; i <= j; ++i) {
		c = c * (k - j + i) / i;
		if (c >= kExactLimit)
			return 0;
	}
	return static_cast<std::uint64_t>(c);
}

} // namespace

double log_binomial(std::uint64_t k, std::uint64_t j) {
	if (j > k)
		return -std::numeric_limits<double>::infinity();
	j = std::min(j, k - j);
	if (j == 0)
		return 0.0;
	if (const auto c = exact_binomial(k, j); c != 0)
		return std::log(static_cast<double>(c));
	if (j <= 64) {
		double sum = 0.0;
		for (std::uint64_t i = 1; i <= j; ++i)
			sum += std::log1p(static_cast<double>(k - j) / static_cast<double>(i));
		return sum;
	}
	return std::lgamma(static_cast<double>(k) + 1.0) - std::lgamma(static_cast<double>(j) + 1.0) -
	       std::lgamma(static_cast<double>(k - j) + 1.0);
}

double binomial(std::uint64_t k, std::uint64_t j) {
	if (j > k)
		return 0.0;
	if (const auto c = exact_binomial(k, std::min(j, k - j)); c != 0)
		return static_cast<double>(c);
	return std::exp(log_binomial(k, j));
}

} // namespace schatten
