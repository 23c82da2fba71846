#pragma once

// Test-only reference computations. None of these call into the library's
// kernels; they exist to check them.

#include <schatten/matrix.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace oracle {

inline schatten::Matrix naive_gram(const schatten::Matrix& y) {
	schatten::Matrix z(y.cols(), y.cols());
	for (std::size_t a = 0; a < y.cols(); ++a)
		for (std::size_t b = 0; b < y.cols(); ++b) {
			double s = 0.0;
			for (std::size_t t = 0; t < y.rows(); ++t)
				s += y(t, a) * y(t, b);
			z(a, b) = s;
		}
	return z;
}

inline schatten::Matrix naive_multiply(const schatten::Matrix& a, const schatten::Matrix& b) {
	schatten::Matrix c(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < b.cols(); ++j) {
			double s = 0.0;
			for (std::size_t q = 0; q < a.cols(); ++q)
				s += a(i, q) * b(q, j);
			c(i, j) = s;
		}
	return c;
}

/// C(k,p)^-1 trace(T^{p-1} Z) with plain dense products.
inline double naive_theta_hat(const schatten::Matrix& z, int p) {
	const std::size_t k = z.rows();
	schatten::Matrix t(k, k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i + 1; j < k; ++j)
			t(i, j) = z(i, j);
	schatten::Matrix power = schatten::Matrix::identity(k);
	for (int m = 1; m < p; ++m)
		power = naive_multiply(power, t);
	const schatten::Matrix pz = naive_multiply(power, z);
	double tr = 0.0;
	for (std::size_t i = 0; i < k; ++i)
		tr += pz(i, i);
	double binom = 1.0;
	for (int i = 1; i <= p; ++i)
		binom = binom * double(k - p + i) / double(i);
	return tr / binom;
}

/// Counts of ordered pairs of p-subsets of [k] by intersection size, by
/// exhaustive enumeration of bitmasks.
inline std::vector<std::uint64_t> enumerate_tuple_pairs(unsigned k, int p) {
	std::vector<std::uint64_t> counts(static_cast<std::size_t>(p) + 1, 0);
	for (unsigned a = 0; a < (1u << k); ++a) {
		if (std::popcount(a) != p)
			continue;
		for (unsigned b = 0; b < (1u << k); ++b) {
			if (std::popcount(b) == p)
				++counts[static_cast<std::size_t>(std::popcount(a & b))];
		}
	}
	return counts;
}

} // namespace oracle
