#include <schatten/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schatten {

namespace {

BigInt big_binomial(std::uint64_t k, std::uint64_t j) {
	if (j > k)
		return 0;
	j = std::min(j, k - j);
	BigInt c = 1;
	for (std::uint64_t i = 1; i <= j; ++i) {
		c *= k - j + i;
		c /= i;
	}
	return c;
}

void check_p(int p) {
	if (p < 1)
		throw std::invalid_argument("p must be >= 1, got " + std::to_string(p));
}

void check_k(std::size_t k) {
	if (k < 1)
		throw std::invalid_argument("k must be >= 1");
}

// ln of C(k,2p-r) C(2p-r,p) C(p,r) / C(k,p)^2
double log_tuple_weight(std::uint64_t k, int p, int r) {
	const auto up = static_cast<std::uint64_t>(p);
	const auto width = static_cast<std::uint64_t>(2 * p - r);
	return log_binomial(k, width) + log_binomial(width, up) + log_binomial(up, static_cast<std::uint64_t>(r)) -
	       2.0 * log_binomial(k, up);
}

} // namespace

double kv_bound(std::size_t k, int p, const SingularSpectrum& s) {
	check_p(p);
	check_k(k);
	const double norm = schatten_power(s, 2 * p);
	if (norm == 0.0)
		return 0.0;
	const double n = static_cast<double>(s.nominal_n());
	const double pd = p;
	const double log_k = std::log(static_cast<double>(k));
	const double log_n = std::log(n);
	const double log_max = std::max({(pd - 2.0) * log_n - pd * log_k, -log_k, (0.5 - 1.0 / pd) * log_n - log_k});
	const double log_const = 12.0 * pd * std::log(2.0) + 6.0 * pd * std::log(pd) + pd * std::log(3.0);
	return std::exp(log_const + log_max + 2.0 * std::log(norm));
}

double c_coeff(int r, int l) {
	if (r < 1 || l < 1 || l > r)
		throw std::invalid_argument("c_coeff: need 1 <= l <= r, got r=" + std::to_string(r) +
		                            ", l=" + std::to_string(l));
	if (l == 1)
		return std::pow(3.0, r);
	if (l == 2)
		return std::pow(3.0, r - 2) * (std::pow(2.0, r + 1) - 1.0);
	return std::pow(3.0, r - l) * std::pow(static_cast<double>(l), r);
}

BigInt tuple_count(std::uint64_t k, int p, int r) {
	check_p(p);
	if (r < 0 || r > p)
		throw std::invalid_argument("tuple_count: need 0 <= r <= p");
	const auto up = static_cast<std::uint64_t>(p);
	const auto width = static_cast<std::uint64_t>(2 * p - r);
	if (width > k)
		return 0;
	return big_binomial(k, width) * big_binomial(width, up) * big_binomial(up, static_cast<std::uint64_t>(r));
}

double expected_f(int r, const SingularSpectrum& s, int p) {
	check_p(p);
	const double s2p = schatten_power(s, 2 * p);
	if (r == 0)
		return s2p * s2p;
	if (r == 1)
		return s2p * s2p + 2.0 * schatten_power(s, 4 * p);
	throw std::invalid_argument("expected_f: exact expectation only for r in {0,1}; use f_upper for r >= 2");
}

double f_upper(int r, const SingularSpectrum& s, int p) {
	check_p(p);
	if (r < 2)
		throw std::invalid_argument("f_upper: r must be >= 2");
	if (r > p)
		throw std::invalid_argument("f_upper: r must be <= p");
	const double s4 = schatten_power(s, 4);
	if (r == 2)
		return 6.0 * schatten_power(s, 4 * p) + 3.0 * s4 * schatten_power(s, 4 * p - 4);
	double sum = 0.0;
	double s4_pow = 1.0; // ||A||_4^{4(l-1)}
	for (int l = 1; l <= r; ++l) {
		sum += c_coeff(r, l) * s4_pow * schatten_power(s, 4 * p - 4 * (l - 1));
		s4_pow *= s4;
	}
	return sum;
}

double theorem2_bound(std::size_t k, int p, const SingularSpectrum& s) {
	check_p(p);
	check_k(k);
	if (static_cast<std::size_t>(p) > k)
		throw std::invalid_argument("theorem2_bound: p > k");
	const double s2p = schatten_power(s, 2 * p);
	const double kd = static_cast<double>(k);

	// r = 0 term minus C(k,p)^2 ||A||_{2p}^{4p}, combined:
	// C(k,2p)C(2p,p)/C(k,p)^2 = prod_{i<p} (1 - p/(k-i))
	double ratio_minus_one = -1.0;
	if (static_cast<std::size_t>(2 * p) <= k) {
		double log_ratio = 0.0;
		for (int i = 0; i < p; ++i)
			log_ratio += std::log1p(-static_cast<double>(p) / (kd - i));
		ratio_minus_one = std::expm1(log_ratio);
	}
	double total = ratio_minus_one * s2p * s2p;

	for (int r = 1; r <= p; ++r) {
		if (static_cast<std::size_t>(2 * p - r) > k)
			continue;
		const double weight = std::exp(log_tuple_weight(k, p, r));
		total += weight * (r == 1 ? expected_f(1, s, p) : f_upper(r, s, p));
	}
	return total;
}

double first_order_estimate(std::size_t k, int p, const SingularSpectrum& s) {
	check_p(p);
	check_k(k);
	const double pd = p;
	return 2.0 * pd * pd * schatten_power(s, 4 * p) / static_cast<double>(k);
}

double second_order_estimate(std::size_t k, int p, const SingularSpectrum& s) {
	const double first = first_order_estimate(k, p, s);
	if (p == 1)
		return first;
	const double pd = p;
	const double kd = static_cast<double>(k);
	const double s2p = schatten_power(s, 2 * p);
	const double correction = schatten_power(s, 4 * p) +
	                          1.5 * schatten_power(s, 4) * schatten_power(s, 4 * p - 4) - 0.5 * s2p * s2p;
	return first + pd * pd * (pd - 1.0) * (pd - 1.0) / (kd * kd) * correction;
}

bool schatten_product_leq(const SingularSpectrum& s, int c, int d) {
	if (c < 2 || d < c)
		throw std::invalid_argument("schatten_product_leq: need 2 <= c <= d");
	const double lhs = schatten_power(s, c) * schatten_power(s, d);
	const double rhs = schatten_power(s, c - 1) * schatten_power(s, d + 1);
	return lhs <= rhs * (1.0 + 1e-12);
}

BoundSet compute_bounds(std::size_t k, int p, const SingularSpectrum& s) {
	BoundSet b;
	b.kv = kv_bound(k, p, s);
	b.thm2 = theorem2_bound(k, p, s);
	b.first_order = first_order_estimate(k, p, s);
	b.second_order = second_order_estimate(k, p, s);
	b.truth_2p = schatten_power(s, 2 * p);
	return b;
}

} // namespace schatten
