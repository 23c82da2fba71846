#pragma once

#include <schatten/binomial.hpp>
#include <schatten/spectrum.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace schatten {

using BigInt = boost::multiprecision::cpp_int;

/// Variance bounds and expansions for theta_hat_{2p}, all in units of
/// (||A||_{2p}^{2p})^2 except truth_2p.
struct BoundSet {
	double kv = 0.0;           ///< prior bound of Kong and Valiant
	double thm2 = 0.0;         ///< upper bound on Var(theta_hat), tuple-count form
	double first_order = 0.0;  ///< 2p^2 ||A||_{4p}^{4p} / k
	double second_order = 0.0; ///< first_order plus the 1/k^2 correction
	double truth_2p = 0.0;     ///< ||A||_{2p}^{2p}
};

/// 2^{12p} p^{6p} 3^p max{n^{p-2}/k^p, 1/k, n^{1/2-1/p}/k} ||A||_{2p}^{4p},
/// n = s.nominal_n(). Evaluated in log space; +inf if it exceeds double range.
double kv_bound(std::size_t k, int p, const SingularSpectrum& s);

/// Pattern coefficient c(r, l), 1 <= l <= r:
///   3^r                 l = 1
///   3^{r-2}(2^{r+1}-1)  l = 2
///   3^{r-l} l^r         otherwise
double c_coeff(int r, int l);

/// Number of pairs of increasing p-tuples in [k] sharing exactly r indices:
/// C(k, 2p-r) C(2p-r, p) C(p, r). Zero when 2p - r > k.
BigInt tuple_count(std::uint64_t k, int p, int r);

/// Exact E[f] for a tuple pair with r in {0, 1} shared indices.
double expected_f(int r, const SingularSpectrum& s, int p);

/// Upper bound on E[f] for 2 <= r <= p shared indices.
double f_upper(int r, const SingularSpectrum& s, int p);

/// Upper bound on Var(theta_hat_{2p}) (the Var(Theta_hat) bound divided by
/// C(k,p)^2). Throws std::invalid_argument unless 1 <= p <= k.
double theorem2_bound(std::size_t k, int p, const SingularSpectrum& s);

double first_order_estimate(std::size_t k, int p, const SingularSpectrum& s);
double second_order_estimate(std::size_t k, int p, const SingularSpectrum& s);

/// ||A||_c^c ||A||_d^d <= ||A||_{c-1}^{c-1} ||A||_{d+1}^{d+1} up to 1e-12
/// relative slack. Requires 2 <= c <= d.
bool schatten_product_leq(const SingularSpectrum& s, int c, int d);

BoundSet compute_bounds(std::size_t k, int p, const SingularSpectrum& s);

} // namespace schatten
