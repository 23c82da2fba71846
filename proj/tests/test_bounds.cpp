#include <doctest.h>

#include <oracles/oracles.hpp>

#include <schatten/bounds.hpp>
#include <schatten/experiments.hpp>
#include <schatten/rng.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

using namespace schatten;

namespace {

const SingularSpectrum kFig1 = algebraic_spectrum(1.0, 10);

} // namespace

TEST_CASE("log_binomial") {
	CHECK(log_binomial(5, 0) == 0.0);
	CHECK(log_binomial(5, 5) == 0.0);
	CHECK(std::round(std::exp(log_binomial(10, 3))) == 120.0);
	CHECK(std::isinf(log_binomial(3, 4)));
	CHECK(log_binomial(3, 4) < 0.0);
	CHECK(binomial(3, 4) == 0.0);

	// binomial is exact below 2^53; exp(log) keeps ~15 digits, enough to
	// round back to the integer while it stays below 2^40
	for (std::uint64_t k = 0; k <= 60; ++k) {
		std::uint64_t c = 1;
		for (std::uint64_t j = 0; j <= k; ++j) {
			if (c < (std::uint64_t{1} << 53)) {
				CHECK(binomial(k, j) == double(c));
				CHECK(std::abs(std::exp(log_binomial(k, j)) / double(c) - 1.0) < 1e-14);
			}
			if (c < (std::uint64_t{1} << 40))
				CHECK(std::round(std::exp(log_binomial(k, j))) == double(c));
			if (j < k)
				c = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * (k - j) / (j + 1));
		}
	}

	// C(1280, 20) from exact big-integer arithmetic
	using Big = boost::multiprecision::cpp_bin_float_50;
	BigInt exact = 1;
	for (int i = 1; i <= 20; ++i)
		exact = exact * (1280 - 20 + i) / i;
	CHECK(exact == BigInt("49349108294535360346695786201508112752712640"));
	const Big ref = boost::multiprecision::log(Big(exact));
	CHECK(std::abs(std::expm1(log_binomial(1280, 20) - ref.convert_to<double>())) < 1e-12);

	// lgamma branch stays consistent with the summation branch
	CHECK(log_binomial(100000, 5000) == doctest::Approx(std::lgamma(100001.0) - std::lgamma(5001.0) -
	                                                    std::lgamma(95001.0)).epsilon(1e-12));
}

TEST_CASE("kv_bound") {
	CHECK(kv_bound(1, 1, SingularSpectrum({1.0})) == doctest::Approx(12288.0).epsilon(1e-13));
	// n=10, k=100, p=3, ||A||_6^12 = 1; 50-digit evaluation
	CHECK(kv_bound(100, 3, SingularSpectrum({1.0}, 10)) == doctest::Approx(10550981454662240323.0).epsilon(1e-12));

	const auto s = geometric_spectrum(0.8, 20);
	// doubling ||A||_2p^2p (scale sigma by 2^(1/2p)) quadruples the bound
	for (int p : {1, 2, 4}) {
		const double base = kv_bound(50, p, s);
		CHECK(kv_bound(50, p, s.scaled(std::pow(2.0, 1.0 / (2 * p)))) == doctest::Approx(4.0 * base).epsilon(1e-12));
	}
}

TEST_CASE("c_coeff") {
	CHECK(c_coeff(1, 1) == 3.0);
	CHECK(c_coeff(3, 2) == 45.0);
	CHECK(c_coeff(4, 3) == 243.0);
	CHECK(c_coeff(3, 1) + c_coeff(3, 2) + c_coeff(3, 3) == 99.0);
	for (int r = 1; r <= 12; ++r) {
		for (int l = 1; l <= r; ++l) {
			CHECK(c_coeff(r, l) > 0.0);
			CHECK(c_coeff(r, l) == std::floor(c_coeff(r, l)));
		}
		if (r >= 2)
			CHECK(c_coeff(r, 2) > std::pow(3.0, r - 2) * std::pow(2.0, r));
	}
	CHECK_THROWS_AS(c_coeff(3, 0), std::invalid_argument);
	CHECK_THROWS_AS(c_coeff(3, 4), std::invalid_argument);
}

TEST_CASE("tuple_count") {
	CHECK(tuple_count(4, 2, 1) == 24);
	for (int p = 1; p <= 6; ++p) {
		BigInt central = 1;
		for (int i = 1; i <= p; ++i)
			central = central * (p + i) / i;
		CHECK(tuple_count(2 * p, p, 0) == central);
	}
	CHECK(tuple_count(3, 2, 0) == 0);
	CHECK_THROWS_AS(tuple_count(4, 2, 3), std::invalid_argument);

	for (unsigned k = 1; k <= 6; ++k)
		for (int p = 1; p <= std::min<int>(int(k), 3); ++p) {
			const auto counts = oracle::enumerate_tuple_pairs(k, p);
			for (int r = 0; r <= p; ++r)
				CHECK(tuple_count(k, p, r) == counts[std::size_t(r)]);
		}

	for (std::uint64_t k = 1; k <= 12; ++k)
		for (int p = 1; p <= std::min<int>(int(k), 5); ++p) {
			BigInt sum = 0;
			for (int r = 0; r <= p; ++r)
				sum += tuple_count(k, p, r);
			BigInt c = 1;
			for (int i = 1; i <= p; ++i)
				c = c * (k - p + i) / i;
			CHECK(sum == c * c);
		}

	// big values stay exact
	CHECK(tuple_count(1000000, 30, 0) > BigInt(1) << 500);
}

TEST_CASE("expected_f and f_upper") {
	CHECK(expected_f(0, SingularSpectrum({1.0}), 1) == 1.0);
	for (int p : {1, 2, 5}) {
		const double n = 7;
		CHECK(expected_f(1, identity_spectrum(7), p) == n * n + 2 * n);
	}
	CHECK_THROWS_AS(expected_f(2, kFig1, 3), std::invalid_argument);

	CHECK(f_upper(2, identity_spectrum(5), 2) == 6.0 * 5 + 3.0 * 25);
	CHECK(f_upper(3, SingularSpectrum({1.0}), 3) == 99.0);
	CHECK_THROWS_AS(f_upper(1, kFig1, 3), std::invalid_argument);
	CHECK_THROWS_AS(f_upper(4, kFig1, 3), std::invalid_argument);
}

TEST_CASE("theorem2_bound against exact rational evaluation") {
	// values from tests/oracles/generate_oracles.py (Fraction arithmetic)
	CHECK(theorem2_bound(20, 3, kFig1) == doctest::Approx(1.1796363034485626).epsilon(1e-12));
	CHECK(theorem2_bound(10, 2, kFig1) == doctest::Approx(0.8999232331941702).epsilon(1e-12));
	CHECK(theorem2_bound(7, 5, kFig1) == doctest::Approx(1150.9816670411503).epsilon(1e-12));
	CHECK(theorem2_bound(40, 6, kFig1) == doctest::Approx(8.590790000730841).epsilon(1e-12));

	// p = 1 reduces to the exact Hutchinson variance 2n/k for the identity
	for (auto [n, k] : {std::pair{1, 1}, {5, 3}, {100, 20}, {100, 1000}})
		CHECK(theorem2_bound(std::size_t(k), 1, identity_spectrum(std::size_t(n))) ==
		      doctest::Approx(2.0 * n / k).epsilon(1e-12));

	CHECK_THROWS_AS(theorem2_bound(3, 4, kFig1), std::invalid_argument);
	CHECK_THROWS_AS(theorem2_bound(3, 0, kFig1), std::invalid_argument);
}

TEST_CASE("theorem2_bound tends to the first-order term") {
	for (int p : {2, 3}) {
		const double leading = 2.0 * p * p * schatten_power(kFig1, 4 * p);
		const double ratio = 100000.0 * theorem2_bound(100000, p, kFig1) / leading;
		CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
	}
	// no overflow at the documented extremes
	CHECK(std::isfinite(theorem2_bound(1000000, 30, kFig1)));
	CHECK(std::isfinite(theorem2_bound(60, 30, identity_spectrum(100))));
}

TEST_CASE("first and second order estimates") {
	CHECK(first_order_estimate(40, 1, identity_spectrum(9)) == doctest::Approx(2.0 * 9 / 40).epsilon(1e-15));
	CHECK(first_order_estimate(100, 3, kFig1) == doctest::Approx(0.18004429557950433).epsilon(1e-13));
	CHECK(first_order_estimate(200, 3, kFig1) == first_order_estimate(100, 3, kFig1) / 2.0);

	for (std::size_t k : {3, 10, 1000})
		CHECK(second_order_estimate(k, 1, kFig1) == first_order_estimate(k, 1, kFig1));

	const double n = 12, k = 30;
	CHECK(second_order_estimate(30, 2, identity_spectrum(12)) ==
	      doctest::Approx(8 * n / k + (4 * n + 4 * n * n) / (k * k)).epsilon(1e-14));
	CHECK(second_order_estimate(20, 3, kFig1) == doctest::Approx(1.0903398936813713).epsilon(1e-13));
}

TEST_CASE("bound properties on random spectra") {
	RngStream rng(2718, 0);
	for (int trial = 0; trial < 100; ++trial) {
		std::vector<double> v(2 + trial % 20);
		for (double& x : v)
			x = rng.uniform();
		const SingularSpectrum s(v);
		const double c = 0.5 + rng.uniform();
		for (int p = 2; p <= 5; ++p) {
			const std::size_t k = 2 * p + trial % 50;
			CHECK(second_order_estimate(k, p, s) >= first_order_estimate(k, p, s));

			const BoundSet a = compute_bounds(k, p, s);
			const BoundSet b = compute_bounds(k, p, s.scaled(c));
			const double f = std::pow(c, 4 * p);
			CHECK(b.thm2 == doctest::Approx(a.thm2 * f).epsilon(1e-10));
			CHECK(b.kv == doctest::Approx(a.kv * f).epsilon(1e-10));
			CHECK(b.first_order == doctest::Approx(a.first_order * f).epsilon(1e-10));
			CHECK(b.second_order == doctest::Approx(a.second_order * f).epsilon(1e-10));
			CHECK(a.thm2 >= 0.0);
		}
	}
}

TEST_CASE("schatten_product_leq") {
	for (int c = 2; c <= 6; ++c)
		for (int d = c; d <= 8; ++d) {
			CHECK(schatten_product_leq(SingularSpectrum({1.0}), c, d));
			CHECK(schatten_product_leq(identity_spectrum(9), c, d));
		}
	RngStream rng(314, 0);
	for (int i = 0; i < 1000; ++i) {
		std::vector<double> v(1 + i % 30);
		for (double& x : v)
			x = rng.uniform();
		const SingularSpectrum s(v);
		for (int c = 2; c <= 12; ++c)
			for (int d = c; d <= 12; ++d)
				REQUIRE(schatten_product_leq(s, c, d));
	}
	CHECK_THROWS_AS(schatten_product_leq(kFig1, 1, 3), std::invalid_argument);
	CHECK_THROWS_AS(schatten_product_leq(kFig1, 4, 3), std::invalid_argument);
}

TEST_CASE("expected_f agrees with Monte Carlo") {
	const RngStream rng(555, 0);
	const auto r0 = mc_check_lemma_f(0, 1, 2, SingularSpectrum({1.0}), 200000, rng);
	CHECK(!r0.is_bound);
	CHECK(std::abs(r0.estimate - r0.reference) <= 4.0 * r0.stderr_);

	const auto r1 = mc_check_lemma_f(1, 3, 6, kFig1, 300000, rng);
	CHECK(std::abs(r1.estimate - r1.reference) <= 4.0 * r1.stderr_);

	const auto r2 = mc_check_lemma_f(2, 3, 6, kFig1, 300000, rng);
	CHECK(r2.is_bound);
	CHECK(r2.estimate <= r2.reference + 4.0 * r2.stderr_);

	CHECK_THROWS_AS(mc_check_lemma_f(0, 3, 5, kFig1, 10, rng), std::invalid_argument);
}
