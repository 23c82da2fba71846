#include <schatten/verify.hpp>

#include <schatten/bounds.hpp>
#include <schatten/estimator.hpp>
#include <schatten/sketch.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace schatten {

namespace {

CheckResult oracle_equivalence(std::size_t k_max) {
	const SingularSpectrum s = geometric_spectrum(0.8, 5);
	double worst = 0.0;
	std::size_t cases = 0;
	for (std::size_t k = 1; k <= k_max; ++k) {
		for (int p = 1; p <= std::min<int>(static_cast<int>(k), 4); ++p) {
			for (std::uint64_t seed = 0; seed < 20; ++seed) {
				RngStream rng = derive_trial_rng(seed, k * 16 + static_cast<std::uint64_t>(p));
				const GramMatrix z = gram(gaussian_sketch_diag(s, k, rng));
				const double fast = theta_hat(z, p);
				const double brute = theta_hat_bruteforce(z, p);
				worst = std::max(worst, std::abs(fast - brute) / (1.0 + std::abs(brute)));
				++cases;
			}
		}
	}
	std::ostringstream d;
	d << cases << " cases, max scaled error " << worst;
	return {"oracle_equivalence", worst <= 1e-9, d.str()};
}

// Pairs of increasing p-tuples in [k] grouped by the number of shared indices.
std::vector<BigInt> enumerate_pairs(std::size_t k, int p) {
	std::vector<unsigned> subsets;
	for (unsigned m = 0; m < (1u << k); ++m) {
		if (std::popcount(m) == p)
			subsets.push_back(m);
	}
	std::vector<BigInt> counts(static_cast<std::size_t>(p) + 1, 0);
	for (unsigned a : subsets)
		for (unsigned b : subsets)
			counts[static_cast<std::size_t>(std::popcount(a & b))] += 1;
	return counts;
}

CheckResult tuple_counts(std::size_t enum_k_max) {
	std::size_t identities = 0, enumerations = 0;
	bool ok = true;
	std::ostringstream d;
	for (std::size_t k = 1; k <= 12; ++k) {
		for (int p = 1; p <= std::min<int>(static_cast<int>(k), 5); ++p) {
			BigInt total = 0;
			for (int r = 0; r <= p; ++r)
				total += tuple_count(k, p, r);
			BigInt c = 1;
			for (std::size_t i = 1; i <= static_cast<std::size_t>(p); ++i)
				c = c * (k - static_cast<std::size_t>(p) + i) / i;
			if (total != c * c) {
				ok = false;
				d << "sum mismatch at k=" << k << " p=" << p << "; ";
			}
			++identities;
			if (k <= enum_k_max && p <= 3) {
				const auto counts = enumerate_pairs(k, p);
				for (int r = 0; r <= p; ++r) {
					if (counts[static_cast<std::size_t>(r)] != tuple_count(k, p, r)) {
						ok = false;
						d << "enumeration mismatch at k=" << k << " p=" << p << " r=" << r << "; ";
					}
				}
				++enumerations;
			}
		}
	}
	d << identities << " identities, " << enumerations << " enumerations";
	return {"tuple_count", ok, d.str()};
}

CheckResult product_inequality(std::size_t spectra) {
	RngStream rng(0x5eed, 0);
	std::size_t failures = 0, checks = 0;
	for (std::size_t i = 0; i < spectra; ++i) {
		const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 20.0);
		std::vector<double> v(n);
		for (double& x : v)
			x = rng.uniform();
		const SingularSpectrum s(std::move(v));
		for (int c = 2; c <= 12; ++c) {
			for (int d = c; d <= 12; ++d) {
				failures += schatten_product_leq(s, c, d) ? 0 : 1;
				++checks;
			}
		}
	}
	std::ostringstream d;
	d << checks << " checks, " << failures << " failures";
	return {"schatten_product_inequality", failures == 0, d.str()};
}

CheckResult hutchinson_identity(std::size_t sketches) {
	double worst = 0.0;
	for (std::size_t i = 0; i < sketches; ++i) {
		RngStream rng(0xfeed, i);
		const std::size_t k = 1 + i % 17;
		const SketchMatrix y = gaussian_sketch_diag(algebraic_spectrum(1.0, 3 + i % 11), k, rng);
		const double expected = kernels::frobenius_norm_sq(y.data) / static_cast<double>(k);
		const double got = theta_hat(y, 1).value;
		worst = std::max(worst, std::abs(got - expected) / std::abs(expected));
	}
	std::ostringstream d;
	d << sketches << " sketches, max relative error " << worst;
	return {"p1_hutchinson_identity", worst <= 1e-12, d.str()};
}

CheckResult c_coefficients() {
	bool ok = true;
	for (int r = 1; r <= 12; ++r) {
		for (int l = 1; l <= r; ++l) {
			const double c = c_coeff(r, l);
			ok = ok && c > 0.0 && c == std::floor(c);
		}
		if (r >= 2)
			ok = ok && c_coeff(r, 2) > std::pow(3.0, r - 2) * std::pow(2.0, r);
	}
	return {"c_coeff_integrality", ok, "1 <= l <= r <= 12"};
}

} // namespace

std::vector<CheckResult> run_verify(bool quick) {
	return {
		oracle_equivalence(quick ? 8 : 10),
		tuple_counts(quick ? 6 : 10),
		product_inequality(quick ? 200 : 1000),
		hutchinson_identity(100),
		c_coefficients(),
	};
}

} // namespace schatten
