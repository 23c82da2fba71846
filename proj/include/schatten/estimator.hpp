#pragma once

#include <schatten/matrix.hpp>
#include <schatten/rng.hpp>
#include <schatten/sketch.hpp>
#include <schatten/spectrum.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace schatten {

/// Z = Y^T Y, symmetric positive semidefinite up to round-off.
class GramMatrix {
public:
	/// Symmetrizes `z` by averaging with its transpose. Throws
	/// std::invalid_argument if z is not square, has non-finite entries, or a
	/// diagonal entry below -1e-12 * max|z|.
	explicit GramMatrix(Matrix z);

	const Matrix& z() const { return z_; }
	std::size_t k() const { return z_.rows(); }
	double operator()(std::size_t i, std::size_t j) const { return z_(i, j); }

private:
	Matrix z_;
};

GramMatrix gram(const SketchMatrix& y);

/// A p-cycle: p distinct 0-based column indices.
struct Cycle {
	std::vector<std::size_t> indices;
};

/// One realization of the Schatten-2p estimator.
struct EstimatorSample {
	double value = 0.0;
	int p = 0;
	std::size_t k = 0;
	std::uint64_t master_seed = 0;
	std::uint64_t trial_index = 0;

	/// C(k, p) * value, the unnormalized cycle sum.
	double big_theta() const;
};

/// C(k,p)^-1 trace(T^{p-1} Z) with T the strict upper triangle of Z.
/// Throws std::invalid_argument unless 1 <= p <= k.
double theta_hat(const GramMatrix& z, int p);
EstimatorSample theta_hat(const SketchMatrix& y, int p);

/// Z_tau = prod_l Z_{i_l, i_{l+1}}, indices wrapping around.
double cycle_product(const GramMatrix& z, const Cycle& tau);

/// Average of cycle_product over all increasing p-cycles, enumerated
/// lexicographically. Refuses (std::length_error) when C(k,p) > 1e6.
double theta_hat_bruteforce(const GramMatrix& z, int p);

/// Gaussian Hutchinson estimate of trace((A^T A)^p) = sum_t sigma_t^{2p}
/// for diagonal A, averaged over `probes` quadratic forms.
double hutchinson_power(const SingularSpectrum& s, int p, std::size_t probes, RngStream& rng);

} // namespace schatten
