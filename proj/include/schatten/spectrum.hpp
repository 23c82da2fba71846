#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schatten {

/// Singular values of a matrix, stored in non-increasing order.
///
/// A matrix is represented by its spectrum alone: Gaussian sketches are
/// rotation invariant, so every quantity here depends on A only through
/// sigma_1 >= ... >= sigma_n >= 0. `nominal_n` is the ambient dimension and
/// may exceed the number of stored values (the rest are implied zeros).
class SingularSpectrum {
public:
	SingularSpectrum() = default;

	/// Sorts `values` into canonical order. Throws std::invalid_argument on a
	/// negative or non-finite value, or if nominal_n < values.size().
	/// nominal_n == 0 means "use values.size()".
	explicit SingularSpectrum(std::vector<double> values, std::size_t nominal_n = 0);

	std::span<const double> values() const { return values_; }
	std::size_t size() const { return values_.size(); }
	bool empty() const { return values_.empty(); }
	std::size_t nominal_n() const { return nominal_n_; }
	double operator[](std::size_t i) const { return values_[i]; }

	/// Every singular value multiplied by c >= 0.
	SingularSpectrum scaled(double c) const;

	bool operator==(const SingularSpectrum&) const = default;

private:
	std::vector<double> values_;
	std::size_t nominal_n_ = 0;
};

/// ||A||_q^q = sum_i sigma_i^q, summed smallest terms first.
double schatten_power(const SingularSpectrum& s, int q);

enum class SpectrumKind { geometric, algebraic, identity };

/// geometric: (rho, rho^2, ..., rho^n), rho in (0,1]
SingularSpectrum geometric_spectrum(double rho, std::size_t n);
/// algebraic: (1, 2^-alpha, ..., n^-alpha), alpha >= 0
SingularSpectrum algebraic_spectrum(double alpha, std::size_t n);
SingularSpectrum identity_spectrum(std::size_t n);

/// Dispatches to the builders above; `param` is rho for geometric, alpha for
/// algebraic and ignored for identity.
SingularSpectrum builtin_spectrum(SpectrumKind kind, double param, std::size_t n);

/// Block-diagonal doubling diag(A, A) applied t-1 times: every value repeated
/// 2^(t-1) times, nominal_n scaled by the same factor.
SingularSpectrum block_replicate(const SingularSpectrum& base, int t);

/// Parses the spectrum grammar:
///   geometric:rho=0.8,n=100
///   algebraic:alpha=2,n=100
///   identity:n=100
///   replicate:base=<spec>,t=4
///   explicit:v1,v2,...
/// Throws std::invalid_argument with the offending text on failure.
SingularSpectrum parse_spectrum(std::string_view spec);

} // namespace schatten
