#include <schatten/estimator.hpp>

#include <schatten/binomial.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schatten {

GramMatrix::GramMatrix(Matrix z) : z_(std::move(z)) {
	const std::size_t k = z_.rows();
	if (z_.cols() != k)
		throw std::invalid_argument("GramMatrix: matrix must be square");
	double max_abs = 0.0;
	for (double v : z_.data()) {
		if (!std::isfinite(v))
			throw std::invalid_argument("GramMatrix: non-finite entry");
		max_abs = std::max(max_abs, std::abs(v));
	}
	for (std::size_t i = 0; i < k; ++i) {
		if (z_(i, i) < -1e-12 * max_abs)
			throw std::invalid_argument("GramMatrix: negative diagonal entry, not positive semidefinite");
		for (std::size_t j = i + 1; j < k; ++j) {
			const double avg = 0.5 * (z_(i, j) + z_(j, i));
			z_(i, j) = avg;
			z_(j, i) = avg;
		}
	}
}

GramMatrix gram(const SketchMatrix& y) {
	return GramMatrix(kernels::gram(y.data));
}

double EstimatorSample::big_theta() const {
	return binomial(k, static_cast<std::uint64_t>(p)) * value;
}

namespace {

void check_order(std::size_t k, int p) {
	if (p < 1)
		throw std::invalid_argument("theta_hat: p must be >= 1");
	if (static_cast<std::size_t>(p) > k)
		throw std::invalid_argument("theta_hat: p > k, estimator identically zero beyond k (p=" +
		                            std::to_string(p) + ", k=" + std::to_string(k) + ")");
}

} // namespace

double theta_hat(const GramMatrix& gz, int p) {
	const std::size_t k = gz.k();
	check_order(k, p);
	const Matrix& z = gz.z();
	const double inv_binom = std::exp(-log_binomial(k, static_cast<std::uint64_t>(p)));

	if (p == 1) {
		double tr = 0.0;
		for (std::size_t i = 0; i < k; ++i)
			tr += z(i, i);
		return tr / static_cast<double>(k);
	}

	if (p == 2) {
		// T^0 = I: trace(T Z) = sum_{i<j} Z_ij Z_ji
		double tr = 0.0;
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = i + 1; j < k; ++j)
				tr += z(i, j) * z(j, i);
		return tr * inv_binom;
	}

	Matrix t(k, k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i + 1; j < k; ++j)
			t(i, j) = z(i, j);

	Matrix power = t;
	for (int m = 2; m < p; ++m)
		power = kernels::multiply_strict_upper(power, t, static_cast<std::size_t>(m - 1));

	// trace(P Z) = <P, Z^T>_F; P_ij = 0 for j - i < p - 1
	double tr = 0.0;
	const std::size_t shift = static_cast<std::size_t>(p - 1);
	for (std::size_t i = 0; i + shift < k; ++i)
		for (std::size_t j = i + shift; j < k; ++j)
			tr += power(i, j) * z(j, i);
	return tr * inv_binom;
}

EstimatorSample theta_hat(const SketchMatrix& y, int p) {
	check_order(y.k(), p);
	return {theta_hat(gram(y), p), p, y.k(), y.master_seed, y.stream_index};
}

double cycle_product(const GramMatrix& z, const Cycle& tau) {
	const auto& idx = tau.indices;
	if (idx.empty())
		throw std::invalid_argument("cycle_product: empty cycle");
	for (std::size_t a = 0; a < idx.size(); ++a) {
		if (idx[a] >= z.k())
			throw std::invalid_argument("cycle_product: index out of range");
		for (std::size_t b = a + 1; b < idx.size(); ++b) {
			if (idx[a] == idx[b])
				throw std::invalid_argument("cycle_product: indices must be distinct");
		}
	}
	double prod = 1.0;
	for (std::size_t a = 0; a < idx.size(); ++a)
		prod *= z(idx[a], idx[(a + 1) % idx.size()]);
	return prod;
}

double theta_hat_bruteforce(const GramMatrix& z, int p) {
	const std::size_t k = z.k();
	check_order(k, p);
	const double count = binomial(k, static_cast<std::uint64_t>(p));
	if (count > 1e6)
		throw std::length_error("theta_hat_bruteforce: C(k,p) = " + std::to_string(count) +
		                        " exceeds the enumeration budget of 1e6 cycles");

	Cycle tau{std::vector<std::size_t>(static_cast<std::size_t>(p))};
	auto& idx = tau.indices;
	for (std::size_t a = 0; a < idx.size(); ++a)
		idx[a] = a;

	double sum = 0.0;
	const std::size_t pp = idx.size();
	while (true) {
		double prod = 1.0;
		for (std::size_t a = 0; a < pp; ++a)
			prod *= z(idx[a], idx[(a + 1) % pp]);
		sum += prod;

		// next combination in lexicographic order
		std::size_t a = pp;
		while (a > 0 && idx[a - 1] == k - pp + (a - 1))
			--a;
		if (a == 0)
			break;
		++idx[a - 1];
		for (std::size_t b = a; b < pp; ++b)
			idx[b] = idx[b - 1] + 1;
	}
	return sum / count;
}

double hutchinson_power(const SingularSpectrum& s, int p, std::size_t probes, RngStream& rng) {
	if (p < 1)
		throw std::invalid_argument("hutchinson_power: p must be >= 1");
	if (probes == 0)
		throw std::invalid_argument("hutchinson_power: probes must be >= 1");
	std::vector<double> weights(s.size());
	for (std::size_t t = 0; t < s.size(); ++t)
		weights[t] = std::pow(s[t], 2 * p);
	double sum = 0.0;
	for (std::size_t j = 0; j < probes; ++j) {
		double q = 0.0;
		for (double w : weights) {
			const double omega = rng.normal();
			q += w * omega * omega;
		}
		sum += q;
	}
	return sum / static_cast<double>(probes);
}

} // namespace schatten
