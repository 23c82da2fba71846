#include <schatten/sketch.hpp>

#include <cmath>
#include <stdexcept>

namespace schatten {

SketchMatrix gaussian_sketch_diag(const SingularSpectrum& s, std::size_t k, RngStream& rng) {
	if (k == 0)
		throw std::invalid_argument("gaussian_sketch_diag: k must be >= 1");
	if (s.empty())
		throw std::invalid_argument("gaussian_sketch_diag: spectrum is empty");
	SketchMatrix y{Matrix(s.size(), k), SketchSource::diagonal, rng.master_seed(), rng.stream_index()};
	for (std::size_t l = 0; l < k; ++l)
		for (std::size_t t = 0; t < s.size(); ++t)
			y.data(t, l) = s[t] * rng.normal();
	return y;
}

SketchMatrix gaussian_sketch_dense(const Matrix& a, std::size_t k, RngStream& rng) {
	if (k == 0)
		throw std::invalid_argument("gaussian_sketch_dense: k must be >= 1");
	if (a.empty())
		throw std::invalid_argument("gaussian_sketch_dense: matrix is empty");
	for (double v : a.data()) {
		if (!std::isfinite(v))
			throw std::invalid_argument("gaussian_sketch_dense: matrix has non-finite entries");
	}
	Matrix omega(a.cols(), k);
	for (std::size_t l = 0; l < k; ++l)
		for (std::size_t t = 0; t < a.cols(); ++t)
			omega(t, l) = rng.normal();
	return {kernels::multiply(a, omega), SketchSource::dense, rng.master_seed(), rng.stream_index()};
}

} // namespace schatten
