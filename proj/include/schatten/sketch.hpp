#pragma once

#include <schatten/matrix.hpp>
#include <schatten/rng.hpp>
#include <schatten/spectrum.hpp>

#include <cstdint>

namespace schatten {

enum class SketchSource { diagonal, dense };

/// Y = A * Omega, rows x k, with the stream that generated Omega.
struct SketchMatrix {
	Matrix data;
	SketchSource source = SketchSource::diagonal;
	std::uint64_t master_seed = 0;
	std::uint64_t stream_index = 0;

	std::size_t k() const { return data.cols(); }
	std::size_t rows() const { return data.rows(); }
};

/// Sketch of diag(s): Y_{t,l} = sigma_t * omega_{t,l}. Omega is drawn
/// column-major (l outer, t inner) from `rng`, one row per stored value.
SketchMatrix gaussian_sketch_diag(const SingularSpectrum& s, std::size_t k, RngStream& rng);

/// Y = A * Omega for a dense m x n matrix A; Omega is n x k and drawn
/// column-major from `rng`, matching gaussian_sketch_diag for A = diag(s).
SketchMatrix gaussian_sketch_dense(const Matrix& a, std::size_t k, RngStream& rng);

} // namespace schatten
