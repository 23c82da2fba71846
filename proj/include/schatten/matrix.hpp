#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace schatten {

/// Dense row-major matrix of doubles.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
		: rows_(rows), cols_(cols), data_(rows * cols, fill) {}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool empty() const { return data_.empty(); }

	double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
	std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

	std::span<double> data() { return data_; }
	std::span<const double> data() const { return data_; }

	bool operator==(const Matrix&) const = default;

	static Matrix identity(std::size_t n);

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<double> data_;
};

namespace kernels {

/// Z = Y^T Y as a sum of row outer products. Only the upper triangle is
/// accumulated; the lower triangle is mirrored, so Z is exactly symmetric.
Matrix gram(const Matrix& y);

/// C = A * B for dense A (m x l), B (l x n). Blocked i-l-j loop.
Matrix multiply(const Matrix& a, const Matrix& b);

/// C = A * T where A and T are square and strictly upper triangular with
/// A_ij = 0 for j - i < shift_a. Skips the structurally zero region; the
/// result has C_ij = 0 for j - i < shift_a + 1.
Matrix multiply_strict_upper(const Matrix& a, const Matrix& t, std::size_t shift_a);

/// sum_ij A_ij * B_ij
double frobenius_dot(const Matrix& a, const Matrix& b);

/// ||A||_F^2
double frobenius_norm_sq(const Matrix& a);

} // namespace kernels
} // namespace schatten
