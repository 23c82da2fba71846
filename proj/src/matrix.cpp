#include <schatten/matrix.hpp>

#include <algorithm>
#include <stdexcept>

namespace schatten {

Matrix Matrix::identity(std::size_t n) {
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1.0;
	return m;
}

namespace kernels {

namespace {
constexpr std::size_t kBlock = 64;
}

Matrix gram(const Matrix& y) {
	const std::size_t rows = y.rows();
	const std::size_t k = y.cols();
	Matrix z(k, k);
	for (std::size_t t = 0; t < rows; ++t) {
		const double* yt = y.row(t).data();
		for (std::size_t a = 0; a < k; ++a) {
			const double ya = yt[a];
			if (ya == 0.0)
				continue;
			double* za = z.row(a).data();
			for (std::size_t b = a; b < k; ++b)
				za[b] += ya * yt[b];
		}
	}
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t b = a + 1; b < k; ++b)
			z(b, a) = z(a, b);
	return z;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
	if (a.cols() != b.rows())
		throw std::invalid_argument("multiply: inner dimensions differ");
	const std::size_t m = a.rows(), l = a.cols(), n = b.cols();
	Matrix c(m, n);
	for (std::size_t l0 = 0; l0 < l; l0 += kBlock) {
		const std::size_t l1 = std::min(l, l0 + kBlock);
		for (std::size_t j0 = 0; j0 < n; j0 += kBlock) {
			const std::size_t j1 = std::min(n, j0 + kBlock);
			for (std::size_t i = 0; i < m; ++i) {
				double* ci = c.row(i).data();
				const double* ai = a.row(i).data();
				for (std::size_t q = l0; q < l1; ++q) {
					const double aiq = ai[q];
					const double* bq = b.row(q).data();
					for (std::size_t j = j0; j < j1; ++j)
						ci[j] += aiq * bq[j];
				}
			}
		}
	}
	return c;
}

Matrix multiply_strict_upper(const Matrix& a, const Matrix& t, std::size_t shift_a) {
	const std::size_t k = a.rows();
	if (a.cols() != k || t.rows() != k || t.cols() != k)
		throw std::invalid_argument("multiply_strict_upper: operands must be square and equal order");
	Matrix c(k, k);
	// C_ij = sum_q A_iq T_qj, A_iq != 0 needs q >= i + shift_a, T_qj != 0 needs j > q
	for (std::size_t q0 = 0; q0 < k; q0 += kBlock) {
		const std::size_t q1 = std::min(k, q0 + kBlock);
		for (std::size_t i = 0; i < k; ++i) {
			const std::size_t qs = std::max(q0, i + shift_a);
			if (qs >= q1)
				continue;
			double* ci = c.row(i).data();
			const double* ai = a.row(i).data();
			for (std::size_t q = qs; q < q1; ++q) {
				const double aiq = ai[q];
				const double* tq = t.row(q).data();
				for (std::size_t j = q + 1; j < k; ++j)
					ci[j] += aiq * tq[j];
			}
		}
	}
	return c;
}

double frobenius_dot(const Matrix& a, const Matrix& b) {
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("frobenius_dot: shape mismatch");
	auto x = a.data();
	auto y = b.data();
	double sum = 0.0;
	for (std::size_t i = 0; i < x.size(); ++i)
		sum += x[i] * y[i];
	return sum;
}

double frobenius_norm_sq(const Matrix& a) {
	return frobenius_dot(a, a);
}

} // namespace kernels
} // namespace schatten
