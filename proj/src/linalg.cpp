#include "symhorn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symhorn/error.hpp"

namespace symhorn {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionError("matrix data length " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<double> Matrix::diag() const {
    std::vector<double> d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
    return d;
}

double Matrix::frobenius_norm() const {
    // scaled accumulation keeps huge/tiny entries from overflowing
    const double scale = max_abs();
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (double v : data_) {
        const double r = v / scale;
        sum += r * r;
    }
    return scale * std::sqrt(sum);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix transpose_times(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("transpose product: row counts differ");
    Matrix c(a.cols(), b.cols());
    for (std::size_t k = 0; k < a.rows(); ++k)
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double aki = a(k, i);
            if (aki == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aki * b(k, j);
        }
    return c;
}

Matrix symmetrize(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("symmetrize: matrix is not square");
    Matrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
    return s;
}

double asymmetry(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("asymmetry: matrix is not square");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
    return m;
}

bool is_symmetric(const Matrix& a) {
    return a.is_square() && asymmetry(a) <= 1e-12 * (1.0 + a.max_abs());
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

// Two-sided rotation in the (p, q) plane annihilating a(p, q).
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

SymmetricEigen symmetric_eigendecomposition(const Matrix& s) {
    if (!s.is_square()) throw DimensionError("eigendecomposition: matrix is not square");
    const std::size_t n = s.rows();
    Matrix a = symmetrize(s);
    Matrix v = Matrix::identity(n);
    const double norm = a.frobenius_norm();
    if (!std::isfinite(norm)) throw NumericalError("eigendecomposition: matrix has non-finite entries");
    const double threshold = 1e-14 * norm;
    const std::size_t budget = 30 * n * n;

    int sweeps = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (static_cast<std::size_t>(sweeps) >= budget) {
            throw NumericalError("Jacobi eigensolver did not converge within " + std::to_string(budget) +
                                 " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) jacobi_rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen out{Matrix(n, n), std::vector<double>(n), sweeps};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

bool is_positive_definite(const Matrix& s) {
    if (!s.is_square() || s.rows() == 0) return false;
    const std::size_t n = s.rows();
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = s(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
        if (!(pivot > 0.0) || !std::isfinite(pivot)) return false;
        l(j, j) = std::sqrt(pivot);
        for (std::size_t i = j + 1; i < n; ++i) {
            double sum = s(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
            l(i, j) = sum / l(j, j);
        }
    }
    return true;
}

namespace {

Matrix spectral_function(const Matrix& a, double (*f)(double)) {
    if (!is_symmetric(a) || !is_positive_definite(a)) throw DefinitenessError("matrix is not symmetric positive definite");
    const SymmetricEigen eig = symmetric_eigendecomposition(a);
    if (!(eig.values.front() > 0.0)) throw DefinitenessError("matrix has a non-positive eigenvalue");
    const std::size_t n = a.rows();
    Matrix scaled = eig.vectors;
    for (std::size_t j = 0; j < n; ++j) {
        const double fj = f(eig.values[j]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= fj;
    }
    return symmetrize(scaled * eig.vectors.transpose());
}

}  // namespace

Matrix sqrt_pd(const Matrix& a) {
    return spectral_function(a, [](double x) { return std::sqrt(x); });
}

Matrix inv_sqrt_pd(const Matrix& a) {
    return spectral_function(a, [](double x) { return 1.0 / std::sqrt(x); });
}

Matrix standard_symplectic_form(std::size_t n) {
    Matrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    return j;
}

Matrix direct_sum_pair(std::span<const double> d) {
    const std::size_t n = d.size();
    Matrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = d[i];
        m(n + i, n + i) = d[i];
    }
    return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

std::size_t half_dimension(const Matrix& a) {
    if (!a.is_square() || a.rows() % 2 != 0 || a.rows() == 0) {
        throw DimensionError("expected a square matrix of even dimension, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
    return a.rows() / 2;
}

SymplecticCheck is_symplectic(const Matrix& m, double tol) {
    const std::size_t n = half_dimension(m);
    const Matrix j = standard_symplectic_form(n);
    const Matrix r = transpose_times(m, j * m) - j;
    SymplecticCheck check;
    check.residual = r.frobenius_norm();
    const double mf = m.frobenius_norm();
    check.ok = check.residual <= tol * (1.0 + mf * mf);
    return check;
}

BlockPartition block_partition(const Matrix& a) {
    const std::size_t n = half_dimension(a);
    BlockPartition b{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b.a11(i, j) = a(i, j);
            b.a12(i, j) = a(i, n + j);
            b.a21(i, j) = a(n + i, j);
            b.a22(i, j) = a(n + i, n + j);
        }
    return b;
}

Matrix block_assemble(const BlockPartition& b) {
    const std::size_t n = b.a11.rows();
    for (const Matrix* blk : {&b.a11, &b.a12, &b.a21, &b.a22}) {
        if (blk->rows() != n || blk->cols() != n) throw DimensionError("block_assemble: blocks must all be n x n");
    }
    Matrix a(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = b.a11(i, j);
            a(i, n + j) = b.a12(i, j);
            a(n + i, j) = b.a21(i, j);
            a(n + i, n + j) = b.a22(i, j);
        }
    return a;
}

}  // namespace symhorn
