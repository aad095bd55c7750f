#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace symhorn {

// Dense row-major real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    Matrix transpose() const;
    std::vector<double> diag() const;
    double frobenius_norm() const;
    double max_abs() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);

// a^T * b without forming the transpose.
Matrix transpose_times(const Matrix& a, const Matrix& b);

// (a + a^T) / 2
Matrix symmetrize(const Matrix& a);

// max_ij |a_ij - a_ji|
double asymmetry(const Matrix& a);

// Symmetric within |a_ij - a_ji| <= 1e-12 (1 + max|a|).
bool is_symmetric(const Matrix& a);

struct SymmetricEigen {
    Matrix vectors;               // columns are eigenvectors
    std::vector<double> values;   // ascending
    int sweeps = 0;
};

// Cyclic Jacobi. Throws NumericalError if the off-diagonal mass does not drop
// below 1e-14 ||S||_F within 30 n^2 sweeps, DimensionError if not square.
SymmetricEigen symmetric_eigendecomposition(const Matrix& s);

// Cholesky with strictly positive pivots.
bool is_positive_definite(const Matrix& s);

// Unique positive definite square root and its inverse. Throw DefinitenessError
// unless the input is symmetric positive definite.
Matrix sqrt_pd(const Matrix& a);
Matrix inv_sqrt_pd(const Matrix& a);

// J = [[0, I], [-I, 0]] of size 2n.
Matrix standard_symplectic_form(std::size_t n);

// diag(d) (+) diag(d), size 2n.
Matrix direct_sum_pair(std::span<const double> d);

// Block-diagonal [[a, 0], [0, b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

struct SymplecticCheck {
    bool ok = false;
    double residual = 0.0;   // ||M^T J M - J||_F
};

inline constexpr double kSymplecticTol = 1e-10;

// Passes when residual <= tol (1 + ||M||_F^2). DimensionError on odd or non-square input.
SymplecticCheck is_symplectic(const Matrix& m, double tol = kSymplecticTol);

struct BlockPartition {
    Matrix a11, a12, a21, a22;
};

BlockPartition block_partition(const Matrix& a);
Matrix block_assemble(const BlockPartition& blocks);

// Half-dimension of a square even matrix; DimensionError otherwise.
std::size_t half_dimension(const Matrix& a);

}  // namespace symhorn
