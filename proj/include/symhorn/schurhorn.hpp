#pragma once

#include <optional>
#include <string>

#include "symhorn/error.hpp"
#include "symhorn/linalg.hpp"
#include "symhorn/vecmaj.hpp"

namespace symhorn {

// Entrywise geometric mean sqrt(A_jj A_{n+j,n+j}) of the two half-diagonals.
PositiveVector delta_s(const Matrix& a);

// Entrywise arithmetic mean (A_jj + A_{n+j,n+j}) / 2.
PositiveVector delta_c(const Matrix& a);

// Keeps only the diagonals of the four n x n blocks; the lower-left block
// reuses the diagonal of the upper-right one.
Matrix symplectic_diagonal(const Matrix& a);

// Symplectic eigenvalues of symplectic_diagonal(A) in closed form:
// sqrt(A_jj A_{n+j,n+j} - A_{j,n+j}^2). DefinitenessError on a non-positive radicand.
PositiveVector ds_of_symplectic_diagonal(const Matrix& a);

enum class DiagonalNotion { geometric, arithmetic, symplectic_diag };

std::string to_string(DiagonalNotion which);

// Selected diagonal weakly supermajorised by the symplectic spectrum of A,
// with slack 1e-9 * sum d_s(A).
MajorisationVerdict check_forward(const Matrix& a, DiagonalNotion which);

struct DiagonalBoundCheck {
    bool holds = false;
    double margin = 0.0;   // min_j (delta_s_j - ds_of_symplectic_diagonal_j)
};

// ds_of_symplectic_diagonal(A) <= delta_s(A) entrywise, 1e-12 slack.
DiagonalBoundCheck check_symplectic_diagonal_bound(const Matrix& a);

// Diagonal 2n x 2n matrices [[P, Q], [R, S]] stored by their diagonals.
struct ShearQuadruple {
    std::vector<double> p, q, r, s;

    std::size_t size() const noexcept { return p.size(); }
    Matrix assemble() const;
    // max_j |p_j s_j - q_j r_j - 1|
    double determinant_defect() const;
};

struct ShearFactor {
    double p, q, r, s;
};

// The SL(2) shear [[1, sqrt(c^2 - 1)], [0, 1]], whose row-norm product
// sqrt((p^2 + q^2)(r^2 + s^2)) equals c. DomainError for c < 1.
ShearFactor shear_factor(double c);

struct ConstructionReport {
    Matrix a;
    PositiveVector achieved_spectrum{1.0};   // ascending
    PositiveVector achieved_diagonal{1.0};
    double spectrum_residual = 0.0;          // max relative deviation from sorted y
    double diagonal_residual = 0.0;          // max relative deviation from x
    std::optional<PositiveVector> intermediate_z;
    bool positive_definite = false;
};

enum class DiagonalMean { geometric, arithmetic };

std::string to_string(DiagonalMean mean);

inline constexpr double kConstructionTol = 1e-7;

// Thrown when a construction finishes but its certificate misses tolerance.
class ConstructionError : public NumericalError {
public:
    ConstructionError(const std::string& what, ConstructionReport report)
        : NumericalError(what), report_(std::move(report)) {}

    const ConstructionReport& report() const noexcept { return report_; }

private:
    ConstructionReport report_;
};

// 2n x 2n PD matrix with symplectic spectrum y and delta_s equal to x.
// ConstraintError unless x is weakly supermajorised by y.
ConstructionReport construct_geometric(const PositiveVector& x, const PositiveVector& y);

// Same, with delta_c equal to x.
ConstructionReport construct_arithmetic(const PositiveVector& x, const PositiveVector& y);

// Recomputes d_s(A) and the chosen diagonal and measures deviations from
// (x, sorted y). Does not throw on large residuals. The relative deviation of
// a from b is |a - b| / min(|a|, |b|).
ConstructionReport verify_construction(const Matrix& a, const PositiveVector& x, const PositiveVector& y,
                                       DiagonalMean which);

}  // namespace symhorn
