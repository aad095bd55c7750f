#pragma once

#include <vector>

#include "symhorn/error.hpp"
#include "symhorn/linalg.hpp"
#include "symhorn/vecmaj.hpp"

namespace symhorn {

// Ascending symplectic eigenvalues d_1 <= ... <= d_n of a 2n x 2n positive
// definite matrix, i.e. the moduli of the eigenvalues of A^{1/2} J A^{1/2}.
// Computed as square roots of the doubled eigenvalues of -W^2.
// Throws DefinitenessError if A is not PD, NumericalError if the eigenvalues of
// -W^2 do not pair up.
PositiveVector symplectic_eigenvalues(const Matrix& a);

// Real normal form of a nonsingular skew-symmetric W:
//   Q^T W Q = [[0, diag(mu)], [-diag(mu), 0]],  Q orthogonal.
struct SkewCanonicalForm {
    Matrix q;
    std::vector<double> mu;   // ascending
};

SkewCanonicalForm skew_canonical_form(const Matrix& w);

// M^T A M = diag(d) (+) diag(d) with M symplectic and d ascending.
struct WilliamsonDecomposition {
    Matrix m;
    PositiveVector d{1.0};
    double congruence_residual = 0.0;   // ||M^T A M - D(+)D||_F
    double symplectic_residual = 0.0;   // ||M^T J M - J||_F
    bool ill_conditioned = false;       // d_max / d_min > 1e8
};

inline constexpr double kWilliamsonTol = 1e-8;

// Both residual bounds must hold:
//   congruence <= 1e-8 ||A||_F,  symplectic <= 1e-8 (1 + ||M||_F^2).
bool williamson_residuals_ok(const WilliamsonDecomposition& w, const Matrix& a);

// Thrown when the decomposition was computed but fails its residual checks.
class WilliamsonResidualError : public NumericalError {
public:
    WilliamsonResidualError(const std::string& what, WilliamsonDecomposition result)
        : NumericalError(what), result_(std::move(result)) {}

    const WilliamsonDecomposition& result() const noexcept { return result_; }

private:
    WilliamsonDecomposition result_;
};

WilliamsonDecomposition williamson_decomposition(const Matrix& a);

}  // namespace symhorn
