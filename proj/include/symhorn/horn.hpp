#pragma once

#include <span>

#include "symhorn/linalg.hpp"
#include "symhorn/vecmaj.hpp"

namespace symhorn {

// T = Omega diag(y) Omega^T with diag(T) = z.
struct HornResult {
    Matrix t;
    Matrix omega;
};

// Real symmetric matrix with spectrum y and diagonal z (in the order given),
// built from plane rotations: each step moves the largest remaining target
// onto the diagonal by rotating an adjacent bracketing pair of the working
// eigenvalues, then recurses on the complement.
//
// Entries of y may be zero or negative. Throws ConstraintError unless z is
// majorised by y within 1e-12 sum|y|, NumericalError if no bracketing pair
// survives rounding.
HornResult construct_with_spectrum_and_diagonal(std::span<const double> y, std::span<const double> z);

// diag(T) majorised by eigenvalues(T), with slack 1e-12 n (1 + ||T||_F).
MajorisationVerdict schur_check(const Matrix& t);

}  // namespace symhorn
