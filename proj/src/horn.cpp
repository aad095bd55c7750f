#include "symhorn/horn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "symhorn/error.hpp"

namespace symhorn {

namespace {

// Rows i and j of `m` replaced by (c r_i + s r_j, -s r_i + c r_j).
void rotate_rows(Matrix& m, std::size_t i, std::size_t j, double c, double s) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const double ri = m(i, k), rj = m(j, k);
        m(i, k) = c * ri + s * rj;
        m(j, k) = -s * ri + c * rj;
    }
}

}  // namespace

HornResult construct_with_spectrum_and_diagonal(std::span<const double> y, std::span<const double> z) {
    if (y.size() != z.size() || y.empty()) {
        throw DimensionError("Horn construction needs equal, non-zero lengths (got " + std::to_string(y.size()) +
                             " and " + std::to_string(z.size()) + ")");
    }
    const double tol = default_slack(y);
    const MajorisationVerdict pre = is_majorized(z, y, tol);
    if (!pre.holds) {
        throw ConstraintError("diagonal is not majorised by the spectrum (k=" +
                                  std::to_string(*pre.first_violation_index) + ")",
                              *pre.first_violation_index);
    }

    const std::size_t n = y.size();
    std::vector<std::size_t> by_value(n);
    std::iota(by_value.begin(), by_value.end(), 0);
    std::stable_sort(by_value.begin(), by_value.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });

    // Working state in sorted coordinates: T = rot diag(lambda0) rot^T, and the
    // principal submatrix on `active` coordinates stays diagonal with entries lambda.
    std::vector<double> lambda(n);
    for (std::size_t k = 0; k < n; ++k) lambda[k] = y[by_value[k]];
    std::vector<std::size_t> active(n);
    std::iota(active.begin(), active.end(), 0);
    Matrix rot = Matrix::identity(n);

    std::vector<std::size_t> targets(n);
    std::iota(targets.begin(), targets.end(), 0);
    std::stable_sort(targets.begin(), targets.end(), [&](std::size_t a, std::size_t b) { return z[a] > z[b]; });

    std::vector<std::size_t> coordinate_for_target(n);
    for (std::size_t target : targets) {
        const double d = z[target];
        std::stable_sort(active.begin(), active.end(),
                         [&](std::size_t a, std::size_t b) { return lambda[a] > lambda[b]; });

        std::optional<std::size_t> pick;
        if (active.size() == 1) {
            pick = 0;
        } else {
            // an eigenvalue already equal to the target needs no rotation
            double closest = tol;
            for (std::size_t k = 0; k < active.size(); ++k) {
                const double gap = std::abs(lambda[active[k]] - d);
                if (gap <= closest) {
                    closest = gap;
                    pick = k;
                }
            }
        }

        if (!pick) {
            for (std::size_t k = 0; k + 1 < active.size(); ++k) {
                const std::size_t hi = active[k], lo = active[k + 1];
                if (lambda[hi] > d && d > lambda[lo]) {
                    const double width = lambda[hi] - lambda[lo];
                    const double c = std::sqrt((d - lambda[lo]) / width);
                    const double s = std::sqrt((lambda[hi] - d) / width);
                    rotate_rows(rot, hi, lo, c, s);
                    lambda[lo] = lambda[hi] + lambda[lo] - d;
                    lambda[hi] = d;
                    pick = k;
                    break;
                }
            }
        }
        if (!pick) {
            throw NumericalError("no eigenvalue pair brackets target diagonal entry " + std::to_string(d));
        }
        coordinate_for_target[target] = active[*pick];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(*pick));
    }

    HornResult out{Matrix(n, n), Matrix(n, n)};
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t k = 0; k < n; ++k) out.omega(t, by_value[k]) = rot(coordinate_for_target[t], k);

    Matrix scaled = out.omega;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= y[k];
    out.t = symmetrize(scaled * out.omega.transpose());

    double zmax = 0.0;
    for (double v : z) zmax = std::max(zmax, std::abs(v));
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(out.t(i, i) - z[i]) > 1e-11 * (1.0 + zmax)) {
            throw NumericalError("Horn construction missed diagonal entry " + std::to_string(i) + " (" +
                                 std::to_string(out.t(i, i)) + " vs " + std::to_string(z[i]) + ")");
        }
    }
    return out;
}

MajorisationVerdict schur_check(const Matrix& t) {
    const SymmetricEigen eig = symmetric_eigendecomposition(t);
    const double slack = 1e-12 * static_cast<double>(t.rows()) * (1.0 + t.frobenius_norm());
    return is_majorized(t.diag(), eig.values, slack);
}

}  // namespace symhorn
