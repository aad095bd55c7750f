#include "symhorn/schurhorn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symhorn/horn.hpp"
#include "symhorn/williamson.hpp"

namespace symhorn {

namespace {

struct HalfDiagonals {
    std::size_t n;
    std::vector<double> alpha, beta, gamma;   // diag(A11), diag(A12), diag(A22)
};

HalfDiagonals half_diagonals(const Matrix& a) {
    const std::size_t n = half_dimension(a);
    HalfDiagonals h{n, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        h.alpha[j] = a(j, j);
        h.beta[j] = a(j, n + j);
        h.gamma[j] = a(n + j, n + j);
    }
    return h;
}

double relative_deviation(double achieved, double target) {
    const double denom = std::min(std::abs(achieved), std::abs(target));
    const double diff = std::abs(achieved - target);
    if (diff == 0.0) return 0.0;
    return denom > 0.0 ? diff / denom : std::numeric_limits<double>::infinity();
}

double max_relative_deviation(std::span<const double> achieved, std::span<const double> target) {
    double worst = 0.0;
    for (std::size_t i = 0; i < achieved.size(); ++i)
        worst = std::max(worst, relative_deviation(achieved[i], target[i]));
    return worst;
}

// B = (Omega (+) Omega)(Y (+) Y)(Omega (+) Omega)^T with diag(Omega Y Omega^T) = z.
Matrix symplectic_orbit_seed(const PositiveVector& y, const PositiveVector& z) {
    const HornResult horn = construct_with_spectrum_and_diagonal(y.values(), z.values());
    const Matrix pair = block_diag(horn.omega, horn.omega);
    return symmetrize(pair * direct_sum_pair(y.values()) * pair.transpose());
}

ConstructionReport certify(Matrix a, const PositiveVector& x, const PositiveVector& y, const PositiveVector& z,
                           DiagonalMean which) {
    ConstructionReport report = verify_construction(a, x, y, which);
    report.intermediate_z = z;
    if (!report.positive_definite || report.spectrum_residual > kConstructionTol ||
        report.diagonal_residual > kConstructionTol) {
        throw ConstructionError("construction failed verification (spectrum residual " +
                                    std::to_string(report.spectrum_residual) + ", diagonal residual " +
                                    std::to_string(report.diagonal_residual) + ")",
                                std::move(report));
    }
    return report;
}

void require_equal_lengths(const PositiveVector& x, const PositiveVector& y) {
    if (x.size() != y.size()) {
        throw DimensionError("target vectors differ in length: " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    }
}

}  // namespace

PositiveVector delta_s(const Matrix& a) {
    const HalfDiagonals h = half_diagonals(a);
    std::vector<double> out(h.n);
    for (std::size_t j = 0; j < h.n; ++j) out[j] = std::sqrt(h.alpha[j] * h.gamma[j]);
    return PositiveVector(std::move(out));
}

PositiveVector delta_c(const Matrix& a) {
    const HalfDiagonals h = half_diagonals(a);
    std::vector<double> out(h.n);
    for (std::size_t j = 0; j < h.n; ++j) out[j] = 0.5 * (h.alpha[j] + h.gamma[j]);
    return PositiveVector(std::move(out));
}

Matrix symplectic_diagonal(const Matrix& a) {
    const HalfDiagonals h = half_diagonals(a);
    const std::size_t n = h.n;
    Matrix out(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        out(j, j) = h.alpha[j];
        out(j, n + j) = h.beta[j];
        out(n + j, j) = h.beta[j];
        out(n + j, n + j) = h.gamma[j];
    }
    return out;
}

PositiveVector ds_of_symplectic_diagonal(const Matrix& a) {
    const HalfDiagonals h = half_diagonals(a);
    std::vector<double> out(h.n);
    for (std::size_t j = 0; j < h.n; ++j) {
        const double radicand = h.alpha[j] * h.gamma[j] - h.beta[j] * h.beta[j];
        if (!(radicand > 0.0)) {
            throw DefinitenessError("2x2 block " + std::to_string(j) + " of the symplectic diagonal is not positive");
        }
        out[j] = std::sqrt(radicand);
    }
    return PositiveVector(std::move(out));
}

std::string to_string(DiagonalNotion which) {
    switch (which) {
        case DiagonalNotion::geometric: return "geometric";
        case DiagonalNotion::arithmetic: return "arithmetic";
        case DiagonalNotion::symplectic_diag: return "symplectic_diag";
    }
    return "unknown";
}

std::string to_string(DiagonalMean mean) {
    return mean == DiagonalMean::geometric ? "geometric" : "arithmetic";
}

MajorisationVerdict check_forward(const Matrix& a, DiagonalNotion which) {
    const PositiveVector spectrum = symplectic_eigenvalues(a);
    const double slack = 1e-9 * spectrum.sum();
    switch (which) {
        case DiagonalNotion::geometric: return is_weakly_supermajorized(delta_s(a), spectrum, slack);
        case DiagonalNotion::arithmetic: return is_weakly_supermajorized(delta_c(a), spectrum, slack);
        case DiagonalNotion::symplectic_diag:
            return is_weakly_supermajorized(ds_of_symplectic_diagonal(a), spectrum, slack);
    }
    throw DomainError("unknown diagonal notion");
}

DiagonalBoundCheck check_symplectic_diagonal_bound(const Matrix& a) {
    const PositiveVector inner = ds_of_symplectic_diagonal(a);
    const PositiveVector outer = delta_s(a);
    DiagonalBoundCheck out{true, std::numeric_limits<double>::infinity()};
    for (std::size_t j = 0; j < inner.size(); ++j) out.margin = std::min(out.margin, outer[j] - inner[j]);
    out.holds = out.margin >= -1e-12;
    return out;
}

Matrix ShearQuadruple::assemble() const {
    const std::size_t n = size();
    Matrix m(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        m(j, j) = p[j];
        m(j, n + j) = q[j];
        m(n + j, j) = r[j];
        m(n + j, n + j) = s[j];
    }
    return m;
}

double ShearQuadruple::determinant_defect() const {
    double worst = 0.0;
    for (std::size_t j = 0; j < size(); ++j) worst = std::max(worst, std::abs(p[j] * s[j] - q[j] * r[j] - 1.0));
    return worst;
}

ShearFactor shear_factor(double c) {
    if (!(c >= 1.0) || !std::isfinite(c)) throw DomainError("shear factor needs c >= 1, got " + std::to_string(c));
    return {1.0, std::sqrt(c * c - 1.0), 0.0, 1.0};
}

ConstructionReport construct_geometric(const PositiveVector& x, const PositiveVector& y) {
    require_equal_lengths(x, y);
    const PositiveVector z = waterfill_intermediate(x, y);
    const Matrix b = symplectic_orbit_seed(y, z);

    const std::size_t n = x.size();
    ShearQuadruple shear{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                         std::vector<double>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        // rounding can leave x_j / z_j a hair below 1 when x_j = z_j
        const ShearFactor f = shear_factor(std::max(x[j] / z[j], 1.0));
        shear.p[j] = f.p;
        shear.q[j] = f.q;
        shear.r[j] = f.r;
        shear.s[j] = f.s;
    }
    const Matrix m = shear.assemble();
    return certify(symmetrize(m * b * m.transpose()), x, y, z, DiagonalMean::geometric);
}

ConstructionReport construct_arithmetic(const PositiveVector& x, const PositiveVector& y) {
    require_equal_lengths(x, y);
    const PositiveVector z = waterfill_intermediate(x, y);
    const Matrix b = symplectic_orbit_seed(y, z);

    // Congruence by diag(a, 1/a) scales the half-diagonals by a^2 and a^-2, so
    // a^2 = beta with (beta + 1/beta) / 2 = x_j / z_j.
    const std::size_t n = x.size();
    std::vector<double> squeeze(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double c = std::max(x[j] / z[j], 1.0);
        const double beta = c + std::sqrt(c * c - 1.0);
        const double alpha = std::sqrt(beta);
        squeeze[j] = alpha;
        squeeze[n + j] = 1.0 / alpha;
    }
    const Matrix m = Matrix::diagonal(squeeze);
    return certify(symmetrize(m * b * m), x, y, z, DiagonalMean::arithmetic);
}

ConstructionReport verify_construction(const Matrix& a, const PositiveVector& x, const PositiveVector& y,
                                       DiagonalMean which) {
    require_equal_lengths(x, y);
    if (half_dimension(a) != x.size()) {
        throw DimensionError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " but targets have length " + std::to_string(x.size()));
    }
    ConstructionReport report;
    report.a = a;
    report.positive_definite = is_symmetric(a) && is_positive_definite(a);
    report.achieved_spectrum = symplectic_eigenvalues(a);
    report.achieved_diagonal = which == DiagonalMean::geometric ? delta_s(a) : delta_c(a);
    report.spectrum_residual =
        max_relative_deviation(report.achieved_spectrum.values(), sort_ascending(y).values());
    report.diagonal_residual = max_relative_deviation(report.achieved_diagonal.values(), x.values());
    return report;
}

}  // namespace symhorn
