#include "symhorn/williamson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace symhorn {

namespace {

constexpr double kClusterGap = 1e-8;
constexpr double kEps = std::numeric_limits<double>::epsilon();

Matrix skew_part(const Matrix& w) {
    Matrix s(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) s(i, j) = 0.5 * (w(i, j) - w(j, i));
    return s;
}

// Two eigenvalues of -W^2 belong together when they agree up to the clustering
// gap, with an absolute floor for rounding in the largest eigenvalue.
bool same_cluster(double lo, double hi, double largest) {
    return hi - lo <= kClusterGap * std::abs(hi) + 64.0 * kEps * largest;
}

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec column(const Matrix& m, std::size_t j) {
    Vec c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
    return c;
}

Vec mat_vec(const Matrix& m, const Vec& x) {
    Vec y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

// Modified Gram-Schmidt against `basis`, done twice.
void orthogonalize(Vec& x, const std::vector<Vec>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const Vec& b : basis) {
            const double c = dot(x, b);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * b[i];
        }
}

Matrix canonical_skew(const std::vector<double>& mu) {
    const std::size_t n = mu.size();
    Matrix c(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        c(j, n + j) = mu[j];
        c(n + j, j) = -mu[j];
    }
    return c;
}

}  // namespace

PositiveVector symplectic_eigenvalues(const Matrix& a) {
    const std::size_t n = half_dimension(a);
    const Matrix root = sqrt_pd(a);
    const Matrix w = root * standard_symplectic_form(n) * root;
    const SymmetricEigen eig = symmetric_eigendecomposition(symmetrize(transpose_times(w, w)));

    const double largest = std::abs(eig.values.back());
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = eig.values[2 * k];
        const double hi = eig.values[2 * k + 1];
        if (!same_cluster(lo, hi, largest)) {
            throw NumericalError("eigenvalues of -W^2 do not pair: " + std::to_string(lo) + " vs " +
                                 std::to_string(hi));
        }
        const double mean = 0.5 * (lo + hi);
        if (!(mean > 0.0)) throw NumericalError("non-positive symplectic eigenvalue encountered");
        d[k] = std::sqrt(mean);
    }
    return PositiveVector(std::move(d));
}

SkewCanonicalForm skew_canonical_form(const Matrix& w) {
    const std::size_t n = half_dimension(w);
    const std::size_t dim = 2 * n;
    const double wnorm = w.frobenius_norm();
    if ((w + w.transpose()).frobenius_norm() > 1e-10 * wnorm) {
        throw DomainError("skew_canonical_form: matrix is not skew-symmetric");
    }
    const Matrix ws = skew_part(w);
    const SymmetricEigen eig = symmetric_eigendecomposition(symmetrize(transpose_times(ws, ws)));
    const double largest = std::abs(eig.values.back());
    if (!(eig.values.front() > 64.0 * kEps * largest)) {
        throw DomainError("skew_canonical_form: matrix is singular");
    }

    std::vector<Vec> us, vs, chosen;
    std::vector<double> mu;
    std::size_t begin = 0;
    while (begin < dim) {
        std::size_t end = begin + 1;
        while (end < dim && same_cluster(eig.values[end - 1], eig.values[end], largest)) ++end;
        const std::size_t size = end - begin;
        if (size % 2 != 0) {
            throw NumericalError("skew_canonical_form: eigenvalue cluster of odd dimension " + std::to_string(size));
        }

        std::vector<Vec> candidates;
        for (std::size_t k = begin; k < end; ++k) candidates.push_back(column(eig.vectors, k));

        for (std::size_t step = 0; step < size / 2; ++step) {
            std::size_t best = 0;
            double best_norm = -1.0;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                orthogonalize(candidates[c], chosen);
                const double nc = norm(candidates[c]);
                if (nc > best_norm) {
                    best_norm = nc;
                    best = c;
                }
            }
            if (!(best_norm > 0.0)) throw NumericalError("skew_canonical_form: cluster basis collapsed");
            Vec u = candidates[best];
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
            for (double& x : u) x /= best_norm;

            Vec v = mat_vec(ws, u);
            for (double& x : v) x = -x;
            chosen.push_back(u);
            orthogonalize(v, chosen);
            const double nv = norm(v);
            if (!(nv > 0.0)) throw NumericalError("skew_canonical_form: degenerate pair vector");
            for (double& x : v) x /= nv;
            chosen.push_back(v);

            double m = dot(u, mat_vec(ws, v));
            if (m < 0.0) {
                for (double& x : v) x = -x;
                m = -m;
            }
            us.push_back(std::move(u));
            vs.push_back(std::move(v));
            mu.push_back(m);
        }
        begin = end;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return mu[i] < mu[j]; });

    SkewCanonicalForm out{Matrix(dim, dim), std::vector<double>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.mu[j] = mu[src];
        for (std::size_t i = 0; i < dim; ++i) {
            out.q(i, j) = us[src][i];
            out.q(i, n + j) = vs[src][i];
        }
    }

    const double form_residual = (transpose_times(out.q, ws * out.q) - canonical_skew(out.mu)).frobenius_norm();
    const double orth_residual = (transpose_times(out.q, out.q) - Matrix::identity(dim)).frobenius_norm();
    if (form_residual > 1e-9 * wnorm || orth_residual > 1e-10 * static_cast<double>(n)) {
        throw NumericalError("skew_canonical_form: residual check failed (form " + std::to_string(form_residual) +
                             ", orthogonality " + std::to_string(orth_residual) + ")");
    }
    return out;
}

bool williamson_residuals_ok(const WilliamsonDecomposition& w, const Matrix& a) {
    const double mf = w.m.frobenius_norm();
    return w.congruence_residual <= kWilliamsonTol * a.frobenius_norm() &&
           w.symplectic_residual <= kWilliamsonTol * (1.0 + mf * mf);
}

WilliamsonDecomposition williamson_decomposition(const Matrix& a) {
    const std::size_t n = half_dimension(a);
    const Matrix j = standard_symplectic_form(n);
    const Matrix r = inv_sqrt_pd(a);
    const SkewCanonicalForm scf = skew_canonical_form(skew_part(r * j * r));

    // canonical values of A^{-1/2} J A^{-1/2} are 1/d_j: ascending d is descending mu
    std::vector<double> d(n);
    Matrix scale(2 * n, 2 * n);
    Matrix q(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = n - 1 - k;
        d[k] = 1.0 / scf.mu[src];
        const double s = std::sqrt(d[k]);
        scale(k, k) = s;
        scale(n + k, n + k) = s;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            q(i, k) = scf.q(i, src);
            q(i, n + k) = scf.q(i, n + src);
        }
    }

    WilliamsonDecomposition out;
    out.m = r * q * scale;
    out.d = PositiveVector(d);
    out.congruence_residual = (transpose_times(out.m, a * out.m) - direct_sum_pair(d)).frobenius_norm();
    out.symplectic_residual = (transpose_times(out.m, j * out.m) - j).frobenius_norm();
    out.ill_conditioned = d.back() / d.front() > 1e8;

    if (!williamson_residuals_ok(out, a)) {
        const std::string what = "Williamson residuals exceed tolerance (congruence " +
                                 std::to_string(out.congruence_residual) + ", symplectic " +
                                 std::to_string(out.symplectic_residual) + ")";
        throw WilliamsonResidualError(what, std::move(out));
    }
    return out;
}

}  // namespace symhorn
