#include "symhorn/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symhorn/error.hpp"

namespace symhorn {

double SeededGenerator::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t SeededGenerator::below(std::size_t bound) {
    if (bound == 0) throw DomainError("below(): bound must be positive");
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return static_cast<std::size_t>(v % b);
}

double SeededGenerator::normal() {
    if (spare_normal_) {
        const double v = *spare_normal_;
        spare_normal_.reset();
        return v;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

SeededGenerator SeededGenerator::split() {
    // splitmix64 finalizer decorrelates the child seed from the parent stream
    std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return SeededGenerator(z ^ (z >> 31));
}

Matrix random_orthogonal(std::size_t n, SeededGenerator& g) {
    if (n == 0) throw DimensionError("random_orthogonal: n must be at least 1");
    Matrix a(n, n);
    for (double& v : a.data()) v = g.normal();

    Matrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = a(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                double c = 0.0;
                for (std::size_t i = 0; i < n; ++i) c += q(i, k) * col[i];
                for (std::size_t i = 0; i < n; ++i) col[i] -= c * q(i, k);
            }
        double norm = 0.0;
        for (double v : col) norm += v * v;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / norm;
    }
    return q;
}

namespace {

// [[X C X', X S X'], [-X S X', X C X']] with C, S the cosines and sines of
// random angles in the (j, n + j) planes.
Matrix random_orthosymplectic(std::size_t n, SeededGenerator& g) {
    const Matrix left = random_orthogonal(n, g);
    const Matrix right = random_orthogonal(n, g);
    Matrix rot(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * g.uniform();
        rot(j, j) = std::cos(theta);
        rot(j, n + j) = std::sin(theta);
        rot(n + j, j) = -std::sin(theta);
        rot(n + j, n + j) = std::cos(theta);
    }
    return block_diag(left, left) * rot * block_diag(right, right);
}

void require_spread(double spread) {
    if (!(spread >= 0.0) || !std::isfinite(spread)) {
        throw DomainError("spread must be a finite non-negative number, got " + std::to_string(spread));
    }
}

}  // namespace

Matrix random_symplectic(std::size_t n, double spread, SeededGenerator& g) {
    if (n == 0) throw DimensionError("random_symplectic: n must be at least 1");
    require_spread(spread);
    const Matrix k1 = random_orthosymplectic(n, g);
    Matrix squeeze(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = g.uniform(-spread, spread);
        squeeze(j, j) = std::exp(r);
        squeeze(n + j, n + j) = std::exp(-r);
    }
    const Matrix k2 = random_orthosymplectic(n, g);
    return k1 * squeeze * k2;
}

Matrix random_pd_with_symplectic_spectrum(const PositiveVector& d, double spread, SeededGenerator& g) {
    const Matrix s = random_symplectic(d.size(), spread, g);
    return symmetrize(s * direct_sum_pair(d.values()) * s.transpose());
}

Matrix random_pd(std::size_t dim, SeededGenerator& g) {
    if (dim < 2 || dim % 2 != 0) throw DimensionError("random_pd: dimension must be even and at least 2");
    Matrix gm(dim, dim);
    for (double& v : gm.data()) v = g.normal();
    Matrix a = symmetrize(gm * gm.transpose());
    double trace = 0.0;
    for (std::size_t i = 0; i < dim; ++i) trace += a(i, i);
    const double shift = 1e-3 * trace / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) a(i, i) += shift;
    return a;
}

PositiveVector random_majorized_below(const PositiveVector& y, SeededGenerator& g,
                                      std::optional<std::size_t> transfers) {
    std::vector<double> v = y.values();
    const std::size_t n = v.size();
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[g.below(i)]);
    if (n < 2) return PositiveVector(std::move(v));

    const std::size_t count = transfers.value_or(3 * n);
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t i = g.below(n);
        std::size_t j = g.below(n - 1);
        if (j >= i) ++j;
        if (v[i] < v[j]) std::swap(i, j);
        const double move = 0.5 * g.uniform() * (v[i] - v[j]);
        v[i] -= move;
        v[j] += move;
    }
    return PositiveVector(std::move(v));
}

}  // namespace symhorn
