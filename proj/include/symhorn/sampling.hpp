#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "symhorn/linalg.hpp"
#include "symhorn/vecmaj.hpp"

namespace symhorn {

// Reproducible random stream: std::mt19937_64 (whose output sequence the
// standard fixes) with hand-written uniform and Gaussian transforms, so draws
// do not depend on the standard library's distribution implementations.
// Single-owner; not safe for concurrent draws.
class SeededGenerator {
public:
    explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    // [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Uniform on {0, ..., bound - 1}, rejection-sampled.
    std::size_t below(std::size_t bound);
    // Standard normal via Box-Muller.
    double normal();

    // Independent child stream; advances this one by one draw.
    SeededGenerator split();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

// Haar orthogonal matrix: Gram-Schmidt QR of a Gaussian matrix (R with positive diagonal).
Matrix random_orthogonal(std::size_t n, SeededGenerator& g);

// K1 Z K2 with K_i orthogonal-symplectic and Z = diag(e^r, e^-r), r_j uniform in [-spread, spread].
// spread = 0 gives an orthogonal symplectic matrix.
Matrix random_symplectic(std::size_t n, double spread, SeededGenerator& g);

// S (diag(d) (+) diag(d)) S^T for S = random_symplectic(d.size(), spread, g).
Matrix random_pd_with_symplectic_spectrum(const PositiveVector& d, double spread, SeededGenerator& g);

// G G^T + 1e-3 (tr(G G^T) / dim) I for a Gaussian dim x dim G; dim even and >= 2.
Matrix random_pd(std::size_t dim, SeededGenerator& g);

// Random permutation of y followed by `transfers` Robin-Hood transfers, each
// moving a random fraction of half the gap from a larger to a smaller entry.
// The result is majorised by y. Defaults to 3 n transfers.
PositiveVector random_majorized_below(const PositiveVector& y, SeededGenerator& g,
                                      std::optional<std::size_t> transfers = std::nullopt);

}  // namespace symhorn
