#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "symhorn/error.hpp"
#include "symhorn/vecmaj.hpp"

using namespace symhorn;

namespace {

// z' = D y for a random doubly-stochastic D (convex mix of permutation matrices).
std::vector<double> doubly_stochastic_mix(const std::vector<double>& y, std::mt19937_64& rng) {
    const std::size_t n = y.size();
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n, 0.0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0.0;
    for (int term = 0; term < 4; ++term) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const double w = u(rng);
        total += w;
        for (std::size_t i = 0; i < n; ++i) out[i] += w * y[perm[i]];
    }
    for (double& v : out) v /= total;
    return out;
}

}  // namespace

TEST_CASE("sort_descending") {
    CHECK(sort_descending({1, 3, 2}) == PositiveVector{3, 2, 1});
    CHECK(sort_descending({5, 5}) == PositiveVector{5, 5});
    CHECK(sort_descending({7}) == PositiveVector{7});
}

TEST_CASE("PositiveVector rejects empty and non-positive input") {
    CHECK_THROWS_AS(PositiveVector(std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(PositiveVector({1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(PositiveVector({-2.0}), DomainError);
}

TEST_CASE("weak submajorisation") {
    CHECK(is_weakly_submajorized(std::vector{1.0, 3.0}, std::vector{2.0, 4.0}).holds);
    const auto v = is_weakly_submajorized(std::vector{5.0, 5.0}, std::vector{6.0, 3.0});
    CHECK_FALSE(v.holds);
    CHECK(v.first_violation_index == 2u);
    CHECK(v.lhs_partial_sum == 10.0);
    CHECK(v.rhs_partial_sum == 9.0);
    CHECK(is_weakly_submajorized(std::vector{2.0, 2.0}, std::vector{2.0, 2.0}).holds);
    CHECK_THROWS_AS(is_weakly_submajorized(std::vector{1.0}, std::vector{1.0, 2.0}), DimensionError);
}

TEST_CASE("weak supermajorisation") {
    CHECK(is_weakly_supermajorized(std::vector{2.0, 4.0}, std::vector{1.0, 3.0}).holds);
    const auto v = is_weakly_supermajorized(std::vector{5.0, 5.0}, std::vector{6.0, 5.0});
    CHECK_FALSE(v.holds);
    CHECK(v.first_violation_index == 2u);
    CHECK(v.lhs_partial_sum == 10.0);
    CHECK(v.rhs_partial_sum == 11.0);
    // ascending partial sums 2>=1, 4>=2, 104>=12
    CHECK(is_weakly_supermajorized(std::vector{2.0, 2.0, 100.0}, std::vector{10.0, 1.0, 1.0}).holds);
    CHECK_THROWS_AS(is_weakly_supermajorized(std::vector{1.0, 2.0}, std::vector{1.0}), DimensionError);
}

TEST_CASE("majorisation") {
    CHECK(is_majorized(std::vector{2.0, 2.0}, std::vector{3.0, 1.0}).holds);
    const auto v = is_majorized(std::vector{3.0, 1.0}, std::vector{2.0, 2.0});
    CHECK_FALSE(v.holds);
    CHECK(v.first_violation_index == 1u);
    // 8<=10, 10<=11, 12=12
    CHECK(is_majorized(std::vector{2.0, 2.0, 8.0}, std::vector{10.0, 1.0, 1.0}).holds);
    // sub holds but totals differ
    const auto t = is_majorized(std::vector{1.0, 1.0}, std::vector{3.0, 1.0});
    CHECK_FALSE(t.holds);
    CHECK(t.first_violation_index == 2u);
    CHECK_THROWS_AS(is_majorized(std::vector{1.0}, std::vector{1.0}, -1.0), DomainError);
}

TEST_CASE("waterfill_intermediate examples") {
    CHECK(waterfill_intermediate({2, 2}, {1, 3}) == PositiveVector{2, 2});
    const PositiveVector z = waterfill_intermediate({2, 2, 100}, {10, 1, 1});
    CHECK(z == PositiveVector{2, 2, 8});
    CHECK(is_majorized(z, std::vector{10.0, 1.0, 1.0}).holds);
    CHECK(waterfill_intermediate({2}, {1}) == PositiveVector{1});
}

TEST_CASE("waterfill_intermediate rejects x outside Sigma_y") {
    try {
        waterfill_intermediate({0.5, 0.5}, {3, 1});
        FAIL("expected ConstraintError");
    } catch (const ConstraintError& e) {
        CHECK(e.violation_index() == 1u);
    }
    CHECK_THROWS_AS(waterfill_intermediate({1, 2}, {1}), DimensionError);
}

TEST_CASE("is_in_sigma") {
    CHECK(is_in_sigma({3, 1}, {3, 1}));
    CHECK(is_in_sigma({100, 100}, {3, 1}));
    CHECK_FALSE(is_in_sigma({0.5, 0.5}, {3, 1}));
    CHECK_THROWS_AS(is_in_sigma({1}, {1, 1}), DimensionError);
}

TEST_CASE("reflexivity and water-fill fixed point") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> raw(1 + trial % 7);
        for (double& v : raw) v = u(rng);
        const PositiveVector x(raw);
        CHECK(is_majorized(x, x).holds);
        CHECK(waterfill_intermediate(x, x) == x);
    }
}

TEST_CASE("water-fill output satisfies z <= x and z majorised by y") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::uniform_int_distribution<int> len(1, 8);
    std::bernoulli_distribution noisy(0.5);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<double> y(len(rng));
        for (double& v : y) v = u(rng);
        std::vector<double> x = doubly_stochastic_mix(y, rng);
        for (double& v : x)
            if (noisy(rng)) v += u(rng);
        const PositiveVector z = waterfill_intermediate(PositiveVector(x), PositiveVector(y));
        const double ysum = std::accumulate(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < x.size(); ++i) REQUIRE(z[i] <= x[i]);
        REQUIRE(oracle::majorized(z.values(), y, 1e-12 * ysum));
    }
}

TEST_CASE("majorisation implies both weak relations (convex hull of permutations, n <= 4)") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> y(n);
            for (double& v : y) v = u(rng);
            // weights over all n! permutations
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<double> x(n, 0.0);
            double total = 0.0;
            do {
                const double w = u(rng);
                total += w;
                for (std::size_t i = 0; i < n; ++i) x[i] += w * y[perm[i]];
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (double& v : x) v /= total;

            const double slack = default_slack(y);
            REQUIRE(is_majorized(x, y, slack).holds);
            REQUIRE(is_weakly_submajorized(x, y, slack).holds);
            REQUIRE(is_weakly_supermajorized(x, y, slack).holds);
        }
    }
}

TEST_CASE("predicates are permutation invariant and homogeneous") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.5, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> x(4), y(4);
        for (double& v : x) v = u(rng);
        for (double& v : y) v = u(rng);
        const double slack = 0.1;
        const bool sub = is_weakly_submajorized(x, y, slack).holds;
        const bool sup = is_weakly_supermajorized(x, y, slack).holds;
        const bool maj = is_majorized(x, y, slack).holds;

        std::vector<double> xp = x, yp = y;
        std::shuffle(xp.begin(), xp.end(), rng);
        std::shuffle(yp.begin(), yp.end(), rng);
        CHECK(is_weakly_submajorized(xp, yp, slack).holds == sub);
        CHECK(is_weakly_supermajorized(xp, yp, slack).holds == sup);
        CHECK(is_majorized(xp, yp, slack).holds == maj);

        // power-of-two scale keeps the arithmetic exact
        const double c = 4.0;
        std::vector<double> xc = x, yc = y;
        for (double& v : xc) v *= c;
        for (double& v : yc) v *= c;
        CHECK(is_weakly_submajorized(xc, yc, c * slack).holds == sub);
        CHECK(is_weakly_supermajorized(xc, yc, c * slack).holds == sup);
        CHECK(is_majorized(xc, yc, c * slack).holds == maj);
    }
}
