#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symhorn/error.hpp"
#include "symhorn/sampling.hpp"
#include "symhorn/schurhorn.hpp"
#include "symhorn/williamson.hpp"

using namespace symhorn;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Matrix shear_example() { return Matrix(2, 2, {4, kSqrt3, kSqrt3, 1}); }

void check_all_forward(const Matrix& a) {
    CHECK(check_forward(a, DiagonalNotion::geometric).holds);
    CHECK(check_forward(a, DiagonalNotion::arithmetic).holds);
    CHECK(check_forward(a, DiagonalNotion::symplectic_diag).holds);
    CHECK(check_symplectic_diagonal_bound(a).holds);
}

}  // namespace

TEST_CASE("delta_s") {
    CHECK(delta_s(Matrix::identity(4)) == PositiveVector{1, 1});
    CHECK(delta_s(direct_sum_pair(std::vector<double>{2, 5})) == PositiveVector{2, 5});
    CHECK(delta_s(shear_example())[0] == doctest::Approx(2.0));
    // equals d_s of the plain diagonal
    CHECK(delta_s(shear_example())[0] == doctest::Approx(symplectic_eigenvalues(Matrix::diagonal(std::vector<double>{4, 1}))[0]));
    CHECK_THROWS_AS(delta_s(Matrix::identity(3)), DimensionError);
}

TEST_CASE("delta_c") {
    CHECK(delta_c(Matrix::identity(4)) == PositiveVector{1, 1});
    CHECK(delta_c(shear_example())[0] == 2.5);
    SeededGenerator g(10);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = random_pd(2 * (1 + trial % 5), g);
        const PositiveVector s = delta_s(a), c = delta_c(a), inner = ds_of_symplectic_diagonal(a);
        for (std::size_t j = 0; j < s.size(); ++j) {
            CHECK(c[j] >= s[j]);
            CHECK(s[j] >= inner[j]);
            // delta_s^2 is the product of the half-diagonals
            CHECK(s[j] * s[j] == doctest::Approx(a(j, j) * a(s.size() + j, s.size() + j)).epsilon(1e-14));
        }
    }
}

TEST_CASE("symplectic_diagonal") {
    CHECK(symplectic_diagonal(shear_example()) == shear_example());
    const Matrix d = Matrix::diagonal(std::vector<double>{1, 2, 3, 4});
    CHECK(symplectic_diagonal(d) == d);

    SeededGenerator g(3);
    Matrix a = random_pd(6, g);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, 3 + j) = a(3 + j, i) = 0.0;
    CHECK(symplectic_diagonal(a) == Matrix::diagonal(a.diag()));

    const Matrix full = random_pd(4, g);
    const Matrix sd = symplectic_diagonal(full);
    CHECK(sd(0, 2) == full(0, 2));
    CHECK(sd(2, 0) == full(0, 2));
    CHECK(sd(0, 1) == 0.0);
    CHECK(sd(0, 3) == 0.0);
}

TEST_CASE("ds_of_symplectic_diagonal") {
    CHECK(ds_of_symplectic_diagonal(Matrix::identity(4)) == PositiveVector{1, 1});
    CHECK(ds_of_symplectic_diagonal(shear_example())[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ds_of_symplectic_diagonal(shear_example())[0] ==
          doctest::Approx(symplectic_eigenvalues(shear_example())[0]).epsilon(1e-14));

    SeededGenerator g(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_pd(2 * (1 + trial % 5), g);
        // closed form agrees with the general solver applied to the symplectic diagonal
        CHECK(oracle::max_relative_error(oracle::sorted(ds_of_symplectic_diagonal(a).values()),
                                         symplectic_eigenvalues(symplectic_diagonal(a)).values()) <= 1e-10);
    }
    CHECK_THROWS_AS(ds_of_symplectic_diagonal(Matrix(2, 2, {1, 2, 2, 1})), DefinitenessError);
}

TEST_CASE("forward relations") {
    const MajorisationVerdict eq = check_forward(direct_sum_pair(std::vector<double>{3, 1, 2}), DiagonalNotion::geometric);
    CHECK(eq.holds);
    CHECK(eq.lhs_partial_sum == doctest::Approx(eq.rhs_partial_sum));

    check_all_forward(shear_example());
    CHECK(check_symplectic_diagonal_bound(shear_example()).margin == doctest::Approx(1.0));

    Matrix block = Matrix::diagonal(std::vector<double>{2, 3, 5, 7});
    block(0, 1) = block(1, 0) = 0.5;
    const DiagonalBoundCheck e = check_symplectic_diagonal_bound(block);
    CHECK(e.holds);
    CHECK(e.margin == 0.0);

    SeededGenerator g(5);
    for (int trial = 0; trial < 200; ++trial) check_all_forward(random_pd(2 * (1 + trial % 8), g));
}

TEST_CASE("shear_factor") {
    const ShearFactor one = shear_factor(1.0);
    CHECK(one.p == 1.0);
    CHECK(one.q == 0.0);
    CHECK(one.r == 0.0);
    CHECK(one.s == 1.0);
    for (double c : {2.0, 10.0, 1.5, 37.25}) {
        const ShearFactor f = shear_factor(c);
        CHECK(f.p * f.s - f.q * f.r == 1.0);
        CHECK(std::sqrt((f.p * f.p + f.q * f.q) * (f.r * f.r + f.s * f.s)) == doctest::Approx(c).epsilon(1e-15));
    }
    CHECK(shear_factor(2.0).q == doctest::Approx(kSqrt3));
    CHECK(shear_factor(10.0).q == doctest::Approx(std::sqrt(99.0)));
    CHECK_THROWS_AS(shear_factor(0.999), DomainError);
}

TEST_CASE("ShearQuadruple invariants") {
    ShearQuadruple sq;
    for (double c : {1.0, 2.0, 5.0}) {
        const ShearFactor f = shear_factor(c);
        sq.p.push_back(f.p);
        sq.q.push_back(f.q);
        sq.r.push_back(f.r);
        sq.s.push_back(f.s);
    }
    CHECK(sq.determinant_defect() <= 1e-14);
    CHECK(is_symplectic(sq.assemble(), 1e-12).ok);
}

TEST_CASE("construct_geometric: closed form n = 1") {
    const ConstructionReport r = construct_geometric({2}, {1});
    CHECK(r.a(0, 0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(r.a(0, 1) == doctest::Approx(kSqrt3).epsilon(1e-15));
    CHECK(r.a(1, 0) == doctest::Approx(kSqrt3).epsilon(1e-15));
    CHECK(r.a(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(r.intermediate_z);
    CHECK(*r.intermediate_z == PositiveVector{1});
    const double det = r.a(0, 0) * r.a(1, 1) - r.a(0, 1) * r.a(1, 0);
    CHECK(std::sqrt(det) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.positive_definite);
}

TEST_CASE("construct_geometric: x = (2,2), y = (1,3)") {
    const ConstructionReport r = construct_geometric({2, 2}, {1, 3});
    CHECK(*r.intermediate_z == PositiveVector{2, 2});
    // A = B = T (+) T with T = [[2, +-1], [+-1, 2]]
    CHECK(r.a(0, 0) == doctest::Approx(2.0));
    CHECK(r.a(2, 2) == doctest::Approx(2.0));
    CHECK(std::abs(r.a(0, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(r.a(0, 2)) <= 1e-15);
    CHECK(std::abs(r.a(0, 3)) <= 1e-15);
    CHECK(r.achieved_spectrum[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.achieved_spectrum[1] == doctest::Approx(3.0).epsilon(1e-12));
    check_all_forward(r.a);
}

TEST_CASE("construct: x equal to sorted y gives diag(y) (+) diag(y)") {
    const PositiveVector y{1, 2, 5};
    for (const auto& r : {construct_geometric(y, y), construct_arithmetic(y, y)}) {
        CHECK((r.a - direct_sum_pair(y.values())).frobenius_norm() <= 1e-14);
        CHECK(r.spectrum_residual <= 1e-12);
        CHECK(r.diagonal_residual <= 1e-14);
    }
}

TEST_CASE("construct_arithmetic: closed form n = 1") {
    const ConstructionReport r = construct_arithmetic({2}, {1});
    const double beta = 2 + kSqrt3;
    CHECK(r.a(0, 0) == doctest::Approx(beta).epsilon(1e-14));
    CHECK(r.a(1, 1) == doctest::Approx(1 / beta).epsilon(1e-14));
    CHECK(r.a(0, 1) == 0.0);
    CHECK(delta_c(r.a)[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::sqrt(r.a(0, 0) * r.a(1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("construct_arithmetic: x = (2,2), y = (1,3)") {
    const ConstructionReport r = construct_arithmetic({2, 2}, {1, 3});
    const ConstructionReport geo = construct_geometric({2, 2}, {1, 3});
    CHECK((r.a - geo.a).frobenius_norm() <= 1e-15);
    for (double v : delta_c(r.a)) CHECK(v == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("constructions reject x outside Sigma_y") {
    CHECK_THROWS_AS(construct_geometric({0.5}, {1}), ConstraintError);
    CHECK_THROWS_AS(construct_arithmetic({5, 5}, {6, 5}), ConstraintError);
    CHECK_THROWS_AS(construct_geometric({1, 2}, {1}), DimensionError);
}

TEST_CASE("constructions are deterministic") {
    const PositiveVector x{3.1, 0.9, 7.0, 2.2}, y{1.0, 4.0, 2.5, 0.7};
    CHECK(construct_geometric(x, y).a == construct_geometric(x, y).a);
    CHECK(construct_arithmetic(x, y).a == construct_arithmetic(x, y).a);
}

TEST_CASE("random round trips for both means") {
    SeededGenerator g(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 8;
        std::vector<double> yv(n);
        for (double& v : yv) v = g.uniform(0.5, 5.0);
        const PositiveVector y(yv);
        std::vector<double> xv = random_majorized_below(y, g).values();
        for (double& v : xv)
            if (g.uniform() < 0.5) v += g.uniform() * 2.0;
        const PositiveVector x(xv);
        for (const auto& r : {construct_geometric(x, y), construct_arithmetic(x, y)}) {
            CHECK(r.spectrum_residual <= 1e-7);
            CHECK(r.diagonal_residual <= 1e-7);
            check_all_forward(r.a);
        }
    }
}

TEST_CASE("verify_construction") {
    const ConstructionReport built = construct_geometric({3, 2}, {1, 2});
    const ConstructionReport again = verify_construction(built.a, {3, 2}, {1, 2}, DiagonalMean::geometric);
    CHECK(again.spectrum_residual <= 1e-7);
    CHECK(again.diagonal_residual <= 1e-7);
    CHECK_FALSE(again.intermediate_z);

    const ConstructionReport id = verify_construction(Matrix::identity(2), {2}, {1}, DiagonalMean::geometric);
    CHECK(id.diagonal_residual == 1.0);
    CHECK(id.spectrum_residual == 0.0);

    const Matrix bumped = built.a + 1e-3 * Matrix::identity(4);
    const ConstructionReport p = verify_construction(bumped, {3, 2}, {1, 2}, DiagonalMean::geometric);
    CHECK(p.spectrum_residual > 0.0);
    CHECK(p.diagonal_residual > 0.0);
    CHECK(p.a == bumped);

    CHECK_THROWS_AS(verify_construction(Matrix::identity(4), {1}, {1}, DiagonalMean::geometric), DimensionError);
}
