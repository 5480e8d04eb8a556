#include <doctest.h>

#include "ptsym/matrix.hpp"
#include "support/generators.hpp"

using namespace ptsym;

TEST_SUITE_BEGIN("matrix");

namespace {

GaussianRational ri(long re) { return GaussianRational(Rational(re)); }
GaussianRational im(const Rational& v) { return GaussianRational(Rational(0), v); }

}  // namespace

TEST_CASE("pt_well entries") {
    SUBCASE("hermitean limit xi=0") {
        const auto m = pt_well(Rational(0));
        for (std::size_t i = 0; i < 3; ++i) CHECK(m(i, i) == ri(0));
        CHECK(m(0, 1) == ri(1));
        CHECK(m(1, 0) == ri(1));
        CHECK(m(1, 2) == ri(1));
        CHECK(m(2, 1) == ri(1));
        CHECK(m(0, 2) == ri(0));
        CHECK(m(2, 0) == ri(0));
    }
    SUBCASE("xi=1") {
        const auto m = pt_well(Rational(1));
        CHECK(m(0, 0) == im(Rational(1)));
        CHECK(m(2, 2) == im(Rational(-1)));
        CHECK(m(1, 1) == ri(0));
        CHECK(m(0, 1) == ri(1));
        CHECK(m(1, 0) == ri(1));
        CHECK(m(1, 2) == ri(1));
        CHECK(m(2, 1) == ri(1));
    }
    SUBCASE("xi=2") {
        const auto m = pt_well(Rational(2));
        CHECK(m(0, 0) == im(Rational(2)));
        CHECK(m(2, 2) == im(Rational(-2)));
    }
}

TEST_CASE("pt_well_n") {
    testing::Rng rng(11);
    SUBCASE("n=3 equals the three-site well") {
        for (int t = 0; t < 10; ++t) {
            const Rational xi = testing::random_rational(rng);
            CHECK(pt_well_n(3, xi) == pt_well(xi));
        }
    }
    SUBCASE("n=1 is the single center site") {
        const auto m = pt_well_n(1, Rational(7, 3));
        CHECK(m.dim() == 1);
        CHECK(m(0, 0) == ri(0));
    }
    SUBCASE("n=4 splits the diagonal in half") {
        const auto m = pt_well_n(4, Rational(1));
        CHECK(m(0, 0) == im(Rational(1)));
        CHECK(m(1, 1) == im(Rational(1)));
        CHECK(m(2, 2) == im(Rational(-1)));
        CHECK(m(3, 3) == im(Rational(-1)));
        for (std::size_t k = 0; k + 1 < 4; ++k) {
            CHECK(m(k, k + 1) == ri(1));
            CHECK(m(k + 1, k) == ri(1));
        }
        CHECK(check_pt_symmetry(m));
    }
    SUBCASE("dimension 0 rejected") {
        CHECK_THROWS_AS(pt_well_n(0, Rational(1)), std::invalid_argument);
    }
}

TEST_CASE("check_pt_symmetry verdicts") {
    CHECK(check_pt_symmetry(pt_well(Rational(1))));
    CHECK(check_pt_symmetry(SquareMatrix<GaussianRational>(3)));  // zero matrix

    SquareMatrix<GaussianRational> d(3);
    d(0, 0) = GaussianRational::i();
    d(2, 2) = GaussianRational::i();
    CHECK_FALSE(check_pt_symmetry(d));
}

TEST_CASE("pt_well_n is PT-symmetric for all sizes and parameters") {
    testing::Rng rng(12);
    for (std::size_t n = 1; n <= 10; ++n)
        for (int t = 0; t < 50; ++t)
            CHECK(check_pt_symmetry(pt_well_n(n, testing::random_rational(rng))));
}

TEST_CASE("pt symmetry is stable under real scaling and real shifts") {
    testing::Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        auto m = testing::random_pt_matrix(rng, 4);
        REQUIRE(check_pt_symmetry(m));

        const GaussianRational c(testing::random_nonzero_rational(rng));
        auto scaled = m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) scaled(i, j) = c * m(i, j);
        CHECK(check_pt_symmetry(scaled));

        auto shifted = m;
        for (std::size_t i = 0; i < 4; ++i) shifted(i, i) += c;
        CHECK(check_pt_symmetry(shifted));
    }
}

TEST_CASE("parity reflection is an involution") {
    testing::Rng rng(14);
    for (int t = 0; t < 20; ++t) {
        SquareMatrix<GaussianRational> m(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = testing::random_gaussian(rng);
        CHECK(parity_reflect(parity_reflect(m)) == m);
    }
}

TEST_SUITE_END();
