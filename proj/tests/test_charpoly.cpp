#include <doctest.h>

#include "ptsym/charpoly.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ptsym;
using P = Polynomial<Rational>;

TEST_SUITE_BEGIN("charpoly");

TEST_CASE("pt_well has charpoly x^3 - (2 - xi^2) x") {
    for (const Rational& xi : {Rational(0), Rational(1), Rational(2), Rational(7, 5)}) {
        const P p = char_poly(pt_well(xi), ExactMode{});
        const Rational gap = Rational(2) - xi * xi;
        CHECK(p == P(std::vector<Rational>{Rational(0), -gap, Rational(0), Rational(1)}));
    }
}

TEST_CASE("one-by-one matrix") {
    SquareMatrix<GaussianRational> m(1);
    m(0, 0) = GaussianRational(Rational(5));
    CHECK(char_poly(m, ExactMode{}) == P(std::vector<Rational>{Rational(-5), Rational(1)}));
}

TEST_CASE("non-real coefficients are rejected with the offending power") {
    SquareMatrix<GaussianRational> m(3);
    m(0, 0) = GaussianRational::i();  // charpoly x^2 (x - i)
    CHECK_THROWS_WITH_AS(char_poly(m, ExactMode{}), doctest::Contains("x^2"), NotRealCharPoly);
    try {
        char_poly(m, ExactMode{});
    } catch (const NotRealCharPoly& e) {
        CHECK(e.coefficient_index == 2);
    }
}

TEST_CASE("companion matrix round trip") {
    testing::Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const P p = testing::random_monic_poly(rng, 1 + t % 10);
        CHECK(char_poly(testing::companion_matrix(p), ExactMode{}) == p);
    }
}

TEST_CASE("shifting the matrix shifts the polynomial argument") {
    testing::Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        const auto m = testing::random_pt_matrix(rng, 4);
        const Rational c = testing::random_rational(rng);
        auto shifted = m;
        for (std::size_t i = 0; i < m.dim(); ++i) shifted(i, i) += GaussianRational(c);

        const P lhs = char_poly(shifted, ExactMode{});
        const P rhs = taylor_shift(char_poly(m, ExactMode{}), -c);  // p(x - c)
        CHECK(lhs == rhs);
    }
}

TEST_CASE("PT-symmetric matrices always have real charpoly") {
    testing::Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        const auto m = testing::random_pt_matrix(rng, 2 + t % 6);
        REQUIRE(check_pt_symmetry(m));
        CHECK_NOTHROW(char_poly(m, ExactMode{}));
    }
}

TEST_CASE("float mode matches exact coefficients on well-scaled input") {
    const auto exact = char_poly(pt_well(Rational(7, 5)), ExactMode{});
    const auto approx = char_poly(to_float(pt_well(Rational(7, 5))), FloatMode{});
    REQUIRE(approx.degree() == exact.degree());
    for (std::size_t k = 0; k <= exact.degree(); ++k)
        CHECK(approx[k] == doctest::Approx(exact[k].to_double()).epsilon(1e-12));
}

TEST_CASE("float mode rejects a genuinely non-real charpoly") {
    SquareMatrix<std::complex<double>> m(3);
    m(0, 0) = {0.0, 1.0};
    CHECK_THROWS_AS(char_poly(m, FloatMode{}), NotRealCharPoly);
}

TEST_SUITE_END();
