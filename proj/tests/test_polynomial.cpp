#include <doctest.h>

#include "ptsym/charpoly.hpp"
#include "ptsym/polynomial.hpp"
#include "support/generators.hpp"

using namespace ptsym;
using P = Polynomial<Rational>;

namespace {
P poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return P(std::move(c));
}
}  // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("derivative") {
    CHECK(derivative(poly({0, -1, 0, 1})) == poly({-1, 0, 3}));   // x^3 - x
    CHECK(derivative(poly({-5, 1})) == poly({1}));                // x - 5
    CHECK(derivative(poly({0, 0, 0, 0, 1})) == poly({0, 0, 0, 4}));  // x^4
    CHECK(derivative(poly({7})) == P());
}

TEST_CASE("normalization and accessors") {
    CHECK(P(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(P().is_zero());
    const P p = poly({0, -2, 0, 1});
    CHECK(p.degree() == 3);
    CHECK(p[1] == Rational(-2));
    CHECK(p[7] == Rational(0));
    CHECK(p.is_monic());
}

TEST_CASE("evaluation") {
    const P p = poly({0, -2, 0, 1});  // x^3 - 2x
    CHECK(p(Rational(3)) == Rational(21));
    CHECK(p(Rational(0)) == Rational(0));
}

TEST_CASE("divmod and gcd") {
    const P a = poly({0, 0, -1, 1});  // x^3 - x^2
    const P b = poly({0, -2, 3});     // 3x^2 - 2x
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == poly({0, 1}));  // x, monic
    CHECK_THROWS_AS(divmod(a, P()), std::domain_error);
}

TEST_CASE("squarefree flag") {
    SUBCASE("distinct roots") {
        const auto f = squarefree_flag(poly({0, -2, 0, 1}));  // x^3 - 2x
        CHECK(f.squarefree);
        CHECK(f.distinct_roots == 3);
    }
    SUBCASE("triple root") {
        const auto f = squarefree_flag(poly({0, 0, 0, 1}));  // x^3
        CHECK_FALSE(f.squarefree);
        CHECK(f.distinct_roots == 1);
    }
    SUBCASE("double root") {
        const auto f = squarefree_flag(poly({0, 0, -1, 1}));  // x^3 - x^2
        CHECK_FALSE(f.squarefree);
        CHECK(f.distinct_roots == 2);
    }
}

TEST_CASE("taylor shift") {
    testing::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const P p = testing::random_monic_poly(rng, 1 + t % 6);
        const Rational a = testing::random_rational(rng);
        const P q = taylor_shift(p, a);
        for (int v = -3; v <= 3; ++v)
            CHECK(q(Rational(v)) == p(Rational(v) + a));
    }
}

TEST_CASE("pretty printing") {
    CHECK(to_string(poly({0, -2, 0, 1})) == "x^3 - 2*x");
    CHECK(to_string(poly({-5, 1})) == "x - 5");
    CHECK(to_string(P()) == "0");
    CHECK(to_string(poly({3})) == "3");
    CHECK(to_string(P(std::vector<Rational>{Rational(1, 2), Rational(-3, 4), Rational(1)})) ==
          "x^2 - 3/4*x + 1/2");
}

TEST_SUITE_END();
