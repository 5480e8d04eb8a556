#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ptsym/oracle.hpp"
#include "support/generators.hpp"

using namespace ptsym;
using C = std::complex<double>;

namespace {

Polynomial<double> dpoly(std::initializer_list<double> ascending) {
    return Polynomial<double>(std::vector<double>(ascending));
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("roots of small fixtures") {
    const double sqrt2 = std::sqrt(2.0);
    SUBCASE("x^3 - 2x") {
        const auto r = find_roots(dpoly({0, -2, 0, 1}));
        REQUIRE(r.size() == 3);
        CHECK(std::abs(r[0] - C(-sqrt2, 0)) < 1e-10);
        CHECK(std::abs(r[1] - C(0, 0)) < 1e-10);
        CHECK(std::abs(r[2] - C(sqrt2, 0)) < 1e-10);
    }
    SUBCASE("x^3 + 2x has a purely imaginary pair") {
        auto r = find_roots(dpoly({0, 2, 0, 1}));
        REQUIRE(r.size() == 3);
        std::sort(r.begin(), r.end(), [](const C& a, const C& b) { return a.imag() < b.imag(); });
        CHECK(std::abs(r[0] - C(0, -sqrt2)) < 1e-10);
        CHECK(std::abs(r[1] - C(0, 0)) < 1e-10);
        CHECK(std::abs(r[2] - C(0, sqrt2)) < 1e-10);
    }
    SUBCASE("linear") {
        const auto r = find_roots(dpoly({-5, 1}));
        REQUIRE(r.size() == 1);
        CHECK(r[0] == C(5, 0));
    }
}

TEST_CASE("iteration starvation raises NoConvergence") {
    CHECK_THROWS_AS(find_roots(dpoly({0, -2, 0, 1}), 1), NoConvergence);
}

TEST_CASE("residuals stay below the advertised bound") {
    testing::Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        const auto p = to_float(testing::random_monic_poly(rng, 1 + t % 8));
        const auto roots = find_roots(p);
        for (const C& r : roots) {
            double scale = 0.0, zk = 1.0;
            for (double c : p.coefficients()) {
                scale += std::fabs(c) * zk;
                zk *= std::abs(r);
            }
            CHECK(std::abs(p(r)) <= 1e-10 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("conjugate evaluation is symmetric for real polynomials") {
    testing::Rng rng(72);
    for (int t = 0; t < 20; ++t) {
        const auto p = to_float(testing::random_monic_poly(rng, 2 + t % 6));
        for (const C& r : find_roots(p)) {
            const double a = std::abs(p(std::conj(r)));
            const double b = std::abs(p(r));
            CHECK(a <= b + 1e-9 * (1.0 + std::abs(r)));
            CHECK(b <= a + 1e-9 * (1.0 + std::abs(r)));
        }
    }
}

TEST_CASE("classification") {
    const double sqrt2 = std::sqrt(2.0);
    SUBCASE("all real") {
        const auto c = classify_roots({C(-sqrt2, 0), C(0, 0), C(sqrt2, 0)});
        CHECK(c.real_count == 3);
        CHECK(c.complex_pair_count == 0);
    }
    SUBCASE("one conjugate pair") {
        const auto c = classify_roots({C(0, 0), C(0, sqrt2), C(0, -sqrt2)});
        CHECK(c.real_count == 1);
        CHECK(c.complex_pair_count == 1);
    }
    SUBCASE("tiny imaginary parts count as real") {
        const auto c = classify_roots({C(0, 1e-12), C(2, 0)});
        CHECK(c.real_count == 2);
        CHECK(c.complex_pair_count == 0);
    }
    SUBCASE("an unpaired complex root is ambiguous") {
        CHECK_THROWS_AS(classify_roots({C(0, 1), C(1, 0)}), ClassificationAmbiguous);
        CHECK_THROWS_AS(classify_roots({C(0, 1), C(5, -1)}), ClassificationAmbiguous);
    }
}

TEST_CASE("cross validation") {
    SUBCASE("unbroken well") {
        const auto v = cross_validate(pt_well(Rational(1)));
        CHECK(v.verdict == CrossValidation::Verdict::match);
        REQUIRE(v.pipeline);
        CHECK(*v.pipeline == RealInertia{0, 3, 0});
    }
    SUBCASE("broken well") {
        const auto v = cross_validate(pt_well(Rational(2)));
        CHECK(v.verdict == CrossValidation::Verdict::match);
        REQUIRE(v.pipeline);
        CHECK(*v.pipeline == RealInertia{1, 1, 1});
    }
    SUBCASE("zero matrix is inconclusive, not a failure") {
        const auto v = cross_validate(SquareMatrix<GaussianRational>(3));
        CHECK(v.verdict == CrossValidation::Verdict::inconclusive);
        CHECK_FALSE(v.pipeline);
        CHECK_FALSE(v.notes.empty());
    }
    SUBCASE("non-real charpoly propagates") {
        SquareMatrix<GaussianRational> m(2);
        m(0, 0) = GaussianRational::i();
        CHECK_THROWS_AS(cross_validate(m), NotRealCharPoly);
    }
}

TEST_CASE("random PT matrices: the two routes agree") {
    testing::Rng rng(73);
    int mismatches = 0;
    for (int t = 0; t < 40; ++t) {
        const auto v = cross_validate(testing::random_pt_matrix(rng, 2 + t % 7));
        if (v.verdict == CrossValidation::Verdict::mismatch) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_SUITE_END();
