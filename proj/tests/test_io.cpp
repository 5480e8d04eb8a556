#include <doctest.h>

#include "ptsym/matrix_io.hpp"
#include "ptsym/report.hpp"
#include "support/generators.hpp"

using namespace ptsym;

TEST_SUITE_BEGIN("io");

TEST_CASE("matrix parsing") {
    SUBCASE("numbers, rational strings and [re, im] pairs") {
        const auto parsed = parse_matrix_json(R"({
            "dimension": 2,
            "entries": [[ "1/2", [0, 1] ],
                        [ [0, -1], 2 ]]
        })");
        CHECK_FALSE(parsed.saw_decimal);
        CHECK(parsed.matrix(0, 0) == GaussianRational(Rational(1, 2)));
        CHECK(parsed.matrix(0, 1) == GaussianRational::i());
        CHECK(parsed.matrix(1, 0) == -GaussianRational::i());
        CHECK(parsed.matrix(1, 1) == GaussianRational(Rational(2)));
    }
    SUBCASE("bare array form") {
        const auto parsed = parse_matrix_json("[[1, 0], [0, 1]]");
        CHECK(parsed.matrix.dim() == 2);
    }
    SUBCASE("decimals are promoted exactly from their literal text") {
        const auto parsed = parse_matrix_json(R"([[1.25, "0.1"], [0.5, 3]])");
        CHECK(parsed.saw_decimal);
        CHECK(parsed.matrix(0, 0) == GaussianRational(Rational(5, 4)));
        CHECK(parsed.matrix(0, 1) == GaussianRational(Rational(1, 10)));
        CHECK(parsed.matrix(1, 0) == GaussianRational(Rational(1, 2)));
    }
    SUBCASE("syntax errors carry a byte position") {
        CHECK_THROWS_WITH_AS(parse_matrix_json("[[1, ]"), doctest::Contains("byte"),
                             MatrixParseError);
    }
    SUBCASE("shape errors carry the offending location") {
        CHECK_THROWS_WITH_AS(parse_matrix_json("[[1, 2], [3]]"), doctest::Contains("row 2"),
                             MatrixParseError);
        CHECK_THROWS_WITH_AS(parse_matrix_json(R"([[1, "x"], [3, 4]])"),
                             doctest::Contains("row 1"), MatrixParseError);
        CHECK_THROWS_AS(parse_matrix_json(R"({"dimension": 3, "entries": [[1]]})"),
                        MatrixParseError);
        CHECK_THROWS_AS(parse_matrix_json("[]"), MatrixParseError);
        CHECK_THROWS_AS(parse_matrix_json(R"([[ [1, 2, 3] ]])"), MatrixParseError);
        CHECK_THROWS_AS(parse_matrix_json("42"), MatrixParseError);
    }
}

TEST_CASE("matrix serialization round-trips") {
    testing::Rng rng(81);
    for (int t = 0; t < 20; ++t) {
        const auto m = testing::random_pt_matrix(rng, 1 + t % 5);
        const auto reparsed = parse_matrix_json(matrix_to_json(m).dump());
        CHECK(reparsed.matrix == m);
    }
}

TEST_CASE("report documents") {
    const auto m = pt_well(Rational(1));
    SUBCASE("analyze round-trips through json") {
        const auto r = make_analyze_report(m, AnalysisOptions{}, input_digest("x"));
        CHECK(r.status == "ok");
        CHECK(ReportDocument::from_json(r.to_json()) == r);
    }
    SUBCASE("sweep round-trips through json") {
        const FamilySpec spec{GeneratorFamily{}, Rational(0), Rational(2), Rational(1)};
        const auto r = make_sweep_report(spec, std::nullopt, input_digest("y"));
        CHECK(ReportDocument::from_json(r.to_json()) == r);
    }
    SUBCASE("identical invocations give byte-identical machine output") {
        const auto a = make_analyze_report(m, AnalysisOptions{}, input_digest("x"));
        const auto b = make_analyze_report(m, AnalysisOptions{}, input_digest("x"));
        CHECK(a.to_json().dump(2) == b.to_json().dump(2));
    }
    SUBCASE("digest is stable") {
        CHECK(input_digest("x") == input_digest("x"));
        CHECK(input_digest("x") != input_digest("y"));
        CHECK(input_digest("").substr(0, 8) == "fnv1a64:");
    }
}

TEST_CASE("report payloads") {
    SUBCASE("analyze success payload") {
        const auto r = make_analyze_report(pt_well(Rational(2)), AnalysisOptions{}, "d");
        CHECK(r.payload.at("broken") == true);
        CHECK(r.payload.at("real_count") == 1);
        CHECK(r.payload.at("complex_pair_count") == 1);
        CHECK(r.payload.at("sign_sequence") == "++--");
        CHECK(r.payload.at("minors")[1] == "-12");
        CHECK(exit_code_for(r) == 0);
    }
    SUBCASE("analyze failure payload") {
        const auto r =
            make_analyze_report(SquareMatrix<GaussianRational>(3), AnalysisOptions{}, "d");
        CHECK(r.status == "inapplicable");
        CHECK(r.payload.at("error").at("kind") == "vanishing_minor");
        CHECK(r.payload.at("error").at("index") == 2);
        CHECK(r.payload.at("error").at("repeated_root") == true);
        CHECK(exit_code_for(r) == 2);
    }
    SUBCASE("check payload embeds a round-trippable matrix") {
        const auto m = pt_well(Rational(1));
        const auto r = make_check_report(m, "d");
        CHECK(r.payload.at("pt_symmetric") == true);
        CHECK(r.payload.at("charpoly_real") == true);
        CHECK(parse_matrix_json(r.payload.at("matrix").dump()).matrix == m);
    }
    SUBCASE("check reports non-pt-symmetric hermitean matrices as charpoly-real") {
        testing::Rng rng(82);
        SquareMatrix<GaussianRational> h(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                h(i, j) = testing::random_gaussian(rng);
                if (i == j) h(i, i) = GaussianRational(h(i, i).real());
                h(j, i) = conj(h(i, j));
            }
        const auto r = make_check_report(h, "d");
        CHECK(r.payload.at("charpoly_real") == true);
    }
    SUBCASE("oracle payload") {
        const auto r = make_oracle_report(pt_well(Rational(2)), 1e-8, "d");
        CHECK(r.status == "match");
        CHECK(r.payload.at("pipeline").at("complex_pair_count") == 1);
        CHECK(r.payload.at("oracle").at("complex_pair_count") == 1);
        CHECK(exit_code_for(r) == 0);
    }
}

TEST_CASE("sweep csv format") {
    const FamilySpec spec{GeneratorFamily{}, Rational(0), Rational(2), Rational(1)};
    const auto r = make_sweep_report(spec, std::nullopt, "d");
    const std::string csv = render_sweep_csv(r);
    CHECK(csv.substr(0, csv.find('\n')) == "xi,nu,delta,pi,broken,status");
    CHECK(csv.find("0,0,3,0,false,ok\n") != std::string::npos);
    CHECK(csv.find("2,1,1,1,true,ok\n") != std::string::npos);
}

TEST_CASE("text rendering smoke") {
    const auto r = make_analyze_report(pt_well(Rational(1)), AnalysisOptions{}, "d");
    const std::string text = render_text(r);
    CHECK(text.find("unbroken") != std::string::npos);
    CHECK(text.find("++++") != std::string::npos);

    const auto bad =
        make_analyze_report(SquareMatrix<GaussianRational>(3), AnalysisOptions{}, "d");
    CHECK(render_text(bad).find("inapplicable") != std::string::npos);
}

TEST_SUITE_END();
