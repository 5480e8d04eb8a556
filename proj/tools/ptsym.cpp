#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ptsym/matrix_io.hpp"
#include "ptsym/report.hpp"
#include "ptsym/version.hpp"

namespace {

using ptsym::FamilySpec;
using ptsym::GaussianRational;
using ptsym::GeneratorFamily;
using ptsym::Rational;
using ptsym::ReportDocument;
using ptsym::SquareMatrix;

struct CommonOptions {
    std::string input;
    std::string generator;
    std::string xi = "1";
    std::size_t dim = 3;
    std::string arith = "exact";
    double tol = -1.0;  // <0: defaults
    bool no_exact_promotion = false;
    std::string format = "text";
    std::string output;
};

void add_matrix_source(CLI::App* cmd, CommonOptions& opt) {
    auto* input = cmd->add_option("--input", opt.input, "matrix file (JSON)")
                      ->check(CLI::ExistingFile);
    auto* gen = cmd->add_option("--generator", opt.generator, "built-in family: pt-well, pt-well-n")
                    ->check(CLI::IsMember({"pt-well", "pt-well-n"}));
    cmd->add_option("--xi", opt.xi, "generator parameter, rational or decimal text");
    cmd->add_option("--dim", opt.dim, "dimension for pt-well-n")->check(CLI::PositiveNumber);
    input->excludes(gen);
    gen->excludes(input);
}

void add_output_options(CLI::App* cmd, CommonOptions& opt,
                        const std::vector<std::string>& formats) {
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--output", opt.output, "write the report to a file instead of stdout");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct MatrixInput {
    SquareMatrix<GaussianRational> matrix;
    bool saw_decimal = false;
    std::string digest;
};

MatrixInput load_matrix(const CommonOptions& opt) {
    if (!opt.input.empty()) {
        const std::string bytes = read_file(opt.input);
        auto parsed = ptsym::parse_matrix_json(bytes);
        return {std::move(parsed.matrix), parsed.saw_decimal, ptsym::input_digest(bytes)};
    }
    if (opt.generator.empty())
        throw CLI::ValidationError("one of --input or --generator is required");
    const Rational xi = Rational::parse(opt.xi);
    const std::string desc =
        "generator:" + opt.generator + ";xi=" + xi.str() + ";dim=" + std::to_string(opt.dim);
    if (opt.generator == "pt-well") return {ptsym::pt_well(xi), false, ptsym::input_digest(desc)};
    return {ptsym::pt_well_n(opt.dim, xi), false, ptsym::input_digest(desc)};
}

void emit(const ReportDocument& report, const CommonOptions& opt) {
    std::string text;
    if (opt.format == "json")
        text = report.to_json().dump(2) + "\n";
    else if (opt.format == "csv")
        text = ptsym::render_sweep_csv(report);
    else
        text = ptsym::render_text(report);

    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + opt.output);
        out << text;
    }
}

int run_analyze(const CommonOptions& opt) {
    const MatrixInput in = load_matrix(opt);
    ptsym::AnalysisOptions options;
    options.float_mode = opt.arith == "float" || (opt.no_exact_promotion && in.saw_decimal);
    if (opt.tol >= 0) options.guard.eps_abs = opt.tol;
    const ReportDocument report = ptsym::make_analyze_report(in.matrix, options, in.digest);
    emit(report, opt);
    return ptsym::exit_code_for(report);
}

int run_check(const CommonOptions& opt) {
    const MatrixInput in = load_matrix(opt);
    const ReportDocument report = ptsym::make_check_report(in.matrix, in.digest);
    emit(report, opt);
    return ptsym::exit_code_for(report);
}

int run_oracle(const CommonOptions& opt) {
    const MatrixInput in = load_matrix(opt);
    const double threshold = opt.tol >= 0 ? opt.tol : 1e-8;
    const ReportDocument report = ptsym::make_oracle_report(in.matrix, threshold, in.digest);
    emit(report, opt);
    return ptsym::exit_code_for(report);
}

struct SweepOptions {
    CommonOptions common;
    std::string range;
    std::string refine;
};

int run_sweep_cmd(const SweepOptions& opt) {
    const auto first = opt.range.find(':');
    const auto second = opt.range.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw CLI::ValidationError("--param-range must be start:stop:step");

    FamilySpec spec;
    GeneratorFamily family;
    family.kind = opt.common.generator == "pt-well" ? GeneratorFamily::Kind::pt_well
                                                    : GeneratorFamily::Kind::pt_well_n;
    family.dim = opt.common.dim;
    spec.family = family;
    spec.start = Rational::parse(opt.range.substr(0, first));
    spec.stop = Rational::parse(opt.range.substr(first + 1, second - first - 1));
    spec.step = Rational::parse(opt.range.substr(second + 1));

    std::optional<Rational> refine;
    if (!opt.refine.empty()) refine = Rational::parse(opt.refine);

    const std::string desc = "sweep:" + opt.common.generator + ";dim=" +
                             std::to_string(family.dim) + ";range=" + opt.range +
                             ";refine=" + (refine ? refine->str() : "none");
    const ReportDocument report = ptsym::make_sweep_report(spec, refine, ptsym::input_digest(desc));
    emit(report, opt.common);
    return ptsym::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qualitative spectra of PT-symmetric matrices without eigenvalue computation"};
    app.set_version_flag("--version", std::string(ptsym::kVersion));
    app.require_subcommand(1);

    CommonOptions analyze_opt, check_opt, oracle_opt;
    SweepOptions sweep_opt;

    auto* analyze = app.add_subcommand(
        "analyze", "count real eigenvalues and complex-conjugate pairs of one matrix");
    add_matrix_source(analyze, analyze_opt);
    analyze->add_option("--arith", analyze_opt.arith, "arithmetic mode (default: exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    analyze->add_option("--tol", analyze_opt.tol, "float mode: absolute sign-guard width");
    analyze->add_flag("--no-exact-promotion", analyze_opt.no_exact_promotion,
                      "treat decimal inputs as floats instead of promoting them exactly");
    add_output_options(analyze, analyze_opt, {"text", "json"});

    auto* check = app.add_subcommand("check", "verify PT symmetry and charpoly realness");
    check->add_option("--input", check_opt.input, "matrix file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    add_output_options(check, check_opt, {"text", "json"});

    auto* oracle = app.add_subcommand(
        "oracle", "cross-validate the exact pipeline against a numerical root finder");
    add_matrix_source(oracle, oracle_opt);
    oracle->add_option("--tol", oracle_opt.tol, "imaginary-part threshold for root classification");
    add_output_options(oracle, oracle_opt, {"text", "json"});

    auto* sweep = app.add_subcommand(
        "sweep", "classify a one-parameter family over a grid and bracket transitions");
    sweep->add_option("--generator", sweep_opt.common.generator, "pt-well or pt-well-n")
        ->required()
        ->check(CLI::IsMember({"pt-well", "pt-well-n"}));
    sweep->add_option("--dim", sweep_opt.common.dim, "dimension for pt-well-n")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--param-range", sweep_opt.range, "grid start:stop:step, exact rationals")
        ->required();
    sweep->add_option("--refine", sweep_opt.refine,
                      "bisect each bracket to this width (exact rational or decimal)");
    add_output_options(sweep, sweep_opt.common, {"text", "json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(analyze_opt);
        if (app.got_subcommand(check)) return run_check(check_opt);
        if (app.got_subcommand(oracle)) return run_oracle(oracle_opt);
        if (app.got_subcommand(sweep)) return run_sweep_cmd(sweep_opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "ptsym: " << e.what() << "\n";
        return 1;
    } catch (const ptsym::MatrixParseError& e) {
        std::cerr << "ptsym: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ptsym: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ptsym: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
