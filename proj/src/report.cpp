#include "ptsym/report.hpp"

#include <cstdio>
#include <sstream>

#include "ptsym/charpoly.hpp"
#include "ptsym/errors.hpp"
#include "ptsym/inertia.hpp"
#include "ptsym/matrix_io.hpp"
#include "ptsym/oracle.hpp"
#include "ptsym/version.hpp"

namespace ptsym {

using ordered_json = nlohmann::ordered_json;

std::string input_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

ordered_json ReportDocument::to_json() const {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = version;
    j["mode"] = mode;
    j["status"] = status;
    j["input_digest"] = digest;
    j["payload"] = payload;
    return j;
}

ReportDocument ReportDocument::from_json(const ordered_json& j) {
    ReportDocument r;
    r.version = j.at("version").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.digest = j.at("input_digest").get<std::string>();
    r.payload = j.at("payload");
    return r;
}

namespace {

ordered_json scalar_json(const Rational& x) { return x.str(); }
ordered_json scalar_json(double x) { return x; }

template <typename R>
ordered_json scalar_list(const std::vector<R>& xs) {
    ordered_json a = ordered_json::array();
    for (const R& x : xs) a.push_back(scalar_json(x));
    return a;
}

ordered_json inertia_json(const RealInertia& in) {
    return {{"nu", in.negative}, {"delta", in.zero}, {"pi", in.positive}};
}

template <typename R>
ordered_json spectrum_json(const QualitativeSpectrum<R>& s) {
    ordered_json p;
    p["dimension"] = s.dimension;
    p["characteristic_polynomial"] = scalar_list(s.charpoly.coefficients());
    p["newton_sums"] = scalar_list(s.newton_sums);
    p["minors"] = scalar_list(s.minors);
    p["sign_sequence"] = s.signs.str();
    p["hankel_inertia"] = {
        {"nu", s.hankel_inertia.negative},
        {"delta", s.hankel_inertia.zero},
        {"pi", s.hankel_inertia.positive},
    };
    p["real_inertia"] = inertia_json(s.inertia);
    p["real_count"] = s.real_count();
    p["complex_pair_count"] = s.complex_pair_count();
    p["broken"] = s.broken;
    p["warnings"] = s.warnings;
    return p;
}

ordered_json error_json(const AnalysisError& e) {
    ordered_json err;
    if (const auto* v = dynamic_cast<const VanishingMinor*>(&e)) {
        err["kind"] = "vanishing_minor";
        err["index"] = v->index;
        err["repeated_root"] = v->repeated_root;
        if (v->distinct_roots > 0) err["distinct_roots"] = v->distinct_roots;
    } else if (const auto* n = dynamic_cast<const NearDegenerate*>(&e)) {
        err["kind"] = "near_degenerate";
        err["index"] = n->index;
    } else if (const auto* c = dynamic_cast<const NotRealCharPoly*>(&e)) {
        err["kind"] = "not_real_charpoly";
        err["coefficient_index"] = c->coefficient_index;
    } else if (dynamic_cast<const NoConvergence*>(&e)) {
        err["kind"] = "no_convergence";
    } else if (dynamic_cast<const ClassificationAmbiguous*>(&e)) {
        err["kind"] = "classification_ambiguous";
    } else {
        err["kind"] = "analysis_error";
    }
    err["message"] = e.what();
    return err;
}

ReportDocument base_report(std::string mode, std::string digest) {
    ReportDocument r;
    r.mode = std::move(mode);
    r.version = kVersion;
    r.digest = std::move(digest);
    return r;
}

}  // namespace

ReportDocument make_analyze_report(const SquareMatrix<GaussianRational>& m,
                                   const AnalysisOptions& options, const std::string& digest) {
    ReportDocument r = base_report("analyze", digest);
    r.payload["arithmetic"] = options.float_mode ? "float" : "exact";
    try {
        if (options.float_mode) {
            const auto s = analyze_float(to_float(m), options.guard);
            r.status = "ok";
            r.payload.update(spectrum_json(s));
        } else {
            const auto s = analyze_exact(m);
            r.status = "ok";
            r.payload.update(spectrum_json(s));
        }
    } catch (const AnalysisError& e) {
        r.status = "inapplicable";
        r.payload["dimension"] = m.dim();
        r.payload["error"] = error_json(e);
    }
    return r;
}

ReportDocument make_check_report(const SquareMatrix<GaussianRational>& m,
                                 const std::string& digest) {
    ReportDocument r = base_report("check", digest);
    r.status = "ok";
    r.payload["dimension"] = m.dim();
    r.payload["pt_symmetric"] = check_pt_symmetry(m);
    bool real = true;
    std::size_t bad_index = 0;
    try {
        char_poly(m, ExactMode{});
    } catch (const NotRealCharPoly& e) {
        real = false;
        bad_index = e.coefficient_index;
    }
    r.payload["charpoly_real"] = real;
    if (!real) r.payload["first_nonreal_coefficient"] = bad_index;
    r.payload["matrix"] = matrix_to_json(m);
    return r;
}

ReportDocument make_oracle_report(const SquareMatrix<GaussianRational>& m, double imag_threshold,
                                  const std::string& digest) {
    ReportDocument r = base_report("oracle", digest);
    const CrossValidation v = cross_validate(m, imag_threshold);
    switch (v.verdict) {
        case CrossValidation::Verdict::match: r.status = "match"; break;
        case CrossValidation::Verdict::mismatch: r.status = "mismatch"; break;
        case CrossValidation::Verdict::inconclusive: r.status = "inconclusive"; break;
    }
    r.payload["dimension"] = v.dimension;
    if (v.pipeline) {
        r.payload["pipeline"] = {
            {"real_inertia", inertia_json(*v.pipeline)},
            {"real_count", v.pipeline->real_count()},
            {"complex_pair_count", v.pipeline->complex_pair_count()},
        };
    }
    if (v.oracle) {
        ordered_json roots = ordered_json::array();
        for (const auto& z : v.oracle->roots)
            roots.push_back(ordered_json::array({z.real(), z.imag()}));
        r.payload["oracle"] = {
            {"real_count", v.oracle->real_count},
            {"complex_pair_count", v.oracle->complex_pair_count},
            {"imag_threshold", v.oracle->imag_threshold},
            {"roots", std::move(roots)},
        };
    }
    r.payload["notes"] = v.notes;
    return r;
}

namespace {

ordered_json sweep_point_json(const SweepPoint& pt) {
    ordered_json p;
    p["xi"] = pt.xi.str();
    p["xi_float"] = pt.xi.to_double();
    p["status"] = to_string(pt.status);
    if (pt.inertia) {
        p["nu"] = pt.inertia->negative;
        p["delta"] = pt.inertia->zero;
        p["pi"] = pt.inertia->positive;
        p["broken"] = pt.inertia->broken();
    } else {
        p["error_index"] = pt.error_index;
        if (pt.status == PointStatus::vanishing_minor) p["repeated_root"] = pt.repeated_root;
    }
    return p;
}

ordered_json family_json(const FamilySpec& spec) {
    ordered_json f;
    if (const auto* g = std::get_if<GeneratorFamily>(&spec.family)) {
        f["generator"] = g->kind == GeneratorFamily::Kind::pt_well ? "pt-well" : "pt-well-n";
        f["dim"] = g->kind == GeneratorFamily::Kind::pt_well ? 3 : g->dim;
    } else {
        const auto& a = std::get<AffineFamily>(spec.family);
        f["generator"] = "affine";
        f["dim"] = a.base.dim();
    }
    f["start"] = spec.start.str();
    f["stop"] = spec.stop.str();
    f["step"] = spec.step.str();
    return f;
}

}  // namespace

ReportDocument make_sweep_report(const FamilySpec& spec, const std::optional<Rational>& refine,
                                 const std::string& digest) {
    ReportDocument r = base_report("sweep", digest);
    r.status = "ok";
    const SweepReport sweep = refine ? run_sweep_refined(spec, *refine) : run_sweep(spec);

    r.payload["family"] = family_json(spec);
    if (refine) r.payload["refine_width"] = refine->str();

    ordered_json points = ordered_json::array();
    for (const SweepPoint& pt : sweep.points) points.push_back(sweep_point_json(pt));
    r.payload["points"] = std::move(points);

    ordered_json brackets = ordered_json::array();
    for (const TransitionBracket& b : sweep.brackets) {
        ordered_json bj;
        bj["lo"] = sweep_point_json(b.lo);
        bj["hi"] = sweep_point_json(b.hi);
        if (b.refined) {
            bj["refined"] = {
                {"lo", b.refined->lo.str()},
                {"hi", b.refined->hi.str()},
                {"lo_float", b.refined->lo.to_double()},
                {"hi_float", b.refined->hi.to_double()},
                {"width", (b.refined->hi - b.refined->lo).str()},
                {"hit_degenerate", b.refined->hit_degenerate},
            };
        }
        brackets.push_back(std::move(bj));
    }
    r.payload["brackets"] = std::move(brackets);
    return r;
}

int exit_code_for(const ReportDocument& report) {
    if (report.status == "inapplicable" || report.status == "inconclusive") return 2;
    if (report.status == "mismatch") return 3;
    return 0;
}

namespace {

std::string inertia_text(const ordered_json& in) {
    std::ostringstream os;
    os << "{" << in.at("nu") << ", " << in.at("delta") << ", " << in.at("pi") << "}";
    return os.str();
}

void render_error_text(std::ostringstream& os, const ordered_json& err) {
    os << "outcome:              method inapplicable\n";
    os << "reason:               " << err.at("message").get<std::string>() << "\n";
}

void render_analyze_text(std::ostringstream& os, const ReportDocument& r) {
    const auto& p = r.payload;
    os << "arithmetic:           " << p.at("arithmetic").get<std::string>() << "\n";
    os << "dimension:            " << p.at("dimension") << "\n";
    if (r.status != "ok") {
        render_error_text(os, p.at("error"));
        return;
    }
    os << "minors:               ";
    const auto& minors = p.at("minors");
    for (std::size_t k = 0; k < minors.size(); ++k) {
        if (k) os << ", ";
        if (minors[k].is_string())
            os << minors[k].get<std::string>();
        else
            os << minors[k];
    }
    os << "\n";
    os << "sign sequence:        " << p.at("sign_sequence").get<std::string>() << "\n";
    os << "real inertia:         " << inertia_text(p.at("real_inertia")) << "\n";
    os << "real eigenvalues:     " << p.at("real_count") << "\n";
    os << "complex pairs:        " << p.at("complex_pair_count") << "\n";
    os << "pt symmetry:          " << (p.at("broken").get<bool>() ? "broken" : "unbroken") << "\n";
    for (const auto& w : p.at("warnings")) os << "warning:              " << w.get<std::string>() << "\n";
}

void render_check_text(std::ostringstream& os, const ReportDocument& r) {
    const auto& p = r.payload;
    os << "dimension:            " << p.at("dimension") << "\n";
    os << "pt symmetric:         " << (p.at("pt_symmetric").get<bool>() ? "yes" : "no") << "\n";
    os << "charpoly real:        " << (p.at("charpoly_real").get<bool>() ? "yes" : "no") << "\n";
}

void render_oracle_text(std::ostringstream& os, const ReportDocument& r) {
    const auto& p = r.payload;
    os << "verdict:              " << r.status << "\n";
    if (p.contains("pipeline"))
        os << "pipeline counts:      real " << p.at("pipeline").at("real_count") << ", pairs "
           << p.at("pipeline").at("complex_pair_count") << "\n";
    if (p.contains("oracle"))
        os << "oracle counts:        real " << p.at("oracle").at("real_count") << ", pairs "
           << p.at("oracle").at("complex_pair_count") << "\n";
    for (const auto& n : p.at("notes")) os << "note:                 " << n.get<std::string>() << "\n";
}

void render_sweep_text(std::ostringstream& os, const ReportDocument& r) {
    const auto& p = r.payload;
    const auto& fam = p.at("family");
    os << "family:               " << fam.at("generator").get<std::string>() << " (dim "
       << fam.at("dim") << ")\n";
    os << "grid:                 " << fam.at("start").get<std::string>() << " : "
       << fam.at("stop").get<std::string>() << " : " << fam.at("step").get<std::string>() << "\n";
    for (const auto& pt : p.at("points")) {
        os << "  xi = " << pt.at("xi").get<std::string>() << ": ";
        if (pt.at("status").get<std::string>() == "ok")
            os << "{" << pt.at("nu") << ", " << pt.at("delta") << ", " << pt.at("pi") << "}"
               << (pt.at("broken").get<bool>() ? " broken" : " unbroken");
        else
            os << pt.at("status").get<std::string>();
        os << "\n";
    }
    for (const auto& b : p.at("brackets")) {
        os << "transition in (" << b.at("lo").at("xi").get<std::string>() << ", "
           << b.at("hi").at("xi").get<std::string>() << ")";
        if (b.contains("refined")) {
            const auto& rf = b.at("refined");
            os << " refined to [" << rf.at("lo").get<std::string>() << ", "
               << rf.at("hi").get<std::string>() << "]";
            if (rf.at("hit_degenerate").get<bool>()) os << " (hit degenerate point)";
        }
        os << "\n";
    }
}

}  // namespace

std::string render_text(const ReportDocument& report) {
    std::ostringstream os;
    os << kToolName << " " << report.mode << " (v" << report.version << ")\n";
    if (report.mode == "analyze")
        render_analyze_text(os, report);
    else if (report.mode == "check")
        render_check_text(os, report);
    else if (report.mode == "oracle")
        render_oracle_text(os, report);
    else if (report.mode == "sweep")
        render_sweep_text(os, report);
    return os.str();
}

std::string render_sweep_csv(const ReportDocument& report) {
    std::ostringstream os;
    os << "xi,nu,delta,pi,broken,status\n";
    for (const auto& pt : report.payload.at("points")) {
        os << scalar_text(pt.at("xi_float").get<double>()) << ",";
        if (pt.at("status").get<std::string>() == "ok")
            os << pt.at("nu") << "," << pt.at("delta") << "," << pt.at("pi") << ","
               << (pt.at("broken").get<bool>() ? "true" : "false");
        else
            os << ",,,";
        os << "," << pt.at("status").get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace ptsym
