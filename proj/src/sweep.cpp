#include "ptsym/sweep.hpp"

#include <stdexcept>

namespace ptsym {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

SquareMatrix<GaussianRational> family_matrix(const FamilySpec& spec, const Rational& xi) {
    return std::visit(
        overloaded{
            [&](const GeneratorFamily& g) {
                switch (g.kind) {
                    case GeneratorFamily::Kind::pt_well:
                        return pt_well(xi);
                    case GeneratorFamily::Kind::pt_well_n:
                        return pt_well_n(g.dim, xi);
                }
                throw std::logic_error("family_matrix: unknown generator");
            },
            [&](const AffineFamily& a) {
                if (a.base.dim() != a.slope.dim())
                    throw std::invalid_argument("affine family: dimension mismatch");
                SquareMatrix<GaussianRational> m = a.base;
                const GaussianRational x(xi);
                for (std::size_t i = 0; i < m.dim(); ++i)
                    for (std::size_t j = 0; j < m.dim(); ++j) m(i, j) += x * a.slope(i, j);
                return m;
            },
        },
        spec.family);
}

const char* to_string(PointStatus s) {
    switch (s) {
        case PointStatus::ok: return "ok";
        case PointStatus::vanishing_minor: return "vanishing_minor";
        case PointStatus::near_degenerate: return "near_degenerate";
        case PointStatus::not_real_charpoly: return "not_real_charpoly";
    }
    return "unknown";
}

SweepPoint classify_point(const FamilySpec& spec, const Rational& xi) {
    SweepPoint pt;
    pt.xi = xi;
    try {
        pt.inertia = analyze_exact(family_matrix(spec, xi)).inertia;
    } catch (const VanishingMinor& e) {
        pt.status = PointStatus::vanishing_minor;
        pt.error_index = e.index;
        pt.repeated_root = e.repeated_root;
    } catch (const NearDegenerate& e) {
        pt.status = PointStatus::near_degenerate;
        pt.error_index = e.index;
    } catch (const NotRealCharPoly& e) {
        pt.status = PointStatus::not_real_charpoly;
        pt.error_index = e.coefficient_index;
    }
    return pt;
}

bool same_outcome(const SweepPoint& a, const SweepPoint& b) {
    if (a.status != b.status) return false;
    if (a.status != PointStatus::ok) return a.error_index == b.error_index;
    return a.inertia == b.inertia;
}

SweepReport run_sweep(const FamilySpec& spec) {
    if (spec.step.sign() <= 0) throw std::invalid_argument("sweep: step must be > 0");
    if (spec.start > spec.stop) throw std::invalid_argument("sweep: start must be <= stop");

    SweepReport report;
    for (Rational xi = spec.start; xi <= spec.stop; xi += spec.step)
        report.points.push_back(classify_point(spec, xi));

    for (std::size_t k = 0; k + 1 < report.points.size(); ++k)
        if (!same_outcome(report.points[k], report.points[k + 1]))
            report.brackets.push_back({report.points[k], report.points[k + 1], std::nullopt});
    return report;
}

RefinedInterval refine_threshold(const FamilySpec& spec, const TransitionBracket& bracket,
                                 const Rational& width) {
    if (width.sign() <= 0) throw std::invalid_argument("refine: width must be > 0");

    SweepPoint lo = bracket.lo;
    SweepPoint hi = bracket.hi;
    if (lo.status != PointStatus::ok || hi.status != PointStatus::ok)
        throw std::invalid_argument("refine: both bracket endpoints must classify successfully");
    if (same_outcome(lo, hi))
        throw std::invalid_argument("refine: bracket endpoints must classify differently");

    RefinedInterval out{lo.xi, hi.xi, false};
    while (out.hi - out.lo > width) {
        const Rational mid = (out.lo + out.hi) / Rational(2);
        const SweepPoint m = classify_point(spec, mid);
        if (m.status != PointStatus::ok) {
            out.hit_degenerate = true;
            return out;
        }
        if (same_outcome(m, lo)) {
            out.lo = mid;
            lo = m;
        } else {
            // matches hi, or is a third classification: pursue the leftmost
            // transition in either case
            out.hi = mid;
            hi = m;
        }
    }
    return out;
}

SweepReport run_sweep_refined(const FamilySpec& spec, const Rational& width) {
    SweepReport report = run_sweep(spec);
    for (TransitionBracket& b : report.brackets)
        if (b.lo.status == PointStatus::ok && b.hi.status == PointStatus::ok)
            b.refined = refine_threshold(spec, b, width);
    return report;
}

}  // namespace ptsym
