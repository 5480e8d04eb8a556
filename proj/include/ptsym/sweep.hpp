#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ptsym/inertia.hpp"
#include "ptsym/matrix.hpp"

namespace ptsym {

/// Built-in one-parameter families.
struct GeneratorFamily {
    enum class Kind { pt_well, pt_well_n };
    Kind kind = Kind::pt_well;
    std::size_t dim = 3;  // used by pt_well_n
};

/// Matrix family affine in the parameter: M(xi) = base + xi * slope.
struct AffineFamily {
    SquareMatrix<GaussianRational> base;
    SquareMatrix<GaussianRational> slope;
};

/// A one-parameter family swept over an exact rational grid
/// start, start+step, ..., up to stop.
struct FamilySpec {
    std::variant<GeneratorFamily, AffineFamily> family;
    Rational start;
    Rational stop;
    Rational step;
};

SquareMatrix<GaussianRational> family_matrix(const FamilySpec& spec, const Rational& xi);

enum class PointStatus { ok, vanishing_minor, near_degenerate, not_real_charpoly };

const char* to_string(PointStatus s);

/// Classification of the family at one grid point: either a RealInertia or
/// an error tag recorded inline.
struct SweepPoint {
    Rational xi;
    PointStatus status = PointStatus::ok;
    std::optional<RealInertia> inertia;  // engaged iff status == ok
    std::size_t error_index = 0;         // minor/coefficient index for error tags
    bool repeated_root = false;
};

/// Two successive grid points whose classifications differ, i.e. a bracket
/// around a symmetry-breaking transition.
struct RefinedInterval {
    Rational lo;
    Rational hi;
    bool hit_degenerate = false;  // a bisection midpoint failed to classify
};

struct TransitionBracket {
    SweepPoint lo;
    SweepPoint hi;
    std::optional<RefinedInterval> refined;
};

struct SweepReport {
    std::vector<SweepPoint> points;            // in grid order
    std::vector<TransitionBracket> brackets;
};

SweepPoint classify_point(const FamilySpec& spec, const Rational& xi);

bool same_outcome(const SweepPoint& a, const SweepPoint& b);

/// Classifies every grid point and brackets each adjacent pair with
/// differing outcomes. Per-point errors are recorded inline and never abort
/// the sweep.
SweepReport run_sweep(const FamilySpec& spec);

/**
 * Exact rational bisection of a bracket until its width is <= width.
 * Both endpoints must classify successfully and differently. If a midpoint
 * fails to classify, the interval is returned as-is with hit_degenerate
 * set. width must be positive.
 */
RefinedInterval refine_threshold(const FamilySpec& spec, const TransitionBracket& bracket,
                                 const Rational& width);

/// run_sweep plus refinement of every bracket whose endpoints allow it.
SweepReport run_sweep_refined(const FamilySpec& spec, const Rational& width);

}  // namespace ptsym
