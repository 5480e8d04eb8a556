#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ptsym/errors.hpp"
#include "ptsym/inertia.hpp"
#include "ptsym/polynomial.hpp"

namespace ptsym {

/**
 * Numerical root classification used to validate the exact pipeline.
 * Deliberately a different algorithm family (simultaneous iteration on
 * float coefficients) so that agreement is evidence, not a tautology.
 */

/// All roots of p by Aberth-Ehrlich simultaneous iteration, sorted by
/// (real, imag). Each returned root r satisfies
/// |p(r)| <= residual_tol * max(1, sum_k |h_k| |r|^k); otherwise
/// NoConvergence is raised.
std::vector<std::complex<double>> find_roots(const Polynomial<double>& p,
                                             std::size_t max_iterations = 400,
                                             double residual_tol = 1e-10);

struct ClassifiedRoots {
    std::vector<std::complex<double>> roots;
    std::size_t real_count = 0;
    std::size_t complex_pair_count = 0;
    double imag_threshold = 1e-8;
};

/// A root is real iff |imag| <= imag_threshold * max(1, |root|); the rest
/// must pair up with conjugate partners, else ClassificationAmbiguous.
ClassifiedRoots classify_roots(const std::vector<std::complex<double>>& roots,
                               double imag_threshold = 1e-8);

Polynomial<double> to_float(const Polynomial<Rational>& p);

struct CrossValidation {
    enum class Verdict { match, mismatch, inconclusive };

    Verdict verdict = Verdict::inconclusive;
    std::size_t dimension = 0;
    std::optional<RealInertia> pipeline;      // empty when the pipeline was inapplicable
    std::optional<ClassifiedRoots> oracle;    // empty when the root finder failed
    std::vector<std::string> notes;
};

/// Runs the exact pipeline and the numerical chain on the same matrix and
/// compares (real_count, complex_pair_count). Degenerate outcomes on either
/// side give "inconclusive", never a hard failure. A non-real
/// characteristic polynomial propagates as NotRealCharPoly.
CrossValidation cross_validate(const SquareMatrix<GaussianRational>& m,
                               double imag_threshold = 1e-8);

}  // namespace ptsym
