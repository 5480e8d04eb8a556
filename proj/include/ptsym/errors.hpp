#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptsym {

/**
 * Base class for outcomes where the method cannot decide: a vanishing
 * leading minor, an indeterminate sign in float mode, a non-real
 * characteristic polynomial. These are legitimate mathematical results,
 * distinct from operational failures (bad files, bad flags); the CLI maps
 * them to exit code 2.
 */
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input's characteristic polynomial has a non-real coefficient,
/// so the matrix is not PT-symmetric in the sense the algorithm needs.
class NotRealCharPoly : public AnalysisError {
public:
    explicit NotRealCharPoly(std::size_t coefficient_index)
        : AnalysisError("characteristic polynomial is not real (coefficient of x^" +
                        std::to_string(coefficient_index) + " has nonzero imaginary part)"),
          coefficient_index(coefficient_index) {}

    std::size_t coefficient_index;
};

/// A leading principal minor d_k of the Hankel matrix is exactly zero.
/// The sign-sequence rule needs all of them nonzero. When the pipeline can
/// tell, the error is annotated with whether the characteristic polynomial
/// has a repeated root (the typical cause).
class VanishingMinor : public AnalysisError {
public:
    explicit VanishingMinor(std::size_t index, bool repeated_root = false,
                            std::size_t distinct_roots = 0)
        : AnalysisError(describe(index, repeated_root)),
          index(index),
          repeated_root(repeated_root),
          distinct_roots(distinct_roots) {}

    std::size_t index;           // 1-based k of the first vanishing d_k
    bool repeated_root;          // true when gcd(p, p') is nonconstant
    std::size_t distinct_roots;  // number of distinct roots, 0 if not computed

private:
    static std::string describe(std::size_t k, bool repeated) {
        std::string s = "leading principal minor d_" + std::to_string(k) + " vanishes";
        if (repeated) s += " (characteristic polynomial has a repeated root)";
        return s;
    }
};

/// Float mode only: |d_k| fell inside the sign guard band, so its sign is
/// indeterminate and no classification is reported.
class NearDegenerate : public AnalysisError {
public:
    explicit NearDegenerate(std::size_t index)
        : AnalysisError("minor d_" + std::to_string(index) +
                        " is inside the sign guard band; classification is indeterminate"),
          index(index) {}

    std::size_t index;  // 1-based k of the first indeterminate d_k
};

/// The iterative root finder did not reach the residual tolerance.
class NoConvergence : public AnalysisError {
public:
    explicit NoConvergence(std::size_t max_iterations)
        : AnalysisError("root finder did not converge within " +
                        std::to_string(max_iterations) + " iterations"),
          max_iterations(max_iterations) {}

    std::size_t max_iterations;
};

/// Numerical roots could not be split into reals and conjugate pairs.
class ClassificationAmbiguous : public AnalysisError {
public:
    ClassificationAmbiguous()
        : AnalysisError("roots could not be paired into reals and conjugate pairs") {}
};

}  // namespace ptsym
