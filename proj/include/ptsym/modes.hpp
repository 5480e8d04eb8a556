#pragma once

#include <complex>

#include "ptsym/gaussian.hpp"
#include "ptsym/rational.hpp"
#include "ptsym/sign_guard.hpp"

namespace ptsym {

/**
 * Arithmetic modes for the analysis pipeline. The algorithms are written
 * once over (Real, Cplx) and a sign oracle; exact mode decides signs
 * exactly, float mode through a guard band with a magnitude reference.
 */
struct ExactMode {
    using Real = Rational;
    using Cplx = GaussianRational;
    static constexpr bool is_exact = true;

    int sign(const Real& x, const Real& /*scale*/) const noexcept { return x.sign(); }
};

struct FloatMode {
    using Real = double;
    using Cplx = std::complex<double>;
    static constexpr bool is_exact = false;

    SignGuard guard{};

    int sign(double x, double scale) const { return guard.sign(x, scale); }
};

}  // namespace ptsym
