#pragma once

#include <cmath>
#include <stdexcept>

namespace ptsym {

/**
 * Guarded sign for floating-point values. sign(x, scale) reports 0
 * ("indeterminate") whenever |x| <= eps_abs + eps_rel * scale, where scale is
 * a caller-supplied magnitude reference for the quantity being tested.
 * A guarded sign of 0 is never silently dropped upstream; it becomes a
 * NearDegenerate outcome.
 */
struct SignGuard {
    double eps_abs = 1e-12;
    double eps_rel = 1e-9;

    int sign(double x, double scale = 1.0) const {
        if (!(scale >= 0.0)) throw std::invalid_argument("SignGuard: scale must be >= 0");
        const double band = eps_abs + eps_rel * scale;
        if (std::fabs(x) <= band) return 0;
        return x > 0.0 ? 1 : -1;
    }
};

inline int guarded_sign(double x, double scale, const SignGuard& guard = SignGuard{}) {
    return guard.sign(x, scale);
}

}  // namespace ptsym
