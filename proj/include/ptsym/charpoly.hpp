#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ptsym/errors.hpp"
#include "ptsym/matrix.hpp"
#include "ptsym/modes.hpp"
#include "ptsym/polynomial.hpp"

namespace ptsym {

/**
 * Monic characteristic polynomial det(x*I - M) by the Faddeev-LeVerrier
 * trace recursion: the only divisions are by the integers 1..N, so the
 * computation is exact over rationals. The coefficients must come out real;
 * a coefficient with nonzero imaginary part (exact mode) or with imaginary
 * part outside the guard band relative to the largest coefficient magnitude
 * (float mode) raises NotRealCharPoly with the offending power.
 */
template <typename Mode>
Polynomial<typename Mode::Real> char_poly(const SquareMatrix<typename Mode::Cplx>& m,
                                          const Mode& mode) {
    using R = typename Mode::Real;
    using C = typename Mode::Cplx;
    const std::size_t n = m.dim();

    std::vector<C> c(n + 1, C(R(0)));
    c[n] = C(R(1));
    SquareMatrix<C> b = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            SquareMatrix<C> t = b;
            for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
            b = m * t;
        }
        c[n - k] = -(trace(b) / R(static_cast<long>(k)));
    }

    std::vector<R> real_coeffs(n + 1);
    if constexpr (Mode::is_exact) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (!c[k].imag().is_zero()) throw NotRealCharPoly(k);
            real_coeffs[k] = c[k].real();
        }
    } else {
        double scale = 0.0;
        for (const C& z : c) scale = std::max(scale, std::fabs(z.real()) + std::fabs(z.imag()));
        for (std::size_t k = 0; k <= n; ++k) {
            if (mode.sign(c[k].imag(), scale) != 0) throw NotRealCharPoly(k);
            real_coeffs[k] = c[k].real();
        }
    }
    return Polynomial<R>(std::move(real_coeffs));
}

struct SquarefreeFlag {
    bool squarefree;
    std::size_t distinct_roots;  // deg p - deg gcd(p, p')
};

/// Repeated-root pre-screen: p is squarefree iff gcd(p, p') is constant.
inline SquarefreeFlag squarefree_flag(const Polynomial<Rational>& p) {
    const auto g = gcd(p, derivative(p));
    return {g.degree() == 0, p.degree() - g.degree()};
}

}  // namespace ptsym
