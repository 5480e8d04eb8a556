#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ptsym/charpoly.hpp"
#include "ptsym/errors.hpp"
#include "ptsym/matrix.hpp"
#include "ptsym/modes.hpp"
#include "ptsym/newton.hpp"

namespace ptsym {

/// Eigenvalue counts relative to the imaginary axis: {negative, zero,
/// positive real part}. For the (hermitean) Hankel matrix this is simply
/// the count of negative / zero / positive eigenvalues.
struct ImaginaryInertia {
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;

    friend bool operator==(const ImaginaryInertia&, const ImaginaryInertia&) = default;
};

/// Eigenvalue counts relative to the real axis: {below, on, above}. The two
/// off-axis counts agree because complex eigenvalues of a real-charpoly
/// matrix come in conjugate pairs.
struct RealInertia {
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;

    bool broken() const noexcept { return negative > 0; }
    std::size_t real_count() const noexcept { return zero; }
    std::size_t complex_pair_count() const noexcept { return negative; }

    friend bool operator==(const RealInertia&, const RealInertia&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ImaginaryInertia& in) {
    return os << "{" << in.negative << "," << in.zero << "," << in.positive << "}";
}
inline std::ostream& operator<<(std::ostream& os, const RealInertia& in) {
    return os << "{" << in.negative << "," << in.zero << "," << in.positive << "}";
}

/// A leading "+" followed by the signs of d_1..d_N; entries are +1/-1 only
/// (a zero sign is rejected before construction).
class SignSequence {
public:
    SignSequence() = default;
    explicit SignSequence(std::vector<int> signs) : s_(std::move(signs)) {
        if (s_.empty() || s_.front() != 1)
            throw std::invalid_argument("SignSequence: must start with +1");
        for (int v : s_)
            if (v != 1 && v != -1) throw std::invalid_argument("SignSequence: entries must be +-1");
    }

    std::size_t size() const noexcept { return s_.size(); }
    int operator[](std::size_t k) const { return s_[k]; }
    const std::vector<int>& values() const noexcept { return s_; }

    std::string str() const {
        std::string out;
        for (int v : s_) out += (v > 0 ? '+' : '-');
        return out;
    }

    friend bool operator==(const SignSequence&, const SignSequence&) = default;

private:
    std::vector<int> s_;
};

namespace detail {

template <typename R>
R abs_value(const R& x) {
    using std::abs;
    return abs(x);
}

/// Determinant of the leading k x k block by fraction-free elimination with
/// row pivoting. Used only when the amortized pass below hits a zero pivot.
template <typename R>
R leading_block_determinant(const HankelMatrix<R>& h, std::size_t k) {
    SquareMatrix<R> a(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = h(i, j);

    R prev(1);
    int sign = 1;
    for (std::size_t col = 0; col + 1 < k; ++col) {
        std::size_t pivot_row = col;
        for (std::size_t i = col; i < k; ++i)
            if (abs_value(a(i, col)) > abs_value(a(pivot_row, col))) pivot_row = i;
        if (a(pivot_row, col) == R(0)) return R(0);
        if (pivot_row != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a(col, j), a(pivot_row, j));
            sign = -sign;
        }
        const R pivot = a(col, col);
        for (std::size_t i = col + 1; i < k; ++i)
            for (std::size_t j = col + 1; j < k; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, col) * a(col, j)) / prev;
        prev = pivot;
    }
    R det = a(k - 1, k - 1);
    return sign < 0 ? -det : det;
}

}  // namespace detail

/**
 * Exact determinants d_1..d_N of the leading principal blocks, all from one
 * Bareiss fraction-free elimination pass: after step k the (k+1, k+1) entry
 * equals d_{k+2}. Zeros are reported, not raised. A zero pivot stops the
 * shared pass, and the remaining minors are then computed per block.
 */
template <typename R>
std::vector<R> leading_principal_minors(const HankelMatrix<R>& h) {
    const std::size_t n = h.dim();
    SquareMatrix<R> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = h(i, j);

    std::vector<R> d(n, R(0));
    R prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = a(k, k);
        if (k + 1 == n) break;
        const R pivot = a(k, k);
        if (pivot == R(0)) {
            for (std::size_t m = k + 1; m < n; ++m)
                d[m] = detail::leading_block_determinant(h, m + 1);
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
        prev = pivot;
    }
    return d;
}

/// Hadamard bounds of the leading blocks, used as the guarded-sign
/// magnitude reference for each d_k in float mode: scale_k is the product
/// of the row 2-norms of the k x k block.
inline std::vector<double> hadamard_scales(const HankelMatrix<double>& h) {
    const std::size_t n = h.dim();
    std::vector<double> scales(n, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        double bound = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < k; ++j) row += h(i, j) * h(i, j);
            bound *= std::sqrt(row);
        }
        scales[k - 1] = bound;
    }
    return scales;
}

/**
 * The sign sequence +, sigma_1, ..., sigma_N of the minors. An exact zero
 * raises VanishingMinor (exact mode); an indeterminate guarded sign raises
 * NearDegenerate (float mode). Both carry the 1-based index of d_k.
 */
template <typename Mode>
SignSequence minor_signs(const std::vector<typename Mode::Real>& minors, const Mode& mode,
                         const std::vector<typename Mode::Real>& scales = {}) {
    using R = typename Mode::Real;
    std::vector<int> signs;
    signs.reserve(minors.size() + 1);
    signs.push_back(1);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const R scale = scales.empty() ? R(1) : scales[k];
        const int s = mode.sign(minors[k], scale);
        if (s == 0) {
            if constexpr (Mode::is_exact)
                throw VanishingMinor(k + 1);
            else
                throw NearDegenerate(k + 1);
        }
        signs.push_back(s);
    }
    return SignSequence(std::move(signs));
}

/// Jacobi's rule read off the sign sequence: adjacent equal pairs
/// (constancies) count positive eigenvalues, adjacent sign changes
/// (alterations) count negative ones. No zero eigenvalues can occur since
/// every d_k, including d_N, is nonzero.
inline ImaginaryInertia inertia_from_signs(const SignSequence& signs) {
    ImaginaryInertia in;
    for (std::size_t k = 1; k < signs.size(); ++k) {
        if (signs[k] == signs[k - 1])
            ++in.positive;
        else
            ++in.negative;
    }
    return in;
}

template <typename Mode>
ImaginaryInertia jacobi_inertia(const std::vector<typename Mode::Real>& minors, const Mode& mode,
                                const std::vector<typename Mode::Real>& scales = {}) {
    return inertia_from_signs(minor_signs(minors, mode, scales));
}

/**
 * Transfer from the Hankel inertia {nu, 0, pi} to the inertia of the input
 * matrix relative to the real axis: {nu, N - 2*nu, nu} with N = nu + pi.
 * nu counts conjugate pairs, N - 2*nu real eigenvalues.
 */
inline RealInertia real_inertia_from_hankel(const ImaginaryInertia& h) {
    if (h.zero != 0)
        throw std::invalid_argument("real_inertia_from_hankel: requires zero-free inertia");
    if (h.negative > h.positive)
        throw std::invalid_argument("real_inertia_from_hankel: not a power-sum Hankel inertia");
    const std::size_t n = h.negative + h.positive;
    return RealInertia{h.negative, n - 2 * h.negative, h.negative};
}

/// Full diagnostic record of one analysis.
template <typename R>
struct QualitativeSpectrum {
    std::size_t dimension = 0;
    Polynomial<R> charpoly;
    std::vector<R> newton_sums;
    std::vector<R> minors;
    SignSequence signs;
    ImaginaryInertia hankel_inertia;
    RealInertia inertia;
    bool broken = false;
    std::vector<std::string> warnings;

    std::size_t real_count() const noexcept { return inertia.real_count(); }
    std::size_t complex_pair_count() const noexcept { return inertia.complex_pair_count(); }
};

/**
 * Classification of a monic real polynomial's roots relative to the real
 * axis: newton sums -> Hankel matrix -> leading minors -> Jacobi sign rule.
 * Raises VanishingMinor (annotated with the squarefree pre-screen) or, in
 * float mode, NearDegenerate when a sign cannot be decided.
 */
template <typename Mode>
QualitativeSpectrum<typename Mode::Real> spectrum_of_polynomial(
    Polynomial<typename Mode::Real> p, const Mode& mode) {
    using R = typename Mode::Real;
    QualitativeSpectrum<R> out;
    out.dimension = p.degree();
    out.charpoly = std::move(p);

    const auto sums = newton_sums_recursive(out.charpoly);
    const auto h = build_hankel(sums);
    out.newton_sums = sums.s;
    out.minors = leading_principal_minors(h);

    std::vector<R> scales;
    if constexpr (!Mode::is_exact) scales = hadamard_scales(h);

    try {
        out.signs = minor_signs(out.minors, mode, scales);
    } catch (const VanishingMinor& e) {
        if constexpr (Mode::is_exact) {
            const auto f = squarefree_flag(out.charpoly);
            throw VanishingMinor(e.index, !f.squarefree, f.distinct_roots);
        } else {
            throw;
        }
    }

    out.hankel_inertia = inertia_from_signs(out.signs);
    out.inertia = real_inertia_from_hankel(out.hankel_inertia);
    out.broken = out.inertia.broken();
    if constexpr (!Mode::is_exact)
        out.warnings.push_back("float arithmetic: signs decided through guard bands (eps_abs=" +
                               scalar_text(mode.guard.eps_abs) +
                               ", eps_rel=" + scalar_text(mode.guard.eps_rel) + ")");
    return out;
}

/// End-to-end pipeline: characteristic polynomial, then root classification.
template <typename Mode>
QualitativeSpectrum<typename Mode::Real> qualitative_spectrum(
    const SquareMatrix<typename Mode::Cplx>& m, const Mode& mode) {
    return spectrum_of_polynomial(char_poly(m, mode), mode);
}

inline QualitativeSpectrum<Rational> analyze_exact(const SquareMatrix<GaussianRational>& m) {
    return qualitative_spectrum(m, ExactMode{});
}

inline QualitativeSpectrum<double> analyze_float(const SquareMatrix<std::complex<double>>& m,
                                                 const SignGuard& guard = SignGuard{}) {
    return qualitative_spectrum(m, FloatMode{guard});
}

}  // namespace ptsym
