#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptsym/polynomial.hpp"

namespace ptsym {

/// Power sums s_k of the roots of a degree-N polynomial, k = 0..2N-2,
/// with s_0 = N. Computable from the coefficients alone.
template <typename R>
struct NewtonSums {
    std::size_t n = 0;  // polynomial degree N
    std::vector<R> s;   // length 2N-1

    friend bool operator==(const NewtonSums&, const NewtonSums&) = default;
};

namespace detail {
template <typename R>
void require_monic(const Polynomial<R>& p) {
    if (p.degree() < 1) throw std::invalid_argument("newton sums: degree must be >= 1");
    if (!p.is_monic()) throw std::invalid_argument("newton sums: polynomial must be monic");
}
}  // namespace detail

/**
 * Newton's identities: s_k = -k*h_{N-k} - sum_{j=1}^{k-1} h_{N-j} s_{k-j}
 * for k <= N, and s_k = -sum_{j=1}^{N} h_{N-j} s_{k-j} beyond. This is the
 * production method (fewest operations).
 */
template <typename R>
NewtonSums<R> newton_sums_recursive(const Polynomial<R>& p) {
    detail::require_monic(p);
    const std::size_t n = p.degree();
    std::vector<R> s(2 * n - 1, R(0));
    s[0] = R(static_cast<long>(n));
    for (std::size_t k = 1; k <= 2 * n - 2; ++k) {
        R acc(0);
        const std::size_t jmax = std::min(k - 1, n);
        for (std::size_t j = 1; j <= jmax; ++j) acc += p[n - j] * s[k - j];
        if (k <= n)
            s[k] = -(R(static_cast<long>(k)) * p[n - k]) - acc;
        else
            s[k] = -acc;
    }
    return {n, std::move(s)};
}

/**
 * The same sums read off the Laurent expansion
 * p'(x)/p(x) = s_0 x^{-1} + s_1 x^{-2} + ..., by long division of p' by p.
 * Kept as an independent route; tests cross-check it against the recursion.
 */
template <typename R>
NewtonSums<R> newton_sums_series(const Polynomial<R>& p) {
    detail::require_monic(p);
    const std::size_t n = p.degree();
    const Polynomial<R> q = derivative(p);

    // r[t] holds the coefficient of x^{n-1-t} of the running remainder.
    std::vector<R> r(3 * n, R(0));
    for (std::size_t e = 0; e <= q.degree(); ++e) r[n - 1 - e] = q[e];

    std::vector<R> s(2 * n - 1, R(0));
    for (std::size_t m = 0; m <= 2 * n - 2; ++m) {
        s[m] = r[m];
        if (s[m] == R(0)) continue;
        for (std::size_t j = 0; j <= n; ++j) r[m + j] -= s[m] * p[n - j];
    }
    return {n, std::move(s)};
}

/**
 * Symmetric Hankel matrix with entry (i, j) = s_{i+j}, represented by the
 * sum sequence itself so the Hankel structure holds by construction.
 */
template <typename R>
class HankelMatrix {
public:
    explicit HankelMatrix(std::vector<R> sums) : s_(std::move(sums)) {
        if (s_.empty() || s_.size() % 2 == 0)
            throw std::invalid_argument("HankelMatrix: need sums s_0..s_{2N-2}");
        n_ = (s_.size() + 1) / 2;
    }

    std::size_t dim() const noexcept { return n_; }
    const R& operator()(std::size_t i, std::size_t j) const { return s_[i + j]; }
    const std::vector<R>& sums() const noexcept { return s_; }

    friend bool operator==(const HankelMatrix&, const HankelMatrix&) = default;

private:
    std::size_t n_;
    std::vector<R> s_;
};

template <typename R>
HankelMatrix<R> build_hankel(const NewtonSums<R>& sums) {
    return HankelMatrix<R>(sums.s);
}

}  // namespace ptsym
