#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptsym {

/**
 * Dense polynomial over a field R, stored by ascending power and kept
 * normalized (no trailing zero coefficients; the zero polynomial is {0}).
 */
template <typename R>
class Polynomial {
public:
    Polynomial() : c_{R(0)} {}

    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(R(0));
        normalize();
    }

    static Polynomial monomial(std::size_t k, R coeff = R(1)) {
        std::vector<R> c(k + 1, R(0));
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    std::size_t degree() const noexcept { return c_.size() - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == R(0); }
    bool is_monic() const { return c_.back() == R(1); }

    /// Coefficient of x^k; zero beyond the degree.
    const R& operator[](std::size_t k) const {
        static const R zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    const std::vector<R>& coefficients() const noexcept { return c_; }
    const R& leading() const { return c_.back(); }

    /// Horner evaluation; X may be a wider type than R (e.g. complex).
    template <typename X>
    X operator()(const X& x) const {
        X acc(c_.back());
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + X(c_[k]);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial operator-() const {
        std::vector<R> c(c_);
        for (R& x : c) x = -x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const R& s, const Polynomial& p) {
        std::vector<R> c(p.c_);
        for (R& x : c) x = s * x;
        return Polynomial(std::move(c));
    }

private:
    void normalize() {
        while (c_.size() > 1 && c_.back() == R(0)) c_.pop_back();
    }

    std::vector<R> c_;  // c_[k] multiplies x^k
};

/// Exact formal derivative.
template <typename R>
Polynomial<R> derivative(const Polynomial<R>& p) {
    if (p.degree() == 0) return Polynomial<R>();
    std::vector<R> c(p.degree());
    for (std::size_t k = 1; k <= p.degree(); ++k) c[k - 1] = R(static_cast<long>(k)) * p[k];
    return Polynomial<R>(std::move(c));
}

/// Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
template <typename R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<R> rem(a.coefficients());
    const std::size_t db = b.degree();
    if (a.degree() < db || a.is_zero())
        return {Polynomial<R>(), Polynomial<R>(std::move(rem))};
    std::vector<R> quot(a.degree() - db + 1, R(0));
    for (std::size_t k = a.degree() + 1; k-- > db;) {
        R f = rem[k] / b.leading();
        if (f == R(0)) continue;
        quot[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b[j];
    }
    return {Polynomial<R>(std::move(quot)), Polynomial<R>(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <typename R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (R(1) / a.leading()) * a;
}

/// Taylor shift: returns q with q(x) = p(x + a), by repeated synthetic
/// division. Exact over exact coefficient fields.
template <typename R>
Polynomial<R> taylor_shift(const Polynomial<R>& p, const R& a) {
    std::vector<R> c(p.coefficients());
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) c[k - 1] += a * c[k];
    return Polynomial<R>(std::move(c));
}

std::string scalar_text(double x);

/// Human-readable form such as "x^3 - 2*x" (coefficients via scalar_text).
template <typename R>
std::string to_string(const Polynomial<R>& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.degree() + 1; k-- > 0;) {
        if (p[k] == R(0)) continue;
        std::string coeff = scalar_text(p[k]);
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = coeff == "1";
        if (k == 0) {
            out += coeff;
        } else {
            if (!unit) {
                out += coeff;
                out += "*";
            }
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Polynomial<R>& p) {
    return os << to_string(p);
}

}  // namespace ptsym
