#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ptsym {

/**
 * Arbitrary-precision rational scalar.
 *
 * Values are canonical at all times: reduced to lowest terms with a positive
 * denominator, zero stored as 0/1. Equality is therefore structural — equal
 * values produced by different computation paths compare equal bit for bit —
 * and sign() is exact, never tolerance-based.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Exact value of a finite double (every finite double is p/2^k).
    static Rational from_double(double x);

    /// Parses "p/q", an optionally signed integer, or decimal text such as
    /// "-1.25" or "3e-2", all converted exactly. Throws std::invalid_argument
    /// on anything else.
    static Rational parse(std::string_view text);

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Nearest double (mpq_get_d alone truncates, which misprints values
    /// like 1/10; small numerator/denominator pairs divide exactly instead).
    double to_double() const;

    /// Canonical text form: "p/q", or plain "p" for integers.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.v_.get_str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

/// x^e by repeated squaring on numerator and denominator, exact.
Rational pow(const Rational& x, unsigned long e);

inline std::string scalar_text(const Rational& x) { return x.str(); }
std::string scalar_text(double x);  // shortest round-trip decimal

}  // namespace ptsym
