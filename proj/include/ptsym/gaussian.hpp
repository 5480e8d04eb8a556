#pragma once

#include <ostream>
#include <utility>

#include "ptsym/rational.hpp"

namespace ptsym {

/**
 * Gaussian rational: re + i*im with exact rational parts. Field operations
 * are closed and exact; division by a nonzero value is always defined.
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        const Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        Rational re = (re_ * o.re_ + im_ * o.im_) / n;
        Rational im = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const Rational& o) {
        re_ /= o;
        im_ /= o;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator/(GaussianRational a, const Rational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    friend GaussianRational conj(const GaussianRational& z) {
        return GaussianRational(z.re_, -z.im_);
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    Rational re_;
    Rational im_;
};

std::string scalar_text(const GaussianRational& z);  // "a", "bi", or "a+bi"

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << scalar_text(z);
}

}  // namespace ptsym
