#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ptsym/gaussian.hpp"
#include "ptsym/rational.hpp"

namespace ptsym {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_digits(std::string_view s, std::string_view full) {
    if (!all_digits(s))
        throw std::invalid_argument("not a rational literal: \"" + std::string(full) + "\"");
    return mpz_class(std::string(s), 10);
}

mpz_class pow10(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

}  // namespace

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: value is not finite");
    return Rational(mpq_class(x));
}

double Rational::to_double() const {
    // both parts exactly representable: one correctly-rounded IEEE division
    if (mpz_cmpabs_ui(v_.get_num().get_mpz_t(), 1UL << 53) < 0 &&
        mpz_cmpabs_ui(v_.get_den().get_mpz_t(), 1UL << 53) < 0)
        return v_.get_num().get_d() / v_.get_den().get_d();
    return v_.get_d();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");

    mpz_class num;
    mpz_class den = 1;

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        // "p/q" with decimal integer parts
        num = parse_digits(s.substr(0, slash), text);
        den = parse_digits(s.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    } else {
        // decimal form: digits[.digits][e[+-]digits], converted from the text
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            std::string_view es = s.substr(e + 1);
            bool eneg = false;
            if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
                eneg = es.front() == '-';
                es.remove_prefix(1);
            }
            if (!all_digits(es) || es.size() > 6)
                throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
            exponent = std::strtol(std::string(es).c_str(), nullptr, 10);
            if (eneg) exponent = -exponent;
        }
        std::string_view int_part = mantissa;
        std::string_view frac_part;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            int_part = mantissa.substr(0, dot);
            frac_part = mantissa.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
            throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
        num = int_part.empty() ? mpz_class(0) : parse_digits(int_part, text);
        if (!frac_part.empty()) {
            num = num * pow10(frac_part.size()) + parse_digits(frac_part, text);
            exponent -= static_cast<long>(frac_part.size());
        }
        if (exponent > 0)
            num *= pow10(static_cast<unsigned long>(exponent));
        else if (exponent < 0)
            den = pow10(static_cast<unsigned long>(-exponent));
    }

    if (negative) num = -num;
    return Rational(num, den);
}

Rational pow(const Rational& x, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

std::string scalar_text(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, end);
}

std::string scalar_text(const GaussianRational& z) {
    if (z.imag().is_zero()) return z.real().str();
    std::string im = z.imag().str() + "i";
    if (z.real().is_zero()) return im;
    return z.real().str() + (z.imag().sign() > 0 ? "+" : "") + im;
}

}  // namespace ptsym
