#pragma once

// Exact scalars: arbitrary-precision rationals (GMP-backed) and Gaussian
// rationals a + bi with rational components.  Everything downstream of this
// header is exact; no floating point anywhere in the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sl2fence {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" (base 10).  Rejects anything else, including a
// zero denominator, before the value can reach a computation.
inline Rational rat_from_string(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    try {
        q = Rational(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline bool is_even_integer(const Rational& x) {
    return is_integer(x) && mpz_even_p(x.get_num().get_mpz_t());
}

inline bool is_odd_integer(const Rational& x) {
    return is_integer(x) && mpz_odd_p(x.get_num().get_mpz_t());
}

// Requires an integer value that fits in a long.
inline long to_long(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("rational is not an integer: " + to_string(x));
    if (!x.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(x));
    return x.get_num().get_si();
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Rising factorial x(x+1)...(x+len-1); the finite-product reading of a ratio
// of Gamma values, defined for every rational x.
inline Rational rising_factorial(const Rational& x, unsigned len) {
    Rational p = 1;
    for (unsigned i = 0; i < len; ++i) p *= x + static_cast<long>(i);
    return p;
}

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long r) : re(r), im(0) {}                 // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
    GaussianRational operator+(const GaussianRational& o) const { return {Rational(re + o.re), Rational(im + o.im)}; }
    GaussianRational operator-(const GaussianRational& o) const { return {Rational(re - o.re), Rational(im - o.im)}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {Rational(re * o.re - im * o.im), Rational(re * o.im + im * o.re)};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("division by zero GaussianRational");
        return {Rational((re * o.re + im * o.im) / n), Rational((im * o.re - re * o.im) / n)};
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, Rational(-im)}; }
};

inline bool is_integer(const GaussianRational& z) { return z.is_real() && is_integer(z.re); }
inline bool is_even_integer(const GaussianRational& z) { return z.is_real() && is_even_integer(z.re); }
inline bool is_odd_integer(const GaussianRational& z) { return z.is_real() && is_odd_integer(z.re); }

inline std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re);
    std::string s = to_string(z.re);
    if (sgn(z.im) >= 0) s += "+";
    return s + to_string(z.im) + "i";
}

// Lexicographic order on (re, im); used only for picking canonical Weyl-orbit
// representatives, not for anything analytic.
inline bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

// Sign of the real part; exact sign for real values.  sgn(0) is kept as its
// own value 0 so that callers can treat boundary cases explicitly.
inline int re_sign(const GaussianRational& z) { return sgn(z.re); }

}  // namespace sl2fence
