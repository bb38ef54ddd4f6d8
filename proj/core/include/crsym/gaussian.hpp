#pragma once

#include <string>

#include "crsym/rational.hpp"

namespace crsym {

// Exact complex scalar over the rationals: the coefficient field for every
// series in the library.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return crsym::is_zero(re) && crsym::is_zero(im); }
    bool is_real() const { return crsym::is_zero(im); }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }

inline Rational norm_sq(const GaussianRational& x) { return x.re * x.re + x.im * x.im; }

inline GaussianRational inverse(const GaussianRational& x) {
    if (x.is_zero()) fail(ErrorCode::DomainError, "inverse of zero");
    Rational n = norm_sq(x);
    return {x.re / n, -x.im / n};
}

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * inverse(b);
}

inline GaussianRational gauss_i() { return {Rational(0), Rational(1)}; }

inline GaussianRational pow_int(const GaussianRational& base, long e) {
    if (e == 0) return GaussianRational(1);
    GaussianRational b = e < 0 ? inverse(base) : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Deterministic rendering, e.g. "1", "-2/3", "(1+1/4i)", "(-i)".
std::string to_string(const GaussianRational& x);

}  // namespace crsym
