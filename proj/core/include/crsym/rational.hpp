#pragma once

#include <gmpxx.h>

#include <string>

#include "crsym/errors.hpp"

namespace crsym {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) as long as mpq_class values are built through the class API.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) fail(ErrorCode::DomainError, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(base)) {
        if (e < 0) fail(ErrorCode::DomainError, "inverse power of zero");
        return Rational(0);
    }
    Rational b = base;
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (invert) acc = Rational(1) / acc;
    return acc;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace crsym
