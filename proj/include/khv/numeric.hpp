#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace khv {

// All core arithmetic is exact: big integers for state sums and matrix
// elimination, big rationals for the series coefficients j^n/n!.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

/// base^e for nonnegative e (0^0 = 1).
inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

/// base^e for any integer e; throws on 0^negative.
inline Rational rat_pow(const Rational& base, int e) {
    if (e >= 0) {
        Rational r = 1;
        for (int k = 0; k < e; ++k) r *= base;
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    Rational r = 1;
    for (int k = 0; k < -e; ++k) r /= base;
    return r;
}

}  // namespace khv
