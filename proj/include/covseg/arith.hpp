#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "covseg/error.hpp"

namespace covseg {

/* All quantities in this library are exact. Machine integers are wide enough
   for every documented sweep, so Int is 64-bit with overflow checks instead
   of a bignum; an overflow throws IntegrityError rather than wrapping. */

using Int = long long;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegrityError("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegrityError("integer overflow in multiplication");
    return r;
}

inline Int gcd_abs(Int a, Int b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/* C(n, k); zero when k < 0 or k > n. Exact, overflow-checked. */
inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (n < 0) throw DomainError("binomial requires n >= 0");
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // exact: r holds C(n-k+i, i) after each step
    }
    return r;
}

/* Exact rational, normalized with positive denominator. Only small values
   occur (products and quotients of the d_r constants and binomials). */
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    Rational operator*(const Rational& o) const {
        Rational a(num, o.den), b(o.num, den); // cross-reduce before multiplying
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }

    std::string str() const {
        return is_integer() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace covseg
