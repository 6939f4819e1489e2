#pragma once

#include <string>

#include "covseg/arith.hpp"

namespace covseg {

/* Degree-n covers of GL_r over a p-adic field, bookkeeping only: the KP
   family carries the twisting integer a, the S family does not. The tame
   flag records the running assumption gcd(p, n) = 1; operations whose
   theorems need it refuse to run without it. */

enum class Family { KP, S };

struct CoverSpec {
    Family family = Family::KP;
    Int n = 1;
    Int a = 0;       // KP only; ignored for S
    bool tame = true;

    bool operator==(const CoverSpec& o) const;
    std::string str() const;  // "KP n=4 a=0" / "S n=4"
};

CoverSpec make_kp(Int n, Int a, bool tame = true);
CoverSpec make_s(Int n, bool tame = true);

/* Block size of the dual-side column chunks: n for KP, n/gcd(n,2) for S. */
Int n_alpha(const CoverSpec& c);

/* d_r = gcd(n, 2ra - r + 1), gcd of absolute values, gcd(n, 0) = n.
   KP only. The formula is evaluated literally at r = 0, giving d_0 = 1. */
Int d_r(const CoverSpec& c, Int r);

struct MtpMultiplicities {
    Int m1;          // n^2
    Int m2;          // n^2
    Int m;           // n^4 d_r / (d_{r-k} d_k), always a positive integer
    Rational ratio;  // m1 m2 / m = d_k d_{r-k} / d_r, exact
};

/* Metaplectic tensor product multiplicities for the two-block Levi
   GL_{r-k} x GL_k inside GL_r. KP and tame only. */
MtpMultiplicities mtp_multiplicities(const CoverSpec& c, Int r, Int k);

} // namespace covseg
