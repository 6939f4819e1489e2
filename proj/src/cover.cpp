#include "covseg/cover.hpp"

namespace covseg {

bool CoverSpec::operator==(const CoverSpec& o) const {
    if (family != o.family || n != o.n || tame != o.tame) return false;
    return family == Family::S || a == o.a;
}

std::string CoverSpec::str() const {
    std::string s = family == Family::KP ? "KP" : "S";
    s += " n=" + std::to_string(n);
    if (family == Family::KP) s += " a=" + std::to_string(a);
    return s;
}

static void check_degree(Int n) {
    if (n < 1) throw DomainError("cover degree n must be >= 1");
}

CoverSpec make_kp(Int n, Int a, bool tame) {
    check_degree(n);
    return CoverSpec{Family::KP, n, a, tame};
}

CoverSpec make_s(Int n, bool tame) {
    check_degree(n);
    return CoverSpec{Family::S, n, 0, tame};
}

Int n_alpha(const CoverSpec& c) {
    check_degree(c.n);
    return c.family == Family::KP ? c.n : c.n / std::gcd(c.n, Int(2));
}

Int d_r(const CoverSpec& c, Int r) {
    if (c.family != Family::KP) throw DomainError("d_r is defined only for KP covers");
    if (r < 0) throw DomainError("d_r requires r >= 0");
    check_degree(c.n);
    return gcd_abs(c.n, 2 * r * c.a - r + 1);
}

MtpMultiplicities mtp_multiplicities(const CoverSpec& c, Int r, Int k) {
    if (c.family != Family::KP) throw DomainError("metaplectic tensor multiplicities are defined only for KP covers");
    if (!c.tame) throw DomainError("metaplectic tensor multiplicities require the tame assumption");
    if (k <= 0 || k >= r) throw DomainError("mtp_multiplicities requires 0 < k < r");
    Int dr = d_r(c, r), dk = d_r(c, k), drk = d_r(c, r - k);
    Int n2 = checked_mul(c.n, c.n);
    Int n4 = checked_mul(n2, n2);
    Int num = checked_mul(n4, dr);
    Int den = checked_mul(drk, dk);
    if (num % den != 0) throw IntegrityError("non-integral total multiplicity m");
    MtpMultiplicities out{n2, n2, num / den, Rational(checked_mul(dk, drk), dr)};
    if (out.m <= 0 || out.ratio.num <= 0) throw IntegrityError("multiplicities must be positive");
    return out;
}

} // namespace covseg
