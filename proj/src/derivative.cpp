#include "covseg/derivative.hpp"

#include <algorithm>
#include <set>

namespace covseg {

static void require_tame(const CoverSpec& c) {
    if (!c.tame) throw DomainError("theorem hypotheses not met: cover must be tame (gcd(p, n) = 1)");
}

/* Divide by d_{r} for KP covers, keeping S untouched. The theory guarantees
   every such quotient is integral; a remainder is an integrity failure. */
static Int kp_quotient(Int value, Int r, const CoverSpec& c, const char* what) {
    if (c.family != Family::KP) return value;
    Int d = d_r(c, r);
    if (value % d != 0)
        throw IntegrityError(std::string(what) + ": " + std::to_string(value) +
                             " not divisible by d_" + std::to_string(r) + " = " + std::to_string(d));
    return value / d;
}

Int wh_dim_Z(const Segment& d, const CoverSpec& c) {
    require_tame(c);
    Int b = binomial(n_rho(d.rho, c), d.length());
    return kp_quotient(b, d.size(), c, "wh_dim_Z");
}

Int wh_dim_L(const Segment& d, const CoverSpec& c) {
    require_tame(c);
    Int b = binomial(n_rho(d.rho, c) + d.length() - 1, d.length());
    return kp_quotient(b, d.size(), c, "wh_dim_L");
}

/* Scalar common to both derivative flavors: binom times d_{r-k}/d_r for KP. */
static Int derivative_scalar(Int binom, Int r, Int k, const CoverSpec& c) {
    if (c.family != Family::KP) return binom;
    Int num = checked_mul(binom, d_r(c, r - k));
    Int den = d_r(c, r);
    if (num % den != 0)
        throw IntegrityError("derivative scalar " + std::to_string(binom) + "*d_" +
                             std::to_string(r - k) + "/d_" + std::to_string(r) + " not integral");
    return num / den;
}

static DerivativeResult zero_result(Int k, RepTag tag) {
    DerivativeResult res;
    res.degree = k;
    res.value.tag = tag;
    res.scalar = 0;
    return res;
}

DerivativeResult derivative_Z(const Segment& d, Int k, const CoverSpec& c) {
    require_tame(c);
    if (k < 0 || k > d.size()) throw DomainError("derivative degree out of range [0, size]");
    if (k % d.rho.r0 != 0) return zero_result(k, RepTag::Z);
    Int s = k / d.rho.r0;
    Int b = binomial(n_rho(d.rho, c), s);
    if (b == 0) return zero_result(k, RepTag::Z);
    DerivativeResult res;
    res.degree = k;
    res.value.tag = RepTag::Z;
    res.scalar = derivative_scalar(b, d.size(), k, c);
    Multisegment term = s == d.length() ? Multisegment()
                                        : Multisegment({Segment(d.rho, d.a, d.b - s)});
    res.value.terms[term] = res.scalar;
    return res;
}

DerivativeResult derivative_L(const Segment& d, Int k, const CoverSpec& c) {
    require_tame(c);
    if (k < 0 || k > d.size()) throw DomainError("derivative degree out of range [0, size]");
    if (k % d.rho.r0 != 0) return zero_result(k, RepTag::L);
    Int s = k / d.rho.r0;
    Int b = binomial(n_rho(d.rho, c) + s - 1, s);
    DerivativeResult res;
    res.degree = k;
    res.value.tag = RepTag::L;
    res.scalar = derivative_scalar(b, d.size(), k, c);
    Multisegment term = s == d.length() ? Multisegment()
                                        : Multisegment({Segment(d.rho, d.a + s, d.b)});
    res.value.terms[term] = res.scalar;
    return res;
}

Int c_m(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    if (!homogeneity_hypothesis(m, c))
        throw DomainError("homogeneity hypothesis fails for the stored segment order");
    Int prod = 1;
    for (const Segment& d : m.segments()) {
        Int nr = n_rho(d.rho, c);
        prod = checked_mul(prod, binomial(nr, std::min(d.length(), nr)));
    }
    if (c.family != Family::KP) return prod;
    Int r = m.total_size();
    Int k = k_m(m, c);
    Int num = checked_mul(prod, d_r(c, r - k));
    Int den = d_r(c, r);
    if (num % den != 0)
        throw IntegrityError("top-derivative multiplicity not integral for " + m.str());
    return num / den;
}

HighestDerivative highest_derivative(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    if (m.empty()) throw DomainError("highest_derivative requires a nonempty multisegment");
    return HighestDerivative{k_m(m, c), multisegment_minus(m, c), c_m(m, c)};
}

Partition lambda_of(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    std::vector<Int> parts;
    Multisegment cur = m;
    while (!cur.empty()) {
        Int k = k_m(cur, c);
        if (k <= 0) throw IntegrityError("iterated derivative chain stalled");
        if (!parts.empty() && parts.back() < k)
            throw IntegrityError("derivative degrees not weakly decreasing");
        parts.push_back(k);
        cur = multisegment_minus(cur, c);
    }
    Partition lam{std::move(parts)};
    if (lam.size() != m.total_size())
        throw IntegrityError("derivative degrees do not sum to the total size");
    return lam;
}

bool is_generic(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    for (const Segment& d : m.segments())
        if (d.length() > n_rho(d.rho, c)) return false;
    return true;
}

bool semi_whittaker_nonzero(const Segment& d, const Composition& lam, const CoverSpec& c) {
    require_tame(c);
    if (lam.size() != d.size())
        throw DomainError("composition size must equal the segment size");
    Int cap = checked_mul(n_rho(d.rho, c), d.rho.r0);
    for (Int part : lam.entries())
        if (part % d.rho.r0 != 0 || part > cap) return false;
    return true;
}

Int wh_dim_product(const std::vector<DimBlock>& blocks, const CoverSpec& c) {
    require_tame(c);
    Int prod = 1, r = 0;
    for (const DimBlock& blk : blocks) {
        if (blk.dim < 0) throw DomainError("block dimension must be non-negative");
        if (blk.size < 1) throw DomainError("block size must be positive");
        r = checked_add(r, blk.size);
        prod = checked_mul(prod, blk.dim);
        if (c.family == Family::KP) prod = checked_mul(prod, d_r(c, blk.size));
    }
    return kp_quotient(prod, r, c, "wh_dim_product");
}

Int top_derivative_degree_of_product(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    Int k = 0;
    for (const Segment& d : m.segments()) {
        Int nr = n_rho(d.rho, c);
        k = checked_add(k, checked_mul(d.rho.r0, std::min(d.length(), nr)));
    }
    if (k != k_m(m, c)) throw IntegrityError("product top degree disagrees with k_m");
    return k;
}

std::vector<Int> support_degrees(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    std::set<Int> reach{0};
    for (const Segment& d : m.segments()) {
        Int top = std::min(d.length(), n_rho(d.rho, c));
        std::set<Int> next;
        for (Int base : reach)
            for (Int s = 0; s <= top; ++s)
                next.insert(base + checked_mul(d.rho.r0, s));
        reach.swap(next);
    }
    return {reach.begin(), reach.end()};
}

} // namespace covseg
