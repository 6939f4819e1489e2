#include "covseg/segment.hpp"

#include <algorithm>
#include <tuple>

namespace covseg {

void validate_cuspidal(const CuspidalDatum& d, const CoverSpec& c) {
    if (d.id.empty()) throw DomainError("cuspidal datum needs a nonempty id");
    if (d.r0 < 1) throw DomainError("cuspidal datum '" + d.id + "': r0 must be >= 1");
    if (d.l < 1 || c.n % d.l != 0)
        throw DomainError("cuspidal datum '" + d.id + "': l must divide n");
    if (c.family == Family::KP && d.r0 % d.l != 0)
        throw DomainError("cuspidal datum '" + d.id + "': KP covers require l to divide r0");
}

Int n_rho(const CuspidalDatum& d, const CoverSpec& c) {
    if (d.l < 1 || c.n % d.l != 0)
        throw DomainError("cuspidal datum '" + d.id + "': l must divide n");
    return c.n / d.l;
}

Segment::Segment(CuspidalDatum rho_, Int a_, Int b_) : rho(std::move(rho_)), a(a_), b(b_) {
    if (b < a) throw DomainError("empty segment [" + std::to_string(a_) + "," + std::to_string(b_) + "]");
}

bool Segment::operator<(const Segment& o) const {
    return std::tie(rho.id, rho.r0, rho.l, a, b) < std::tie(o.rho.id, o.rho.r0, o.rho.l, o.a, o.b);
}

std::string Segment::str() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]_" + rho.id;
}

bool same_line(const Segment& x, const Segment& y) { return x.rho == y.rho; }

bool linked(const Segment& x, const Segment& y) {
    if (!same_line(x, y)) return false;
    if (std::max(x.a, y.a) > std::min(x.b, y.b) + 1) return false;  // union not a segment
    bool x_in_y = y.a <= x.a && x.b <= y.b;
    bool y_in_x = x.a <= y.a && y.b <= x.b;
    return !x_in_y && !y_in_x;
}

bool precedes(const Segment& x, const Segment& y) {
    return linked(x, y) && x.a < y.a && x.b < y.b && x.b >= y.a - 1;
}

std::vector<Segment> normal_order(std::vector<Segment> segs) {
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
        if (x.rho.id != y.rho.id) return x.rho.id < y.rho.id;
        if (x.b != y.b) return x.b > y.b;
        return x.a > y.a;
    });
    return segs;
}

Int Multisegment::total_size() const {
    Int s = 0;
    for (const Segment& d : segs_) s = checked_add(s, d.size());
    return s;
}

std::string Multisegment::str() const {
    if (segs_.empty()) return "eps";
    std::string s;
    for (size_t i = 0; i < segs_.size(); ++i) {
        if (i) s += " + ";
        s += segs_[i].str();
    }
    return s;
}

bool homogeneity_hypothesis(const Multisegment& m, const CoverSpec& c) {
    const auto& segs = m.segments();
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j)
            if (precedes(segs[i], segs[j])) return false;
        Int nr = n_rho(segs[i].rho, c);
        Int mn = std::min(segs[i].length(), nr);
        // window of the mn twists shifted by n(rho) past the right endpoint
        Int lo = segs[i].b + nr - mn + 1;
        Int hi = segs[i].b + nr;
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (!same_line(segs[i], segs[j])) continue;
            if (std::max(segs[j].a, lo) <= std::min(segs[j].b, hi)) return false;
        }
    }
    return true;
}

std::optional<Segment> segment_minus(const Segment& d, const CoverSpec& c) {
    Int drop = std::min(d.length(), n_rho(d.rho, c));
    if (d.length() - drop <= 0) return std::nullopt;
    return Segment(d.rho, d.a, d.b - drop);
}

Multisegment multisegment_minus(const Multisegment& m, const CoverSpec& c) {
    std::vector<Segment> out;
    for (const Segment& d : m.segments())
        if (auto dm = segment_minus(d, c)) out.push_back(*dm);
    return Multisegment(std::move(out));
}

Int k_m(const Multisegment& m, const CoverSpec& c) {
    Int k = 0;
    for (const Segment& d : m.segments())
        k = checked_add(k, checked_mul(d.rho.r0, std::min(d.length(), n_rho(d.rho, c))));
    return k;
}

} // namespace covseg
