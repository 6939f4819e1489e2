#include "covseg/langlands.hpp"

#include <algorithm>
#include <numeric>

namespace covseg {

static void require_tame(const CoverSpec& c) {
    if (!c.tame) throw DomainError("theorem hypotheses not met: cover must be tame (gcd(p, n) = 1)");
}

static void require_kp(const CoverSpec& c) {
    if (c.family != Family::KP)
        throw DomainError("parameter orbits are available only for KP covers");
}

ParameterOrbit parameter_orbit(const Multisegment& m, const CoverSpec& c) {
    require_kp(c);
    require_tame(c);
    ParameterOrbit orbit;
    std::vector<Int> parts;
    for (const Segment& d : m.segments()) {
        validate_cuspidal(d.rho, c);
        Int part = checked_mul(d.length(), d.rho.l);
        Int mult = d.rho.r0 / d.rho.l;
        orbit.provenance.push_back({part, mult, d.length(), d.rho.l});
        for (Int i = 0; i < mult; ++i) parts.push_back(part);
    }
    orbit.partition = Partition(std::move(parts));
    return orbit;
}

Partition wavefront(const Multisegment& m, const CoverSpec& c) {
    require_tame(c);
    return lambda_of(m, c);
}

BvConsistency bv_consistency(const Multisegment& m, const CoverSpec& c) {
    require_kp(c);
    require_tame(c);
    ParameterOrbit orbit = parameter_orbit(m, c);
    BvConsistency out;
    out.lambda = wavefront(m, c);
    out.orbit = orbit.partition;
    out.bv = bv_dual(orbit.partition, n_alpha(c));
    out.equal = out.lambda == out.bv;
    Int lead = 0;
    for (const auto& rec : orbit.provenance)
        lead = checked_add(lead, checked_mul(rec.multiplicity, std::min(c.n, rec.part_value)));
    if (lead != k_m(m, c))
        throw IntegrityError("leading part of the dual disagrees with k_m for " + m.str());
    return out;
}

Int min_generic_level(const ParameterOrbit& orbit) {
    Int w = orbit.partition.width();
    bool plain = std::all_of(orbit.provenance.begin(), orbit.provenance.end(),
                             [](const auto& rec) { return rec.l_rho == 1; });
    if (plain && !orbit.provenance.empty()) {
        // lift to level n' and ask the derivative engine for genericity
        Int found = 0;
        for (Int level = 1; found == 0; ++level) {
            CoverSpec lifted = make_s(level);
            std::vector<Segment> segs;
            for (const auto& rec : orbit.provenance)
                segs.emplace_back(CuspidalDatum{"p", rec.multiplicity, rec.l_rho}, 0, rec.l_seg - 1);
            if (is_generic(Multisegment(std::move(segs)), lifted)) found = level;
        }
        if (found != w)
            throw IntegrityError("lifting sweep disagrees with the orbit width");
    }
    return w == 0 ? 1 : w;
}

} // namespace covseg
