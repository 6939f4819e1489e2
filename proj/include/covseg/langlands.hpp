#pragma once

#include "covseg/derivative.hpp"

namespace covseg {

/* Dual-side bookkeeping for KP covers: the nilpotent orbit of the parameter
   attached to L(m), its covering Barbasch-Vogan dual, and the comparison
   with the iterated-derivative partition of Z(m). */

struct ParameterOrbit {
    Partition partition;
    struct Provenance {
        Int part_value;    // l_seg * l_rho
        Int multiplicity;  // r0 / l_rho
        Int l_seg;
        Int l_rho;
    };
    std::vector<Provenance> provenance;  // one record per segment, normal order
};

/* Orbit of the parameter of L(m): part l_i * l(rho_i) with multiplicity
   r_i^0 / l(rho_i) for each segment. KP and tame only. */
ParameterOrbit parameter_orbit(const Multisegment& m, const CoverSpec& c);

/* Wavefront partition of Z(m): equals lambda_of(m). Tame only. */
Partition wavefront(const Multisegment& m, const CoverSpec& c);

struct BvConsistency {
    Partition lambda;  // wavefront side
    Partition bv;      // bv_dual(orbit, n_alpha)
    bool equal;
    Partition orbit;
};

/* Compares lambda_of(m) with the covering dual of the parameter orbit, and
   checks the leading-part identity sum_i mult_i * min(n, part_i) = k_m. */
BvConsistency bv_consistency(const Multisegment& m, const CoverSpec& c);

/* Width of the orbit partition. For orbits whose provenance has every
   l_rho = 1, this is checked by a lifting sweep to be the least level n'
   at which the lifted multisegment is generic. */
Int min_generic_level(const ParameterOrbit& orbit);

} // namespace covseg
