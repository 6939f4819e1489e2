#pragma once

#include <map>
#include <utility>
#include <vector>

#include "covseg/partition.hpp"
#include "covseg/segment.hpp"

namespace covseg {

/* The Bernstein-Zelevinsky derivative bookkeeping for Z(Delta) and L(Delta)
   on a cover, and the iterated-highest-derivative invariants of general
   multisegments. Everything here sits under the tame assumption; covers with
   tame = false are refused. */

enum class RepTag { Z, L };

/* Non-negative integer combination of multisegment classes, all of one tag.
   The zero sum has no terms. */
struct FormalSum {
    RepTag tag = RepTag::Z;
    std::map<Multisegment, Int> terms;

    bool is_zero() const { return terms.empty(); }
};

struct DerivativeResult {
    Int degree = 0;
    FormalSum value;
    Int scalar = 0;  // total multiplicity; the value is always isotypic here
};

/* dim Wh of Z(Delta): C(n(rho), length), divided by d_{size} for KP.
   Zero exactly when length > n(rho). */
Int wh_dim_Z(const Segment& d, const CoverSpec& c);

/* dim Wh of L(Delta): C(n(rho) + length - 1, length), divided by d_{size}
   for KP. Never zero. */
Int wh_dim_L(const Segment& d, const CoverSpec& c);

/* k-th derivative of Z(Delta): zero unless k = r0*s with s <= n(rho), and
   then C(n(rho), s) copies of Z([a, b-s]) (times d_{size-k}/d_{size} for
   KP). Requires 0 <= k <= size. */
DerivativeResult derivative_Z(const Segment& d, Int k, const CoverSpec& c);

/* k-th derivative of L(Delta): zero unless k = r0*s, and then
   C(n(rho)+s-1, s) copies of L([a+s, b]) (times d_{size-k}/d_{size} for KP). */
DerivativeResult derivative_L(const Segment& d, Int k, const CoverSpec& c);

/* Multiplicity of Z(m^-) in the highest derivative: the product of
   C(n(rho_i), min(length_i, n(rho_i))), times d_{r-k_m}/d_r for KP. */
Int c_m(const Multisegment& m, const CoverSpec& c);

struct HighestDerivative {
    Int degree;            // k_m
    Multisegment socle;    // m^-
    Int multiplicity;      // c_m
};

HighestDerivative highest_derivative(const Multisegment& m, const CoverSpec& c);

/* Iterated highest-derivative degrees (k_m, k_{m^-}, ...) down to the empty
   multisegment; a partition of total_size(m). */
Partition lambda_of(const Multisegment& m, const CoverSpec& c);

/* True iff every segment has length <= n(rho); equivalently lambda_of(m)
   has at most one part. */
bool is_generic(const Multisegment& m, const CoverSpec& c);

/* Whether the lambda-semi-Whittaker space of Z(Delta) is nonzero: every
   entry of lam divisible by r0 and at most n(rho)*r0. Requires
   size(lam) = size(Delta). */
bool semi_whittaker_nonzero(const Segment& d, const Composition& lam, const CoverSpec& c);

/* Whittaker dimension of a product of blocks given each factor's dimension
   and rank: the plain product for S, (prod dim_i * d_{size_i}) / d_r for KP. */
struct DimBlock {
    Int dim;
    Int size;
};
Int wh_dim_product(const std::vector<DimBlock>& blocks, const CoverSpec& c);

/* Top derivative degree of the product of the Z(Delta_i), by summing each
   factor's top degree; checked against k_m. */
Int top_derivative_degree_of_product(const Multisegment& m, const CoverSpec& c);

/* Degrees at which a derivative of the product of the Z(Delta_i) can be
   nonzero: the sumset of the per-segment supports {r0*s : s <= min(length,
   n(rho))}. Existence-level information only. */
std::vector<Int> support_degrees(const Multisegment& m, const CoverSpec& c);

} // namespace covseg
