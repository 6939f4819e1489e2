#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "covseg/langlands.hpp"

namespace covseg {

/* Exhaustive verification sweeps. A sweep walks every multisegment of
   bounded total size over canonical cuspidal data for a list of covers and
   runs the requested checks. The swept identities are invariant under
   translating segments along their lines, so segments are anchored at
   [0, len-1]; anchored enumeration is what makes the universe finite. */

/* One cuspidal line per admissible (r0, l) class: l | n, and l | r0 for KP.
   Ordered by (r0, l); ids are "p<r0>l<l>". */
std::vector<CuspidalDatum> canonical_cuspidals(const CoverSpec& c, Int r0_max);

/* Every nonempty multisegment with segments [0, len-1] on the given lines
   and total size <= max_size, in a fixed deterministic order. */
void for_each_multisegment(const std::vector<CuspidalDatum>& lines, Int max_size,
                           const std::function<void(const Multisegment&)>& fn);

/* Every partition of exactly n, largest part first, in a fixed order. */
void for_each_partition_of(Int n, const std::function<void(const Partition&)>& fn);

/* Check names: lambda, generic, bv, integrality, chain, oracle. */
const std::set<std::string>& known_checks();

struct SweepOptions {
    std::vector<CoverSpec> covers;
    Int max_size = 6;
    Int r0_max = 3;
    std::set<std::string> checks;  // empty = all applicable
    int threads = 1;
    size_t failure_cap = 100;      // messages kept; the count is never capped
};

struct SweepSummary {
    Int covers = 0;
    Int instances = 0;                  // (cover, multisegment) pairs visited
    std::map<std::string, Int> checked; // executions per check
    Int failure_count = 0;
    std::vector<std::string> failures;  // first failure_cap messages
};

SweepSummary run_sweep(const SweepOptions& opts);

/* Per-instance report row used by the csv output. */
struct SweepRow {
    std::string multisegment;
    CoverSpec cover;
    std::string lambda;
    std::string bv;      // empty when not applicable
    std::string equal;   // "true"/"false", empty when not applicable
    bool generic = false;
    std::string whdimZ;  // number or "unknown"
};

/* Single-threaded streaming variant feeding one row per instance, in the
   same deterministic order as run_sweep. */
SweepSummary run_sweep_rows(const SweepOptions& opts,
                            const std::function<void(const SweepRow&)>& emit);

/* Cover list syntax: "KP:n<=4,a in -1..1;S:n<=6". Omitted bounds default
   to n<=6 and a in -2..2. */
std::vector<CoverSpec> parse_cover_ranges(const std::string& text);
std::string default_cover_ranges();

/* Whittaker dimension of Z(m) in the cases the theory determines: the
   segment formula when m is a single segment, 0 when not generic, 1 when
   every length equals n(rho). Returns -1 for "unknown". */
Int wh_dim_known_cases(const Multisegment& m, const CoverSpec& c);

} // namespace covseg
