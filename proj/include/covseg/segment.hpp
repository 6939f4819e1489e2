#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covseg/cover.hpp"

namespace covseg {

/* Cuspidal data are symbolic: a line id naming the unramified twist orbit,
   the rank r0 of the underlying linear group, and the torsion number l of
   the cuspidal. Twists of distinct ids never interact, and the twist lattice
   on each line is a free Z-line (no periodicity is imposed). */

struct CuspidalDatum {
    std::string id;
    Int r0 = 1;
    Int l = 1;

    bool operator==(const CuspidalDatum& o) const { return id == o.id && r0 == o.r0 && l == o.l; }
};

/* l must divide n; for KP covers l must also divide r0. */
void validate_cuspidal(const CuspidalDatum& d, const CoverSpec& c);

/* n(rho) = n / l, the length at which twisted segments saturate. */
Int n_rho(const CuspidalDatum& d, const CoverSpec& c);

/* Segment [a, b] on a cuspidal line, b >= a: the twists rho*nu^a ... rho*nu^b. */
struct Segment {
    CuspidalDatum rho;
    Int a = 0;
    Int b = 0;

    Segment() = default;
    Segment(CuspidalDatum rho_, Int a_, Int b_);

    Int length() const { return b - a + 1; }
    Int size() const { return checked_mul(rho.r0, length()); }  // rank of the induced block

    bool operator==(const Segment& o) const { return rho == o.rho && a == o.a && b == o.b; }
    bool operator<(const Segment& o) const;
    std::string str() const;  // "[0,2]_rho1"
};

bool same_line(const Segment& x, const Segment& y);

/* Linked: the union is a segment strictly containing both. */
bool linked(const Segment& x, const Segment& y);

/* x precedes y: linked with a_x < a_y, b_x < b_y, b_x >= a_y - 1. */
bool precedes(const Segment& x, const Segment& y);

/* Normal order: group by line id (ascending), within a line sort by right
   endpoint descending, then left endpoint descending, stably. No segment
   precedes a later one in this order. */
std::vector<Segment> normal_order(std::vector<Segment> segs);

/* A finite multiset of segments, stored in normal order. */
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(normal_order(std::move(segs))) {}

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    Int total_size() const;

    bool operator==(const Multisegment& o) const { return segs_ == o.segs_; }
    bool operator<(const Multisegment& o) const { return segs_ < o.segs_; }

    std::string str() const;  // "[0,2]_rho1 + [0,0]_rho1"; "eps" when empty

private:
    std::vector<Segment> segs_;
};

/* The ordering hypothesis under which the top-derivative multiplicity
   factors as a product: the stored order has no earlier segment preceding a
   later one, and for each i the window of n(rho_i) shifted just past the
   right endpoint of segment i misses every later segment on its line. Always
   true of the normal order produced above. */
bool homogeneity_hypothesis(const Multisegment& m, const CoverSpec& c);

/* Contraction of one segment: drop min(length, n(rho)) twists from the right
   end; empty when nothing is left. */
std::optional<Segment> segment_minus(const Segment& d, const CoverSpec& c);

/* Contraction applied to every segment, empties dropped. */
Multisegment multisegment_minus(const Multisegment& m, const CoverSpec& c);

/* Top derivative degree: sum over segments of r0 * min(length, n(rho)). */
Int k_m(const Multisegment& m, const CoverSpec& c);

} // namespace covseg
