#pragma once

#include <string>
#include <vector>

#include "covseg/arith.hpp"

namespace covseg {

/* Partitions are canonical: weakly decreasing positive parts, zeros never
   stored. The empty partition is the partition of 0. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int size() const;                       // sum of parts
    Int height() const { return static_cast<Int>(parts_.size()); }
    Int width() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;                // "(2,1)", "()" when empty

private:
    std::vector<Int> parts_;
};

/* Compositions keep order and allow equal entries; every entry positive. */
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Int> entries);

    const std::vector<Int>& entries() const { return entries_; }
    Int size() const;
    std::string str() const;

private:
    std::vector<Int> entries_;
};

Partition transpose(const Partition& p);

/* Componentwise sum after zero-padding to equal length. */
Partition sum(const Partition& p, const Partition& q);

/* Dominance order: p <= q iff all prefix sums of p are <= those of q.
   Defined only between partitions of equal size. */
bool dominance_leq(const Partition& p, const Partition& q);

/* Column block: s(p; n_alpha) = (n_alpha^a, b) where p = a*n_alpha + b,
   0 <= b < n_alpha. Requires p >= 1, n_alpha >= 1. */
Partition s_col(Int p, Int n_alpha);

/* Covering Barbasch-Vogan dual: sum of s_col over the parts. */
Partition bv_dual(const Partition& p, Int n_alpha);

} // namespace covseg
