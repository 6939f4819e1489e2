#include <doctest.h>

#include <covseg/error.hpp>
#include <covseg/segment.hpp>

#include <functional>
#include <vector>

using namespace covseg;

namespace {

const CuspidalDatum kRho1{"rho1", 1, 1};
const CuspidalDatum kRho2{"rho2", 1, 1};

Segment seg(Int a, Int b) { return Segment(kRho1, a, b); }

// All segments with endpoints in [lo, hi] on the given lines.
std::vector<Segment> window_segments(const std::vector<CuspidalDatum>& lines, Int lo, Int hi) {
    std::vector<Segment> out;
    for (const auto& d : lines)
        for (Int a = lo; a <= hi; ++a)
            for (Int b = a; b <= hi; ++b) out.emplace_back(d, a, b);
    return out;
}

// Every multiset of segments from `universe` with total size <= max_size.
void for_each_windowed_multisegment(const std::vector<Segment>& universe, Int max_size,
                                    const std::function<void(const Multisegment&)>& fn) {
    std::vector<Segment> cur;
    std::function<void(size_t, Int)> rec = [&](size_t i, Int left) {
        if (!cur.empty()) fn(Multisegment(cur));
        for (size_t j = i; j < universe.size(); ++j) {
            if (universe[j].size() > left) continue;
            cur.push_back(universe[j]);
            rec(j, left - universe[j].size());
            cur.pop_back();
        }
    };
    rec(0, max_size);
}

}  // namespace

TEST_CASE("cuspidal validation") {
    CHECK_NOTHROW(validate_cuspidal({"x", 2, 2}, make_kp(4, 0)));
    CHECK_NOTHROW(validate_cuspidal({"x", 1, 3}, make_s(3)));   // S: no constraint tying l to r0
    CHECK_NOTHROW(validate_cuspidal({"x", 5, 1}, make_kp(3, 1)));
    CHECK_THROWS_AS(validate_cuspidal({"x", 1, 3}, make_s(4)), DomainError);    // l must divide n
    CHECK_THROWS_AS(validate_cuspidal({"x", 1, 2}, make_kp(4, 0)), DomainError); // KP: l | r0
    CHECK_THROWS_AS(validate_cuspidal({"x", 0, 1}, make_kp(2, 0)), DomainError);
    CHECK(n_rho({"x", 2, 2}, make_kp(4, 0)) == 2);
    CHECK(n_rho({"x", 1, 1}, make_s(6)) == 6);
    CHECK(n_rho({"x", 1, 3}, make_s(6)) == 2);
}

TEST_CASE("segment basics") {
    Segment d = seg(0, 2);
    CHECK(d.length() == 3);
    CHECK(d.size() == 3);
    CHECK(Segment(CuspidalDatum{"x", 2, 1}, -1, 1).size() == 6);
    CHECK(d.str() == "[0,2]_rho1");
    CHECK(Segment(kRho1, -2, -2).str() == "[-2,-2]_rho1");
    CHECK_THROWS_WITH_AS(Segment(kRho1, 1, 0), doctest::Contains("empty segment"), DomainError);
}

TEST_CASE("linked on pinned pairs") {
    CHECK(linked(seg(0, 1), seg(1, 2)));    // overlap, union [0,2]
    CHECK(linked(seg(1, 2), seg(0, 1)));    // symmetric
    CHECK(linked(seg(0, 1), seg(2, 3)));    // adjacent, union [0,3]
    CHECK_FALSE(linked(seg(0, 2), seg(1, 2)));  // nested
    CHECK_FALSE(linked(seg(0, 2), seg(0, 2)));  // equal
    CHECK_FALSE(linked(seg(0, 0), seg(2, 3)));  // gap
    CHECK_FALSE(linked(seg(0, 1), Segment(kRho2, 1, 2)));  // different lines never link
    CHECK_FALSE(linked(seg(0, 1), Segment(CuspidalDatum{"rho1", 2, 1}, 1, 2)));  // same id, different datum
}

TEST_CASE("precedes on pinned pairs") {
    CHECK(precedes(seg(0, 1), seg(1, 2)));
    CHECK_FALSE(precedes(seg(1, 2), seg(0, 1)));
    CHECK(precedes(seg(0, 0), seg(1, 1)));  // adjacency counts
    CHECK_FALSE(precedes(seg(0, 0), seg(2, 2)));
    CHECK_FALSE(precedes(seg(0, 2), seg(1, 2)));  // nested, not linked
}

TEST_CASE("precedes is irreflexive, asymmetric, implied by linked ordering") {
    auto universe = window_segments({kRho1}, -6, 6);
    for (const auto& x : universe) {
        CHECK_FALSE(precedes(x, x));
        for (const auto& y : universe) {
            if (precedes(x, y)) {
                CHECK(linked(x, y));
                CHECK_FALSE(precedes(y, x));
                CHECK(x.a < y.a);
                CHECK(x.b < y.b);
            }
            // linked pairs are ordered one way or the other
            if (linked(x, y)) CHECK((precedes(x, y) || precedes(y, x)));
        }
    }
}

TEST_CASE("normal order on pinned inputs") {
    auto no = normal_order({seg(0, 0), seg(0, 1)});
    CHECK(no == std::vector<Segment>{seg(0, 1), seg(0, 0)});

    // same right endpoint: larger left endpoint first
    no = normal_order({seg(0, 2), seg(1, 2)});
    CHECK(no == std::vector<Segment>{seg(1, 2), seg(0, 2)});

    // lines grouped by id ascending
    Segment other(kRho2, 5, 5);
    no = normal_order({other, seg(0, 0)});
    CHECK(no == std::vector<Segment>{seg(0, 0), other});

    // duplicates kept
    no = normal_order({seg(0, 0), seg(0, 0)});
    CHECK(no.size() == 2);
}

TEST_CASE("multisegment storage and rendering") {
    Multisegment m({seg(0, 0), seg(0, 2)});
    CHECK(m.segments() == std::vector<Segment>{seg(0, 2), seg(0, 0)});
    CHECK(m.total_size() == 4);
    CHECK(m.str() == "[0,2]_rho1 + [0,0]_rho1");
    CHECK(Multisegment().str() == "eps");
    CHECK(Multisegment().total_size() == 0);
    CHECK(Multisegment({seg(0, 0), seg(0, 2)}) == Multisegment({seg(0, 2), seg(0, 0)}));
}

TEST_CASE("normal order admits no preceding pair and satisfies the window condition") {
    // exhaustive over one line, endpoints in [0,5], total size <= 8
    auto universe = window_segments({kRho1}, 0, 5);
    Int count = 0;
    for_each_windowed_multisegment(universe, 8, [&](const Multisegment& m) {
        ++count;
        const auto& v = m.segments();
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(precedes(v[i], v[j]));
        for (Int n = 1; n <= 4; ++n) CHECK(homogeneity_hypothesis(m, make_s(n)));
    });
    CHECK(count > 1000);

    // two lines with distinct ranks, smaller window
    auto universe2 = window_segments({kRho1, CuspidalDatum{"rho2", 2, 1}}, 0, 2);
    for_each_windowed_multisegment(universe2, 8, [&](const Multisegment& m) {
        const auto& v = m.segments();
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(precedes(v[i], v[j]));
        CHECK(homogeneity_hypothesis(m, make_kp(2, 0)));
    });
}

TEST_CASE("homogeneity hypothesis on the pinned configuration") {
    // n(rho) = 2; the window past [0,0] is {1,2} and misses nothing later
    Multisegment m({seg(0, 1), seg(0, 0)});
    CHECK(homogeneity_hypothesis(m, make_s(2)));
    CHECK(homogeneity_hypothesis(Multisegment(), make_s(2)));
}

TEST_CASE("segment contraction on pinned values") {
    CoverSpec s2 = make_s(2);  // n(rho) = 2 on the trivial-torsion line
    auto r = segment_minus(seg(0, 2), s2);
    REQUIRE(r.has_value());
    CHECK(*r == seg(0, 0));
    CHECK_FALSE(segment_minus(seg(0, 1), s2).has_value());
    CHECK_FALSE(segment_minus(seg(0, 0), s2).has_value());

    CoverSpec s1 = make_s(1);  // n(rho) = 1: drop exactly one twist
    auto r2 = segment_minus(seg(0, 2), s1);
    REQUIRE(r2.has_value());
    CHECK(*r2 == seg(0, 1));
}

TEST_CASE("multisegment contraction and top degree on pinned values") {
    CoverSpec c = make_kp(2, 0);
    Multisegment m1({seg(0, 2)});
    CHECK(k_m(m1, c) == 2);
    CHECK(multisegment_minus(m1, c) == Multisegment({seg(0, 0)}));

    Multisegment m2({seg(0, 1), seg(0, 0)});
    CHECK(k_m(m2, c) == 3);
    CHECK(multisegment_minus(m2, c) == Multisegment());

    CHECK(k_m(Multisegment(), c) == 0);

    // rank enters the degree linearly
    Multisegment m3({Segment(CuspidalDatum{"x", 2, 2}, 0, 2)});
    CHECK(k_m(m3, make_kp(4, 0)) == 4);  // n(rho) = 2, r0 = 2
}

TEST_CASE("contraction bookkeeping: size drops by exactly k_m") {
    auto universe = window_segments({kRho1, CuspidalDatum{"rho2", 2, 2}}, -2, 2);
    for (const CoverSpec& c : {make_kp(2, 0), make_kp(4, 1), make_s(4), make_s(6)}) {
        for_each_windowed_multisegment(universe, 7, [&](const Multisegment& m) {
            Multisegment contracted = multisegment_minus(m, c);
            CHECK(contracted.total_size() + k_m(m, c) == m.total_size());
            CHECK(k_m(m, c) >= 1);  // every nonempty multisegment loses something
        });
    }
}
