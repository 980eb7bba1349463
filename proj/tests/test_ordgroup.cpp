#include <doctest.h>

#include <random>

#include "k0forge/ordgroup.hpp"

using namespace k0forge;

namespace {

// Stage data of the (k=1/2, n=2^inf*3^inf) run: units 2, 6, 12 and
// l = 1, 3, 6.
LimitGroup half_group(int stages) {
    LimitGroup g(parse_rational("1/2"), Supernatural::parse("2^inf*3^inf"));
    const long ls[] = {1, 3, 6};
    const long units[] = {2, 6, 12};
    const long mults[] = {2, 3, 2};  // L_1 = b, L_2 = 3, L_3 = 2
    for (int j = 0; j < stages; ++j)
        g.add_stage(CyclicOrder{Int(ls[j]), Int(units[j])}, Int(mults[j]));
    return g;
}

}  // namespace

TEST_CASE("weak unperforation of cyclic orders") {
    CHECK(is_weakly_unperforated(CyclicOrder{0, 1}));
    CHECK_FALSE(is_weakly_unperforated(CyclicOrder{1, 2}));
    // l = 3: x = 1 with n = 4 is a witness; 4*1 is in the cone, 1 is not
    CyclicOrder g{3, 4};
    CHECK_FALSE(is_weakly_unperforated(g));
    CHECK(Int(4) * 1 >= g.l + 1);
    CHECK(Int(1) < g.l + 1);
}

TEST_CASE("stage embedding compatibility is enforced") {
    LimitGroup g(parse_rational("1/2"), Supernatural::parse("2^inf*3^inf"));
    g.add_stage(CyclicOrder{1, 2}, 2);
    CHECK_THROWS_AS(g.add_stage(CyclicOrder{3, 7}, 3), InvalidParams);
    CHECK_THROWS_AS(g.add_stage(CyclicOrder{9, 6}, 3), InvalidParams);  // unit < l+1
    g.add_stage(CyclicOrder{3, 6}, 3);
    CHECK(g.stage_count() == 2);
}

TEST_CASE("limit membership") {
    LimitGroup g = half_group(2);
    CHECK(g.limit_membership(parse_rational("5/12")));
    CHECK_FALSE(g.limit_membership(parse_rational("1/7")));
    CHECK(g.limit_membership(parse_rational("7")));
}

TEST_CASE("cone membership") {
    LimitGroup g = half_group(2);
    CHECK_FALSE(g.cone_membership(parse_rational("1/2")));  // k is the infimum
    CHECK(g.cone_membership(parse_rational("0")));
    CHECK(g.cone_membership(parse_rational("1")));  // 2k
    CHECK(g.cone_membership(parse_rational("2/3")));
    CHECK_FALSE(g.cone_membership(parse_rational("-1")));
    // representable only beyond the computed horizon
    CHECK_THROWS_AS(g.cone_membership(parse_rational("7/8")), NotRepresentable);
}

TEST_CASE("cone closed under addition on sampled pairs") {
    LimitGroup g = half_group(3);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> t(-48, 48);
    for (int i = 0; i < 2000; ++i) {
        Rat x = make_rat(Int(t(rng)), 12);
        Rat y = make_rat(Int(t(rng)), 12);
        if (g.cone_membership(x) && g.cone_membership(y)) {
            CHECK(g.cone_membership(Rat(x + y)));
            CHECK(g.limit_membership(x));
        }
    }
}

TEST_CASE("perforation witness") {
    LimitGroup g = half_group(2);
    PerforationWitness w = g.perforation_witness();
    CHECK(w.x == parse_rational("1/2"));
    CHECK(w.n == 2);
    CHECK_FALSE(g.cone_membership(w.x));
    Rat nx = w.x * w.n;
    CHECK(g.cone_membership(nx));
    CHECK(nx != 0);
    CHECK(nx > g.scale());

    LimitGroup h(parse_rational("2/3"), Supernatural::parse("3^inf"));
    h.add_stage(CyclicOrder{2, 3}, 3);
    PerforationWitness w2 = h.perforation_witness();
    CHECK(w2.x == parse_rational("2/3"));
    CHECK(w2.n == 2);
    CHECK_FALSE(h.cone_membership(w2.x));
    CHECK(h.cone_membership(Rat(w2.x * w2.n)));
}

TEST_CASE("cone fractions decrease to k") {
    LimitGroup g = half_group(3);
    CHECK(g.cone_fraction(1) == 1);
    CHECK(g.cone_fraction(2) == parse_rational("2/3"));
    CHECK(g.cone_fraction(3) == parse_rational("7/12"));
    for (std::size_t j = 1; j <= 3; ++j) {
        Rat gap = g.cone_fraction(j) - g.scale();
        CHECK(gap == make_rat(1, g.stage(j).unit));
        if (j > 1) CHECK(g.cone_fraction(j) < g.cone_fraction(j - 1));
    }
    CHECK_THROWS_AS(g.cone_fraction(4), InvalidParams);
}

TEST_CASE("grid equivalence at the computed horizon") {
    LimitGroup g = half_group(3);
    const Supernatural n = g.supernatural();
    Int unit = g.stage(3).unit;
    for (long t = -4 * 12; t <= 4 * 12; ++t) {
        Rat x = make_rat(Int(t), unit);
        bool expected = (x == 0) || (n.contains(x) && x > g.scale());
        CHECK(g.cone_membership(x) == expected);
    }
}
