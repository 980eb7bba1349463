#include <doctest.h>

#include "k0forge/blocks.hpp"
#include "k0forge/engine.hpp"

using namespace k0forge;

namespace {

ConstructionParams half_params(int stages) {
    ConstructionParams p;
    p.k = parse_rational("1/2");
    p.n = Supernatural::parse("2^inf*3^inf");
    p.stages = stages;
    return p;
}

// Stage 1 and 2 of the (k=1/2, n=2^inf*3^inf, minimal) run.
std::pair<Stage, Stage> first_two_stages() {
    Stage s1 = init_stage(half_params(2));
    Stage s2 = advance(s1, 3, 51);
    return {s1, s2};
}

}  // namespace

TEST_CASE("phi_class in the ([p_j], e) basis") {
    auto [s1, s2] = first_two_stages();
    // t = 1: l^1 = 1 copy of mu, k_1 - l^1 = 0 copies of nu -> [p_1]
    SymbolicClass t1 = phi_class(1, s1, 1);
    CHECK(t1.c_p == 1);
    CHECK(t1.c_e == 0);
    // t = 0: 0 copies of mu, 1 copy of nu with dim_p = 2 -> 2 g_1
    SymbolicClass t0 = phi_class(1, s1, 0);
    CHECK(t0.c_p == 0);
    CHECK(t0.c_e == 2);
    // rank(phi^t(e)) = k_j * dim_p * rank(e): rank[p_j] = dim_p * dim_g... the
    // rank of c_p [p] + c_e e with rank(e) = 1 is c_p * dim_p + c_e
    for (int t = 0; t <= 1; ++t) {
        SymbolicClass sc = phi_class(1, s1, t);
        CHECK(sc.c_p * s1.dim_p * s1.dim_g + sc.c_e == s1.k_j * s1.dim_p);
    }
    CHECK_THROWS_AS(phi_class(1, s1, 2), InvalidParams);
}

TEST_CASE("boundary image") {
    auto [s1, s2] = first_two_stages();

    // b_0(g_j) = 0 at both stages, forced by [p_j] = unit * g_j
    for (const Stage* s : {&s1, &s2}) {
        SymbolicClass b = boundary_image(s->dim_g, *s);
        // substituting e = g_j: value = (c_p * unit + c_e) * g_j
        CHECK(b.c_p * s->unit_int + b.c_e == 0);
    }

    // e = [theta_1]: expands to 2 g_1 - 2 at stage 1, non-zero
    KClass theta1 = KClass::trivial(1, 2);
    KClass b = boundary_image(theta1, s1);
    KClass g1 = KClass::standard_form(s1.g, 2);
    CHECK(b == g1.scaled(2) - KClass::trivial(2, 2));
    CHECK_FALSE(b.is_zero());

    CHECK(boundary_image(KClass(2), s1).is_zero());
    // exact and symbolic routes agree on g_1
    CHECK(boundary_image(g1, s1).is_zero());
}

TEST_CASE("kernel of b_0 is the cyclic subgroup of g_1") {
    ConstructionParams p = half_params(1);
    Stage s1 = init_stage(p);
    Certificate c = kernel_check(s1, 5);
    CHECK(c.holds);
    CHECK(c.detail.find("exhaustive") != std::string::npos);
    CHECK(c.detail.find("11 elements") != std::string::npos);  // t in [-5,5]

    // a class with rank not divisible by dim_g has b_0 != 0: rank 1 class
    // that is not g_1 itself
    KClass e = KClass::trivial(1, 2);
    CHECK_FALSE(boundary_image(e, s1).is_zero());
}

TEST_CASE("kernel check in symbolic mode") {
    auto [s1, s2] = first_two_stages();
    Certificate c = kernel_check(s2, 5);  // m_factors = 102, symbolic
    CHECK(c.holds);
    CHECK(c.detail.find("primitive") != std::string::npos);
    CHECK(c.detail.find("b1 surjective") != std::string::npos);
}

TEST_CASE("relative order") {
    auto [s1, s2] = first_two_stages();
    CyclicOrder o1 = relative_order(s1);
    CHECK(o1.l == 1);
    CHECK(o1.unit == 2);
    CyclicOrder o2 = relative_order(s2);
    CHECK(o2.l == 3);
    CHECK(o2.unit == 6);
    CHECK(o2.unit >= o2.l + 1);

    Stage broken = s2;
    broken.l = 5;  // recursion value no longer matches the oracle
    CHECK_THROWS_AS(relative_order(broken), CertificateFailure);
}

TEST_CASE("cancellation certificate") {
    auto [s1, s2] = first_two_stages();
    CHECK(cancellation_check(s1).holds);  // 1*2*1 >= 2
    CHECK(cancellation_check(s2).holds);  // 3*198*33 >= 102

    Stage synthetic = s1;
    synthetic.dim_p = 1;
    synthetic.m_factors = 3;
    CHECK_FALSE(cancellation_check(synthetic).holds);
}

TEST_CASE("intertwining equations") {
    auto [s1, s2] = first_two_stages();
    CHECK(*s1.mult == 99);
    CHECK(*s1.r == 198);
    CHECK(*s1.s == 99);
    auto certs = intertwining_check(s1, s2);
    REQUIRE(certs.size() == 3);
    for (const Certificate& c : certs) CHECK(c.holds);
    // t = 0: 198*0 + 99*1 = 99*1; t = 1: 198*1 + 99*0 = 99*2; 297*1 = 99*3
    CHECK(certs[0].detail.find("198*0 + 99*1") != std::string::npos);
    CHECK(certs[1].detail.find("198*1 + 99*0") != std::string::npos);

    // the algebraic identity holds with symbolic r = 2m, s = m at any stage:
    // 2m l^t + m l^{1-t} = m (2 l^t + l^{1-t}) = m l_{j+1}^t
    Stage s3 = advance(s2, 2, 105850802);
    for (const Certificate& c : intertwining_check(s2, s3)) CHECK(c.holds);
}

TEST_CASE("simplicity checklist") {
    auto [s1, s2] = first_two_stages();
    auto certs = simplicity_checklist(s1, s2);
    REQUIRE(certs.size() == 10);
    for (const Certificate& c : certs) CHECK(c.holds);

    auto find = [&](const std::string& name) -> const Certificate& {
        for (const Certificate& c : certs)
            if (c.name == name) return c;
        throw std::runtime_error("missing certificate: " + name);
    };
    CHECK(find("mult-dominates-kk").detail == "99 > 3");
    CHECK(find("mult-divisible").detail == "3 | 99");
    CHECK(find("containment").detail == "1800 <= 2376");
}
