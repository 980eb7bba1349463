#include "k0forge/blocks.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k0forge {

namespace {

Int stage_l_t(const Stage& stage, int which) {
    if (which != 0 && which != 1) throw InvalidParams("phi_class: which must be 0 or 1");
    return which == 0 ? stage.l0 : stage.l1;
}

Certificate make(const std::string& name, bool holds, std::string detail, std::string anchor) {
    return Certificate{name, holds, std::move(detail), std::move(anchor)};
}

}  // namespace

SymbolicClass phi_class(const Int& rank_e, const Stage& stage, int which) {
    Int lt = stage_l_t(stage, which);
    return SymbolicClass{lt * rank_e, (stage.k_j - lt) * stage.dim_p};
}

SymbolicClass boundary_image(const Int& rank_e, const Stage& stage) {
    Int d = stage.l1 - stage.l0;
    return SymbolicClass{d * rank_e, -d * stage.dim_p};
}

KClass boundary_image(const KClass& e, const Stage& stage) {
    if (stage.m_factors != e.vars())
        throw InvalidParams("boundary_image: class does not live over X_j");
    int vars = e.vars();
    KClass p = KClass::standard_form(stage.g, vars).scaled(stage.unit_int);
    SymbolicClass sym = boundary_image(e.rank(), stage);
    return p.scaled(sym.c_p) + e.scaled(sym.c_e);
}

Certificate kernel_check(const Stage& stage, const Int& bound) {
    std::ostringstream detail;
    detail << "b1 surjective (K^1 of a product of even spheres vanishes); ";

    if (stage.m_factors <= 3 && bound > 0 && bound.fits_slong_p()) {
        // Exhaustive mode: b_0(e) = 0 iff rank(e) * g_j = dim_g * e, after
        // cancelling the non-zero factor (l^1 - l^0) * unit.
        int vars = static_cast<int>(stage.m_factors.get_si());
        int nm = 1 << vars;
        long b = bound.get_si();
        long side = 2 * b + 1;
        long dg = stage.dim_g.get_si();
        std::vector<long> gc(nm, 0);  // coefficients of g_j
        gc[0] = dg;
        for (int i = 0; i < vars; ++i) gc[1 << i] = 1;

        std::uint64_t inner_total = 1;
        for (int i = 2; i < nm; ++i) inner_total *= static_cast<std::uint64_t>(side);

        long long kernel_count = 0;
        bool all_multiples = true;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : kernel_count) reduction(&& : all_multiples) \
    schedule(static)
#endif
        for (long outer = 0; outer < side * side; ++outer) {
            std::vector<long> c(nm, -b);
            c[0] = outer / side - b;
            c[1] = outer % side - b;
            for (std::uint64_t it = 0; it < inner_total; ++it) {
                bool in_kernel = true;
                for (int m = 1; m < nm; ++m) {
                    if (c[0] * gc[m] != dg * c[m]) {
                        in_kernel = false;
                        break;
                    }
                }
                if (in_kernel) {
                    ++kernel_count;
                    // membership in Z * g_j
                    if (c[0] % dg != 0) all_multiples = false;
                }
                // odometer over c[2..]
                int pos = 2;
                while (pos < nm && ++c[pos] > b) c[pos++] = -b;
            }
        }
        long long expected = 2 * (b / dg) + 1;
        bool holds = all_multiples && kernel_count == expected;
        detail << "exhaustive scan of " << side << "^" << nm
               << " lattice classes: ker b0 has " << kernel_count
               << " elements in the box, expected " << expected
               << " multiples of g_j";
        return make("kernel-is-cyclic", holds, detail.str(), "index-map kernel");
    }

    // Symbolic mode: the reduced part of g_j is sum of the q singleton
    // generators, each with coefficient 1, so its gcd is 1.  A primitive
    // reduced part forces ker b0 = Z * g_j in the torsion-free K^0(X_j).
    bool primitive = stage.g.q >= 1;
    detail << "reduced part of g_j = e_1 + ... + e_" << stage.g.q.get_str()
           << " has gcd 1 (primitive)";
    return make("kernel-is-cyclic", primitive, detail.str(), "index-map kernel");
}

CyclicOrder relative_order(const Stage& stage) {
    Int mpm = min_positive_multiple(stage.g, stage.m_factors);
    if (mpm != stage.l + 1) {
        std::ostringstream os;
        os << "relative order disagreement at stage " << stage.j << ": oracle gives "
           << mpm.get_str() << " as smallest positive multiple, recursion expects "
           << Int(stage.l + 1).get_str();
        throw CertificateFailure(os.str());
    }
    return CyclicOrder{stage.l, stage.unit_int};
}

Certificate cancellation_check(const Stage& stage) {
    Int lhs = stage.k_j * stage.dim_p * stage.dim_g;
    std::ostringstream os;
    os << lhs.get_str() << " = k_j * dim_p * dim_g >= m_factors = "
       << stage.m_factors.get_str();
    return make("cancellation-half-dimension", lhs >= stage.m_factors, os.str(),
                "stable-range cancellation");
}

std::vector<Certificate> intertwining_check(const Stage& stage, const Stage& next) {
    if (!stage.mult || !stage.r || !stage.s)
        throw InvalidParams("intertwining_check: edge data (mult, r, s) not set");
    const Int& mult = *stage.mult;
    const Int& r = *stage.r;
    const Int& s = *stage.s;
    std::vector<Certificate> certs;
    for (int t = 0; t <= 1; ++t) {
        Int lt = t == 0 ? stage.l0 : stage.l1;
        Int lo = t == 0 ? stage.l1 : stage.l0;
        Int nt = t == 0 ? next.l0 : next.l1;
        Int lhs = r * lt + s * lo;
        Int rhs = mult * nt;
        std::ostringstream os;
        os << r.get_str() << "*" << lt.get_str() << " + " << s.get_str() << "*" << lo.get_str()
           << " = " << lhs.get_str() << " vs mult*l^" << t << " = " << rhs.get_str();
        certs.push_back(make("intertwining-t" + std::to_string(t), lhs == rhs, os.str(),
                             "intertwining equations"));
    }
    Int lhs = (r + s) * stage.k_j;
    Int rhs = mult * next.k_j;
    std::ostringstream os;
    os << "(" << r.get_str() << "+" << s.get_str() << ")*" << stage.k_j.get_str() << " = "
       << lhs.get_str() << " vs mult*k_{j+1} = " << rhs.get_str();
    certs.push_back(make("intertwining-multiplicity", lhs == rhs, os.str(),
                         "intertwining equations"));
    return certs;
}

std::vector<Certificate> simplicity_checklist(const Stage& stage, const Stage& next) {
    if (!stage.mult || !next.n_prev)
        throw InvalidParams("simplicity_checklist: edge data not set");
    const Int& mult = *stage.mult;
    const Int& n = *next.n_prev;
    std::vector<Certificate> certs;
    auto ineq = [](const Int& a, const std::string& rel, const Int& b) {
        return a.get_str() + " " + rel + " " + b.get_str();
    };

    certs.push_back(make("endpoint-maps-differ", stage.l0 != stage.l1,
                         ineq(stage.l0, "!=", stage.l1), "l^0 != l^1"));

    Int q_recomputed = 3 * stage.k_j * (2 * stage.dim_p + 2 * stage.m_factors);
    certs.push_back(make("q-recomputed", stage.q_j == q_recomputed,
                         ineq(stage.q_j, "==", q_recomputed), "copy-count constant"));

    Int lhs3 = next.k_j * (2 * next.dim_p + 2 * next.m_factors);
    Int rhs3 = stage.q_j * mult;
    certs.push_back(make("containment", lhs3 <= rhs3, ineq(lhs3, "<=", rhs3),
                         "trivial-copy containment"));

    certs.push_back(make("mult-dominates-kk", mult > next.k_j * stage.k_j,
                         ineq(mult, ">", next.k_j * stage.k_j), "multiplicity growth"));

    certs.push_back(make("mult-divisible", mult % next.L == 0,
                         next.L.get_str() + " | " + mult.get_str(), "edge divisibility"));

    certs.push_back(make("mult-covers-n", mult >= n, ineq(mult, ">=", n),
                         "multiplicity dominates n_j"));
    certs.push_back(make("half-dimension-next", next.dim_p >= next.m_factors,
                         ineq(next.dim_p, ">=", next.m_factors), "half-dimension bound"));

    Int pair1 = next.k_j * stage.k_j * next.dim_p;
    certs.push_back(make("commutant-pair-1", pair1 >= next.m_factors,
                         ineq(pair1, ">=", next.m_factors), "unit-commutant dimensions"));
    Int pair2 = mult * (next.k_j + next.l0 * next.dim_p - next.k_j * stage.k_j * stage.dim_p);
    certs.push_back(make("commutant-pair-2", pair2 >= next.m_factors,
                         ineq(pair2, ">=", next.m_factors), "unit-commutant dimensions"));

    // delta, delta' block counts and the non-vanishing of gamma - beta phi^1
    // reduce to positivity of the remaining multiplicities.
    certs.push_back(make("orthogonal-summand-counts", *stage.s >= 1 && n >= 1,
                         "s_j = " + stage.s->get_str() + " >= 1 and n_j = " + n.get_str() +
                             " >= 1",
                         "orthogonal block bookkeeping"));
    return certs;
}

}  // namespace k0forge
