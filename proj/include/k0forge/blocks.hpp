#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k0forge/kring.hpp"
#include "k0forge/ordgroup.hpp"

namespace k0forge {

// All stage-j construction constants.  Everything K-theoretic about the
// building block A_j = A(C_j, D_j, phi^0_j, phi^1_j) is determined by these
// integers.  mult, r, s and the chosen n live on the outgoing edge j -> j+1.
struct Stage {
    int j = 1;
    Int L;          // L_j (L_1 = b, primes afterwards)
    Int m_factors;  // number of S^2 factors of X_j
    StandardForm g; // generator class; g.q = m_factors, g.q - g.m = dim_g
    Int dim_g;
    Int dim_p;      // = unit_int * dim_g
    Int unit_int;   // prod_{k<=j} L_k, the class of the unit
    Int k_j;        // 3^{j-1}
    Int l0, l1;     // l_j^0, l_j^1; l1 - l0 = 1, l0 + l1 = k_j
    Int l;          // l_j = L_j * l_{j-1}, l_1 = a
    Int q_j;        // 3 k_j (2 dim_p + dim X_j), dim X_j = 2 m_factors
    std::optional<Int> n_prev;  // n_{j-1}, absent at stage 1
    std::optional<Int> mult;    // mult(gamma_j), set when advancing
    std::optional<Int> r, s;    // r_j = 2 mult, s_j = mult
};

// One checked arithmetic hypothesis, instantiated with concrete integers.
struct Certificate {
    std::string name;
    bool holds = false;
    std::string detail;
    std::string anchor;
};

// K_0(phi_j^t)(e) and b_0(e) expressed in the basis {[p_j], e}:
// value = c_p * [p_j] + c_e * e.
struct SymbolicClass {
    Int c_p;
    Int c_e;
};

// K_0(phi^t)(e) = l^t * rank(e) * [p_j] + (k_j - l^t) * dim_p * e,
// from K_0(mu)(e) = rank(e) * [p_j] and K_0(nu)(e) = dim_p * e.
SymbolicClass phi_class(const Int& rank_e, const Stage& stage, int which);

// b_0(e) = (l^1 - l^0) * (rank(e) * [p_j] - dim_p * e).
SymbolicClass boundary_image(const Int& rank_e, const Stage& stage);

// The same index map evaluated exactly in K^0(X_j); only available when the
// ring expansion is materialized (small m_factors).
KClass boundary_image(const KClass& e, const Stage& stage);

// ker b_0 = Z * g_j.  Exhaustive mode (m_factors <= 3) enumerates every
// lattice class with coefficients in [-bound, bound]; otherwise the reduced
// part of g_j is checked to be primitive, which forces the kernel claim.
// K^1 of a product of even spheres vanishes, so b_1 surjectivity is recorded
// as a structural fact.
Certificate kernel_check(const Stage& stage, const Int& bound);

// The relative order on K_0(A_j): queries the positivity oracle for the
// smallest positive multiple of g_j and asserts it matches the l-recursion.
// Throws CertificateFailure on disagreement.
CyclicOrder relative_order(const Stage& stage);

// Images of positive kernel classes under phi^t reach half the real
// dimension of X_j: k_j * dim_p * dim_g >= m_factors.
Certificate cancellation_check(const Stage& stage);

// The two intertwining equations for t = 0, 1 plus the multiplicity
// equation (r + s) k_j = mult * k_{j+1}, all exact.
std::vector<Certificate> intertwining_check(const Stage& stage, const Stage& next);

// One certificate per arithmetic hypothesis of the simplicity argument.
std::vector<Certificate> simplicity_checklist(const Stage& stage, const Stage& next);

}  // namespace k0forge
