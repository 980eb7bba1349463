#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "k0forge/numbers.hpp"

namespace k0forge {

// The class [xi^(x q)] - [theta_m]: external direct sum of q coordinate Hopf
// pullbacks minus an m-dimensional trivial bundle.  rank = q - m.  This is
// the canonical carrier for construction classes; full ring expansion is
// only materialized for small variable counts.
struct StandardForm {
    Int q;  // number of Hopf factors, positive
    Int m;  // trivial part subtracted, non-negative
};

// Exact element of K^0((S^2)^x M) = Z[e_1..e_M]/(e_i^2 = 0).  Terms are keyed
// by the subset of variables appearing in the monomial (bit i-1 <-> e_i);
// the empty subset carries the rank.  Zero coefficients are never stored.
class KClass {
  public:
    // Expansion is capped: construction classes at large stages stay in
    // StandardForm and are never materialized.
    static constexpr int kMaxVars = 20;

    explicit KClass(int vars);

    static KClass trivial(const Int& m, int vars);

    // Product of (1 + e_i) over the index subset: the external tensor
    // product of coordinate Hopf bundles (a line bundle).  Doubles as the
    // total Chern class of the rank-|subset| Villadsen sum, whose top slot
    // is the Euler obstruction.
    static KClass hopf_external(const std::vector<int>& indices, int vars);

    // [xi^(x q)] - [theta_m] as a K-class: (q - m) + sum of e_i.
    // Requires sf.q == vars.
    static KClass standard_form(const StandardForm& sf, int vars);

    int vars() const { return vars_; }
    const std::map<uint32_t, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(uint32_t mask) const;
    void set_coefficient(uint32_t mask, const Int& c);

    KClass operator+(const KClass& rhs) const;
    KClass operator-(const KClass& rhs) const;
    KClass operator*(const KClass& rhs) const;  // e_i^2 = 0
    KClass scaled(const Int& c) const;
    bool operator==(const KClass& rhs) const = default;

    // Coefficient of the empty subset; a ring homomorphism onto Z.
    Int rank() const;

    // Coefficient of the full subset {1..M} (the Euler-obstruction slot).
    Int top_coefficient() const;

    // K^0 action of applying omega_eta on the listed coordinates:
    // e_i -> eta * e_i.  Rank is unchanged.
    KClass pullback_power(const Int& eta, const std::vector<int>& on) const;

    // Reindexes variables into the block-th consecutive window of
    // {1 .. vars*blocks}.
    KClass embed_block(int block, int blocks) const;

    // Sorted-subset debug form, "c*e{i,j,...}" joined by "+".
    std::string str() const;

  private:
    int vars_;
    std::map<uint32_t, Int> terms_;
};

enum class Verdict { Zero, Positive, NotPositive, Unknown };

struct Positivity {
    Verdict verdict;
    std::string certificate;  // rule citation instantiated with the numbers
};

// Three-valued positivity oracle for h * ([xi^(x q)] - [theta_m]) over
// (S^2)^x q.  Applicable only when q == M (the class lives over the full
// base); refuses otherwise.  With w = h*(q - m):
//   h = 0            -> Zero
//   w >= q           -> Positive     (stable-range / half-dimension rule)
//   0 < w < q        -> NotPositive  (Euler-class obstruction)
//   w <= 0, h > 0    -> NotPositive  (non-positive rank, non-zero class)
Positivity classify(const StandardForm& sf, const Int& h, const Int& M);

// Least h >= 1 with classify(...) == Positive: ceil(q / (q - m)).
// Requires q - m >= 1 and q == M.
Int min_positive_multiple(const StandardForm& sf, const Int& M);

}  // namespace k0forge
