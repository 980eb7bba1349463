#pragma once

#include <cstddef>
#include <vector>

#include "k0forge/numbers.hpp"

namespace k0forge {

// (Z, {0} U {l+1, l+2, ...}) with the class of the unit distinguished.
struct CyclicOrder {
    Int l;     // largest non-positive multiple
    Int unit;  // class of the algebra unit; unit >= l+1
};

// Weakly unperforated iff the cone is N itself; for l >= 1, x = 1 with
// n = l+1 witnesses strong perforation.
bool is_weakly_unperforated(const CyclicOrder& g);

struct PerforationWitness {
    Rat x;
    Int n;
};

// The inductive limit of the stage cyclic groups, realized inside Q.
// Stage j embeds by t -> t / unit_j; the unit maps to 1 at every stage and
// consecutive units are related by unit_{j+1} = L_{j+1} * unit_j.  The limit
// is the intensional description (G_n, G_n intersect (k, inf) U {0}, 1);
// the stage realization is kept as a consistency witness.
class LimitGroup {
  public:
    LimitGroup(Rat k, Supernatural n);

    // Appends stage j+1; enforces unit compatibility with the multiplier
    // into the previous stage.
    void add_stage(const CyclicOrder& ord, const Int& multiplier_from_prev);

    bool realized() const { return !stages_.empty(); }
    std::size_t stage_count() const { return stages_.size(); }
    const CyclicOrder& stage(std::size_t j) const;  // 1-based
    const Rat& scale() const { return k_; }
    const Supernatural& supernatural() const { return n_; }

    // x in G_n; cross-checked against stage representability up to the
    // computed horizon.
    bool limit_membership(const Rat& x) const;

    // x = 0, or x in G_n and x > k.  Cross-checked against the first stage
    // at which x is representable; throws NotRepresentable when x cannot be
    // tested within the computed horizon.
    bool cone_membership(const Rat& x) const;

    // Default witness (k, 2): k is not in the cone but 2k is, and 2k != 0.
    PerforationWitness perforation_witness() const;

    // (l_j + 1) / unit_j, exactly; equals k + 1/unit_j.
    Rat cone_fraction(std::size_t j) const;  // 1-based

  private:
    Rat k_;
    Supernatural n_;
    std::vector<CyclicOrder> stages_;
};

}  // namespace k0forge
