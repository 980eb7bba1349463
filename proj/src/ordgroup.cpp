#include "k0forge/ordgroup.hpp"

#include <cassert>

namespace k0forge {

bool is_weakly_unperforated(const CyclicOrder& g) {
    return g.l == 0;
}

LimitGroup::LimitGroup(Rat k, Supernatural n) : k_(std::move(k)), n_(std::move(n)) {
    if (k_ <= 0 || k_ >= 1) throw InvalidParams("limit scale k must satisfy 0 < k < 1");
}

void LimitGroup::add_stage(const CyclicOrder& ord, const Int& multiplier_from_prev) {
    if (ord.unit < ord.l + 1) throw InvalidParams("stage unit must be positive in the cone");
    if (!stages_.empty()) {
        const CyclicOrder& prev = stages_.back();
        if (ord.unit != prev.unit * multiplier_from_prev)
            throw InvalidParams("incompatible stage embedding: unit_{j+1} != L_{j+1} * unit_j");
    }
    stages_.push_back(ord);
}

const CyclicOrder& LimitGroup::stage(std::size_t j) const {
    if (j < 1 || j > stages_.size()) throw InvalidParams("stage not computed");
    return stages_[j - 1];
}

bool LimitGroup::limit_membership(const Rat& x) const {
    if (!realized()) throw InvalidParams("limit group not realized");
    bool in_group = n_.contains(x);
    // Stage cross-check: representability at any computed stage implies
    // membership in G_n.
    for (const CyclicOrder& s : stages_) {
        Rat scaled = x * s.unit;
        if (scaled.get_den() == 1) {
            assert(in_group);
            break;
        }
    }
    return in_group;
}

bool LimitGroup::cone_membership(const Rat& x) const {
    if (!realized()) throw InvalidParams("limit group not realized");
    if (x == 0) return true;
    bool extensional = n_.contains(x) && x > k_;
    // Find the first stage representing x and compare against its smallest
    // positive element; both answers must agree.
    for (const CyclicOrder& s : stages_) {
        Rat scaled = x * s.unit;
        if (scaled.get_den() != 1) continue;
        bool stagewise = x >= cone_fraction(1 + (&s - stages_.data()));
        if (stagewise != extensional)
            throw CertificateFailure("cone realization mismatch at x = " + rat_to_string(x));
        return extensional;
    }
    throw NotRepresentable("x = " + rat_to_string(x) +
                           " is not representable within the computed stage horizon");
}

PerforationWitness LimitGroup::perforation_witness() const {
    if (!realized()) throw InvalidParams("limit group not realized");
    PerforationWitness w{k_, Int(2)};
    if (cone_membership(w.x) || !cone_membership(w.x * w.n))
        throw CertificateFailure("default perforation witness failed validation");
    return w;
}

Rat LimitGroup::cone_fraction(std::size_t j) const {
    const CyclicOrder& s = stage(j);
    Rat f(s.l + 1, s.unit);
    f.canonicalize();
    return f;
}

}  // namespace k0forge
