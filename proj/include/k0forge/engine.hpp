#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k0forge/blocks.hpp"
#include "k0forge/ordgroup.hpp"

#include <nlohmann/json.hpp>

namespace k0forge {

enum class Policy { Minimal, SeededRandom };

struct ConstructionParams {
    Rat k;           // 0 < k < 1, lowest terms a/b
    Supernatural n;  // b | n and n/b infinite
    int stages = 1;  // J >= 1
    Policy policy = Policy::Minimal;
    std::uint64_t seed = 0;

    // Throws InvalidParams on violation; returns (a, b).
    std::pair<Int, Int> validate() const;
};

// The constraint set on n_j for one edge: n > lower, n <= upper (when
// bounded), n congruent to residue mod modulus.
struct Window {
    Int lower_exclusive;
    std::optional<Int> upper_inclusive;
    Int modulus;
    Int residue;

    Int first_member() const;           // throws EmptyWindow
    Int nth_member(std::uint64_t i) const;
    // Number of members, capped at `cap`.
    std::uint64_t member_count(std::uint64_t cap) const;
};

struct StageRecord {
    Stage stage;
    std::vector<Certificate> certificates;
};

struct Report {
    ConstructionParams params;
    std::vector<StageRecord> stages;
    LimitGroup limit;
    PerforationWitness witness;
    std::vector<Rat> fractions;
};

// Stage 1 of the recursion; also emits the stage-1 certificates when
// `certs` is non-null.
Stage init_stage(const ConstructionParams& params, std::vector<Certificate>* certs = nullptr);

// Constraints on n_j for the edge stage -> next with multiplier L_next.
// The strict upper-cone bound and the positivity floor together pin
// l_{j+1} as the largest non-positive multiple; divisibility and the
// multiplicity-growth bound come on top.  Throws EmptyWindow when the
// constraints are unsatisfiable.
Window feasible_window(const Stage& stage, const Int& L_next);

// One step of the stage recursion with the chosen n.  Runs every block
// certificate and the relative-order oracle; throws CertificateFailure if
// any fails.  Edge certificates are appended to *edge_certs, next-stage
// certificates to *next_certs, when non-null.
// Records mult, r, s on the outgoing edge of `stage`.
Stage advance(Stage& stage, const Int& L_next, const Int& n,
              std::vector<Certificate>* edge_certs = nullptr,
              std::vector<Certificate>* next_certs = nullptr);

// The full driver: stage 1, J-1 advances with n chosen per policy, limit
// assembly, witness and cone fractions.
Report run(const ConstructionParams& params);

nlohmann::ordered_json to_json(const Report& report);
std::string to_table(const Report& report);

std::string policy_to_string(Policy policy, std::uint64_t seed);

}  // namespace k0forge
