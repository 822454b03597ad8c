#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "actorkit/actions.hpp"
#include "actorkit/constructions.hpp"
#include "actorkit/report.hpp"

namespace actorkit {

struct Verdict {
    bool exists = false;
    std::string actor_kind;  // der, bim, bider1, bider2, mult, zero, unsupported
    std::size_t actor_dim = 0;
    std::size_t semidirect_dim = 0;
    std::optional<Report> failure;    // failing identity of the semidirect product
    std::optional<Report> condition;  // Condition 1 or 2 where the category has one
    SufficientFlags flags{};
    std::optional<ActorAlgebra> actor;
    std::string note;
};

struct PipelineOptions {
    int bider_variant = 1;
    // Alternative algebras only: an action whose semidirect product is checked.
    std::optional<ActionPair> candidate;
};

// Builds the category's candidate, forms candidate x A and runs the
// category's identity suite on it. Throws InputError when A fails its own
// identities or is tagged raw.
Verdict actor_pipeline(const Algebra& a, const PipelineOptions& opts = {});

// Compares the induced tensors of the two biderivation brackets; the note
// records the Condition 1 status.
Report bider_variants_agree(const Algebra& a);

// Over GF(2): every derived action of every B of dimension <= max_b_dim on A
// must come from exactly one morphism B -> actor. Throws UnsupportedError
// outside GF(2) or for categories without a candidate.
Report universality_check(const Algebra& a, std::size_t max_b_dim = 2, int bider_variant = 1);

}  // namespace actorkit
