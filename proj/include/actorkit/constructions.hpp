#pragma once

// Concrete actor candidates as algebras of pairs of linear maps (L, R) on a
// target algebra A, where L is b*(-) and R is (-)*b:
//   der    derivations of a Lie algebra, stored as (D, -D)
//   bim    bimultipliers of an associative algebra
//   bider1 biderivations of a Leibniz algebra, bracket (2.5.1)+(2.5.2)
//   bider2 biderivations with the alternative left component (2.5.2')
//   mult   multipliers f(aa') = f(a)a' of a commutative algebra, stored as (f, f)

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "actorkit/actions.hpp"
#include "actorkit/algebra.hpp"
#include "actorkit/report.hpp"

namespace actorkit {

enum class ActorKind { der, bim, bider1, bider2, mult };

std::string_view to_string(ActorKind k);
// Throws InputError on unknown tags.
ActorKind parse_actor_kind(std::string_view tag);

struct BiMap {
    Matrix L;
    Matrix R;

    friend bool operator==(const BiMap&, const BiMap&) = default;
};

// Coordinates: L row-major followed by R row-major.
Vector flatten(const BiMap& m);

struct ActorAlgebra {
    Algebra target;
    ActorKind kind;
    std::vector<BiMap> elements;  // canonical basis
    Algebra algebra;              // induced structure on the basis
    ActionPair action;            // elements acting on the target
    Subspace span;                // flattened elements, canonical

    std::size_t dim() const { return elements.size(); }
    std::optional<Vector> coordinates(const BiMap& m) const { return span.coordinates(flatten(m)); }
    BiMap element(std::span<const Scalar> coords) const;
};

// Product of two elements in the structure of the given kind.
BiMap actor_product(ActorKind kind, const BiMap& x, const BiMap& y);

// Each throws InputError when the target fails the required identities and
// ConstructionError when a product leaves the span (closure certificate).
ActorAlgebra derivations(const Algebra& a);
ActorAlgebra bimultipliers(const Algebra& a);
ActorAlgebra biderivations(const Algebra& a, int variant = 1);
ActorAlgebra multipliers(const Algebra& a);
ActorAlgebra build_actor(const Algebra& a, ActorKind kind);

// Row i holds the actor coordinates of (left, right) multiplication by e_i.
// Throws ConstructionError if some pair is outside the actor.
Matrix canonical_d(const ActorAlgebra& actor);

// d: A -> B given by rows (row i = image of e_i), act an action of B on A.
Report crossed_module_check(const Matrix& d, const ActionPair& act);

// L_phi R_phi' = -L_phi L_phi' on Bider(A); witness (phi, phi', a).
Report condition1_check(const Algebra& a);
// R_f' L_f = L_f R_f' on Bim(A); witness (f, f', a).
Report condition2_check(const Algebra& a);

struct SufficientFlags {
    bool ann_zero;
    bool perfect;
};
SufficientFlags sufficient_conditions(const Algebra& a);

// Image of canonical_d as a subspace of the actor.
Subspace inner_image(const ActorAlgebra& actor);

}  // namespace actorkit
