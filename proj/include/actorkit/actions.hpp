#pragma once

// Actions of an algebra B on an algebra A given by two bilinear maps
//   B x A -> A, (b, a) -> b*a     and     A x B -> A, (a, b) -> a*b,
// stored as tensors. The dot action b.a = b + a - b is the identity for
// vector-space addition and is not stored.

#include <cstddef>
#include <span>
#include <vector>

#include "actorkit/algebra.hpp"
#include "actorkit/random.hpp"
#include "actorkit/report.hpp"

namespace actorkit {

struct ActionPair {
    Algebra B;
    Algebra A;
    std::vector<Scalar> left;   // (b*dimA + a)*dimA + k : coefficient of e_k in e_b * e_a
    std::vector<Scalar> right;  // (a*dimB + b)*dimA + k : coefficient of e_k in e_a * e_b

    Vector act_left(std::span<const Scalar> b, std::span<const Scalar> a) const;
    Vector act_right(std::span<const Scalar> a, std::span<const Scalar> b) const;
    // a -> e_b * a and a -> a * e_b.
    Matrix left_matrix(std::size_t b) const;
    Matrix right_matrix(std::size_t b) const;
};

// Throws InputError on shape or field mismatch.
ActionPair make_action(Algebra B, Algebra A, std::vector<Scalar> left, std::vector<Scalar> right);
ActionPair zero_action(Algebra B, Algebra A);
// B = A acting on itself by its own product.
ActionPair conjugation_action(const Algebra& a);
// Action of B given by b -> (L_b, R_b) on A.
ActionPair action_from_maps(Algebra B, Algebra A, const std::vector<Matrix>& L, const std::vector<Matrix>& R);

// The category's action axioms for mixed arguments from B and A, checked on
// basis tuples, after checking that B and A themselves lie in the category.
// Throws UnsupportedError for raw.
Report check_derived_action(Category c, const ActionPair& act);

// The general conditions valid in any category of groups with operations;
// for algebras most are consequences of commutative addition.
Report check_general_conditions(const ActionPair& act);

// B x A with (b',a')*(b,a) = (b'b, a'a + a'b + b'a); basis is B's then A's.
Algebra semidirect(const ActionPair& act);
// The A block of the semidirect product.
Subspace target_block(const ActionPair& act);

struct EquivalenceCheck {
    bool derived;     // check_derived_action passed
    bool semidirect;  // semidirect product passes the category's identities
    Report report;    // passes iff the two agree
};
EquivalenceCheck semidirect_crosscheck(Category c, const ActionPair& act);

// Sparse random action tensors; for lie, right = -left most of the time.
ActionPair random_action(Rng& rng, Algebra B, Algebra A, Category c);

}  // namespace actorkit
