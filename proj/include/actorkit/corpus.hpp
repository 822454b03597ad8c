#pragma once

// Named algebras used throughout the tests and as seeds for random corpora,
// plus the seeded generators behind `atlas` and the acceptance corpora.

#include <cstddef>

#include "actorkit/algebra.hpp"
#include "actorkit/random.hpp"

namespace actorkit {

namespace catalog {

// Basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h.
Algebra sl2(Field f = Field::rationals());
// Basis (x, y, z): [x,y]=z.
Algebra heisenberg(Field f = Field::rationals());
// Basis (x, y): [x,y]=y.
Algebra affine_line(Field f = Field::rationals());
Algebra abelian(Field f, std::size_t n, Category cat = Category::lie);
// Basis (a, b), only nonzero product [b,b]=a.
Algebra leibniz_a5(Field f = Field::rationals());
// M_n(F) on matrix units E_ij, index i*n+j.
Algebra matrix_algebra(Field f, std::size_t n);
// F[x]/(x^n) on 1, x, ..., x^{n-1}.
Algebra truncated_polynomial(Field f, std::size_t n, Category cat = Category::commutative);
// One-dimensional e*e=e.
Algebra ground_field(Field f, Category cat = Category::commutative);
// Upper triangular 2x2 matrices on E11, E12, E22.
Algebra upper_triangular(Field f);
// Block sum with componentwise product; keeps a's category tag.
Algebra direct_sum(const Algebra& a, const Algebra& b);

}  // namespace catalog

Matrix random_invertible(Rng& rng, Field f, std::size_t n);

// A random algebra of exactly `dim` passing the category's identity suite.
// Half the draws start from a catalog seed padded to `dim`, half from a
// sparse random tensor (1-3 nonzero entries) filtered by the suite; either
// way a random change of basis is applied. Deterministic in the rng state.
Algebra random_algebra(Rng& rng, Field f, std::size_t dim, Category cat);

}  // namespace actorkit
