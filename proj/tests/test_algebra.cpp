#include "doctest.h"

#include "actorkit/algebra.hpp"
#include "actorkit/corpus.hpp"
#include "actorkit/errors.hpp"
#include "oracles.hpp"

using namespace actorkit;

namespace {

const Field Q = Field::rationals();

Vector vec(Field f, std::vector<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(f, x);
    return v;
}

// Sparse random tensor with small integer entries, no identity imposed.
Algebra random_raw(Rng& rng, Field f, std::size_t n)
{
    std::vector<Scalar> t(n * n * n, Scalar::zero(f));
    const std::size_t terms = rng.between(0, n * 2);
    for (std::size_t s = 0; s < terms; ++s)
        t[rng.below(t.size())] = Scalar(f, static_cast<long>(rng.between(1, 2)));
    return Algebra(f, n, std::move(t), Category::raw);
}

}  // namespace

TEST_CASE("make and multiply")
{
    const Algebra s = catalog::sl2();
    CHECK(s.dim() == 3);
    CHECK(s.multiply(vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})) == vec(Q, {0, 2, 0}));
    CHECK(s.multiply(vec(Q, {0, 0, 0}), vec(Q, {1, 2, 3})) == vec(Q, {0, 0, 0}));

    const Algebra e = catalog::ground_field(Q);
    CHECK(e.multiply(vec(Q, {3}), vec(Q, {2})) == vec(Q, {6}));

    for (auto c : {Category::lie, Category::leibniz, Category::associative, Category::commutative,
                   Category::alternative, Category::module, Category::raw}) {
        const Algebra z = Algebra::zero(Q, 1, c);
        CHECK(check_category(z).passed);
    }

    CHECK_THROWS_AS(Algebra(Q, 2, std::vector<Scalar>(4, Scalar::zero(Q)), Category::raw), InputError);
    CHECK_THROWS_AS(Algebra(Q, 1, {Scalar::one(Q)}, Category::module), InputError);
    CHECK_THROWS_AS(Algebra(Q, 1, {Scalar::one(Field::prime(3))}, Category::raw), InputError);
    CHECK_THROWS_AS(s.multiply(vec(Q, {1, 0}), vec(Q, {0, 1, 0})), InputError);
}

TEST_CASE("identity checks on named algebras")
{
    CHECK(check_identity(catalog::sl2(), Identity::jacobi).passed);
    CHECK(check_identity(catalog::sl2(), Identity::antisymmetry).passed);

    const Algebra a5 = catalog::leibniz_a5();
    CHECK(check_identity(a5, Identity::leibniz).passed);
    const Report anti = check_identity(a5, Identity::antisymmetry);
    CHECK_FALSE(anti.passed);
    CHECK(anti.witness == std::vector<std::size_t>{1, 1});
    CHECK(anti.lhs == "[1, 0]");

    CHECK(check_identity(catalog::ground_field(Q), Identity::commutativity).passed);
    CHECK(check_identity(catalog::matrix_algebra(Q, 2), Identity::associativity).passed);
    CHECK_FALSE(check_identity(catalog::matrix_algebra(Q, 2), Identity::commutativity).passed);

    // Associativity of sl2 fails; the first failing triple in lexicographic order.
    const Report assoc = check_identity(catalog::sl2(), Identity::associativity);
    CHECK_FALSE(assoc.passed);
    CHECK(assoc.witness.size() == 3);

    CHECK(parse_identity("anticommutativity") == Identity::antisymmetry);
    CHECK_THROWS_AS(parse_identity("jordan"), UnsupportedError);
    CHECK_THROWS_AS(parse_category("group"), InputError);
}

TEST_CASE("axiom1 passes everywhere")
{
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const Algebra a = random_raw(rng, Q, 1 + rng.below(3));
        const Report r = check_identity(a, Identity::axiom1);
        CHECK(r.passed);
        REQUIRE(r.details.size() == 1);
        CHECK(r.details[0].status == "auto-pass");
    }
}

TEST_CASE("identity checks agree with the integer oracle")
{
    Rng rng(2024);
    for (auto f : {Field::prime(2), Field::prime(3), Q}) {
        for (int t = 0; t < 150; ++t) {
            const Algebra a = random_raw(rng, f, 1 + rng.below(3));
            const oracle::Table tab = oracle::table_of(a);
            CHECK(check_identity(a, Identity::leibniz).passed == oracle::is_leibniz(tab));
            CHECK(check_identity(a, Identity::associativity).passed == oracle::is_associative(tab));
            CHECK(check_category(a, Category::lie).passed == oracle::is_lie(tab));
        }
    }
}

TEST_CASE("exhaustive alternative check over GF(2)")
{
    const Field f2 = Field::prime(2);
    CHECK(check_identity(catalog::matrix_algebra(f2, 2), Identity::alternative_exhaustive).passed);
    CHECK(check_identity(catalog::truncated_polynomial(f2, 3), Identity::alternative_exhaustive).passed);
    // Only product e1*e0 = e1; fails at x = e0 + e1.
    const Algebra bad = Algebra::from_products(f2, 2, Category::raw, {{1, 0, vec(f2, {0, 1})}});
    CHECK_FALSE(check_identity(bad, Identity::alternative_exhaustive).passed);
    CHECK_THROWS_AS(check_identity(catalog::sl2(), Identity::alternative_exhaustive), UnsupportedError);
}

TEST_CASE("annihilator and derived subspace")
{
    CHECK(annihilator(catalog::truncated_polynomial(Q, 2)).dim() == 0);
    CHECK(annihilator(catalog::matrix_algebra(Q, 2)).dim() == 0);
    CHECK(annihilator(Algebra::zero(Q, 3)).dim() == 3);

    const Algebra a5 = catalog::leibniz_a5();
    CHECK(annihilator(a5) == Subspace::span(Q, 2, {vec(Q, {1, 0})}));
    CHECK(derived_subspace(a5) == Subspace::span(Q, 2, {vec(Q, {1, 0})}));

    CHECK(derived_subspace(catalog::sl2()).dim() == 3);
    CHECK(derived_subspace(Algebra::zero(Q, 2)).dim() == 0);
    CHECK(annihilator(catalog::heisenberg()) == Subspace::span(Q, 3, {vec(Q, {0, 0, 1})}));
}

TEST_CASE("subspace dimensions agree with the oracle")
{
    Rng rng(77);
    for (auto f : {Field::prime(2), Field::prime(5), Q}) {
        for (int t = 0; t < 80; ++t) {
            const Algebra a = random_raw(rng, f, 1 + rng.below(4));
            const oracle::Table tab = oracle::table_of(a);
            CHECK(static_cast<int>(annihilator(a).dim()) == oracle::annihilator_dim(tab));
            CHECK(static_cast<int>(derived_subspace(a).dim()) == oracle::derived_dim(tab));
        }
    }
}

TEST_CASE("ideals and quotients")
{
    const Algebra a5 = catalog::leibniz_a5();
    CHECK(is_ideal(a5, derived_subspace(a5)).passed);
    CHECK(is_ideal(a5, Subspace::zero(Q, 2)).passed);

    const Algebra s = catalog::sl2();
    const Report r = is_ideal(s, Subspace::span(Q, 3, {vec(Q, {1, 0, 0})}));
    CHECK_FALSE(r.passed);
    CHECK(r.witness == std::vector<std::size_t>{0, 1});
    CHECK(r.lhs == "[0, 2, 0]");
    CHECK_THROWS_AS(quotient(s, Subspace::span(Q, 3, {vec(Q, {1, 0, 0})})), InputError);

    CHECK(quotient(s, Subspace::full(Q, 3)).dim() == 0);
    const Algebra same = quotient(s, Subspace::zero(Q, 3));
    CHECK(same.tensor() == s.tensor());

    const Algebra q = quotient(a5, derived_subspace(a5));
    CHECK(q.dim() == 1);
    CHECK(q.is_zero_product());
    CHECK(q.name(0) == "b");
}

TEST_CASE("random algebras satisfy their category")
{
    Rng rng(5);
    for (auto f : {Q, Field::prime(3)})
        for (auto c : {Category::lie, Category::leibniz, Category::associative, Category::commutative,
                       Category::alternative, Category::module})
            for (int t = 0; t < 15; ++t) {
                const std::size_t n = 1 + rng.below(4);
                const Algebra a = random_algebra(rng, f, n, c);
                CHECK(a.dim() == n);
                CHECK(a.category() == c);
                CHECK(check_category(a).passed);
            }
}

TEST_CASE("structural properties on random instances")
{
    Rng rng(99);
    for (auto f : {Q, Field::prime(2), Field::prime(3)})
        for (auto c : {Category::lie, Category::leibniz, Category::associative, Category::commutative,
                       Category::alternative})
            for (int t = 0; t < 12; ++t) {
                const Algebra a = random_algebra(rng, f, 1 + rng.below(4), c);
                const Subspace ann = annihilator(a), der = derived_subspace(a);
                CHECK(is_ideal(a, ann).passed);
                CHECK(is_ideal(a, der).passed);
                CHECK(check_category(quotient(a, ann), c).passed);
                CHECK(check_category(quotient(a, der), c).passed);
                if (c == Category::associative || c == Category::commutative)
                    CHECK(check_category(a, Category::alternative).passed);
                CHECK(check_identity(a, Identity::axiom1).passed);
            }
}

TEST_CASE("basis change preserves identities")
{
    Rng rng(3);
    const Algebra s = catalog::sl2();
    for (int t = 0; t < 10; ++t) {
        const Matrix g = random_invertible(rng, Q, 3);
        const Algebra b = change_basis(s, g);
        CHECK(check_category(b).passed);
        CHECK(derived_subspace(b).dim() == 3);
    }
}
