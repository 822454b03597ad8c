#include "doctest.h"

#include "actorkit/actions.hpp"
#include "actorkit/corpus.hpp"
#include "actorkit/errors.hpp"
#include "oracles.hpp"

using namespace actorkit;

namespace {

const Field Q = Field::rationals();

bool oracle_in_category(const oracle::Table& t, Category c)
{
    switch (c) {
    case Category::lie: return oracle::is_lie(t);
    case Category::leibniz: return oracle::is_leibniz(t);
    case Category::associative: return oracle::is_associative(t);
    default: throw std::logic_error("no oracle for category");
    }
}

}  // namespace

TEST_CASE("make_action validation")
{
    const Algebra a = catalog::leibniz_a5();
    const Algebra b = Algebra::zero(Q, 1, Category::leibniz);
    const ActionPair z = zero_action(b, a);
    CHECK(z.left.size() == 4);
    CHECK(check_derived_action(Category::leibniz, z).passed);
    CHECK_THROWS_AS(make_action(b, a, std::vector<Scalar>(3, Scalar::zero(Q)), z.right), InputError);
    CHECK_THROWS_AS(make_action(Algebra::zero(Field::prime(3), 1), a, z.left, z.right), InputError);
    CHECK_THROWS_AS(check_derived_action(Category::raw, z), UnsupportedError);
}

TEST_CASE("conjugation actions are derived actions")
{
    const ActionPair s = conjugation_action(catalog::sl2());
    CHECK(s.left == catalog::sl2().tensor());
    CHECK(check_derived_action(Category::lie, s).passed);
    CHECK(check_derived_action(Category::leibniz, conjugation_action(catalog::leibniz_a5())).passed);
    CHECK(check_derived_action(Category::associative, conjugation_action(catalog::matrix_algebra(Q, 2))).passed);
    CHECK(check_derived_action(Category::alternative, conjugation_action(catalog::upper_triangular(Q))).passed);
    CHECK(check_derived_action(Category::commutative, conjugation_action(catalog::truncated_polynomial(Q, 3))).passed);
    CHECK(check_derived_action(Category::lie, conjugation_action(Algebra::zero(Q, 2, Category::lie))).passed);

    Rng rng(8);
    for (auto c : {Category::lie, Category::leibniz, Category::associative, Category::commutative,
                   Category::alternative, Category::module})
        for (int t = 0; t < 10; ++t) {
            const Algebra a = random_algebra(rng, Field::prime(3), 1 + rng.below(3), c);
            CHECK(check_derived_action(c, conjugation_action(a)).passed);
        }
}

TEST_CASE("a random action on A5 fails with a witness")
{
    // B one-dimensional, b*a = a, b*b_basis = 0, right action zero.
    const Algebra a5 = catalog::leibniz_a5();
    const Algebra b = Algebra::zero(Q, 1, Category::leibniz);
    std::vector<Scalar> left(4, Scalar::zero(Q)), right(4, Scalar::zero(Q));
    left[(0 * 2 + 0) * 2 + 0] = Scalar::one(Q);
    const ActionPair act = make_action(b, a5, left, right);
    const Report r = check_derived_action(Category::leibniz, act);
    CHECK_FALSE(r.passed);
    CHECK(r.failed == "[b,[a1,a2]] = [[b,a1],a2] - [[b,a2],a1]");
    CHECK(r.witness == std::vector<std::size_t>{0, 1, 1});
    CHECK(r.lhs == "[1, 0]");
    CHECK(r.rhs == "[0, 0]");
    CHECK_FALSE(oracle::is_leibniz(oracle::semidirect_table(act)));
}

TEST_CASE("general action condition statuses")
{
    const Report r = check_general_conditions(conjugation_action(catalog::sl2()));
    CHECK(r.passed);
    REQUIRE(r.details.size() == 12);
    for (int i : {0, 1, 2, 5, 6, 7, 8, 9, 11}) CHECK(r.details[i].status == "auto-pass");
    for (int i : {3, 4, 10}) CHECK(r.details[i].status == "structural");
}

TEST_CASE("semidirect products")
{
    const Algebra s = catalog::sl2();
    const Algebra sd = semidirect(conjugation_action(s));
    CHECK(sd.dim() == 6);
    CHECK(sd.category() == Category::raw);
    CHECK(check_category(sd, Category::lie).passed);

    const Algebra none = semidirect(zero_action(Algebra::zero(Q, 0, Category::lie), s));
    CHECK(none.tensor() == s.tensor());

    CHECK(is_ideal(sd, target_block(conjugation_action(s))).passed);
}

TEST_CASE("derived actions against the independent semidirect oracle")
{
    Rng rng(31337);
    const Field f3 = Field::prime(3);
    int agree_true = 0, agree_false = 0;
    for (auto c : {Category::lie, Category::leibniz, Category::associative})
        for (int t = 0; t < 150; ++t) {
            const Algebra b = random_algebra(rng, f3, rng.between(0, 2), c);
            const Algebra a = random_algebra(rng, f3, rng.between(0, 2), c);
            const ActionPair act = random_action(rng, b, a, c);
            const EquivalenceCheck e = semidirect_crosscheck(c, act);
            CHECK(e.report.passed);
            CHECK(e.derived == oracle_in_category(oracle::semidirect_table(act), c));
            (e.derived ? agree_true : agree_false)++;
            if (e.derived) {
                const Algebra sd = semidirect(act);
                CHECK(is_ideal(sd, target_block(act)).passed);
            }
        }
    // The sampler must exercise both outcomes.
    CHECK(agree_true > 50);
    CHECK(agree_false > 50);
}

TEST_CASE("projection onto B is a morphism with kernel the A block")
{
    Rng rng(4);
    const Field f3 = Field::prime(3);
    for (int t = 0; t < 60; ++t) {
        const Algebra b = random_algebra(rng, f3, 1 + rng.below(2), Category::associative);
        const Algebra a = random_algebra(rng, f3, 1 + rng.below(2), Category::associative);
        const ActionPair act = random_action(rng, b, a, Category::associative);
        if (!check_derived_action(Category::associative, act).passed) continue;
        const Algebra sd = semidirect(act);
        const std::size_t dB = b.dim(), n = sd.dim();
        // p(x*y) = p(x)*p(y) with p dropping the A coordinates.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector xy = sd.product(i, j);
                const Vector pxy(xy.begin(), xy.begin() + dB);
                Vector expect = zero_vector(f3, dB);
                if (i < dB && j < dB) expect = b.product(i, j);
                CHECK(pxy == expect);
            }
    }
}

TEST_CASE("alternative and commutative action axioms match their semidirect products")
{
    Rng rng(12);
    const Field f3 = Field::prime(3);
    for (auto c : {Category::alternative, Category::commutative, Category::module})
        for (int t = 0; t < 120; ++t) {
            const Algebra b = random_algebra(rng, f3, rng.between(0, 2), c);
            const Algebra a = random_algebra(rng, f3, rng.between(0, 2), c);
            const ActionPair act = random_action(rng, b, a, c);
            CHECK(semidirect_crosscheck(c, act).report.passed);
        }
}
