#include "doctest.h"

#include "actorkit/corpus.hpp"
#include "actorkit/errors.hpp"
#include "actorkit/json_io.hpp"
#include "actorkit/random.hpp"

using namespace actorkit;

TEST_CASE("scalars and fields")
{
    const Field q = Field::rationals(), f7 = Field::prime(7);
    CHECK(scalar_to_json(Scalar::parse(q, "3")) == json(3));
    CHECK(scalar_to_json(Scalar::parse(q, "-2/6")) == json("-1/3"));
    CHECK(scalar_to_json(Scalar::parse(f7, "-1")) == json(6));
    CHECK(scalar_from_json(q, json("5/10")) == Scalar::parse(q, "1/2"));
    CHECK(scalar_from_json(f7, json(-1)) == Scalar(f7, 6L));
    CHECK_THROWS_AS(scalar_from_json(q, json(1.5)), InputError);
    CHECK_THROWS_AS(scalar_from_json(q, json("x")), InputError);
    CHECK(field_from_json(field_to_json(f7)) == f7);
    CHECK(field_from_json(json("Q")) == q);
    CHECK_THROWS_AS(field_from_json(json{{"p", 6}}), InputError);
    CHECK_THROWS_AS(field_from_json(json("R")), InputError);
}

TEST_CASE("algebra round trips")
{
    const Field q = Field::rationals();
    for (const Algebra& a : {catalog::sl2(q), catalog::heisenberg(q), catalog::matrix_algebra(q, 2),
                             catalog::leibniz_a5(q), catalog::upper_triangular(Field::prime(3))}) {
        const json j = algebra_to_json(a);
        const Algebra b = algebra_from_json(j);
        CHECK(b.tensor() == a.tensor());
        CHECK(b.category() == a.category());
        CHECK(b.names() == a.names());
        CHECK(algebra_to_json(b) == j);
    }
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        const Algebra a = random_algebra(rng, Field::prime(5), 1 + i % 3, i % 2 ? Category::leibniz : Category::associative);
        CHECK(algebra_from_json(algebra_to_json(a)).tensor() == a.tensor());
    }
}

TEST_CASE("algebra input errors")
{
    json good = algebra_to_json(catalog::sl2());
    CHECK_NOTHROW(algebra_from_json(good));

    json j = good;
    j.erase("dim");
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    j = good;
    j["products"][0]["v"] = json::array({1, 2});
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    j = good;
    j["products"][0]["i"] = 7;
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    j = good;
    j["products"].push_back(j["products"][0]);
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    j = good;
    j["category"] = "jordan";
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    j = good;
    j["basis"] = json::array({"a"});
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    j = good;
    j["dim"] = "three";
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
    CHECK_THROWS_AS(algebra_from_json(json::array()), InputError);
    CHECK_THROWS_AS(parse_json_text("{\"dim\": "), InputError);

    // category defaults to raw, products to none
    const Algebra z = algebra_from_json(json{{"field", "Q"}, {"dim", 2}});
    CHECK(z.category() == Category::raw);
    CHECK(z.is_zero_product());
}

TEST_CASE("actions and actors round trip")
{
    const Algebra a = catalog::sl2();
    const ActionPair conj = conjugation_action(a);
    const ActionPair back = action_from_json(action_to_json(conj));
    CHECK(back.left == conj.left);
    CHECK(back.right == conj.right);
    CHECK(back.B.tensor() == conj.B.tensor());

    for (auto kind : {ActorKind::der, ActorKind::bim, ActorKind::bider1, ActorKind::mult}) {
        const Algebra t = kind == ActorKind::der      ? catalog::sl2()
                          : kind == ActorKind::bider1 ? catalog::leibniz_a5()
                          : kind == ActorKind::mult   ? catalog::truncated_polynomial(Field::rationals(), 3)
                                                      : catalog::matrix_algebra(Field::rationals(), 2);
        const ActorAlgebra x = build_actor(t, kind);
        const ActorAlgebra y = actor_from_json(actor_to_json(x));
        CHECK(y.kind == x.kind);
        CHECK(y.dim() == x.dim());
        CHECK(y.algebra.tensor() == x.algebra.tensor());
        CHECK(actor_to_json(y) == actor_to_json(x));
    }

    json j = actor_to_json(build_actor(a, ActorKind::der));
    j["basis"][0] = j["basis"][1];
    CHECK_THROWS_AS(actor_from_json(j), InputError);
    j = actor_to_json(build_actor(a, ActorKind::der));
    j["basis"].erase(0);
    CHECK_THROWS_AS(actor_from_json(j), InputError);

    json act = action_to_json(conj);
    act["left"].erase(0);
    CHECK_THROWS_AS(action_from_json(act), InputError);
}

TEST_CASE("reports, verdicts and groups")
{
    Report r = Report::start("demo");
    r.note("first", "pass");
    r.fail("second", {0, 2}, "[1]", "[0]");
    const json j = report_to_json(r);
    CHECK(j.at("failed") == "second");
    CHECK(j.at("witness") == json::array({0, 2}));
    const Report back = report_from_json(j);
    CHECK(back.passed == false);
    CHECK(back.witness == r.witness);
    CHECK(back.lhs == "[1]");
    CHECK(back.details.size() == 1);
    CHECK_FALSE(report_to_json(Report::start("ok")).contains("failed"));

    const Verdict v = actor_pipeline(catalog::sl2());
    const json vj = verdict_to_json(v);
    CHECK(vj.at("exists") == true);
    CHECK(vj.at("actor_dim") == 3);
    CHECK_FALSE(vj.contains("actor"));
    CHECK(verdict_to_json(v, true).contains("actor"));

    const Group q8 = groups::quaternion();
    const Group g = group_from_json(group_to_json(q8));
    CHECK(g.table == q8.table);
    CHECK(g.names == q8.names);
    json bad = group_to_json(q8);
    bad["table"][0][0] = 3;
    CHECK_THROWS_AS(group_from_json(bad), InputError);
    bad = group_to_json(q8);
    bad["order"] = 7;
    CHECK_THROWS_AS(group_from_json(bad), InputError);
}
