#include "doctest.h"

#include "actorkit/errors.hpp"
#include "actorkit/exact.hpp"
#include "actorkit/random.hpp"

using namespace actorkit;

namespace {

const Field Q = Field::rationals();

Matrix mat(Field f, std::vector<std::vector<long>> rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, 0, cols);
    for (auto& r : rows) {
        Vector v;
        for (long x : r) v.emplace_back(f, x);
        m.append_row(v);
    }
    return m;
}

Vector vec(Field f, std::vector<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(f, x);
    return v;
}

Matrix random_matrix(Rng& rng, Field f, std::size_t r, std::size_t c, long spread)
{
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng.chance(1, 2)) m(i, j) = Scalar(f, static_cast<long>(rng.below(2 * spread + 1)) - spread);
    return m;
}

}  // namespace

TEST_CASE("field descriptors")
{
    CHECK(Field::prime(5).modulus() == 5);
    CHECK_THROWS_AS(Field::prime(6), InputError);
    CHECK_THROWS_AS(Field::prime(1), InputError);
    CHECK_THROWS_AS(Field::prime(4294967311ULL), InputError);
    CHECK(Field::rationals().to_string() == "Q");
    CHECK(Field::prime(7).to_string() == "GF(7)");
}

TEST_CASE("scalar arithmetic and parsing")
{
    const Field f5 = Field::prime(5);
    CHECK(Scalar::parse(Q, "-4/6").to_string() == "-2/3");
    CHECK(Scalar::parse(Q, "12").to_string() == "12");
    CHECK(Scalar::parse(f5, "7").to_string() == "2");
    CHECK(Scalar::parse(f5, "1/2").to_string() == "3");
    CHECK(Scalar::parse(f5, "-1").to_string() == "4");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), InputError);
    CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), InputError);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), InputError);
    CHECK_THROWS_AS(Scalar::parse(Q, "-"), InputError);

    CHECK((Scalar(f5, 2) * Scalar(f5, 3)).to_string() == "1");
    CHECK((Scalar(f5, 2).inverse()).to_string() == "3");
    CHECK((Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3")).to_string() == "5/6");
    CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(f5, 1), InputError);
    CHECK_THROWS_AS(Scalar(Field::prime(3), 1) * Scalar(f5, 1), InputError);
    CHECK_THROWS_AS(Scalar(Q, 0).inverse(), InputError);

    auto big = Scalar::parse(Q, "123456789012345678901234567890/7");
    CHECK_FALSE(big.as_long().has_value());
    CHECK(Scalar(Q, -9).as_long() == -9);
}

TEST_CASE("rref examples")
{
    auto id = rref(Matrix::identity(Q, 2));
    CHECK(id.form == Matrix::identity(Q, 2));
    CHECK(id.rank == 2);
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto dep = rref(mat(Q, {{1, 2}, {2, 4}}));
    CHECK(dep.rank == 1);
    CHECK(dep.pivots == std::vector<std::size_t>{0});
    CHECK(dep.form == mat(Q, {{1, 2}, {0, 0}}));

    const Field f5 = Field::prime(5);
    auto two = rref(mat(f5, {{2}}));
    CHECK(two.form == mat(f5, {{1}}));
    CHECK(two.rank == 1);

    Matrix mixed(Q, 1, 2);
    mixed(0, 1) = Scalar(f5, 1);
    CHECK_THROWS_AS(rref(mixed), InputError);
}

TEST_CASE("nullspace examples")
{
    CHECK(nullspace(Matrix::identity(Q, 3)).rows() == 0);
    auto ns = nullspace(mat(Q, {{1, 2}, {2, 4}}));
    REQUIRE(ns.rows() == 1);
    // Canonical RREF form of span{(-2,1)} is (1,-1/2).
    CHECK(to_string(ns.row(0)) == "[1, -1/2]");
    CHECK(Subspace::from_canonical(ns).contains(vec(Q, {-2, 1})));
    auto z = nullspace(Matrix(Q, 2, 3));
    CHECK(z.rows() == 3);
    CHECK(z == Matrix::identity(Q, 3));
}

TEST_CASE("solve examples")
{
    const Field f5 = Field::prime(5);
    auto x = solve(mat(f5, {{2}}), vec(f5, {3}));
    REQUIRE(x);
    CHECK((*x)[0].to_string() == "4");

    auto b = vec(Q, {3, -1, 7});
    auto y = solve(Matrix::identity(Q, 3), b);
    REQUIRE(y);
    CHECK(*y == b);

    CHECK_FALSE(solve(mat(Q, {{1}, {1}}), vec(Q, {0, 1})).has_value());
}

TEST_CASE("subspace coordinates")
{
    auto s = Subspace::span(Q, 3, {vec(Q, {1, 1, 0}), vec(Q, {0, 1, 1})});
    CHECK(s.dim() == 2);
    auto c = s.coordinates(vec(Q, {2, 5, 3}));
    REQUIRE(c);
    CHECK(s.combine(*c) == vec(Q, {2, 5, 3}));
    CHECK_FALSE(s.coordinates(vec(Q, {1, 0, 0})).has_value());
    CHECK(s == Subspace::span(Q, 3, {vec(Q, {1, 2, 1}), vec(Q, {1, 0, -1})}));
    CHECK_THROWS_AS(Subspace::from_canonical(mat(Q, {{2, 0}})), InputError);
}

TEST_CASE("elimination properties on random matrices")
{
    Rng rng(20261015);
    for (Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(7)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = rng.between(0, 5), c = rng.between(1, 6);
            const Matrix m = random_matrix(rng, f, r, c, 3);
            const auto red = rref(m);
            const Matrix ns = nullspace(m);
            // Kernel rows are annihilated exactly.
            for (std::size_t i = 0; i < ns.rows(); ++i) CHECK(is_zero(m.apply(ns.row(i))));
            CHECK(red.rank + ns.rows() == c);
            CHECK(rref(red.form).form == red.form);

            // Row operations leave the kernel's canonical basis bit-identical.
            Matrix mixed = m;
            for (std::size_t i = 0; i + 1 < mixed.rows(); ++i) {
                auto src = Vector(mixed.row(i + 1).begin(), mixed.row(i + 1).end());
                axpy(mixed.row(i), Scalar(f, 2), src);
            }
            CHECK(nullspace(mixed) == ns);

            // A consistent right-hand side is solved exactly.
            Vector x0 = zero_vector(f, c);
            for (auto& s : x0) s = Scalar(f, static_cast<long>(rng.below(5)) - 2);
            auto sol = solve(m, m.apply(x0));
            REQUIRE(sol);
            CHECK(m.apply(*sol) == m.apply(x0));
        }
    }
}
