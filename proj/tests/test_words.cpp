#include "doctest.h"

#include "actorkit/corpus.hpp"
#include "actorkit/errors.hpp"
#include "actorkit/words.hpp"
#include "oracles.hpp"

using namespace actorkit;

namespace {

const Field Q = Field::rationals();

const char* lie_w1 = "y*(z*x) + (y*x)*z";
const char* lie_w2 = "(x*y)*z - (x*z)*y";

Algebra raw_table(Rng& rng, Field f, std::size_t n)
{
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < n * n * n; ++i) t.emplace_back(f, static_cast<long>(rng.below(f.characteristic())));
    return Algebra(f, n, std::move(t), Category::raw);
}

}  // namespace

TEST_CASE("word parsing and printing")
{
    const Word w = parse_word("y*(z*x) + (y*x)*z");
    REQUIRE(w.terms.size() == 2);
    CHECK(parse_word(to_string(w)) == w);
    CHECK(parse_word("x*(y*z) - x*(y*z)").empty());
    CHECK(parse_word("0").empty());
    CHECK(to_string(parse_word("2*x*(y*z) - 3 (y*x)*z + x*(y*z)")) == "3*x*(y*z) - 3*(y*x)*z");
    CHECK_THROWS_AS(parse_word("(x*y*z)"), InputError);
    CHECK_THROWS_AS(parse_word("x*(x*z)"), InputError);
    CHECK_THROWS_AS(parse_word("x*(y*z) (x*y)*z"), InputError);
    CHECK_THROWS_AS(parse_word(""), InputError);
    CHECK_THROWS_AS(parse_word_mode("both"), InputError);

    // every canonical word survives a round trip
    Rng rng(3);
    const auto T = t_set();
    for (int t = 0; t < 50; ++t) {
        std::string text;
        for (int k = 0; k < 4; ++k) {
            const auto& pair = T[rng.below(4)];
            text += (rng.below(2) ? " - " : " + ") + std::to_string(rng.below(3)) + "*" + to_string(pair[rng.below(2)]);
        }
        const Word w0 = parse_word(text);
        CHECK(parse_word(to_string(w0)) == w0);
    }
}

TEST_CASE("canonical monomials")
{
    const Monomial3 m = parse_word("y*(z*x)").terms[0].mono;
    auto [s, c] = canonical(m, WordMode::anticomm);
    CHECK(s == 1);  // y*(z*x) = -(z*x)*y = (x*z)*y
    CHECK(to_string(c) == "(x*z)*y");
    CHECK(canonical(m, WordMode::comm).first == 1);
    CHECK(canonical(m, WordMode::plain).second == m);
    CHECK(canonicalize(parse_word("y*(z*x) + (z*x)*y"), WordMode::anticomm).empty());
    CHECK(canonicalize(parse_word("y*(z*x) - (z*x)*y"), WordMode::comm).empty());
}

TEST_CASE("T-coverage")
{
    const Word w1 = parse_word(lie_w1, WordSide::w1), w2 = parse_word(lie_w2, WordSide::w2);
    const Report plain = check_T_coverage(w1, w2, WordMode::plain);
    CHECK_FALSE(plain.passed);
    CHECK(plain.failed == "T pair {y*(x*z), z*(x*y)} uncovered");
    CHECK(plain.witness == std::vector<std::size_t>{0});
    REQUIRE(plain.details.size() == 4);
    for (std::size_t p = 1; p < 4; ++p) CHECK(plain.details[p].status == "pass");

    CHECK(check_T_coverage(w1, w2, WordMode::anticomm).passed);

    const Word sym_w2 = parse_word("-y*(z*x) - z*(x*y)", WordSide::w2);
    const Report c = check_T_coverage(Word{}, sym_w2, WordMode::comm);
    CHECK(c.passed);
    CHECK(c.details.size() == 4);

    CHECK_FALSE(check_T_coverage(Word{}, Word{}, WordMode::comm).passed);
}

TEST_CASE("coverage is monotone in the mode")
{
    Rng rng(11);
    const auto T = t_set();
    int plain_passes = 0;
    for (int t = 0; t < 300; ++t) {
        Word w[2];
        for (auto& wi : w) {
            const int n = 1 + static_cast<int>(rng.below(4));
            std::string s;
            for (int k = 0; k < n; ++k) {
                const auto& pair = T[rng.below(4)];
                Monomial3 m = pair[rng.below(2)];
                if (rng.below(2)) std::swap(m.vars[0], m.vars[2]);
                s += (k ? " + " : "") + to_string(m);
            }
            wi = parse_word(s);
        }
        const bool p = check_T_coverage(w[0], w[1], WordMode::plain).passed;
        if (p) {
            ++plain_passes;
            CHECK(check_T_coverage(w[0], w[1], WordMode::comm).passed);
            CHECK(check_T_coverage(w[0], w[1], WordMode::anticomm).passed);
        }
    }
    CHECK(plain_passes > 0);
}

TEST_CASE("swap symmetry of W2")
{
    const Word sym_w2 = parse_word("-y*(z*x) - z*(x*y)");
    const Report r = check_w2_symmetry(sym_w2, -1);
    CHECK(r.passed);
    CHECK(r.details[0].note == to_string(canonicalize(parse_word("-z*(y*x) - y*(x*z)"), WordMode::anticomm)));
    CHECK(check_w2_symmetry(sym_w2, +1).passed);  // symmetric under comm as well
    CHECK_FALSE(check_w2_symmetry(parse_word("-y*(z*x) + z*(x*y)"), -1).passed);
    CHECK(check_w2_symmetry(Word{}, +1).passed);
    CHECK(check_w2_symmetry(Word{}, -1).passed);
    const Report single = check_w2_symmetry(parse_word("y*(z*x)"), +1);
    CHECK_FALSE(single.passed);
    CHECK(single.lhs == to_string(canonicalize(parse_word("z*(y*x)"), WordMode::comm)));
    CHECK(check_w2_symmetry(parse_word("y*(z*x)"), +1, WordMode::comm).passed == false);
    CHECK_THROWS_AS(check_w2_symmetry(sym_w2, 2), InputError);
}

TEST_CASE("condition 4 by bounded rewriting")
{
    const Word a1 = parse_word("y*(z*x)"), a2 = parse_word("(x*y)*z");
    CHECK(expand_condition4(a1, a2, 1).outcome == Cond4Outcome::undetermined);
    const Cond4Result assoc = expand_condition4(a1, a2, 2);
    CHECK(assoc.outcome == Cond4Outcome::equal);
    CHECK(assoc.report.passed);

    const Word l1 = parse_word(lie_w1), l2 = parse_word(lie_w2);
    const Cond4Result lie = expand_condition4(l1, l2, 4, WordMode::anticomm);
    CHECK(lie.outcome == Cond4Outcome::equal);
    for (auto o : lie.pairs) CHECK(o == Cond4Outcome::equal);
    CHECK(expand_condition4(l1, l2, 3, WordMode::anticomm).outcome == Cond4Outcome::undetermined);
    CHECK(expand_condition4(l1, l2, 4, WordMode::plain).outcome == Cond4Outcome::equal);

    const Cond4Result loop = expand_condition4(parse_word("-z*(y*x)"), parse_word("-2*x*(z*y) - 2*y*(x*z)"), 5);
    CHECK(loop.outcome == Cond4Outcome::undetermined);
    CHECK_FALSE(loop.report.passed);

    const Cond4Result stuck = expand_condition4(parse_word("(z*y)*x"), parse_word("x*(y*z)"), 3);
    CHECK(stuck.outcome == Cond4Outcome::unequal_at_depth);
    CHECK(stuck.report.lhs != stuck.report.rhs);

    // one word is enough outside plain mode
    CHECK(expand_condition4(Word{}, parse_word("-y*(z*x) - z*(x*y)"), 4, WordMode::comm).outcome == Cond4Outcome::equal);
    CHECK(expand_condition4(Word{}, a2, 3).outcome == Cond4Outcome::undetermined);
    CHECK_THROWS_AS(expand_condition4(a1, a2, 0), InputError);
}

TEST_CASE("validating words on algebras")
{
    const WordSuite lie = canonical_words(Category::lie);
    CHECK(validate_word_on_algebra(catalog::sl2(), lie.w1, lie.w2).passed);
    const WordSuite lei = canonical_words(Category::leibniz);
    CHECK(validate_word_on_algebra(catalog::leibniz_a5(), lei.w1, lei.w2).passed);
    const WordSuite ass = canonical_words(Category::associative);
    const Report bad = validate_word_on_algebra(catalog::sl2(), ass.w1, ass.w2);
    CHECK_FALSE(bad.passed);
    CHECK(bad.witness.size() == 3);
    CHECK(bad.lhs != bad.rhs);
    CHECK(validate_word_on_algebra(catalog::sl2(), Word{}, Word{}).passed);
    CHECK_THROWS_AS(canonical_words(Category::raw), UnsupportedError);
}

TEST_CASE("word evaluation matches an independent tensor oracle")
{
    Rng rng(29);
    const Field f = Field::prime(5);
    const std::array<const char*, 4> words{"y*(z*x) + (y*x)*z", "(x*y)*z - (x*z)*y", "2*y*(x*z) - (z*x)*y", "x*(z*y)"};
    for (int t = 0; t < 10; ++t) {
        const Algebra a = raw_table(rng, f, 2);
        const oracle::Table tab = oracle::table_of(a);
        for (const char* text : words) {
            const Word w = parse_word(text);
            // oracle: (y*z)*x against the word, written out by hand per term
            bool ok = true;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        const oracle::Vec e[3] = {oracle::basis(tab, i), oracle::basis(tab, j), oracle::basis(tab, k)};
                        oracle::Vec rhs(2, 0);
                        for (const auto& term : w.terms) {
                            const auto& v = term.mono.vars;
                            const oracle::Vec m = term.mono.left ? oracle::mul(tab, oracle::mul(tab, e[v[0]], e[v[1]]), e[v[2]])
                                                                 : oracle::mul(tab, e[v[0]], oracle::mul(tab, e[v[1]], e[v[2]]));
                            for (int c = 0; c < 2; ++c) rhs[c] = ((rhs[c] + term.coeff * m[c]) % 5 + 5) % 5;
                        }
                        if (oracle::mul(tab, oracle::mul(tab, e[1], e[2]), e[0]) != rhs) ok = false;
                    }
            CHECK(validate_word_on_algebra(a, w, Word{}).passed == ok);
        }
    }
}

TEST_CASE("canonical words agree with the identity checks")
{
    Rng rng(41);
    std::vector<Algebra> inst{
        catalog::sl2(),
        catalog::heisenberg(),
        catalog::affine_line(),
        catalog::leibniz_a5(),
        catalog::matrix_algebra(Q, 2),
        catalog::truncated_polynomial(Q, 3),
        catalog::upper_triangular(Q),
        catalog::abelian(Q, 2),
        catalog::ground_field(Q),
        catalog::direct_sum(catalog::leibniz_a5(), catalog::sl2()),
    };
    for (int t = 0; t < 4; ++t) inst.push_back(random_algebra(rng, Field::prime(3), 2 + rng.below(2), Category::leibniz));
    for (int t = 0; t < 2; ++t) inst.push_back(random_algebra(rng, Field::prime(3), 2, Category::associative));
    for (int t = 0; t < 4; ++t) inst.push_back(raw_table(rng, Field::prime(2), 2));
    REQUIRE(inst.size() == 20);

    int seen_pass = 0, seen_fail = 0;
    for (const auto& a : inst) {
        const WordSuite lei = canonical_words(Category::leibniz);
        const bool wl = validate_word_on_algebra(a, lei.w1, lei.w2).passed;
        CHECK(wl == check_identity(a, Identity::leibniz).passed);
        CHECK(wl == oracle::is_leibniz(oracle::table_of(a)));

        const WordSuite ass = canonical_words(Category::associative);
        const bool wa = validate_word_on_algebra(a, ass.w1, ass.w2).passed;
        CHECK(wa == check_identity(a, Identity::associativity).passed);
        CHECK(wa == oracle::is_associative(oracle::table_of(a)));

        const WordSuite alt = canonical_words(Category::alternative);
        const bool wt = validate_word_on_algebra(a, alt.w1, alt.w2).passed;
        CHECK(wt == (check_identity(a, Identity::left_alternative).passed &&
                     check_identity(a, Identity::right_alternative).passed));
        (wl ? seen_pass : seen_fail)++;
    }
    CHECK(seen_pass > 0);
    CHECK(seen_fail > 0);
}
