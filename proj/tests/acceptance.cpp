// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run all
//   acceptance 3 7        run the listed ones
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "actorkit/atlas.hpp"
#include "actorkit/corpus.hpp"
#include "actorkit/existence.hpp"
#include "actorkit/group.hpp"
#include "actorkit/random.hpp"
#include "actorkit/words.hpp"
#include "oracles.hpp"

using namespace actorkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what)
    {
        if (ok) return;
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

struct Criterion {
    std::string title;
    double budget;  // seconds
    std::function<Outcome()> run;
};

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

constexpr std::size_t corpus_size = 120;

// Instance i of a corpus is drawn from splitmix64(seed + i), dims 2 and 3 in turn.
std::vector<Algebra> corpus(Category c, std::uint64_t seed)
{
    std::vector<Algebra> out;
    for (std::size_t i = 0; i < corpus_size; ++i) {
        Rng rng(splitmix64(seed + i));
        out.push_back(random_algebra(rng, F5, 2 + i % 2, c));
    }
    return out;
}

const std::vector<Algebra>& leibniz_corpus()
{
    static const std::vector<Algebra> c = corpus(Category::leibniz, 4001);
    return c;
}

const std::vector<Algebra>& associative_corpus()
{
    static const std::vector<Algebra> c = corpus(Category::associative, 5001);
    return c;
}

std::string tag(const char* corpus, std::size_t i) { return std::string(corpus) + " #" + std::to_string(i); }

Outcome lie_suite()
{
    Outcome o;
    const Algebra sl2 = catalog::sl2(Q);
    const Verdict v = actor_pipeline(sl2);
    o.expect(v.exists, "sl2: exists=false");
    o.expect(v.actor_dim == 3, "sl2: actor_dim " + std::to_string(v.actor_dim));
    o.expect(oracle::der_dim(oracle::table_of(sl2)) == 3, "sl2: oracle Der dim != 3");
    if (v.actor) o.expect(inner_image(*v.actor).dim() == v.actor->dim(), "sl2: Der is not spanned by ad");
    for (std::size_t n = 1; n <= 4; ++n) {
        const Algebra k = catalog::abelian(Q, n);
        const std::size_t dim = derivations(k).dim();
        const int oracle_dim = oracle::der_dim(oracle::table_of(k));
        o.expect(dim == n * n && oracle_dim == static_cast<int>(n * n),
                 "abelian " + std::to_string(n) + ": Der dim " + std::to_string(dim));
        const Verdict va = actor_pipeline(k);
        o.expect(va.exists && va.actor_dim == n * n, "abelian " + std::to_string(n) + ": verdict");
    }
    o.detail = "sl2 actor dim 3 = ad(sl2); Der(k^n) = n^2 for n <= 4";
    return o;
}

Outcome associative_suite()
{
    Outcome o;
    const Algebra m2 = catalog::matrix_algebra(Q, 2);
    const Verdict v = actor_pipeline(m2);
    o.expect(v.exists, "M2: exists=false");
    o.expect(v.actor_kind == "bim" && v.actor_dim == 4, "M2: actor " + v.actor_kind + " dim " + std::to_string(v.actor_dim));
    o.expect(oracle::bim_dim(oracle::table_of(m2)) == 4, "M2: oracle Bim dim != 4");
    o.expect(condition2_check(m2).passed, "M2: condition 2 fails");
    o.expect(!v.failure, "M2: Bim x A not associative");
    o.expect(v.flags.ann_zero, "M2: Ann != 0");
    if (v.actor) o.expect(rank(canonical_d(*v.actor)) == m2.dim(), "M2: d not injective");

    const Algebra dual = catalog::truncated_polynomial(Q, 2, Category::associative);
    const Verdict vd = actor_pipeline(dual);
    o.expect(vd.exists, "Q[x]/(x^2): exists=false");
    o.expect(vd.actor_dim == 2, "Q[x]/(x^2): actor dim " + std::to_string(vd.actor_dim));
    o.expect(oracle::bim_dim(oracle::table_of(dual)) == 2, "Q[x]/(x^2): oracle Bim dim != 2");
    o.detail = "M2(Q): Bim dim 4, d injective; Q[x]/(x^2): Bim dim 2";
    return o;
}

Outcome leibniz_biconditional()
{
    Outcome o;
    std::size_t yes = 0, bad_input = 0;
    const auto& c = leibniz_corpus();
    for (std::size_t i = 0; i < c.size(); ++i) {
        bad_input += !oracle::is_leibniz(oracle::table_of(c[i]));
        const bool cond = condition1_check(c[i]).passed;
        const bool exists = actor_pipeline(c[i]).exists;
        o.expect(cond == exists, tag("leibniz", i) + ": condition1 " + (cond ? "pass" : "fail") + ", exists " +
                                     (exists ? "true" : "false"));
        yes += exists;
    }
    o.expect(bad_input == 0, std::to_string(bad_input) + " corpus members fail the Leibniz identity");
    o.detail = std::to_string(c.size()) + " instances, " + std::to_string(yes) + " with actor";
    return o;
}

Outcome bider_variants()
{
    Outcome o;
    std::size_t non_leibniz = 0, disagree = 0, cond = 0, off_condition = 0;
    const auto& c = leibniz_corpus();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const ActorAlgebra b1 = biderivations(c[i], 1);
        const bool c1 = condition1_check(c[i]).passed;
        if (!check_category(b1.algebra, Category::leibniz).passed) {
            ++non_leibniz;
            off_condition += !c1;
            o.expect(false, tag("leibniz", i) + ": bider1 bracket is not Leibniz");
        }
        if (c1) {
            ++cond;
            if (!bider_variants_agree(c[i]).passed) {
                ++disagree;
                o.expect(false, tag("leibniz", i) + ": bider1 != bider2 under condition 1");
            }
        }
    }
    o.detail = std::to_string(non_leibniz) + "/" + std::to_string(c.size()) + " bider1 tensors not Leibniz (" +
               std::to_string(off_condition) + " of them fail condition 1); " +
               std::to_string(disagree) + "/" + std::to_string(cond) + " variant disagreements under condition 1";
    return o;
}

Outcome associative_biconditional()
{
    Outcome o;
    std::size_t yes = 0;
    const auto& c = associative_corpus();
    for (std::size_t i = 0; i < c.size(); ++i) {
        o.expect(oracle::is_associative(oracle::table_of(c[i])), tag("associative", i) + ": not associative");
        const bool cond = condition2_check(c[i]).passed;
        const bool exists = actor_pipeline(c[i]).exists;
        o.expect(cond == exists, tag("associative", i) + ": condition2 " + (cond ? "pass" : "fail") + ", exists " +
                                     (exists ? "true" : "false"));
        o.expect(check_category(bimultipliers(c[i]).algebra, Category::associative).passed,
                 tag("associative", i) + ": Bim tensor not associative");
        yes += exists;
    }
    o.detail = std::to_string(c.size()) + " instances, " + std::to_string(yes) + " with actor";
    return o;
}

Outcome semidirect_equivalence()
{
    const Report r = crosscheck_corpus(Field::prime(3), {Category::lie, Category::leibniz, Category::associative}, 2,
                                       1200, 2718);
    Outcome o;
    o.expect(r.passed, r.failed);
    o.detail = "1200 actions over GF(3), " + r.details.at(1).note + " derived, " + r.details.at(2).note +
               " discrepancies";
    return o;
}

Outcome sufficient_implication()
{
    Outcome o;
    std::size_t covered = 0;
    auto run = [&](const std::vector<Algebra>& c, const char* name, auto&& condition) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const SufficientFlags f = sufficient_conditions(c[i]);
            if (!f.ann_zero && !f.perfect) continue;
            ++covered;
            o.expect(condition(c[i]).passed, tag(name, i) + ": sufficient condition holds but the condition fails");
        }
    };
    run(leibniz_corpus(), "leibniz", [](const Algebra& a) { return condition1_check(a); });
    run(associative_corpus(), "associative", [](const Algebra& a) { return condition2_check(a); });
    o.detail = std::to_string(covered) + " instances with Ann = 0 or A^2 = A";
    return o;
}

Outcome group_suite()
{
    Outcome o;
    const std::map<std::string, std::size_t> expected{
        {"trivial", 1}, {"Z2", 1}, {"Z3", 2}, {"Z4", 2},      {"V4", 6},     {"Z5", 4},  {"Z6", 2},
        {"S3", 6},      {"Z7", 6}, {"Z8", 4}, {"Z4xZ2", 8}, {"Z2^3", 168}, {"D4", 8}, {"Q8", 24}};
    for (const auto& [name, g] : groups::small_groups(8)) {
        // brute force over all bijections
        std::vector<std::size_t> p(g.order);
        for (std::size_t i = 0; i < g.order; ++i) p[i] = i;
        std::size_t brute = 0;
        do {
            bool hom = true;
            for (std::size_t a = 0; a < g.order && hom; ++a)
                for (std::size_t b = 0; b < g.order && hom; ++b) hom = p[g.op(a, b)] == g.op(p[a], p[b]);
            brute += hom;
        } while (std::next_permutation(p.begin(), p.end()));
        const std::size_t n = automorphisms(g).perms.size();
        o.expect(n == brute && n == expected.at(name), name + ": |Aut| " + std::to_string(n) + ", brute force " +
                                                            std::to_string(brute));
        const Report h = holomorph_check(g);
        o.expect(h.passed, name + ": holomorph " + h.failed);
    }
    for (const auto& [name, g] : groups::small_groups(6)) {
        const Report u = group_universality_check(g, 6);
        o.expect(u.passed, name + ": universality " + u.failed);
    }
    o.detail = "14 groups of order <= 8; universality for orders <= 6";
    return o;
}

Algebra raw_table(Rng& rng, Field f, std::size_t n)
{
    std::vector<Scalar> t;
    for (std::size_t i = 0; i < n * n * n; ++i) t.emplace_back(f, static_cast<long>(rng.below(f.characteristic())));
    return Algebra(f, n, std::move(t), Category::raw);
}

Outcome word_suite()
{
    Outcome o;
    const WordSuite lie = canonical_words(Category::lie);
    o.expect(check_T_coverage(lie.w1, lie.w2, WordMode::anticomm).passed, "Lie words do not cover T under anticomm");

    const WordSuite lei = canonical_words(Category::leibniz);
    const Report lr = check_T_coverage(lei.w1, lei.w2, WordMode::plain);
    o.expect(!lr.passed && lr.failed == "T pair {y*(x*z), z*(x*y)} uncovered",
             "Leibniz words: " + (lr.passed ? std::string("covered") : lr.failed));
    std::size_t uncovered = 0;
    for (const auto& d : lr.details) uncovered += d.status == "fail";
    o.expect(uncovered == 1, "Leibniz words: " + std::to_string(uncovered) + " pairs uncovered");

    const Word sym = parse_word("-y*(z*x) - z*(x*y)", WordSide::w2);
    const Report sr = check_T_coverage(Word{}, sym, WordMode::comm);
    std::size_t covered = 0;
    for (const auto& d : sr.details) covered += d.status == "pass";
    o.expect(sr.passed && covered == 4, "symmetric word covers " + std::to_string(covered) + " pairs under comm");

    Rng rng(41);
    std::vector<Algebra> inst{catalog::sl2(),
                              catalog::heisenberg(),
                              catalog::affine_line(),
                              catalog::leibniz_a5(),
                              catalog::matrix_algebra(Q, 2),
                              catalog::truncated_polynomial(Q, 3),
                              catalog::upper_triangular(Q),
                              catalog::abelian(Q, 2),
                              catalog::ground_field(Q),
                              catalog::direct_sum(catalog::leibniz_a5(), catalog::sl2())};
    for (int t = 0; t < 4; ++t) inst.push_back(random_algebra(rng, Field::prime(3), 2 + rng.below(2), Category::leibniz));
    for (int t = 0; t < 2; ++t) inst.push_back(random_algebra(rng, Field::prime(3), 2, Category::associative));
    for (int t = 0; t < 4; ++t) inst.push_back(raw_table(rng, Field::prime(2), 2));
    const WordSuite ass = canonical_words(Category::associative);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const Algebra& a = inst[i];
        o.expect(validate_word_on_algebra(a, lei.w1, lei.w2).passed == check_identity(a, Identity::leibniz).passed,
                 "instance " + std::to_string(i) + ": Leibniz words disagree");
        o.expect(validate_word_on_algebra(a, ass.w1, ass.w2).passed ==
                     check_identity(a, Identity::associativity).passed,
                 "instance " + std::to_string(i) + ": associative words disagree");
    }
    o.detail = "coverage, symmetric word, validation on " + std::to_string(inst.size()) + " fixed instances";
    return o;
}

Outcome crossed_modules()
{
    Outcome o;
    std::size_t checked = 0;
    auto run = [&](const Algebra& a, const std::string& name) {
        const Verdict v = actor_pipeline(a);
        if (!v.exists || !v.actor) return;
        ++checked;
        const Report x = crossed_module_check(canonical_d(*v.actor), v.actor->action);
        o.expect(x.passed, name + ": " + x.failed);
        o.expect(is_ideal(v.actor->algebra, inner_image(*v.actor)).passed, name + ": image of d is not an ideal");
    };
    for (std::size_t i = 0; i < leibniz_corpus().size(); ++i) run(leibniz_corpus()[i], tag("leibniz", i));
    for (std::size_t i = 0; i < associative_corpus().size(); ++i) run(associative_corpus()[i], tag("associative", i));
    const std::vector<std::pair<std::string, Algebra>> fixed{
        {"sl2", catalog::sl2()},
        {"heisenberg", catalog::heisenberg()},
        {"affine_line", catalog::affine_line()},
        {"leibniz_a5", catalog::leibniz_a5()},
        {"M2", catalog::matrix_algebra(Q, 2)},
        {"Q[x]/(x^2)", catalog::truncated_polynomial(Q, 2, Category::associative)},
        {"Q[x]/(x^3)", catalog::truncated_polynomial(Q, 3)},
        {"upper_triangular", catalog::upper_triangular(Q)},
        {"abelian3", catalog::abelian(Q, 3)},
        {"ground_field", catalog::ground_field(Q)}};
    for (const auto& [name, a] : fixed) run(a, name);
    o.detail = std::to_string(checked) + " instances with an actor";
    return o;
}

Outcome module_category()
{
    Outcome o;
    std::size_t n = 0;
    for (Field f : {Q, Field::prime(2), F5, Field::prime(7)})
        for (std::size_t d = 0; d <= 4; ++d) {
            const Verdict v = actor_pipeline(Algebra::zero(f, d, Category::module));
            o.expect(v.exists && v.actor_dim == 0,
                     "dim " + std::to_string(d) + ": exists " + (v.exists ? "true" : "false") + ", actor_dim " +
                         std::to_string(v.actor_dim));
            ++n;
        }
    o.detail = std::to_string(n) + " zero-tensor modules";
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all{
        {"Lie suite", 1, lie_suite},
        {"associative suite", 1, associative_suite},
        {"Leibniz: condition 1 <=> actor exists", 60, leibniz_biconditional},
        {"Leibniz: bider1 is Leibniz; bider1 = bider2 under condition 1", 60, bider_variants},
        {"associative: condition 2 <=> actor exists; Bim associative", 60, associative_biconditional},
        {"derived action <=> semidirect product in category", 60, semidirect_equivalence},
        {"Ann = 0 or perfect => condition 1/2", 60, sufficient_implication},
        {"group suite", 30, group_suite},
        {"word suite", 60, word_suite},
        {"crossed modules", 60, crossed_modules},
        {"module category", 60, module_category},
    };

    std::vector<std::size_t> pick;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long k = std::strtol(argv[i], &end, 10);
        if (*end || k < 1 || k > static_cast<long>(all.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1..%zu]...\n", argv[0], all.size());
            return 2;
        }
        pick.push_back(static_cast<std::size_t>(k));
    }
    if (pick.empty())
        for (std::size_t k = 1; k <= all.size(); ++k) pick.push_back(k);

    bool ok = true;
    for (std::size_t k : pick) {
        const Criterion& c = all[k - 1];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.expect(secs <= c.budget, "over the time budget of " + std::to_string(static_cast<int>(c.budget)) + " s");
        std::printf("criterion %2zu: %s  %s (%s; %.2f s)\n", k, o.pass ? "PASS" : "FAIL", c.title.c_str(),
                    o.detail.c_str(), secs);
        for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
