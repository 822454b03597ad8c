// actorkit command line. Talks to the library only through actorkit.h.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "actorkit/actorkit.h"

namespace {

enum Exit { ok = 0, negative = 1, invalid = 2, internal = 3 };

struct Failure {
    ak_status status;
    std::string message;
};

void check(ak_status s)
{
    if (s != AK_OK) throw Failure{s, ak_last_error()};
}

struct Text {
    char* p = nullptr;
    ~Text() { ak_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
};
using Algebra = Handle<ak_algebra, ak_algebra_free>;
using Action = Handle<ak_action, ak_action_free>;
using Actor = Handle<ak_actor, ak_actor_free>;
using Group = Handle<ak_group, ak_group_free>;

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{AK_ERR_INPUT, "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "catalog:NAME" picks a built-in algebra, anything else is a JSON file.
void load_algebra(const std::string& src, const std::string& field, Algebra& out)
{
    const std::string prefix = "catalog:";
    if (src.rfind(prefix, 0) == 0)
        check(ak_algebra_named(src.substr(prefix.size()).c_str(), field.c_str(), &out.p));
    else
        check(ak_algebra_from_json(slurp(src).c_str(), &out.p));
}

void load_group(const std::string& src, Group& out)
{
    const std::string prefix = "catalog:";
    if (src.rfind(prefix, 0) == 0)
        check(ak_group_named(src.substr(prefix.size()).c_str(), &out.p));
    else
        check(ak_group_from_json(slurp(src).c_str(), &out.p));
}

struct Output {
    std::string format = "json";

    // Prints a report-like document in the chosen format.
    void report(const Text& doc) const
    {
        if (format == "json") {
            std::cout << doc.str() << "\n";
            return;
        }
        Text t;
        check(ak_render_text(doc.p, &t.p));
        std::cout << t.str();
    }

    void document(const Text& doc, const std::string& summary) const
    {
        if (format == "json")
            std::cout << doc.str() << "\n";
        else
            std::cout << summary << "\n";
    }
};

void line_to_stream(const char* line, void* user) { *static_cast<std::ostream*>(user) << line << "\n"; }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"actorkit: actors of algebras and groups given by structure constants"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.set_version_flag("--version", std::string(ak_version()));
    int code = ok;

    std::string input, field = "Q", category;

    auto* check_cmd = app.add_subcommand("check", "run the identity suite of the algebra's category");
    check_cmd->add_option("algebra", input, "algebra JSON file or catalog:NAME")->required();
    check_cmd->add_option("--category", category, "check this category instead of the tagged one");
    check_cmd->add_option("--field", field, "field for catalog algebras: Q or a prime");
    check_cmd->callback([&] {
        Algebra a;
        load_algebra(input, field, a);
        Text r;
        int passed = 0;
        check(ak_check(a.p, category.empty() ? nullptr : category.c_str(), &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });

    std::string kind;
    auto* construct_cmd = app.add_subcommand("construct", "build Der, Bim, Bider or M of an algebra");
    construct_cmd->add_option("kind", kind, "der, bim, bider, bider1, bider2 or mult")
        ->required()
        ->check(CLI::IsMember({"der", "bim", "bider", "bider1", "bider2", "mult"}));
    construct_cmd->add_option("algebra", input, "algebra JSON file or catalog:NAME")->required();
    construct_cmd->add_option("--field", field, "field for catalog algebras: Q or a prime");
    construct_cmd->callback([&] {
        Algebra a;
        load_algebra(input, field, a);
        Actor x;
        check(ak_construct(a.p, kind.c_str(), &x.p));
        Text doc;
        check(ak_actor_to_json(x.p, &doc.p));
        out.document(doc, kind + ": dim " + std::to_string(ak_actor_dim(x.p)));
    });

    int variant = 1;
    bool with_actor = false;
    std::string candidate;
    auto* actor_cmd = app.add_subcommand("actor", "decide whether the actor exists");
    actor_cmd->add_option("algebra", input, "algebra JSON file or catalog:NAME")->required();
    actor_cmd->add_option("--variant", variant, "biderivation bracket")->check(CLI::IsMember({1, 2}));
    actor_cmd->add_option("--field", field, "field for catalog algebras: Q or a prime");
    actor_cmd->add_option("--candidate", candidate, "action JSON, alternative algebras only");
    actor_cmd->add_flag("--with-actor", with_actor, "include the actor in the verdict");
    actor_cmd->callback([&] {
        Algebra a;
        load_algebra(input, field, a);
        Action cand;
        if (!candidate.empty()) check(ak_action_from_json(slurp(candidate).c_str(), &cand.p));
        Text v;
        int exists = 0;
        check(ak_actor_pipeline(a.p, variant, cand.p, with_actor ? 1 : 0, &v.p, &exists));
        out.report(v);
        code = exists ? ok : negative;
    });

    auto* semidirect_cmd = app.add_subcommand("semidirect", "form the semidirect product of an action");
    semidirect_cmd->add_option("action", input, "action JSON file")->required();
    semidirect_cmd->callback([&] {
        Action act;
        check(ak_action_from_json(slurp(input).c_str(), &act.p));
        Algebra sd;
        check(ak_semidirect(act.p, &sd.p));
        Text doc;
        check(ak_algebra_to_json(sd.p, &doc.p));
        out.document(doc, "semidirect product: dim " + std::to_string(ak_algebra_dim(sd.p)));
    });

    auto* action_cmd = app.add_subcommand("action-check", "check the derived-action conditions of an action");
    action_cmd->add_option("action", input, "action JSON file")->required();
    action_cmd->add_option("--category", category, "category instead of the target's tag");
    action_cmd->callback([&] {
        Action act;
        check(ak_action_from_json(slurp(input).c_str(), &act.p));
        Text r;
        int passed = 0;
        check(ak_action_check(act.p, category.empty() ? nullptr : category.c_str(), &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });

    std::string actor_file;
    auto* xmod_cmd = app.add_subcommand("xmod-check", "check d: A -> actor as a crossed module");
    xmod_cmd->add_option("algebra", input, "algebra JSON file or catalog:NAME")->required();
    xmod_cmd->add_option("--actor", actor_file, "actor JSON file (from construct)")->required();
    xmod_cmd->add_option("--field", field, "field for catalog algebras: Q or a prime");
    xmod_cmd->callback([&] {
        Algebra a;
        load_algebra(input, field, a);
        Actor x;
        check(ak_actor_from_json(slurp(actor_file).c_str(), &x.p));
        Text r;
        int passed = 0;
        check(ak_xmod_check(a.p, x.p, &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });

    std::string w1, w2, mode;
    int depth = 3, sign = -1;
    auto* words_cmd = app.add_subcommand("words", "Axiom-2 word checks");
    words_cmd->require_subcommand(1);
    auto word_flags = [&](CLI::App* c) {
        c->add_option("--w1", w1, "word for (y*z)*x");
        c->add_option("--w2", w2, "word for x*(y*z)");
        c->add_option("--mode", mode, "plain, comm or anticomm")->check(CLI::IsMember({"plain", "comm", "anticomm"}));
    };
    auto mode_or_plain = [&] { return mode.empty() ? "plain" : mode.c_str(); };
    auto* coverage = words_cmd->add_subcommand("coverage", "coverage of the set T");
    word_flags(coverage);
    coverage->callback([&] {
        Text r;
        int passed = 0;
        check(ak_words_coverage(w1.c_str(), w2.c_str(), mode_or_plain(), &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });
    auto* symmetry = words_cmd->add_subcommand("symmetry", "W2 under the swap y <-> z");
    word_flags(symmetry);
    symmetry->add_option("--sign", sign, "1 for commutative, -1 for anticommutative")->check(CLI::IsMember({1, -1}));
    symmetry->callback([&] {
        Text r;
        int passed = 0;
        check(ak_words_symmetry(w2.c_str(), sign, mode.empty() ? nullptr : mode.c_str(), &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });
    auto* cond4 = words_cmd->add_subcommand("cond4", "bounded rewriting of the four depth-4 terms");
    word_flags(cond4);
    cond4->add_option("--depth", depth, "rewrite depth per side")->check(CLI::Range(1, 64));
    cond4->callback([&] {
        Text r;
        int outcome = 0;
        check(ak_words_cond4(w1.c_str(), w2.c_str(), depth, mode_or_plain(), &r.p, &outcome));
        out.report(r);
        code = outcome == 0 ? ok : negative;
    });
    auto* validate = words_cmd->add_subcommand("validate", "evaluate the words on an algebra");
    word_flags(validate);
    validate->add_option("algebra", input, "algebra JSON file or catalog:NAME")->required();
    validate->add_option("--field", field, "field for catalog algebras: Q or a prime");
    validate->callback([&] {
        Algebra a;
        load_algebra(input, field, a);
        Text r;
        int passed = 0;
        check(ak_words_validate(a.p, w1.c_str(), w2.c_str(), &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });

    std::size_t cap = 24, max_b = 6;
    auto* group_cmd = app.add_subcommand("group", "finite groups given by Cayley tables");
    group_cmd->require_subcommand(1);
    auto group_input = [&](CLI::App* c) {
        c->add_option("group", input, "group JSON file or catalog:NAME")->required();
        c->add_option("--cap", cap, "largest group order handled")->check(CLI::Range(1, 4096));
    };
    auto* aut = group_cmd->add_subcommand("aut", "automorphism group");
    group_input(aut);
    aut->callback([&] {
        Group g;
        load_group(input, g);
        Text doc;
        check(ak_group_aut(g.p, cap, &doc.p));
        out.document(doc, "|Aut| = " + std::to_string(nlohmann::json::parse(doc.str()).at("order").get<std::size_t>()));
    });
    auto* inn = group_cmd->add_subcommand("inn", "inner automorphisms");
    group_input(inn);
    inn->callback([&] {
        Group g;
        load_group(input, g);
        Text doc;
        check(ak_group_inn(g.p, cap, &doc.p));
        out.document(doc, "|Inn| = " + std::to_string(nlohmann::json::parse(doc.str()).at("order").get<std::size_t>()));
    });
    auto* hol = group_cmd->add_subcommand("holomorph", "holomorph and the crossed module G -> Aut(G)");
    group_input(hol);
    hol->callback([&] {
        Group g;
        load_group(input, g);
        Text r;
        int passed = 0;
        check(ak_group_holomorph(g.p, cap, &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });
    auto* uni = group_cmd->add_subcommand("universality", "every action of a small group factors through Aut");
    uni->add_option("group", input, "group JSON file or catalog:NAME")->required();
    uni->add_option("--max-order", max_b, "largest acting group")->check(CLI::Range(1, 8));
    uni->callback([&] {
        Group g;
        load_group(input, g);
        Text r;
        int passed = 0;
        check(ak_group_universality(g.p, max_b, &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });

    std::string atlas_field = "5", atlas_category = "leibniz", out_path;
    std::size_t dim = 2, samples = 10;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    auto* atlas = app.add_subcommand("atlas", "classify a seeded random corpus (JSONL)");
    atlas->add_option("--field", atlas_field, "Q or a prime");
    atlas->add_option("--dim", dim, "algebra dimension")->check(CLI::Range(1, 8));
    atlas->add_option("--category", atlas_category, "lie, leibniz, associative, commutative, alternative, module");
    atlas->add_option("--samples", samples, "number of instances");
    atlas->add_option("--seed", seed, "corpus seed");
    atlas->add_option("--out", out_path, "output file (default stdout)");
    atlas->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    atlas->add_option("--variant", variant, "biderivation bracket")->check(CLI::IsMember({1, 2}));
    atlas->callback([&] {
        std::ofstream file;
        std::ostream* sink = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) throw Failure{AK_ERR_INPUT, "cannot write '" + out_path + "'"};
            sink = &file;
        }
        check(ak_atlas(atlas_field.c_str(), dim, atlas_category.c_str(), samples, seed, jobs, variant, line_to_stream, sink));
    });

    std::string cats = "lie,leibniz,associative", cross_field = "3";
    std::size_t max_dim = 2, cross_samples = 1000;
    auto* cross = app.add_subcommand("crosscheck", "derived-action conditions vs semidirect identities on random actions");
    cross->add_option("--field", cross_field, "Q or a prime");
    cross->add_option("--categories", cats, "comma-separated categories, taken in turn");
    cross->add_option("--max-dim", max_dim, "largest dimension of B and A")->check(CLI::Range(1, 4));
    cross->add_option("--samples", cross_samples, "number of random actions");
    cross->add_option("--seed", seed, "corpus seed");
    cross->callback([&] {
        Text r;
        int passed = 0;
        check(ak_crosscheck(cross_field.c_str(), cats.c_str(), max_dim, cross_samples, seed, &r.p, &passed));
        out.report(r);
        code = passed ? ok : negative;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int c = app.exit(e);
        return c == 0 ? ok : invalid;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.status == AK_ERR_INTERNAL ? internal : invalid;
    }
    std::cout.flush();
    return code;
}
