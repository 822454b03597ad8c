#include "actorkit/actorkit.h"

#include <cstring>
#include <string>

#include "actorkit/atlas.hpp"
#include "actorkit/corpus.hpp"
#include "actorkit/errors.hpp"
#include "actorkit/json_io.hpp"

using namespace actorkit;

struct ak_algebra {
    Algebra value;
};
struct ak_action {
    ActionPair value;
};
struct ak_actor {
    ActorAlgebra value;
};
struct ak_group {
    Group value;
};

namespace {

thread_local std::string last_error;

template <class F>
ak_status guard(F&& f)
{
    try {
        f();
        last_error.clear();
        return AK_OK;
    } catch (const InputError& e) {
        last_error = e.what();
        return AK_ERR_INPUT;
    } catch (const UnsupportedError& e) {
        last_error = e.what();
        return AK_ERR_UNSUPPORTED;
    } catch (const CapExceeded& e) {
        last_error = e.what();
        return AK_ERR_CAP;
    } catch (const ConstructionError& e) {
        last_error = e.what();
        return AK_ERR_CONSTRUCTION;
    } catch (const std::exception& e) {
        last_error = e.what();
        return AK_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return AK_ERR_INTERNAL;
    }
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what)
{
    if (!p) throw InputError(std::string(what) + " is NULL");
}

void put(char** out, const json& j)
{
    need(out, "output pointer");
    *out = dup(j.dump(2));
}

void put_report(const Report& r, char** report, int* passed)
{
    put(report, report_to_json(r));
    if (passed) *passed = r.passed ? 1 : 0;
}

Field parse_field(const char* text)
{
    need(text, "field");
    const std::string s = text;
    if (s == "Q") return Field::rationals();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("field must be Q or a prime, got '" + s + "'");
    return Field::prime(std::stoull(s));
}

Word word(const char* text, WordSide side)
{
    if (!text || !*text) return Word{{}, side};
    return parse_word(text, side);
}

std::size_t suffix_number(const std::string& name, const std::string& prefix)
{
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 2)
        throw InputError("unknown algebra name '" + name + "'");
    return std::stoul(rest);
}

Algebra named_algebra(const std::string& name, Field f)
{
    if (name == "sl2") return catalog::sl2(f);
    if (name == "heisenberg") return catalog::heisenberg(f);
    if (name == "affine_line") return catalog::affine_line(f);
    if (name == "leibniz_a5") return catalog::leibniz_a5(f);
    if (name == "upper_triangular") return catalog::upper_triangular(f);
    if (name == "ground_field") return catalog::ground_field(f);
    if (name.rfind("matrix", 0) == 0) return catalog::matrix_algebra(f, suffix_number(name, "matrix"));
    if (name.rfind("truncated", 0) == 0) return catalog::truncated_polynomial(f, suffix_number(name, "truncated"));
    if (name.rfind("abelian", 0) == 0) return catalog::abelian(f, suffix_number(name, "abelian"));
    throw InputError("unknown algebra name '" + name + "'");
}

}  // namespace

extern "C" {

const char* ak_version(void) { return "0.1.0"; }

const char* ak_last_error(void) { return last_error.c_str(); }

void ak_string_free(char* s) { std::free(s); }

ak_status ak_algebra_from_json(const char* text, ak_algebra** out)
{
    return guard([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new ak_algebra{algebra_from_json(parse_json_text(text))};
    });
}

ak_status ak_algebra_named(const char* name, const char* field, ak_algebra** out)
{
    return guard([&] {
        need(name, "name");
        need(out, "output pointer");
        *out = new ak_algebra{named_algebra(name, parse_field(field ? field : "Q"))};
    });
}

ak_status ak_algebra_to_json(const ak_algebra* a, char** out)
{
    return guard([&] {
        need(a, "algebra");
        put(out, algebra_to_json(a->value));
    });
}

size_t ak_algebra_dim(const ak_algebra* a) { return a ? a->value.dim() : 0; }

void ak_algebra_free(ak_algebra* a) { delete a; }

ak_status ak_check(const ak_algebra* a, const char* category, char** report, int* passed)
{
    return guard([&] {
        need(a, "algebra");
        const Category c = category ? parse_category(category) : a->value.category();
        put_report(check_category(a->value, c), report, passed);
    });
}

ak_status ak_construct(const ak_algebra* a, const char* kind, ak_actor** out)
{
    return guard([&] {
        need(a, "algebra");
        need(kind, "kind");
        need(out, "output pointer");
        *out = new ak_actor{build_actor(a->value, parse_actor_kind(kind))};
    });
}

ak_status ak_actor_from_json(const char* text, ak_actor** out)
{
    return guard([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new ak_actor{actor_from_json(parse_json_text(text))};
    });
}

ak_status ak_actor_to_json(const ak_actor* x, char** out)
{
    return guard([&] {
        need(x, "actor");
        put(out, actor_to_json(x->value));
    });
}

size_t ak_actor_dim(const ak_actor* x) { return x ? x->value.dim() : 0; }

void ak_actor_free(ak_actor* x) { delete x; }

ak_status ak_actor_pipeline(const ak_algebra* a, int bider_variant, const ak_action* candidate, int with_actor,
                            char** verdict, int* exists)
{
    return guard([&] {
        need(a, "algebra");
        if (bider_variant != 1 && bider_variant != 2) throw InputError("variant must be 1 or 2");
        PipelineOptions opts;
        opts.bider_variant = bider_variant;
        if (candidate) opts.candidate = candidate->value;
        const Verdict v = actor_pipeline(a->value, opts);
        put(verdict, verdict_to_json(v, with_actor != 0));
        if (exists) *exists = v.exists ? 1 : 0;
    });
}

ak_status ak_xmod_check(const ak_algebra* a, const ak_actor* actor, char** report, int* passed)
{
    return guard([&] {
        need(a, "algebra");
        need(actor, "actor");
        const ActorAlgebra& x = actor->value;
        if (x.target.field() != a->value.field() || x.target.tensor() != a->value.tensor())
            throw InputError("actor was built for a different algebra");
        auto r = Report::start("xmod");
        r.absorb(crossed_module_check(canonical_d(x), x.action));
        auto ideal = is_ideal(x.algebra, inner_image(x));
        ideal.check = "image of d is an ideal";
        r.absorb(ideal);
        put_report(r, report, passed);
    });
}

ak_status ak_action_from_json(const char* text, ak_action** out)
{
    return guard([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new ak_action{action_from_json(parse_json_text(text))};
    });
}

ak_status ak_action_to_json(const ak_action* act, char** out)
{
    return guard([&] {
        need(act, "action");
        put(out, action_to_json(act->value));
    });
}

void ak_action_free(ak_action* act) { delete act; }

ak_status ak_semidirect(const ak_action* act, ak_algebra** out)
{
    return guard([&] {
        need(act, "action");
        need(out, "output pointer");
        *out = new ak_algebra{semidirect(act->value)};
    });
}

ak_status ak_action_check(const ak_action* act, const char* category, char** report, int* passed)
{
    return guard([&] {
        need(act, "action");
        const Category c = category ? parse_category(category) : act->value.A.category();
        const EquivalenceCheck e = semidirect_crosscheck(c, act->value);
        auto r = Report::start("action-check");
        auto derived = check_derived_action(c, act->value);
        r.absorb(derived);
        r.note("semidirect product in category", e.semidirect ? "pass" : "fail");
        r.absorb(e.report);
        put_report(r, report, passed);
    });
}

ak_status ak_words_coverage(const char* w1, const char* w2, const char* mode, char** report, int* passed)
{
    return guard([&] {
        put_report(check_T_coverage(word(w1, WordSide::w1), word(w2, WordSide::w2), parse_word_mode(mode ? mode : "plain")),
                   report, passed);
    });
}

ak_status ak_words_symmetry(const char* w2, int sign, const char* mode, char** report, int* passed)
{
    return guard([&] {
        const Word w = word(w2, WordSide::w2);
        put_report(mode ? check_w2_symmetry(w, sign, parse_word_mode(mode)) : check_w2_symmetry(w, sign), report, passed);
    });
}

ak_status ak_words_cond4(const char* w1, const char* w2, int depth, const char* mode, char** result, int* outcome)
{
    return guard([&] {
        const Cond4Result r =
            expand_condition4(word(w1, WordSide::w1), word(w2, WordSide::w2), depth, parse_word_mode(mode ? mode : "plain"));
        put(result, cond4_to_json(r));
        if (outcome) *outcome = static_cast<int>(r.outcome);
    });
}

ak_status ak_words_validate(const ak_algebra* a, const char* w1, const char* w2, char** report, int* passed)
{
    return guard([&] {
        need(a, "algebra");
        put_report(validate_word_on_algebra(a->value, word(w1, WordSide::w1), word(w2, WordSide::w2)), report, passed);
    });
}

ak_status ak_group_from_json(const char* text, ak_group** out)
{
    return guard([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new ak_group{group_from_json(parse_json_text(text))};
    });
}

ak_status ak_group_named(const char* name, ak_group** out)
{
    return guard([&] {
        need(name, "name");
        need(out, "output pointer");
        *out = new ak_group{groups::by_name(name)};
    });
}

ak_status ak_group_to_json(const ak_group* g, char** out)
{
    return guard([&] {
        need(g, "group");
        put(out, group_to_json(g->value));
    });
}

void ak_group_free(ak_group* g) { delete g; }

ak_status ak_group_aut(const ak_group* g, size_t order_cap, char** out)
{
    return guard([&] {
        need(g, "group");
        const AutGroup aut = automorphisms(g->value, order_cap ? order_cap : 24);
        put(out, json{{"order", aut.perms.size()}, {"perms", aut.perms}, {"group", group_to_json(aut.group)}});
    });
}

ak_status ak_group_inn(const ak_group* g, size_t order_cap, char** out)
{
    return guard([&] {
        need(g, "group");
        const AutGroup aut = automorphisms(g->value, order_cap ? order_cap : 24);
        const InnerAut inn = inner_automorphisms(g->value, aut);
        put(out, json{{"order", inn.subgroup.size()},
                      {"aut_order", aut.perms.size()},
                      {"tau", inn.tau},
                      {"subgroup", inn.subgroup},
                      {"kernel", inn.kernel}});
    });
}

ak_status ak_group_holomorph(const ak_group* g, size_t order_cap, char** report, int* passed)
{
    return guard([&] {
        need(g, "group");
        put_report(holomorph_check(g->value, order_cap ? order_cap : 24), report, passed);
    });
}

ak_status ak_group_universality(const ak_group* g, size_t max_b, char** report, int* passed)
{
    return guard([&] {
        need(g, "group");
        put_report(group_universality_check(g->value, max_b), report, passed);
    });
}

ak_status ak_atlas(const char* field, size_t dim, const char* category, size_t samples, uint64_t seed, unsigned jobs,
                   int bider_variant, ak_line_fn emit, void* user)
{
    return guard([&] {
        need(category, "category");
        need(reinterpret_cast<const void*>(emit), "callback");
        if (bider_variant != 1 && bider_variant != 2) throw InputError("variant must be 1 or 2");
        AtlasOptions o;
        o.field = parse_field(field);
        o.dim = dim;
        o.category = parse_category(category);
        o.samples = samples;
        o.seed = seed;
        o.jobs = jobs;
        o.bider_variant = bider_variant;
        run_atlas(o, [&](const std::string& line) { emit(line.c_str(), user); });
    });
}

ak_status ak_crosscheck(const char* field, const char* categories, size_t max_dim, size_t samples, uint64_t seed,
                        char** report, int* passed)
{
    return guard([&] {
        need(categories, "categories");
        std::vector<Category> cats;
        std::string_view rest = categories;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            cats.push_back(parse_category(rest.substr(0, comma)));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        put_report(crosscheck_corpus(parse_field(field), cats, max_dim, samples, seed), report, passed);
    });
}

ak_status ak_render_text(const char* report_json, char** out)
{
    return guard([&] {
        need(report_json, "json");
        const json j = parse_json_text(report_json);
        std::string text;
        if (j.contains("exists")) {
            text = std::string(j.at("exists").get<bool>() ? "EXISTS" : "DOES NOT EXIST") + " actor_kind=" +
                   j.value("actor_kind", "") + " actor_dim=" + std::to_string(j.value("actor_dim", 0)) +
                   " semidirect_dim=" + std::to_string(j.value("semidirect_dim", 0)) + "\n";
            if (j.contains("note")) text += "  " + j.at("note").get<std::string>() + "\n";
            if (j.contains("condition")) text += render_text(report_from_json(j.at("condition")));
            if (j.contains("failure")) text += render_text(report_from_json(j.at("failure")));
        } else if (j.contains("outcome")) {
            text = "outcome: " + j.at("outcome").get<std::string>() + "\n" + render_text(report_from_json(j.at("report")));
        } else {
            text = render_text(report_from_json(j));
        }
        need(out, "output pointer");
        *out = dup(text);
    });
}

}  // extern "C"
