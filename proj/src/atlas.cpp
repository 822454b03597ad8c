#include "actorkit/atlas.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "actorkit/actions.hpp"
#include "actorkit/corpus.hpp"
#include "actorkit/errors.hpp"
#include "actorkit/existence.hpp"
#include "actorkit/json_io.hpp"

namespace actorkit {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void run_atlas(const AtlasOptions& opts, const std::function<void(const std::string&)>& emit)
{
    if (opts.category == Category::raw) throw InputError("atlas needs a category other than raw");
    if (opts.jobs == 0) throw InputError("atlas needs at least one job");
    std::vector<std::string> lines(opts.samples);
    std::vector<int> outcome(opts.samples, 0);  // 1 exists, 0 not, -1 error
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < opts.samples; i = next++) {
            const std::uint64_t s = splitmix64(opts.seed + i);
            json line{{"index", i}, {"seed", s}};
            try {
                Rng rng(s);
                const Algebra a = random_algebra(rng, opts.field, opts.dim, opts.category);
                PipelineOptions po;
                po.bider_variant = opts.bider_variant;
                const Verdict v = actor_pipeline(a, po);
                line["algebra"] = algebra_to_json(a);
                line["verdict"] = verdict_to_json(v);
                outcome[i] = v.exists ? 1 : 0;
            } catch (const Error& e) {
                line["error"] = e.what();
                outcome[i] = -1;
            }
            lines[i] = line.dump();
        }
    };
    const unsigned jobs = std::min<std::size_t>(opts.jobs, std::max<std::size_t>(opts.samples, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::size_t yes = 0, no = 0, err = 0;
    for (std::size_t i = 0; i < opts.samples; ++i) {
        emit(lines[i]);
        (outcome[i] > 0 ? yes : outcome[i] == 0 ? no : err)++;
    }
    json summary{{"samples", opts.samples},   {"exists", yes},
                 {"not_exists", no},          {"errors", err},
                 {"field", field_to_json(opts.field)}, {"dim", opts.dim},
                 {"category", std::string(to_string(opts.category))}, {"seed", opts.seed},
                 {"bider_variant", opts.bider_variant}};
    emit(json{{"summary", std::move(summary)}}.dump());
}

Report crosscheck_corpus(Field f, const std::vector<Category>& cats, std::size_t max_dim, std::size_t samples,
                         std::uint64_t seed)
{
    if (cats.empty()) throw InputError("crosscheck needs at least one category");
    if (max_dim == 0) throw InputError("crosscheck needs max_dim >= 1");
    for (auto c : cats)
        if (c == Category::raw || c == Category::module) throw InputError("crosscheck needs an algebra category");
    auto r = Report::start("semidirect crosscheck corpus");
    std::size_t derived = 0, bad = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::uint64_t s = splitmix64(seed + i);
        Rng rng(s);
        const Category c = cats[i % cats.size()];
        Algebra b = random_algebra(rng, f, rng.between(1, max_dim), c);
        Algebra a = random_algebra(rng, f, rng.between(1, max_dim), c);
        const EquivalenceCheck e = semidirect_crosscheck(c, random_action(rng, std::move(b), std::move(a), c));
        derived += e.derived;
        if (e.report.passed) continue;
        ++bad;
        r.fail("sample " + std::to_string(i) + " (" + std::string(to_string(c)) + ", seed " + std::to_string(s) + ")",
               {i}, e.report.lhs, e.report.rhs);
    }
    r.note("samples", "info", std::to_string(samples));
    r.note("derived actions", "info", std::to_string(derived));
    r.note("discrepancies", bad ? "fail" : "pass", std::to_string(bad));
    return r;
}

}  // namespace actorkit
