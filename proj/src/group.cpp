#include "actorkit/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "actorkit/errors.hpp"

namespace actorkit {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

std::string triple(std::size_t a, std::size_t b, std::size_t c)
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::vector<std::size_t> right_closure(const Table& t, std::size_t id, const std::vector<std::size_t>& gens)
{
    std::vector<char> seen(t.size(), 0);
    std::vector<std::size_t> out{id};
    seen[id] = 1;
    for (std::size_t q = 0; q < out.size(); ++q)
        for (auto s : gens) {
            const std::size_t y = t[out[q]][s];
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    return out;
}

std::vector<std::size_t> greedy_generators(const Table& t, std::size_t id)
{
    std::vector<std::size_t> gens;
    std::size_t reached = 1;
    while (reached < t.size()) {
        std::size_t best = id, best_size = reached;
        for (std::size_t x = 0; x < t.size(); ++x) {
            auto trial = gens;
            trial.push_back(x);
            const std::size_t s = right_closure(t, id, trial).size();
            if (s > best_size) {
                best = x;
                best_size = s;
            }
        }
        gens.push_back(best);
        reached = best_size;
    }
    return gens;
}

// With exhaustive = false associativity is checked as (xy)g = x(yg) for
// generators g only; the set of such g is closed under products.
Group validate(Table t, std::vector<std::string> names, bool exhaustive)
{
    const std::size_t n = t.size();
    if (n == 0) throw InputError("group table is empty");
    for (std::size_t a = 0; a < n; ++a) {
        if (t[a].size() != n) throw InputError("group table is not square (row " + std::to_string(a) + ")");
        for (auto v : t[a])
            if (v >= n) throw InputError("group table entry out of range in row " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
            if (row[t[a][b]]++) throw InputError("not a Latin square: row " + std::to_string(a) + " repeats an entry");
            if (col[t[b][a]]++) throw InputError("not a Latin square: column " + std::to_string(a) + " repeats an entry");
        }
    }
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
        if (ok) id = e;
    }
    if (!id) throw InputError("group table has no identity");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t[a][b] == *id && t[b][a] == *id) inv[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inv[a] == n) throw InputError("element " + std::to_string(a) + " has no two-sided inverse");

    std::vector<std::size_t> probe(n);
    for (std::size_t g = 0; g < n; ++g) probe[g] = g;
    if (!exhaustive) probe = greedy_generators(t, *id);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (auto c : probe)
                if (t[t[a][b]][c] != t[a][t[b][c]]) throw InputError("not associative at " + triple(a, b, c));

    if (names.empty())
        for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
    if (names.size() != n) throw InputError("group names do not match the order");
    Group g;
    g.order = n;
    g.table = std::move(t);
    g.identity = *id;
    g.inverse = std::move(inv);
    g.names = std::move(names);
    return g;
}

struct PermHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

// All homomorphisms b -> h as element maps. Images of generators are
// extended along right multiplication; consistency on every edge x -> x+s
// makes the map a homomorphism.
void for_each_hom(const Group& b, const Group& h, bool bijective,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
    const auto gens = generators(b);
    std::vector<std::vector<std::size_t>> cand(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t o = b.element_order(gens[k]);
        for (std::size_t y = 0; y < h.order; ++y) {
            const std::size_t oy = h.element_order(y);
            if (bijective ? oy == o : o % oy == 0) cand[k].push_back(y);
        }
    }
    std::vector<std::size_t> img(gens.size());
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (stop) return;
        if (k == gens.size()) {
            std::vector<std::size_t> map(b.order, h.order);
            std::vector<std::size_t> queue{b.identity};
            map[b.identity] = h.identity;
            for (std::size_t q = 0; q < queue.size(); ++q)
                for (std::size_t s = 0; s < gens.size(); ++s) {
                    const std::size_t y = b.op(queue[q], gens[s]), im = h.op(map[queue[q]], img[s]);
                    if (map[y] == h.order) {
                        map[y] = im;
                        queue.push_back(y);
                    } else if (map[y] != im) {
                        return;
                    }
                }
            if (bijective) {
                std::vector<char> hit(h.order, 0);
                for (auto v : map)
                    if (hit[v]++) return;
            }
            if (!visit(map)) stop = true;
            return;
        }
        for (auto y : cand[k]) {
            img[k] = y;
            rec(k + 1);
        }
    };
    rec(0);
}

}  // namespace

std::size_t Group::element_order(std::size_t a) const
{
    std::size_t k = 1;
    for (std::size_t x = a; x != identity; x = op(x, a)) ++k;
    return k;
}

bool Group::is_abelian() const
{
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = a + 1; b < order; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

Group make_group(const std::vector<std::vector<long long>>& table, std::vector<std::string> names)
{
    Table t;
    for (const auto& row : table) {
        std::vector<std::size_t> r;
        for (auto v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= table.size())
                throw InputError("group table entry " + std::to_string(v) + " out of range");
            r.push_back(static_cast<std::size_t>(v));
        }
        t.push_back(std::move(r));
    }
    return validate(std::move(t), std::move(names), true);
}

std::vector<std::size_t> generators(const Group& g) { return greedy_generators(g.table, g.identity); }

AutGroup automorphisms(const Group& g, std::size_t order_cap, std::size_t aut_cap)
{
    if (g.order > order_cap)
        throw CapExceeded("group order " + std::to_string(g.order) + " exceeds the cap " + std::to_string(order_cap));
    AutGroup out;
    for_each_hom(g, g, true, [&](const std::vector<std::size_t>& m) {
        if (out.perms.size() == aut_cap)
            throw CapExceeded("more than " + std::to_string(aut_cap) + " automorphisms");
        out.perms.push_back(m);
        return true;
    });
    std::sort(out.perms.begin(), out.perms.end());
    std::unordered_map<std::vector<std::size_t>, std::size_t, PermHash> index;
    for (std::size_t s = 0; s < out.perms.size(); ++s) index.emplace(out.perms[s], s);
    const std::size_t m = out.perms.size();
    Table t(m, std::vector<std::size_t>(m));
    std::vector<std::size_t> c(g.order);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t a = 0; a < g.order; ++a) c[a] = out.perms[s][out.perms[r][a]];
            t[s][r] = index.at(c);
        }
    std::vector<std::string> names;
    for (std::size_t s = 0; s < m; ++s) names.push_back("aut" + std::to_string(s));
    out.group = validate(std::move(t), std::move(names), m <= 64);
    return out;
}

InnerAut inner_automorphisms(const Group& g, const AutGroup& aut)
{
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t s = 0; s < aut.perms.size(); ++s) index.emplace(aut.perms[s], s);
    InnerAut inn;
    for (std::size_t c = 0; c < g.order; ++c) {
        std::vector<std::size_t> p(g.order);
        for (std::size_t a = 0; a < g.order; ++a) p[a] = g.op(g.op(c, a), g.inverse[c]);
        const std::size_t s = index.at(p);
        inn.tau.push_back(s);
        if (s == aut.group.identity) inn.kernel.push_back(c);
    }
    inn.subgroup = inn.tau;
    std::sort(inn.subgroup.begin(), inn.subgroup.end());
    inn.subgroup.erase(std::unique(inn.subgroup.begin(), inn.subgroup.end()), inn.subgroup.end());
    return inn;
}

Report holomorph_check(const Group& g, std::size_t order_cap)
{
    const AutGroup aut = automorphisms(g, order_cap);
    const InnerAut inn = inner_automorphisms(g, aut);
    const Group& A = aut.group;
    const std::size_t n = g.order, m = A.order, N = n * m;
    if (N > 4096) throw CapExceeded("holomorph order " + std::to_string(N) + " exceeds 4096");
    auto r = Report::start("holomorph");

    // (s, a) has index s*n + a.
    Table t(N, std::vector<std::size_t>(N));
    for (std::size_t s1 = 0; s1 < m; ++s1)
        for (std::size_t a1 = 0; a1 < n; ++a1)
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t a = 0; a < n; ++a)
                    t[s1 * n + a1][s * n + a] = A.op(s1, s) * n + g.op(a1, aut.perms[s1][a]);
    Group H;
    try {
        H = validate(t, {}, N <= 256);
        r.note("holomorph is a group", "pass", "order " + std::to_string(N));
    } catch (const InputError& e) {
        r.note("holomorph is a group", "fail", e.what());
        r.fail("holomorph is a group", {}, e.what(), "");
        return r;
    }

    // crossed module d = tau : G -> Aut(G)
    bool xi = true, xii = true;
    for (std::size_t s = 0; s < m && xi; ++s)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t lhs = inn.tau[aut.perms[s][c]], rhs = A.op(A.op(s, inn.tau[c]), A.inverse[s]);
            if (lhs != rhs) {
                r.fail("d(s.c) = s + d(c) - s", {s, c}, A.names[lhs], A.names[rhs]);
                xi = false;
                break;
            }
        }
    for (std::size_t c = 0; c < n && xii; ++c)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            const std::size_t lhs = aut.perms[inn.tau[c]][c2], rhs = g.op(g.op(c, c2), g.inverse[c]);
            if (lhs != rhs) {
                r.fail("d(c).c' = c + c' - c", {c, c2}, g.names[lhs], g.names[rhs]);
                xii = false;
                break;
            }
        }
    r.note("crossed module (i)", xi ? "pass" : "fail");
    r.note("crossed module (ii)", xii ? "pass" : "fail");

    // top row: 0 -> G -> Hol -> Hol/G -> 0 with iota(a) = (id, a)
    auto iota = [&](std::size_t a) { return A.identity * n + a; };
    bool top = true;
    std::vector<char> in_image(N, 0);
    for (std::size_t a = 0; a < n; ++a) in_image[iota(a)] = 1;
    for (std::size_t a = 0; a < n && top; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (H.op(iota(a), iota(b)) != iota(g.op(a, b))) {
                r.fail("iota is a homomorphism", {a, b}, std::to_string(H.op(iota(a), iota(b))), std::to_string(iota(g.op(a, b))));
                top = false;
                break;
            }
    for (std::size_t x = 0; x < N && top; ++x)
        for (std::size_t a = 0; a < n; ++a)
            if (!in_image[H.op(H.op(x, iota(a)), H.inverse[x])]) {
                r.fail("G is normal in the holomorph", {x, a}, std::to_string(H.op(H.op(x, iota(a)), H.inverse[x])), "image of G");
                top = false;
                break;
            }
    // cosets x + G, labelled by their smallest element
    std::vector<std::size_t> coset(N);
    for (std::size_t x = 0; x < N; ++x) {
        std::size_t best = N;
        for (std::size_t a = 0; a < n; ++a) best = std::min(best, H.op(x, iota(a)));
        coset[x] = best;
    }
    for (std::size_t x = 0; x < N && top; ++x)
        if ((coset[x] == coset[H.identity]) != static_cast<bool>(in_image[x])) {
            r.fail("ker(Hol -> Hol/G) = image of G", {x}, std::to_string(coset[x]), std::to_string(coset[H.identity]));
            top = false;
        }
    r.note("top row exact", top ? "pass" : "fail");

    // bottom row: 0 -> Inn -> Aut -> Out -> 0
    bool bottom = true;
    std::vector<char> is_inner(m, 0);
    for (auto s : inn.subgroup) is_inner[s] = 1;
    for (auto s : inn.subgroup)
        for (auto u : inn.subgroup)
            if (!is_inner[A.op(s, u)]) {
                r.fail("Inn is a subgroup", {s, u}, A.names[A.op(s, u)], "Inn");
                bottom = false;
            }
    for (std::size_t s = 0; s < m && bottom; ++s)
        for (auto u : inn.subgroup)
            if (!is_inner[A.op(A.op(s, u), A.inverse[s])]) {
                r.fail("Inn is normal in Aut", {s, u}, A.names[A.op(A.op(s, u), A.inverse[s])], "Inn");
                bottom = false;
                break;
            }
    std::vector<std::size_t> out_coset(m);
    for (std::size_t s = 0; s < m; ++s) {
        std::size_t best = m;
        for (auto u : inn.subgroup) best = std::min(best, A.op(s, u));
        out_coset[s] = best;
    }
    for (std::size_t s = 0; s < m && bottom; ++s)
        if ((out_coset[s] == out_coset[A.identity]) != static_cast<bool>(is_inner[s])) {
            r.fail("ker(Aut -> Out) = Inn", {s}, A.names[s], "Inn");
            bottom = false;
        }
    std::size_t out_order = 0;
    for (std::size_t s = 0; s < m; ++s) out_order += out_coset[s] == s;
    r.note("bottom row exact", bottom ? "pass" : "fail",
           "|Inn| = " + std::to_string(inn.subgroup.size()) + ", |Out| = " + std::to_string(out_order));

    // theta: Hol -> Aut(G) by conjugation on G, extending tau
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t s = 0; s < m; ++s) index.emplace(aut.perms[s], s);
    std::vector<std::size_t> theta(N);
    bool square = true;
    for (std::size_t x = 0; x < N && square; ++x) {
        std::vector<std::size_t> p(n);
        for (std::size_t a = 0; a < n; ++a) p[a] = H.op(H.op(x, iota(a)), H.inverse[x]) % n;
        auto it = index.find(p);
        if (it == index.end()) {
            r.fail("theta(x) is an automorphism", {x}, "not in Aut", "");
            square = false;
            break;
        }
        theta[x] = it->second;
    }
    for (std::size_t x = 0; x < N && square; ++x)
        for (std::size_t y = 0; y < N; ++y)
            if (theta[H.op(x, y)] != A.op(theta[x], theta[y])) {
                r.fail("theta is a homomorphism", {x, y}, A.names[theta[H.op(x, y)]], A.names[A.op(theta[x], theta[y])]);
                square = false;
                break;
            }
    for (std::size_t a = 0; a < n && square; ++a)
        if (theta[iota(a)] != inn.tau[a]) {
            r.fail("theta extends tau", {a}, A.names[theta[iota(a)]], A.names[inn.tau[a]]);
            square = false;
        }
    for (std::size_t x = 0; x < N && square; ++x)
        if (out_coset[theta[x]] != out_coset[theta[coset[x]]]) {
            r.fail("Hol/G -> Out is well defined", {x, coset[x]}, A.names[out_coset[theta[x]]], A.names[out_coset[theta[coset[x]]]]);
            square = false;
        }
    r.note("diagram commutes", square ? "pass" : "fail");
    return r;
}

Report group_universality_check(const Group& g, std::size_t max_b)
{
    if (max_b > 8) throw CapExceeded("acting groups are enumerated up to order 8");
    const AutGroup aut = automorphisms(g);
    const Group& A = aut.group;
    const std::size_t n = g.order;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t s = 0; s < aut.perms.size(); ++s) index.emplace(aut.perms[s], s);

    auto r = Report::start("group_universality");
    std::size_t objects = 0, actions = 0;
    for (const auto& [bname, B] : groups::small_groups(max_b)) {
        ++objects;
        std::size_t here = 0;
        std::set<std::vector<std::vector<std::size_t>>> tables;
        for_each_hom(B, A, false, [&](const std::vector<std::size_t>& h) {
            ++here;
            std::vector<std::vector<std::size_t>> dot(B.order, std::vector<std::size_t>(n));
            for (std::size_t b = 0; b < B.order; ++b)
                for (std::size_t a = 0; a < n; ++a) dot[b][a] = aut.perms[h[b]][a];
            tables.insert(dot);
            // action axioms, checked on the table itself
            for (std::size_t a = 0; a < n; ++a)
                if (dot[B.identity][a] != a) {
                    r.fail(bname + ": 0.a = a", {a}, g.names[dot[B.identity][a]], g.names[a]);
                    return false;
                }
            for (std::size_t b1 = 0; b1 < B.order; ++b1)
                for (std::size_t b2 = 0; b2 < B.order; ++b2)
                    for (std::size_t a = 0; a < n; ++a)
                        if (dot[B.op(b1, b2)][a] != dot[b1][dot[b2][a]]) {
                            r.fail(bname + ": (b1+b2).a = b1.(b2.a)", {b1, b2, a}, g.names[dot[B.op(b1, b2)][a]], g.names[dot[b1][dot[b2][a]]]);
                            return false;
                        }
            for (std::size_t b = 0; b < B.order; ++b)
                for (std::size_t a1 = 0; a1 < n; ++a1)
                    for (std::size_t a2 = 0; a2 < n; ++a2)
                        if (dot[b][g.op(a1, a2)] != g.op(dot[b][a1], dot[b][a2])) {
                            r.fail(bname + ": b.(a1+a2) = b.a1 + b.a2", {b, a1, a2}, "", "");
                            return false;
                        }
            // phi(b) is the automorphism acting as b; its existence and uniqueness
            std::vector<std::size_t> phi(B.order);
            for (std::size_t b = 0; b < B.order; ++b) {
                std::size_t count = 0;
                for (std::size_t s = 0; s < aut.perms.size(); ++s)
                    if (aut.perms[s] == dot[b]) {
                        phi[b] = s;
                        ++count;
                    }
                if (count != 1) {
                    r.fail(bname + ": unique phi(b) with phi(b).a = b.a", {b}, std::to_string(count), "1");
                    return false;
                }
            }
            for (std::size_t b1 = 0; b1 < B.order; ++b1)
                for (std::size_t b2 = 0; b2 < B.order; ++b2)
                    if (phi[B.op(b1, b2)] != A.op(phi[b1], phi[b2])) {
                        r.fail(bname + ": phi is a homomorphism", {b1, b2}, A.names[phi[B.op(b1, b2)]], A.names[A.op(phi[b1], phi[b2])]);
                        return false;
                    }
            return true;
        });
        if (tables.size() != here)
            r.fail(bname + ": distinct morphisms give distinct actions", {}, std::to_string(tables.size()), std::to_string(here));
        actions += here;
        r.note(bname, r.passed ? "pass" : "fail", std::to_string(here) + " actions");
        if (!r.passed) break;
    }
    r.note("acting objects", "info", std::to_string(objects));
    r.note("actions", "info", std::to_string(actions));
    return r;
}

// ----------------------------------------------------------- catalog

namespace groups {

namespace {

Group from_op(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op, std::vector<std::string> names = {})
{
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = op(a, b);
    return validate(std::move(t), std::move(names), true);
}

}  // namespace

Group trivial() { return cyclic(1); }

Group cyclic(std::size_t n)
{
    if (n == 0) throw InputError("cyclic group of order 0");
    return from_op(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

Group klein() { return direct_product(cyclic(2), cyclic(2)); }

Group dihedral(std::size_t n)
{
    if (n == 0) throw InputError("dihedral group of order 0");
    // r^i s^f has index f*n + i
    return from_op(2 * n, [n](std::size_t x, std::size_t y) {
        const std::size_t i = x % n, f = x / n, j = y % n, h = y / n;
        const std::size_t k = f ? (i + n - j) % n : (i + j) % n;
        return ((f + h) % 2) * n + k;
    });
}

Group quaternion()
{
    // index = sign*4 + unit, units 1, i, j, k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return from_op(8, [](std::size_t x, std::size_t y) {
        const std::size_t u = x % 4, v = y % 4;
        const std::size_t s = (x / 4 + y / 4 + neg[u][v]) % 2;
        return s * 4 + unit[u][v];
    }, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

Group direct_product(const Group& a, const Group& b)
{
    const std::size_t m = b.order;
    return from_op(a.order * m, [&](std::size_t x, std::size_t y) {
        return a.op(x / m, y / m) * m + b.op(x % m, y % m);
    });
}

std::vector<std::pair<std::string, Group>> small_groups(std::size_t max_order)
{
    std::vector<std::pair<std::string, Group>> out;
    auto add = [&](std::string name, std::size_t order, const std::function<Group()>& make) {
        if (order <= max_order) out.emplace_back(std::move(name), make());
    };
    add("trivial", 1, trivial);
    add("Z2", 2, [] { return cyclic(2); });
    add("Z3", 3, [] { return cyclic(3); });
    add("Z4", 4, [] { return cyclic(4); });
    add("V4", 4, klein);
    add("Z5", 5, [] { return cyclic(5); });
    add("Z6", 6, [] { return cyclic(6); });
    add("S3", 6, [] { return dihedral(3); });
    add("Z7", 7, [] { return cyclic(7); });
    add("Z8", 8, [] { return cyclic(8); });
    add("Z4xZ2", 8, [] { return direct_product(cyclic(4), cyclic(2)); });
    add("Z2^3", 8, [] { return direct_product(klein(), cyclic(2)); });
    add("D4", 8, [] { return dihedral(4); });
    add("Q8", 8, quaternion);
    return out;
}

Group by_name(const std::string& name)
{
    for (auto& [n, g] : small_groups(8))
        if (n == name) return g;
    if (name.size() > 1 && name[0] == 'Z' && name.find_first_not_of("0123456789", 1) == std::string::npos)
        return cyclic(std::stoul(name.substr(1)));
    if (name.size() > 1 && name[0] == 'D' && name.find_first_not_of("0123456789", 1) == std::string::npos)
        return dihedral(std::stoul(name.substr(1)));
    throw InputError("unknown group name '" + name + "'");
}

}  // namespace groups

}  // namespace actorkit
