#include "actorkit/existence.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "actorkit/errors.hpp"

namespace actorkit {

namespace {

ActorKind candidate_kind(Category c, int variant)
{
    switch (c) {
    case Category::lie: return ActorKind::der;
    case Category::associative: return ActorKind::bim;
    case Category::leibniz: return variant == 2 ? ActorKind::bider2 : ActorKind::bider1;
    case Category::commutative: return ActorKind::mult;
    default: throw UnsupportedError("no actor candidate for category " + std::string(to_string(c)));
    }
}

}  // namespace

Verdict actor_pipeline(const Algebra& a, const PipelineOptions& opts)
{
    const Category cat = a.category();
    if (cat == Category::raw) throw InputError("actor pipeline needs a category tag other than raw");
    if (auto own = check_category(a); !own.passed)
        throw InputError("algebra fails its " + std::string(to_string(cat)) + " identities: " + own.failed + " at " +
                         own.lhs + " vs " + own.rhs);

    Verdict v;
    v.flags = sufficient_conditions(a);
    v.semidirect_dim = a.dim();

    if (cat == Category::module) {
        v.exists = true;
        v.actor_kind = "zero";
        v.note = "Actor(A) = 0 for every R-module";
        return v;
    }
    if (cat == Category::alternative) {
        v.actor_kind = "unsupported";
        auto r = Report::start("actor");
        r.fail("alternative-general", {}, "", "");
        r.note("alternative-general", "info", "in the category of alternative algebras Actor(A) does not exist in general");
        if (opts.candidate) {
            const EquivalenceCheck e = semidirect_crosscheck(Category::alternative, *opts.candidate);
            r.note("candidate derived action", e.derived ? "pass" : "fail");
            r.note("candidate semidirect product in category", e.semidirect ? "pass" : "fail");
            v.semidirect_dim = opts.candidate->B.dim() + a.dim();
        }
        v.failure = r;
        v.note = "per-instance checks only; no universal verdict for alternative algebras";
        return v;
    }

    const ActorKind kind = candidate_kind(cat, opts.bider_variant);
    ActorAlgebra actor = build_actor(a, kind);
    v.actor_kind = std::string(to_string(kind));
    v.actor_dim = actor.dim();
    v.semidirect_dim = actor.dim() + a.dim();
    if (cat == Category::leibniz) v.condition = condition1_check(a);
    if (cat == Category::associative || cat == Category::commutative) v.condition = condition2_check(a);

    auto suite = check_category(semidirect(actor.action), cat);
    suite.check = "semidirect:" + std::string(to_string(cat));
    v.exists = suite.passed;
    if (!suite.passed) v.failure = suite;
    v.actor = std::move(actor);
    return v;
}

Report bider_variants_agree(const Algebra& a)
{
    const ActorAlgebra b1 = biderivations(a, 1), b2 = biderivations(a, 2);
    auto r = Report::start("bider_variants_agree");
    const std::size_t m = b1.dim();
    for (std::size_t i = 0; i < m && r.passed; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Vector p1 = b1.algebra.product(i, j), p2 = b2.algebra.product(i, j);
            if (p1 != p2) {
                r.fail("[phi_i,phi_j] agrees in both variants", {i, j}, to_string(p1), to_string(p2));
                break;
            }
        }
    const Report c1 = condition1_check(a);
    r.note("condition1", c1.passed ? "pass" : "fail", c1.failed);
    if (c1.passed && !r.passed) r.note("expected agreement under Condition 1", "fail", "soundness bug witness");
    return r;
}

// ------------------------------------------------------- micro universality

namespace {

// Structure constants over GF(2) packed as bytes, used to sweep all small
// tensors quickly; only membership in the category is decided here.
struct Bits {
    int n = 0;
    std::vector<std::uint8_t> c;  // (i*n+j)*n+k

    std::uint8_t at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
    std::uint32_t prod(std::uint32_t u, std::uint32_t v) const
    {
        std::uint32_t w = 0;
        for (int i = 0; i < n; ++i)
            if (u >> i & 1)
                for (int j = 0; j < n; ++j)
                    if (v >> j & 1)
                        for (int k = 0; k < n; ++k) w ^= static_cast<std::uint32_t>(at(i, j, k)) << k;
        return w;
    }
};

bool bits_in_category(const Bits& t, Category c)
{
    const int n = t.n;
    auto e = [](int i) { return 1u << i; };
    if (c == Category::lie || c == Category::commutative || c == Category::module)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto p = t.prod(e(i), e(j));
                if (c == Category::module && p) return false;
                if (c != Category::module && p != t.prod(e(j), e(i))) return false;  // char 2: -x = x
                if (c == Category::lie && i == j && p) return false;
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const auto x = e(i), y = e(j), z = e(k);
                switch (c) {
                case Category::lie:
                    if (t.prod(x, t.prod(y, z)) ^ t.prod(y, t.prod(z, x)) ^ t.prod(z, t.prod(x, y))) return false;
                    break;
                case Category::leibniz:
                    if (t.prod(x, t.prod(y, z)) != (t.prod(t.prod(x, y), z) ^ t.prod(t.prod(x, z), y))) return false;
                    break;
                case Category::associative:
                case Category::commutative:
                    if (t.prod(t.prod(x, y), z) != t.prod(x, t.prod(y, z))) return false;
                    break;
                default: break;
                }
            }
    return true;
}

Algebra from_bits(const Bits& t, Category c)
{
    const Field f2 = Field::prime(2);
    std::vector<Scalar> s;
    for (auto x : t.c) s.emplace_back(f2, static_cast<long>(x));
    return Algebra(f2, t.n, std::move(s), c);
}

}  // namespace

Report universality_check(const Algebra& a, std::size_t max_b_dim, int bider_variant)
{
    if (a.field() != Field::prime(2)) throw UnsupportedError("universality check runs over GF(2) only");
    const Category cat = a.category();
    const ActorKind kind = candidate_kind(cat, bider_variant);
    if (check_category(a).passed == false) throw InputError("target fails its own identities");
    if (a.dim() > 2 || max_b_dim > 2) throw CapExceeded("universality check limited to dimensions <= 2");
    const ActorAlgebra actor = build_actor(a, kind);

    Bits ta;
    ta.n = static_cast<int>(a.dim());
    for (const auto& s : a.tensor()) ta.c.push_back(static_cast<std::uint8_t>(s.residue()));

    auto r = Report::start("universality");
    std::size_t objects = 0, actions = 0;
    const int dA = ta.n;
    for (int dB = 0; dB <= static_cast<int>(max_b_dim) && r.passed; ++dB) {
        const int tb = dB * dB * dB;
        for (std::uint32_t bm = 0; bm < (1u << tb) && r.passed; ++bm) {
            Bits tbits;
            tbits.n = dB;
            for (int x = 0; x < tb; ++x) tbits.c.push_back(bm >> x & 1);
            if (!bits_in_category(tbits, cat)) continue;
            ++objects;
            const Algebra B = from_bits(tbits, cat);
            const int half = dB * dA * dA;
            // Lie and commutative actions are determined by one side.
            const bool tied = cat == Category::lie || cat == Category::commutative;
            const int bits = tied ? half : 2 * half;
            for (std::uint32_t am = 0; am < (1u << bits) && r.passed; ++am) {
                // Semidirect table B + A.
                Bits sd;
                sd.n = dB + dA;
                const int n = sd.n;
                sd.c.assign(n * n * n, 0);
                for (int i = 0; i < dB; ++i)
                    for (int j = 0; j < dB; ++j)
                        for (int k = 0; k < dB; ++k) sd.c[(i * n + j) * n + k] = tbits.at(i, j, k);
                for (int i = 0; i < dA; ++i)
                    for (int j = 0; j < dA; ++j)
                        for (int k = 0; k < dA; ++k) sd.c[((dB + i) * n + dB + j) * n + dB + k] = ta.at(i, j, k);
                for (int b = 0; b < dB; ++b)
                    for (int x = 0; x < dA; ++x)
                        for (int k = 0; k < dA; ++k) {
                            const int li = (b * dA + x) * dA + k;
                            const int ri = (x * dB + b) * dA + k;
                            sd.c[(b * n + dB + x) * n + dB + k] = am >> li & 1;
                            sd.c[((dB + x) * n + b) * n + dB + k] = tied ? (am >> li & 1) : (am >> (half + ri) & 1);
                        }
                if (!bits_in_category(sd, cat)) continue;
                ++actions;

                const Field f2 = a.field();
                std::vector<Scalar> left, right;
                for (int b = 0; b < dB; ++b)
                    for (int x = 0; x < dA; ++x)
                        for (int k = 0; k < dA; ++k) left.emplace_back(f2, static_cast<long>(sd.c[(b * n + dB + x) * n + dB + k]));
                for (int x = 0; x < dA; ++x)
                    for (int b = 0; b < dB; ++b)
                        for (int k = 0; k < dA; ++k) right.emplace_back(f2, static_cast<long>(sd.c[((dB + x) * n + b) * n + dB + k]));
                const ActionPair act = make_action(B, a, left, right);

                // phi(e_b) is forced: the coordinates of (L_b, R_b) in the actor basis.
                std::vector<Vector> phi;
                for (int b = 0; b < dB && r.passed; ++b) {
                    auto c = actor.coordinates({act.left_matrix(b), act.right_matrix(b)});
                    if (!c) {
                        r.fail("action factors through the actor", {static_cast<std::size_t>(dB), bm, am, static_cast<std::size_t>(b)},
                               "(L_b, R_b) outside the actor", "");
                        break;
                    }
                    phi.push_back(*c);
                }
                for (int i = 0; i < dB && r.passed; ++i)
                    for (int j = 0; j < dB; ++j) {
                        Vector lhs = zero_vector(f2, actor.dim());
                        const Vector bij = B.product(i, j);
                        for (int k = 0; k < dB; ++k) axpy(lhs, bij[k], phi[k]);
                        const Vector rhs = actor.algebra.multiply(phi[i], phi[j]);
                        if (lhs != rhs) {
                            r.fail("phi(b_i b_j) = phi(b_i) phi(b_j)",
                                   {static_cast<std::size_t>(dB), bm, am, static_cast<std::size_t>(i), static_cast<std::size_t>(j)},
                                   to_string(lhs), to_string(rhs));
                            break;
                        }
                    }
            }
        }
    }
    r.note("acting objects", "info", std::to_string(objects));
    r.note("derived actions", "info", std::to_string(actions));
    r.note("uniqueness", "structural", "actor basis is linearly independent, so phi is determined by the action");
    return r;
}

}  // namespace actorkit
