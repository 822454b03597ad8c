#include "actorkit/actions.hpp"

#include <functional>
#include <string>

#include "actorkit/errors.hpp"

namespace actorkit {

Vector ActionPair::act_left(std::span<const Scalar> b, std::span<const Scalar> a) const
{
    const std::size_t dA = A.dim(), dB = B.dim();
    Vector out = zero_vector(A.field(), dA);
    for (std::size_t i = 0; i < dB; ++i) {
        if (b[i].is_zero()) continue;
        for (std::size_t j = 0; j < dA; ++j) {
            if (a[j].is_zero()) continue;
            axpy(out, b[i] * a[j], {left.data() + (i * dA + j) * dA, dA});
        }
    }
    return out;
}

Vector ActionPair::act_right(std::span<const Scalar> a, std::span<const Scalar> b) const
{
    const std::size_t dA = A.dim(), dB = B.dim();
    Vector out = zero_vector(A.field(), dA);
    for (std::size_t j = 0; j < dA; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < dB; ++i) {
            if (b[i].is_zero()) continue;
            axpy(out, a[j] * b[i], {right.data() + (j * dB + i) * dA, dA});
        }
    }
    return out;
}

Matrix ActionPair::left_matrix(std::size_t b) const
{
    const std::size_t dA = A.dim();
    Matrix m(A.field(), dA, dA);
    for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t k = 0; k < dA; ++k) m(k, a) = left[(b * dA + a) * dA + k];
    return m;
}

Matrix ActionPair::right_matrix(std::size_t b) const
{
    const std::size_t dA = A.dim(), dB = B.dim();
    Matrix m(A.field(), dA, dA);
    for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t k = 0; k < dA; ++k) m(k, a) = right[(a * dB + b) * dA + k];
    return m;
}

ActionPair make_action(Algebra B, Algebra A, std::vector<Scalar> left, std::vector<Scalar> right)
{
    if (B.field() != A.field()) throw InputError("acting and target algebras over different fields");
    const std::size_t want = B.dim() * A.dim() * A.dim();
    if (left.size() != want) throw InputError("left action tensor has wrong shape");
    if (right.size() != want) throw InputError("right action tensor has wrong shape");
    for (const auto& s : left)
        if (s.field() != A.field()) throw InputError("left action tensor field mismatch");
    for (const auto& s : right)
        if (s.field() != A.field()) throw InputError("right action tensor field mismatch");
    return ActionPair{std::move(B), std::move(A), std::move(left), std::move(right)};
}

ActionPair zero_action(Algebra B, Algebra A)
{
    const std::vector<Scalar> z(B.dim() * A.dim() * A.dim(), Scalar::zero(A.field()));
    return make_action(std::move(B), std::move(A), z, z);
}

ActionPair conjugation_action(const Algebra& a)
{
    // left[(b*n+x)*n+k] = c[b][x][k]; right[(x*n+b)*n+k] = c[x][b][k]: both are the tensor itself.
    return make_action(a, a, a.tensor(), a.tensor());
}

ActionPair action_from_maps(Algebra B, Algebra A, const std::vector<Matrix>& L, const std::vector<Matrix>& R)
{
    const std::size_t dA = A.dim(), dB = B.dim();
    if (L.size() != dB || R.size() != dB) throw InputError("one map pair per basis element of B expected");
    std::vector<Scalar> left(dB * dA * dA, Scalar::zero(A.field())), right = left;
    for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t k = 0; k < dA; ++k) {
                left[(b * dA + a) * dA + k] = L[b](k, a);
                right[(a * dB + b) * dA + k] = R[b](k, a);
            }
    return make_action(std::move(B), std::move(A), std::move(left), std::move(right));
}

// ------------------------------------------------------------ derived actions

namespace {

// An element of B or of A; products follow the semidirect rules.
struct El {
    bool inB;
    Vector v;
};

class Mixed {
public:
    explicit Mixed(const ActionPair& act) : act_(act) {}

    El basis(bool inB, std::size_t i) const
    {
        const Algebra& x = inB ? act_.B : act_.A;
        return {inB, unit_vector(x.field(), x.dim(), i)};
    }
    El mul(const El& x, const El& y) const
    {
        if (x.inB && y.inB) return {true, act_.B.multiply(x.v, y.v)};
        if (x.inB) return {false, act_.act_left(x.v, y.v)};
        if (y.inB) return {false, act_.act_right(x.v, y.v)};
        return {false, act_.A.multiply(x.v, y.v)};
    }
    static El add(const El& x, const El& y) { return {x.inB, actorkit::add(x.v, y.v)}; }
    static El sub(const El& x, const El& y) { return {x.inB, subtract(x.v, y.v)}; }
    El neg(const El& x) const { return {x.inB, scale(-Scalar::one(act_.A.field()), x.v)}; }

private:
    const ActionPair& act_;
};

using Sides = std::pair<El, El>;
using Eval = std::function<Sides(const Mixed&, const std::vector<El>&)>;

struct Condition {
    std::string label;
    std::string pattern;  // one letter per variable: 'B' or 'A'
    Eval eval;
};

// Runs each condition over all basis tuples for its pattern; the witness lists
// the basis index of each variable in order.
void run_conditions(const ActionPair& act, const std::vector<Condition>& conds, Report& r)
{
    const Mixed m(act);
    for (const auto& c : conds) {
        const std::size_t nv = c.pattern.size();
        std::vector<std::size_t> dims(nv), idx(nv, 0);
        bool empty = false;
        for (std::size_t v = 0; v < nv; ++v) {
            dims[v] = c.pattern[v] == 'B' ? act.B.dim() : act.A.dim();
            empty = empty || dims[v] == 0;
        }
        bool ok = true;
        for (bool more = !empty; more;) {
            std::vector<El> args;
            for (std::size_t v = 0; v < nv; ++v) args.push_back(m.basis(c.pattern[v] == 'B', idx[v]));
            auto [l, rr] = c.eval(m, args);
            if (l.v != rr.v) {
                r.fail(c.label, idx, to_string(l.v), to_string(rr.v));
                ok = false;
                break;
            }
            more = false;
            for (std::size_t pos = nv; pos-- > 0;) {
                if (++idx[pos] < dims[pos]) {
                    more = true;
                    break;
                }
                idx[pos] = 0;
            }
        }
        r.note(c.label, ok ? "pass" : "fail");
        if (!ok) return;
    }
}

std::vector<Condition> associative_conditions()
{
    return {
        {"(b1*b2)*a = b1*(b2*a)", "BBA",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(m.mul(x[0], x[1]), x[2]), m.mul(x[0], m.mul(x[1], x[2]))};
         }},
        {"a*(b1*b2) = (a*b1)*b2", "ABB",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(x[0], m.mul(x[1], x[2])), m.mul(m.mul(x[0], x[1]), x[2])};
         }},
        {"(b1*a)*b2 = b1*(a*b2)", "BAB",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(m.mul(x[0], x[1]), x[2]), m.mul(x[0], m.mul(x[1], x[2]))};
         }},
        {"b*(a1*a2) = (b*a1)*a2", "BAA",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(x[0], m.mul(x[1], x[2])), m.mul(m.mul(x[0], x[1]), x[2])};
         }},
        {"(a1*a2)*b = a1*(a2*b)", "AAB",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(m.mul(x[0], x[1]), x[2]), m.mul(x[0], m.mul(x[1], x[2]))};
         }},
        {"a1*(b*a2) = (a1*b)*a2", "ABA",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(x[0], m.mul(x[1], x[2])), m.mul(m.mul(x[0], x[1]), x[2])};
         }},
    };
}

std::vector<Condition> lie_conditions()
{
    return {
        {"[b,a] = -[a,b]", "BA",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(x[0], x[1]), m.neg(m.mul(x[1], x[0]))};
         }},
        {"[[b1,b2],a] = [b1,[b2,a]] - [b2,[b1,a]]", "BBA",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(m.mul(x[0], x[1]), x[2]),
                          Mixed::sub(m.mul(x[0], m.mul(x[1], x[2])), m.mul(x[1], m.mul(x[0], x[2])))};
         }},
        {"[b,[a1,a2]] = [a1,[b,a2]] + [[b,a1],a2]", "BAA",
         [](const Mixed& m, const std::vector<El>& x) {
             return Sides{m.mul(x[0], m.mul(x[1], x[2])),
                          Mixed::add(m.mul(x[1], m.mul(x[0], x[2])), m.mul(m.mul(x[0], x[1]), x[2]))};
         }},
    };
}

// [x,[y,z]] = [[x,y],z] - [[x,z],y] with the variables in the given order.
Eval leibniz_eval()
{
    return [](const Mixed& m, const std::vector<El>& x) {
        return Sides{m.mul(x[0], m.mul(x[1], x[2])),
                     Mixed::sub(m.mul(m.mul(x[0], x[1]), x[2]), m.mul(m.mul(x[0], x[2]), x[1]))};
    };
}

std::vector<Condition> leibniz_conditions()
{
    return {
        {"[a1,[a2,b]] = [[a1,a2],b] - [[a1,b],a2]", "AAB", leibniz_eval()},
        {"[a1,[b,a2]] = [[a1,b],a2] - [[a1,a2],b]", "ABA", leibniz_eval()},
        {"[b,[a1,a2]] = [[b,a1],a2] - [[b,a2],a1]", "BAA", leibniz_eval()},
        {"[a,[b1,b2]] = [[a,b1],b2] - [[a,b2],b1]", "ABB", leibniz_eval()},
        {"[b1,[a,b2]] = [[b1,a],b2] - [[b1,b2],a]", "BAB", leibniz_eval()},
        {"[b1,[b2,a]] = [[b1,b2],a] - [[b1,a],b2]", "BBA", leibniz_eval()},
    };
}

// x(yz) = (xy)z + (yx)z - y(xz)
Eval left_alt()
{
    return [](const Mixed& m, const std::vector<El>& v) {
        const El &x = v[0], &y = v[1], &z = v[2];
        return Sides{m.mul(x, m.mul(y, z)),
                     Mixed::sub(Mixed::add(m.mul(m.mul(x, y), z), m.mul(m.mul(y, x), z)), m.mul(y, m.mul(x, z)))};
    };
}

// (xy)z = x(yz) - (xz)y + x(zy)
Eval right_alt()
{
    return [](const Mixed& m, const std::vector<El>& v) {
        const El &x = v[0], &y = v[1], &z = v[2];
        return Sides{m.mul(m.mul(x, y), z),
                     Mixed::add(Mixed::sub(m.mul(x, m.mul(y, z)), m.mul(m.mul(x, z), y)), m.mul(x, m.mul(z, y)))};
    };
}

// Variables are listed in the order they appear on the left-hand side.
std::vector<Condition> alternative_conditions()
{
    return {
        {"b(a1a2) = (ba1)a2 + (a1b)a2 - a1(ba2)", "BAA", left_alt()},
        {"(a1a2)b = a1(a2b) - (a1b)a2 + a1(ba2)", "AAB", right_alt()},
        {"(ba1)a2 = b(a1a2) - (ba2)a1 + b(a2a1)", "BAA", right_alt()},
        {"a1(a2b) = (a1a2)b + (a2a1)b - a2(a1b)", "AAB", left_alt()},
        {"(b1b2)a = b1(b2a) - (b1a)b2 + b1(ab2)", "BBA", right_alt()},
        {"a(b1b2) = (ab1)b2 + (b1a)b2 - b1(ab2)", "ABB", left_alt()},
        {"(ab1)b2 = a(b1b2) - (ab2)b1 + a(b2b1)", "ABB", right_alt()},
        {"b1(b2a) = (b1b2)a + (b2b1)a - b2(b1a)", "BBA", left_alt()},
    };
}

std::vector<Condition> commutative_conditions()
{
    auto conds = associative_conditions();
    conds.insert(conds.begin(), Condition{"b*a = a*b", "BA", [](const Mixed& m, const std::vector<El>& x) {
                                              return Sides{m.mul(x[0], x[1]), m.mul(x[1], x[0])};
                                          }});
    return conds;
}

std::vector<Condition> module_conditions()
{
    return {
        {"b*a = 0", "BA",
         [](const Mixed& m, const std::vector<El>& x) {
             const El p = m.mul(x[0], x[1]);
             return Sides{p, Mixed::sub(p, p)};
         }},
        {"a*b = 0", "AB",
         [](const Mixed& m, const std::vector<El>& x) {
             const El p = m.mul(x[0], x[1]);
             return Sides{p, Mixed::sub(p, p)};
         }},
    };
}

}  // namespace

Report check_derived_action(Category c, const ActionPair& act)
{
    std::vector<Condition> conds;
    switch (c) {
    case Category::associative: conds = associative_conditions(); break;
    case Category::lie: conds = lie_conditions(); break;
    case Category::leibniz: conds = leibniz_conditions(); break;
    case Category::alternative: conds = alternative_conditions(); break;
    case Category::commutative: conds = commutative_conditions(); break;
    case Category::module: conds = module_conditions(); break;
    case Category::raw: throw UnsupportedError("no action axioms for raw algebras");
    }
    auto r = Report::start("derived_action:" + std::string(to_string(c)));
    auto rb = check_category(act.B, c);
    rb.check = "B in " + std::string(to_string(c));
    auto ra = check_category(act.A, c);
    ra.check = "A in " + std::string(to_string(c));
    r.absorb(rb);
    r.absorb(ra);
    if (r.passed) run_conditions(act, conds, r);
    return r;
}

Report check_general_conditions(const ActionPair& act)
{
    auto r = Report::start("general_action_conditions");
    const char* additive = "dot action is trivial: b.a = b + a - b = a";
    r.note("1. 0.a = a", "auto-pass", additive);
    r.note("2. b.(a1+a2) = b.a1 + b.a2", "auto-pass", additive);
    r.note("3. (b1+b2).a = b1.(b2.a)", "auto-pass", additive);
    r.note("4. b*(a1+a2) = b*a1 + b*a2", "structural", "left action is a bilinear tensor");
    r.note("5. (b1+b2)*a = b1*a + b2*a", "structural", "left action is a bilinear tensor");
    r.note("6. (b1*b2).(a1*a2) = a1*a2", "auto-pass", additive);
    r.note("7. (b1*b2).(a*b) = a*b", "auto-pass", additive);
    r.note("8. a1*(b.a2) = a1*a2", "auto-pass", additive);
    r.note("9. b*(b1.a) = b*a", "auto-pass", additive);
    r.note("10. w(b.a) = w(b).w(a)", "auto-pass", additive);
    r.note("11. w(a*b) = w(a)*b = a*w(b)", "structural", "unary operations are scalar multiples; tensors are bilinear");
    r.note("12. x*y + z*t = z*t + x*y", "auto-pass", "vector-space addition is commutative");
    const std::size_t want = act.B.dim() * act.A.dim() * act.A.dim();
    if (act.left.size() != want || act.right.size() != want)
        r.fail("4. b*(a1+a2) = b*a1 + b*a2", {}, "tensor size " + std::to_string(act.left.size()),
               std::to_string(want));
    return r;
}

Algebra semidirect(const ActionPair& act)
{
    const std::size_t dB = act.B.dim(), dA = act.A.dim(), n = dB + dA;
    const Field f = act.A.field();
    std::vector<Scalar> t(n * n * n, Scalar::zero(f));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return t[(i * n + j) * n + k]; };
    for (std::size_t i = 0; i < dB; ++i)
        for (std::size_t j = 0; j < dB; ++j)
            for (std::size_t k = 0; k < dB; ++k) at(i, j, k) = act.B.coeff(i, j, k);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dA; ++j)
            for (std::size_t k = 0; k < dA; ++k) at(dB + i, dB + j, dB + k) = act.A.coeff(i, j, k);
    for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t k = 0; k < dA; ++k) {
                at(b, dB + a, dB + k) = act.left[(b * dA + a) * dA + k];
                at(dB + a, b, dB + k) = act.right[(a * dB + b) * dA + k];
            }
    std::vector<std::string> names;
    for (const auto& s : act.B.names()) names.push_back(s);
    for (const auto& s : act.A.names()) names.push_back(s);
    return Algebra(f, n, std::move(t), Category::raw, std::move(names));
}

Subspace target_block(const ActionPair& act)
{
    const std::size_t dB = act.B.dim(), dA = act.A.dim();
    std::vector<Vector> gens;
    for (std::size_t a = 0; a < dA; ++a) gens.push_back(unit_vector(act.A.field(), dB + dA, dB + a));
    return Subspace::span(act.A.field(), dB + dA, gens);
}

EquivalenceCheck semidirect_crosscheck(Category c, const ActionPair& act)
{
    EquivalenceCheck out;
    const Report d = check_derived_action(c, act);
    const Report s = check_category(semidirect(act), c);
    out.derived = d.passed;
    out.semidirect = s.passed;
    out.report = Report::start("semidirect crosscheck:" + std::string(to_string(c)));
    out.report.note("derived action", d.passed ? "pass" : "fail", d.failed);
    out.report.note("semidirect product in category", s.passed ? "pass" : "fail", s.failed);
    if (d.passed != s.passed)
        out.report.fail("derived action <=> semidirect in category", {}, d.passed ? "true" : "false",
                        s.passed ? "true" : "false");
    return out;
}

ActionPair random_action(Rng& rng, Algebra B, Algebra A, Category c)
{
    const Field f = A.field();
    const std::size_t dB = B.dim(), dA = A.dim();
    std::vector<Scalar> left(dB * dA * dA, Scalar::zero(f)), right = left;
    auto draw = [&] {
        if (f.is_rational()) return Scalar(f, static_cast<long>(rng.between(1, 2)) * (rng.chance(1, 2) ? 1 : -1));
        return Scalar(f, static_cast<long>(rng.between(1, f.modulus() - 1)));
    };
    if (!left.empty()) {
        const std::size_t terms = rng.below(dB * dA + 1);
        for (std::size_t s = 0; s < terms; ++s) {
            const std::size_t b = rng.below(dB), a = rng.below(dA), k = rng.below(dA);
            left[(b * dA + a) * dA + k] = draw();
        }
        if (c == Category::lie && rng.chance(3, 4)) {
            for (std::size_t b = 0; b < dB; ++b)
                for (std::size_t a = 0; a < dA; ++a)
                    for (std::size_t k = 0; k < dA; ++k) right[(a * dB + b) * dA + k] = -left[(b * dA + a) * dA + k];
        } else if (c == Category::commutative && rng.chance(3, 4)) {
            for (std::size_t b = 0; b < dB; ++b)
                for (std::size_t a = 0; a < dA; ++a)
                    for (std::size_t k = 0; k < dA; ++k) right[(a * dB + b) * dA + k] = left[(b * dA + a) * dA + k];
        } else {
            const std::size_t rterms = rng.below(dB * dA + 1);
            for (std::size_t s = 0; s < rterms; ++s) {
                const std::size_t b = rng.below(dB), a = rng.below(dA), k = rng.below(dA);
                right[(a * dB + b) * dA + k] = draw();
            }
        }
    }
    return make_action(std::move(B), std::move(A), std::move(left), std::move(right));
}

}  // namespace actorkit
