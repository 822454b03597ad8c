#include "actorkit/constructions.hpp"

#include <functional>
#include <string>

#include "actorkit/errors.hpp"

namespace actorkit {

std::string_view to_string(ActorKind k)
{
    switch (k) {
    case ActorKind::der: return "der";
    case ActorKind::bim: return "bim";
    case ActorKind::bider1: return "bider1";
    case ActorKind::bider2: return "bider2";
    case ActorKind::mult: return "mult";
    }
    return "?";
}

ActorKind parse_actor_kind(std::string_view tag)
{
    for (auto k : {ActorKind::der, ActorKind::bim, ActorKind::bider1, ActorKind::bider2, ActorKind::mult})
        if (tag == to_string(k)) return k;
    if (tag == "bider") return ActorKind::bider1;
    throw InputError("unknown actor kind '" + std::string(tag) + "'");
}

Vector flatten(const BiMap& m)
{
    Vector v(m.L.entries());
    v.insert(v.end(), m.R.entries().begin(), m.R.entries().end());
    return v;
}

BiMap ActorAlgebra::element(std::span<const Scalar> coords) const
{
    const Vector flat = span.combine(coords);
    const std::size_t n = target.dim(), nn = n * n;
    BiMap out{Matrix(target.field(), n, n), Matrix(target.field(), n, n)};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            out.L(r, c) = flat[r * n + c];
            out.R(r, c) = flat[nn + r * n + c];
        }
    return out;
}

BiMap actor_product(ActorKind kind, const BiMap& x, const BiMap& y)
{
    switch (kind) {
    case ActorKind::der: {
        Matrix l = x.L * y.L - y.L * x.L;
        return {l, -l};
    }
    case ActorKind::bim: return {x.L * y.L, y.R * x.R};
    case ActorKind::bider1: return {x.L * y.L + y.R * x.L, y.R * x.R - x.R * y.R};
    case ActorKind::bider2: return {y.R * x.L - x.L * y.R, y.R * x.R - x.R * y.R};
    case ActorKind::mult: {
        Matrix l = x.L * y.L;
        return {l, l};
    }
    }
    throw InputError("unknown actor kind");
}

namespace {

// Rows of a homogeneous linear system in the entries of unknown n x n maps
// X_0, X_1, ... (entry X(k, i) = coefficient k of X(e_i)), stored blockwise.
class Constraints {
public:
    Constraints(const Algebra& a, std::size_t blocks)
        : a_(a), n_(a.dim()), rows_(a.field(), 0, blocks * n_ * n_), row_(blocks * n_ * n_, Scalar::zero(a.field()))
    {
    }

    // coefficient k of X(e_i e_j)
    void map_of_product(long sign, std::size_t x, std::size_t i, std::size_t j, std::size_t k)
    {
        for (std::size_t m = 0; m < n_; ++m) add(x, k, m, sign, a_.coeff(i, j, m));
    }
    // coefficient k of X(e_i) e_j
    void map_times(long sign, std::size_t x, std::size_t i, std::size_t j, std::size_t k)
    {
        for (std::size_t m = 0; m < n_; ++m) add(x, m, i, sign, a_.coeff(m, j, k));
    }
    // coefficient k of e_i X(e_j)
    void times_map(long sign, std::size_t x, std::size_t i, std::size_t j, std::size_t k)
    {
        for (std::size_t m = 0; m < n_; ++m) add(x, m, j, sign, a_.coeff(i, m, k));
    }
    void commit()
    {
        if (!is_zero(row_)) rows_.append_row(row_);
        for (auto& s : row_) s = Scalar::zero(a_.field());
    }
    Matrix nullspace() const { return actorkit::nullspace(rows_); }

private:
    void add(std::size_t x, std::size_t r, std::size_t c, long sign, const Scalar& v)
    {
        if (v.is_zero()) return;
        auto& slot = row_[x * n_ * n_ + r * n_ + c];
        slot = sign > 0 ? slot + v : slot - v;
    }

    const Algebra& a_;
    std::size_t n_;
    Matrix rows_;
    Vector row_;
};

template <class F>
void for_pairs(std::size_t n, F f)
{
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) f(i, j, k);
}

void require(const Algebra& a, Category c, const char* what)
{
    if (auto r = check_category(a, c); !r.passed)
        throw InputError(std::string(what) + " needs a " + std::string(to_string(c)) + " algebra: " + r.failed);
}

Matrix block(const Algebra& a, std::span<const Scalar> v, std::size_t b)
{
    const std::size_t n = a.dim();
    Matrix m(a.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[b * n * n + r * n + c];
    return m;
}

// Turns nullspace rows into elements, the span, the induced tensor (with the
// closure certificate) and the action on the target.
ActorAlgebra assemble(const Algebra& a, ActorKind kind, const Matrix& kernel)
{
    ActorAlgebra out{a, kind, {}, {}, {}, {}};
    const Field f = a.field();
    const std::size_t n = a.dim();
    const bool paired = kind == ActorKind::bim || kind == ActorKind::bider1 || kind == ActorKind::bider2;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        Matrix l = block(a, kernel.row(r), 0);
        if (paired) out.elements.push_back({l, block(a, kernel.row(r), 1)});
        else if (kind == ActorKind::der) out.elements.push_back({l, -l});
        else out.elements.push_back({l, l});
    }
    Matrix flat(f, 0, 2 * n * n);
    for (const auto& e : out.elements) flat.append_row(flatten(e));
    out.span = Subspace::from_canonical(flat);

    const std::size_t m = out.elements.size();
    std::vector<Scalar> t;
    t.reserve(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const BiMap p = actor_product(kind, out.elements[i], out.elements[j]);
            auto c = out.coordinates(p);
            if (!c)
                throw ConstructionError(std::string(to_string(kind)) + ": product of basis elements " +
                                        std::to_string(i) + ", " + std::to_string(j) + " leaves the span");
            t.insert(t.end(), c->begin(), c->end());
        }
    Category cat = Category::raw;
    switch (kind) {
    case ActorKind::der: cat = Category::lie; break;
    case ActorKind::bim: cat = Category::associative; break;
    case ActorKind::bider1:
    case ActorKind::bider2: cat = Category::leibniz; break;
    case ActorKind::mult: cat = Category::commutative; break;
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back(std::string(to_string(kind)) + std::to_string(i));
    out.algebra = Algebra(f, m, std::move(t), cat, std::move(names));
    std::vector<Matrix> L, R;
    for (const auto& e : out.elements) {
        L.push_back(e.L);
        R.push_back(e.R);
    }
    out.action = action_from_maps(out.algebra, a, L, R);
    return out;
}

}  // namespace

ActorAlgebra derivations(const Algebra& a)
{
    require(a, Category::lie, "derivations");
    Constraints c(a, 1);
    // D(xy) = D(x)y + xD(y)
    for_pairs(a.dim(), [&](auto i, auto j, auto k) {
        c.map_of_product(1, 0, i, j, k);
        c.map_times(-1, 0, i, j, k);
        c.times_map(-1, 0, i, j, k);
        c.commit();
    });
    return assemble(a, ActorKind::der, c.nullspace());
}

ActorAlgebra bimultipliers(const Algebra& a)
{
    require(a, Category::associative, "bimultipliers");
    Constraints c(a, 2);
    for_pairs(a.dim(), [&](auto i, auto j, auto k) {
        // L(xy) = L(x)y
        c.map_of_product(1, 0, i, j, k);
        c.map_times(-1, 0, i, j, k);
        c.commit();
        // R(xy) = xR(y)
        c.map_of_product(1, 1, i, j, k);
        c.times_map(-1, 1, i, j, k);
        c.commit();
        // xL(y) = R(x)y
        c.times_map(1, 0, i, j, k);
        c.map_times(-1, 1, i, j, k);
        c.commit();
    });
    return assemble(a, ActorKind::bim, c.nullspace());
}

ActorAlgebra biderivations(const Algebra& a, int variant)
{
    if (variant != 1 && variant != 2) throw InputError("biderivation variant must be 1 or 2");
    require(a, Category::leibniz, "biderivations");
    Constraints c(a, 2);
    for_pairs(a.dim(), [&](auto i, auto j, auto k) {
        // [[x,y],phi] = [x,[y,phi]] + [[x,phi],y]
        c.map_of_product(1, 1, i, j, k);
        c.times_map(-1, 1, i, j, k);
        c.map_times(-1, 1, i, j, k);
        c.commit();
        // [phi,[x,y]] = [[phi,x],y] - [[phi,y],x]
        c.map_of_product(1, 0, i, j, k);
        c.map_times(-1, 0, i, j, k);
        c.map_times(1, 0, j, i, k);
        c.commit();
        // [x,[y,phi]] = -[x,[phi,y]]
        c.times_map(1, 1, i, j, k);
        c.times_map(1, 0, i, j, k);
        c.commit();
    });
    return assemble(a, variant == 1 ? ActorKind::bider1 : ActorKind::bider2, c.nullspace());
}

ActorAlgebra multipliers(const Algebra& a)
{
    require(a, Category::commutative, "multipliers");
    Constraints c(a, 1);
    // f(xy) = f(x)y
    for_pairs(a.dim(), [&](auto i, auto j, auto k) {
        c.map_of_product(1, 0, i, j, k);
        c.map_times(-1, 0, i, j, k);
        c.commit();
    });
    return assemble(a, ActorKind::mult, c.nullspace());
}

ActorAlgebra build_actor(const Algebra& a, ActorKind kind)
{
    switch (kind) {
    case ActorKind::der: return derivations(a);
    case ActorKind::bim: return bimultipliers(a);
    case ActorKind::bider1: return biderivations(a, 1);
    case ActorKind::bider2: return biderivations(a, 2);
    case ActorKind::mult: return multipliers(a);
    }
    throw InputError("unknown actor kind");
}

Matrix canonical_d(const ActorAlgebra& actor)
{
    const Algebra& a = actor.target;
    Matrix d(a.field(), a.dim(), actor.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const BiMap inner{a.left_multiplication(i), a.right_multiplication(i)};
        auto c = actor.coordinates(inner);
        if (!c)
            throw ConstructionError("multiplication by " + a.name(i) + " is not an element of " +
                                    std::string(to_string(actor.kind)));
        for (std::size_t j = 0; j < actor.dim(); ++j) d(i, j) = (*c)[j];
    }
    return d;
}

Subspace inner_image(const ActorAlgebra& actor)
{
    const Matrix d = canonical_d(actor);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < d.rows(); ++i) rows.emplace_back(d.row(i).begin(), d.row(i).end());
    return Subspace::span(actor.target.field(), actor.dim(), rows);
}

Report crossed_module_check(const Matrix& d, const ActionPair& act)
{
    const Algebra &A = act.A, &B = act.B;
    if (d.rows() != A.dim() || d.cols() != B.dim()) throw InputError("d must be dim(A) x dim(B)");
    auto r = Report::start("crossed_module");
    r.note("(i) d(r.c) = r + d(c) - r", "auto-pass", "dot action is trivial and addition commutative");
    r.note("(ii) d(c).c' = c + c' - c", "auto-pass", "dot action is trivial and addition commutative");

    const Field f = A.field();
    auto image = [&](std::span<const Scalar> v) {
        Vector out = zero_vector(f, B.dim());
        for (std::size_t i = 0; i < A.dim(); ++i)
            if (!v[i].is_zero()) axpy(out, v[i], d.row(i));
        return out;
    };
    auto ea = [&](std::size_t i) { return unit_vector(f, A.dim(), i); };
    auto eb = [&](std::size_t i) { return unit_vector(f, B.dim(), i); };

    struct Pair {
        const char* label;
        std::size_t left_dim, right_dim;
        std::function<std::pair<Vector, Vector>(std::size_t, std::size_t)> eval;
    };
    const std::vector<Pair> checks = {
        {"d(c)*c' = c*c'", A.dim(), A.dim(),
         [&](std::size_t c, std::size_t c2) {
             return std::pair{act.act_left(image(ea(c)), ea(c2)), A.product(c, c2)};
         }},
        {"c'*d(c) = c'*c", A.dim(), A.dim(),
         [&](std::size_t c, std::size_t c2) {
             return std::pair{act.act_right(ea(c2), image(ea(c))), A.product(c2, c)};
         }},
        {"d(r*c) = r*d(c)", B.dim(), A.dim(),
         [&](std::size_t rr, std::size_t c) {
             return std::pair{image(act.act_left(eb(rr), ea(c))), B.multiply(eb(rr), image(ea(c)))};
         }},
        {"d(c*r) = d(c)*r", A.dim(), B.dim(),
         [&](std::size_t c, std::size_t rr) {
             return std::pair{image(act.act_right(ea(c), eb(rr))), B.multiply(image(ea(c)), eb(rr))};
         }},
        {"d(c*c') = d(c)*d(c')", A.dim(), A.dim(),
         [&](std::size_t c, std::size_t c2) {
             return std::pair{image(A.product(c, c2)), B.multiply(image(ea(c)), image(ea(c2)))};
         }},
    };
    for (const auto& chk : checks) {
        bool ok = true;
        for (std::size_t i = 0; i < chk.left_dim && ok; ++i)
            for (std::size_t j = 0; j < chk.right_dim; ++j) {
                auto [l, rr] = chk.eval(i, j);
                if (l != rr) {
                    r.fail(chk.label, {i, j}, to_string(l), to_string(rr));
                    ok = false;
                    break;
                }
            }
        r.note(chk.label, ok ? "pass" : "fail");
    }
    return r;
}

Report condition1_check(const Algebra& a)
{
    const ActorAlgebra bider = biderivations(a, 1);
    auto r = Report::start("condition1");
    const auto& el = bider.elements;
    for (std::size_t p = 0; p < el.size() && r.passed; ++p)
        for (std::size_t q = 0; q < el.size() && r.passed; ++q) {
            const Matrix lhs = el[p].L * el[q].R;
            const Matrix rhs = -(el[p].L * el[q].L);
            if (lhs == rhs) continue;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Vector l = lhs.column(i), rr = rhs.column(i);
                if (l != rr) {
                    r.fail("[phi,[a,phi']] = -[phi,[phi',a]]", {p, q, i}, to_string(l), to_string(rr));
                    break;
                }
            }
        }
    r.note("basis", "info", "Bider(A) of dimension " + std::to_string(el.size()));
    return r;
}

Report condition2_check(const Algebra& a)
{
    const ActorAlgebra bim = bimultipliers(a);
    auto r = Report::start("condition2");
    const auto& el = bim.elements;
    for (std::size_t p = 0; p < el.size() && r.passed; ++p)
        for (std::size_t q = 0; q < el.size() && r.passed; ++q) {
            const Matrix lhs = el[q].R * el[p].L;
            const Matrix rhs = el[p].L * el[q].R;
            if (lhs == rhs) continue;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Vector l = lhs.column(i), rr = rhs.column(i);
                if (l != rr) {
                    r.fail("(f*a)*f' = f*(a*f')", {p, q, i}, to_string(l), to_string(rr));
                    break;
                }
            }
        }
    r.note("basis", "info", "Bim(A) of dimension " + std::to_string(el.size()));
    return r;
}

SufficientFlags sufficient_conditions(const Algebra& a)
{
    return {annihilator(a).dim() == 0, derived_subspace(a).dim() == a.dim()};
}

}  // namespace actorkit
