#include "actorkit/algebra.hpp"

#include <array>
#include <functional>

#include "actorkit/errors.hpp"

namespace actorkit {

namespace {

constexpr std::array category_tags{
    std::pair{Category::lie, "lie"},
    std::pair{Category::leibniz, "leibniz"},
    std::pair{Category::associative, "associative"},
    std::pair{Category::commutative, "commutative"},
    std::pair{Category::alternative, "alternative"},
    std::pair{Category::module, "module"},
    std::pair{Category::raw, "raw"},
};

constexpr std::array identity_tags{
    std::pair{Identity::axiom1, "axiom1"},
    std::pair{Identity::associativity, "associativity"},
    std::pair{Identity::commutativity, "commutativity"},
    std::pair{Identity::antisymmetry, "antisymmetry"},
    std::pair{Identity::jacobi, "jacobi"},
    std::pair{Identity::leibniz, "leibniz"},
    std::pair{Identity::left_alternative, "left_alternative"},
    std::pair{Identity::right_alternative, "right_alternative"},
    std::pair{Identity::alternative_exhaustive, "alternative_exhaustive"},
    std::pair{Identity::zero_product, "zero_product"},
};

// Upper bound on |F|^dim for the non-linearized alternative check.
constexpr std::size_t kExhaustiveCap = 200000;

std::string side(const Vector& v) { return to_string(v); }

}  // namespace

std::string_view to_string(Category c)
{
    for (auto [tag, name] : category_tags)
        if (tag == c) return name;
    return "raw";
}

Category parse_category(std::string_view tag)
{
    for (auto [c, name] : category_tags)
        if (tag == name) return c;
    throw InputError("unknown category tag '" + std::string(tag) + "'");
}

std::string_view to_string(Identity id)
{
    for (auto [tag, name] : identity_tags)
        if (tag == id) return name;
    return "?";
}

Identity parse_identity(std::string_view tag)
{
    if (tag == "anticommutativity") return Identity::antisymmetry;
    for (auto [id, name] : identity_tags)
        if (tag == name) return id;
    throw UnsupportedError("unknown identity tag '" + std::string(tag) + "'");
}

std::vector<Identity> identity_suite(Category c)
{
    switch (c) {
    case Category::lie: return {Identity::antisymmetry, Identity::jacobi};
    case Category::leibniz: return {Identity::leibniz};
    case Category::associative: return {Identity::associativity};
    case Category::commutative: return {Identity::commutativity, Identity::associativity};
    case Category::alternative: return {Identity::left_alternative, Identity::right_alternative};
    case Category::module: return {Identity::zero_product};
    case Category::raw: return {};
    }
    return {};
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Field f, std::size_t dim, std::vector<Scalar> tensor, Category cat,
                 std::vector<std::string> names)
    : field_(f), dim_(dim), tensor_(std::move(tensor)), category_(cat), names_(std::move(names))
{
    if (tensor_.size() != dim_ * dim_ * dim_)
        throw InputError("structure tensor has " + std::to_string(tensor_.size()) +
                         " entries, expected " + std::to_string(dim_ * dim_ * dim_));
    for (const auto& s : tensor_)
        if (s.field() != field_) throw InputError("mixed field descriptors in structure tensor");
    if (names_.empty())
        for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
    if (names_.size() != dim_) throw InputError("basis name count does not match dimension");
    if (category_ == Category::module && !is_zero_product())
        throw InputError("category 'module' requires the zero product");
}

Algebra Algebra::from_products(Field f, std::size_t dim, Category cat,
                               const std::vector<Product>& products,
                               std::vector<std::string> names)
{
    std::vector<Scalar> t(dim * dim * dim, Scalar::zero(f));
    std::vector<bool> seen(dim * dim, false);
    for (const auto& p : products) {
        if (p.i >= dim || p.j >= dim)
            throw InputError("product index (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                             ") out of range");
        if (p.value.size() != dim)
            throw InputError("product value has length " + std::to_string(p.value.size()) +
                             ", expected " + std::to_string(dim));
        if (seen[p.i * dim + p.j])
            throw InputError("duplicate product entry (" + std::to_string(p.i) + "," +
                             std::to_string(p.j) + ")");
        seen[p.i * dim + p.j] = true;
        for (std::size_t k = 0; k < dim; ++k) {
            if (p.value[k].field() != f) throw InputError("mixed field descriptors in product");
            t[(p.i * dim + p.j) * dim + k] = p.value[k];
        }
    }
    return Algebra(f, dim, std::move(t), cat, std::move(names));
}

Algebra Algebra::zero(Field f, std::size_t dim, Category cat)
{
    return Algebra(f, dim, std::vector<Scalar>(dim * dim * dim, Scalar::zero(f)), cat);
}

Algebra Algebra::with_category(Category c) const
{
    return Algebra(field_, dim_, tensor_, c, names_);
}

Vector Algebra::product(std::size_t i, std::size_t j) const
{
    const auto* begin = tensor_.data() + (i * dim_ + j) * dim_;
    return Vector(begin, begin + dim_);
}

Vector Algebra::multiply(std::span<const Scalar> u, std::span<const Scalar> v) const
{
    if (u.size() != dim_ || v.size() != dim_) throw InputError("vector length mismatch in product");
    Vector out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Scalar s = u[i] * v[j];
            axpy(out, s, {tensor_.data() + (i * dim_ + j) * dim_, dim_});
        }
    }
    return out;
}

Vector Algebra::left_basis_multiply(std::size_t i, std::span<const Scalar> v) const
{
    Vector out = zero_vector(field_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        axpy(out, v[j], {tensor_.data() + (i * dim_ + j) * dim_, dim_});
    return out;
}

Vector Algebra::right_basis_multiply(std::span<const Scalar> v, std::size_t j) const
{
    Vector out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        axpy(out, v[i], {tensor_.data() + (i * dim_ + j) * dim_, dim_});
    return out;
}

Matrix Algebra::left_multiplication(std::span<const Scalar> u) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
        const Vector img = multiply(u, unit_vector(field_, dim_, col));
        for (std::size_t k = 0; k < dim_; ++k) m(k, col) = img[k];
    }
    return m;
}

Matrix Algebra::right_multiplication(std::span<const Scalar> u) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
        const Vector img = multiply(unit_vector(field_, dim_, col), u);
        for (std::size_t k = 0; k < dim_; ++k) m(k, col) = img[k];
    }
    return m;
}

Matrix Algebra::left_multiplication(std::size_t i) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t col = 0; col < dim_; ++col)
        for (std::size_t k = 0; k < dim_; ++k) m(k, col) = coeff(i, col, k);
    return m;
}

Matrix Algebra::right_multiplication(std::size_t i) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t col = 0; col < dim_; ++col)
        for (std::size_t k = 0; k < dim_; ++k) m(k, col) = coeff(col, i, k);
    return m;
}

// ---------------------------------------------------------------- identities

namespace {

using Triple = std::function<void(std::size_t, std::size_t, std::size_t, Vector&, Vector&)>;

// Evaluates lhs/rhs on every basis triple in lexicographic order.
void over_triples(const Algebra& a, Report& r, const std::string& label, const Triple& eval)
{
    const std::size_t n = a.dim();
    Vector lhs, rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                eval(i, j, k, lhs, rhs);
                if (lhs != rhs) {
                    r.fail(label, {i, j, k}, side(lhs), side(rhs));
                    return;
                }
            }
}

Report check_exhaustive_alternative(const Algebra& a)
{
    auto r = Report::start("alternative_exhaustive");
    const Field f = a.field();
    if (f.is_rational())
        throw UnsupportedError("alternative_exhaustive needs a finite field");
    const std::size_t n = a.dim();
    const std::uint64_t p = f.modulus();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kExhaustiveCap / p) throw CapExceeded("alternative_exhaustive: |F|^dim too large");
        total *= p;
    }
    Vector x = zero_vector(f, n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t m = 0; m < n; ++m) {
            x[m] = Scalar(f, static_cast<long>(c % p));
            c /= p;
        }
        const Vector xx = a.multiply(x, x);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector y = unit_vector(f, n, j);
            Vector lhs = a.multiply(xx, y);
            Vector rhs = a.multiply(x, a.multiply(x, y));
            if (lhs != rhs) {
                r.fail("left alternative x^2 y = x(xy) at x=" + to_string(x), {code, j}, side(lhs),
                       side(rhs));
                return r;
            }
            lhs = a.multiply(y, xx);
            rhs = a.multiply(a.multiply(y, x), x);
            if (lhs != rhs) {
                r.fail("right alternative y x^2 = (yx)x at x=" + to_string(x), {code, j}, side(lhs),
                       side(rhs));
                return r;
            }
        }
    }
    return r;
}

}  // namespace

Report check_identity(const Algebra& a, Identity id)
{
    auto r = Report::start(std::string(to_string(id)));
    const std::size_t n = a.dim();
    // (u*v)*w and u*(v*w) on basis elements.
    auto lmul = [&](std::size_t i, std::size_t j, std::size_t k) {
        return a.right_basis_multiply(a.product(i, j), k);
    };
    auto rmul = [&](std::size_t i, std::size_t j, std::size_t k) {
        return a.left_basis_multiply(i, a.product(j, k));
    };

    switch (id) {
    case Identity::axiom1:
        // Products are central for addition: vector addition is commutative.
        r.note("x1+(x2*x3) = (x2*x3)+x1", "auto-pass", "vector-space addition is commutative");
        break;
    case Identity::associativity:
        over_triples(a, r, "(x*y)*z = x*(y*z)", [&](auto i, auto j, auto k, Vector& l, Vector& rr) {
            l = lmul(i, j, k);
            rr = rmul(i, j, k);
        });
        break;
    case Identity::commutativity:
        for (std::size_t i = 0; i < n && r.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto l = a.product(i, j), rr = a.product(j, i);
                if (l != rr) {
                    r.fail("x*y = y*x", {i, j}, side(l), side(rr));
                    break;
                }
            }
        break;
    case Identity::antisymmetry:
        // Alternating form: x*x = 0 and x*y = -y*x (equivalent away from char 2).
        for (std::size_t i = 0; i < n && r.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto l = a.product(i, j);
                if (i == j) {
                    if (!is_zero(l)) {
                        r.fail("x*x = 0", {i, i}, side(l), side(zero_vector(a.field(), n)));
                        break;
                    }
                    continue;
                }
                auto rr = scale(-Scalar::one(a.field()), a.product(j, i));
                if (l != rr) {
                    r.fail("x*y = -y*x", {i, j}, side(l), side(rr));
                    break;
                }
            }
        break;
    case Identity::jacobi:
        over_triples(a, r, "x*(y*z) + y*(z*x) + z*(x*y) = 0",
                     [&](auto i, auto j, auto k, Vector& l, Vector& rr) {
                         l = add(add(rmul(i, j, k), rmul(j, k, i)), rmul(k, i, j));
                         rr = zero_vector(a.field(), n);
                     });
        break;
    case Identity::leibniz:
        over_triples(a, r, "[x,[y,z]] = [[x,y],z] - [[x,z],y]",
                     [&](auto i, auto j, auto k, Vector& l, Vector& rr) {
                         l = rmul(i, j, k);
                         rr = subtract(lmul(i, j, k), lmul(i, k, j));
                     });
        break;
    case Identity::left_alternative:
        over_triples(a, r, "x(yz) = (xy)z + (yx)z - y(xz)",
                     [&](auto i, auto j, auto k, Vector& l, Vector& rr) {
                         l = rmul(i, j, k);
                         rr = subtract(add(lmul(i, j, k), lmul(j, i, k)), rmul(j, i, k));
                     });
        break;
    case Identity::right_alternative:
        over_triples(a, r, "(xy)z = x(yz) - (xz)y + x(zy)",
                     [&](auto i, auto j, auto k, Vector& l, Vector& rr) {
                         l = lmul(i, j, k);
                         rr = add(subtract(rmul(i, j, k), lmul(i, k, j)), rmul(i, k, j));
                     });
        break;
    case Identity::alternative_exhaustive:
        return check_exhaustive_alternative(a);
    case Identity::zero_product:
        for (std::size_t i = 0; i < n && r.passed; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto l = a.product(i, j);
                if (!is_zero(l)) {
                    r.fail("x*y = 0", {i, j}, side(l), side(zero_vector(a.field(), n)));
                    break;
                }
            }
        break;
    }
    return r;
}

Report check_category(const Algebra& a, Category c)
{
    auto r = Report::start("category:" + std::string(to_string(c)));
    for (auto id : identity_suite(c)) r.absorb(check_identity(a, id));
    return r;
}

// ---------------------------------------------------------------- subspaces

Subspace annihilator(const Algebra& a)
{
    const std::size_t n = a.dim();
    Matrix constraints(a.field(), 0, n);
    Vector row(n, Scalar::zero(a.field()));
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) row[i] = a.coeff(i, b, k);
            constraints.append_row(row);
            for (std::size_t i = 0; i < n; ++i) row[i] = a.coeff(b, i, k);
            constraints.append_row(row);
        }
    return Subspace::from_canonical(nullspace(constraints));
}

Subspace derived_subspace(const Algebra& a)
{
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(a.product(i, j));
    return Subspace::span(a.field(), a.dim(), gens);
}

Report is_ideal(const Algebra& a, const Subspace& s)
{
    if (s.ambient() != a.dim()) throw InputError("subspace ambient dimension mismatch");
    auto r = Report::start("is_ideal");
    for (std::size_t v = 0; v < s.dim() && r.passed; ++v) {
        const Vector x = s.vector(v);
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector right = a.right_basis_multiply(x, j);
            if (!s.contains(right)) {
                r.fail("s*e_j in s", {v, j}, side(right), side(s.reduce(right)));
                break;
            }
            Vector left = a.left_basis_multiply(j, x);
            if (!s.contains(left)) {
                r.fail("e_j*s in s", {v, j}, side(left), side(s.reduce(left)));
                break;
            }
        }
    }
    return r;
}

Algebra quotient(const Algebra& a, const Subspace& ideal)
{
    if (const auto check = is_ideal(a, ideal); !check.passed)
        throw InputError("quotient by a non-ideal: " + check.failed);
    const std::size_t n = a.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> keep;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) {
            keep.push_back(j);
            names.push_back(a.name(j));
        }
    const std::size_t m = keep.size();
    std::vector<Scalar> t;
    t.reserve(m * m * m);
    for (auto i : keep)
        for (auto j : keep) {
            const Vector rem = ideal.reduce(a.product(i, j));
            for (auto k : keep) t.push_back(rem[k]);
        }
    return Algebra(a.field(), m, std::move(t), a.category(), std::move(names));
}

Algebra change_basis(const Algebra& a, const Matrix& g)
{
    const std::size_t n = a.dim();
    if (g.rows() != n || g.cols() != n) throw InputError("basis change must be square of size dim");
    // Solve g * y = v for y to express products in the new basis.
    Matrix inv(a.field(), n, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto col = solve(g, unit_vector(a.field(), n, c));
        if (!col) throw InputError("basis change matrix is singular");
        for (std::size_t r = 0; r < n; ++r) inv(r, c) = (*col)[r];
    }
    std::vector<Vector> newb;
    for (std::size_t i = 0; i < n; ++i) newb.push_back(g.column(i));
    std::vector<Scalar> t;
    t.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector coords = inv.apply(a.multiply(newb[i], newb[j]));
            t.insert(t.end(), coords.begin(), coords.end());
        }
    return Algebra(a.field(), n, std::move(t), a.category());
}

}  // namespace actorkit
