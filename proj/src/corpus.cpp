#include "actorkit/corpus.hpp"

#include "actorkit/errors.hpp"

namespace actorkit {

namespace catalog {

namespace {

Algebra build(Field f, std::size_t n, Category cat, std::vector<std::string> names,
              std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, long>> entries)
{
    std::vector<Scalar> t(n * n * n, Scalar::zero(f));
    for (auto [i, j, k, v] : entries) t[(i * n + j) * n + k] += Scalar(f, v);
    return Algebra(f, n, std::move(t), cat, std::move(names));
}

}  // namespace

Algebra sl2(Field f)
{
    return build(f, 3, Category::lie, {"h", "e", "f"},
                 {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2}, {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1}});
}

Algebra heisenberg(Field f)
{
    return build(f, 3, Category::lie, {"x", "y", "z"}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
}

Algebra affine_line(Field f)
{
    return build(f, 2, Category::lie, {"x", "y"}, {{0, 1, 1, 1}, {1, 0, 1, -1}});
}

Algebra abelian(Field f, std::size_t n, Category cat) { return Algebra::zero(f, n, cat); }

Algebra leibniz_a5(Field f)
{
    return build(f, 2, Category::leibniz, {"a", "b"}, {{1, 1, 0, 1}});
}

Algebra matrix_algebra(Field f, std::size_t n)
{
    const std::size_t d = n * n;
    std::vector<Scalar> t(d * d * d, Scalar::zero(f));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    // E_ij E_jl = E_il
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                t[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = Scalar::one(f);
    return Algebra(f, d, std::move(t), Category::associative, std::move(names));
}

Algebra truncated_polynomial(Field f, std::size_t n, Category cat)
{
    std::vector<Scalar> t(n * n * n, Scalar::zero(f));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
        for (std::size_t j = 0; i + j < n; ++j) t[(i * n + j) * n + (i + j)] = Scalar::one(f);
    }
    return Algebra(f, n, std::move(t), cat, std::move(names));
}

Algebra ground_field(Field f, Category cat) { return build(f, 1, cat, {"e"}, {{0, 0, 0, 1}}); }

Algebra upper_triangular(Field f)
{
    // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
    return build(f, 3, Category::associative, {"E11", "E12", "E22"},
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
}

Algebra direct_sum(const Algebra& a, const Algebra& b)
{
    if (a.field() != b.field()) throw InputError("direct sum of algebras over different fields");
    const std::size_t n = a.dim() + b.dim();
    std::vector<Scalar> t(n * n * n, Scalar::zero(a.field()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) t[(i * n + j) * n + k] = a.coeff(i, j, k);
    const std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                t[((o + i) * n + (o + j)) * n + (o + k)] = b.coeff(i, j, k);
    auto names = a.names();
    for (const auto& nm : b.names()) names.push_back(nm + "'");
    return Algebra(a.field(), n, std::move(t), a.category(), std::move(names));
}

}  // namespace catalog

namespace {

Scalar random_nonzero(Rng& rng, Field f)
{
    if (f.is_rational()) {
        long v = static_cast<long>(rng.between(1, 3));
        return Scalar(f, rng.chance(1, 2) ? v : -v);
    }
    return Scalar(f, static_cast<long>(rng.between(1, f.modulus() - 1)));
}

std::vector<Algebra> seeds(Field f, Category cat)
{
    using namespace catalog;
    const Algebra lie2 = affine_line(f);
    switch (cat) {
    case Category::lie: return {lie2, sl2(f), heisenberg(f)};
    case Category::leibniz:
        return {lie2.with_category(cat), sl2(f).with_category(cat), heisenberg(f).with_category(cat),
                leibniz_a5(f), direct_sum(leibniz_a5(f), Algebra::zero(f, 1, cat))};
    case Category::associative:
    case Category::alternative:
        return {ground_field(f, cat), truncated_polynomial(f, 2, cat), truncated_polynomial(f, 3, cat),
                direct_sum(ground_field(f, cat), ground_field(f, cat)), upper_triangular(f).with_category(cat),
                direct_sum(ground_field(f, cat), truncated_polynomial(f, 2, cat))};
    case Category::commutative:
        return {ground_field(f, cat), truncated_polynomial(f, 2, cat), truncated_polynomial(f, 3, cat),
                direct_sum(ground_field(f, cat), ground_field(f, cat)),
                direct_sum(ground_field(f, cat), truncated_polynomial(f, 2, cat))};
    case Category::module:
    case Category::raw: return {};
    }
    return {};
}

std::optional<Algebra> sparse_candidate(Rng& rng, Field f, std::size_t dim, Category cat)
{
    std::vector<Scalar> t(dim * dim * dim, Scalar::zero(f));
    const std::size_t terms = rng.between(1, 3);
    for (std::size_t s = 0; s < terms; ++s) {
        const std::size_t i = rng.below(dim), j = rng.below(dim), k = rng.below(dim);
        const Scalar v = random_nonzero(rng, f);
        t[(i * dim + j) * dim + k] = v;
        if (cat == Category::lie) {
            if (i == j) continue;
            t[(j * dim + i) * dim + k] = -v;
        } else if (cat == Category::commutative) {
            t[(j * dim + i) * dim + k] = v;
        }
    }
    Algebra a(f, dim, std::move(t), cat);
    if (!check_category(a).passed) return std::nullopt;
    return a;
}

}  // namespace

Matrix random_invertible(Rng& rng, Field f, std::size_t n)
{
    for (;;) {
        Matrix g(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (f.is_rational())
                    g(i, j) = Scalar(f, static_cast<long>(rng.below(5)) - 2);
                else
                    g(i, j) = Scalar(f, static_cast<long>(rng.below(f.modulus())));
            }
        if (rank(g) == n) return g;
    }
}

Algebra random_algebra(Rng& rng, Field f, std::size_t dim, Category cat)
{
    if (cat == Category::raw) throw InputError("random_algebra needs a concrete category");
    if (cat == Category::module || dim == 0) return Algebra::zero(f, dim, cat);

    std::optional<Algebra> base;
    if (rng.chance(1, 2)) {
        std::vector<Algebra> fitting;
        for (auto& s : seeds(f, cat))
            if (s.dim() <= dim && check_category(s, cat).passed) fitting.push_back(std::move(s));
        if (!fitting.empty()) {
            Algebra s = fitting[rng.below(fitting.size())];
            if (s.dim() < dim) s = catalog::direct_sum(s, Algebra::zero(f, dim - s.dim(), cat));
            base = s.with_category(cat);
        }
    }
    for (int attempt = 0; !base && attempt < 500; ++attempt) base = sparse_candidate(rng, f, dim, cat);
    if (!base) base = Algebra::zero(f, dim, cat);
    return change_basis(*base, random_invertible(rng, f, dim));
}

}  // namespace actorkit
