#include "actorkit/json_io.hpp"

#include <set>
#include <utility>

#include "actorkit/errors.hpp"

namespace actorkit {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key '") + key + "'");
    return *it;
}

std::size_t count(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const json& array(const json& j, std::size_t size, const std::string& what)
{
    if (!j.is_array() || j.size() != size)
        throw InputError(what + " must be an array of length " + std::to_string(size));
    return j;
}

Vector vector_from_json(Field f, const json& j, std::size_t n, const std::string& what)
{
    Vector v;
    for (const auto& x : array(j, n, what)) v.push_back(scalar_from_json(f, x));
    return v;
}

json vector_to_json(std::span<const Scalar> v)
{
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

json matrix_to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(Field f, const json& j, std::size_t n, const std::string& what)
{
    Matrix m(f, n, n);
    const json& rows = array(j, n, what);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = array(rows[r], n, what + " row");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(f, row[c]);
    }
    return m;
}

// [outer][inner][k] with outer-major flattening.
std::vector<Scalar> tensor_from_json(Field f, const json& j, std::size_t outer, std::size_t inner, std::size_t n,
                                     const std::string& what)
{
    std::vector<Scalar> out;
    const json& o = array(j, outer, what);
    for (std::size_t x = 0; x < outer; ++x) {
        const json& in = array(o[x], inner, what);
        for (std::size_t y = 0; y < inner; ++y)
            for (auto& s : vector_from_json(f, in[y], n, what + " entry")) out.push_back(std::move(s));
    }
    return out;
}

json tensor_to_json(const std::vector<Scalar>& t, std::size_t outer, std::size_t inner, std::size_t n)
{
    json o = json::array();
    for (std::size_t x = 0; x < outer; ++x) {
        json in = json::array();
        for (std::size_t y = 0; y < inner; ++y)
            in.push_back(vector_to_json(std::span<const Scalar>(t).subspan((x * inner + y) * n, n)));
        o.push_back(std::move(in));
    }
    return o;
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON document: ") + e.what());
    }
}

}  // namespace

json scalar_to_json(const Scalar& s)
{
    if (!s.field().is_rational()) return s.residue();
    if (auto v = s.as_long()) return *v;
    return s.to_string();
}

Scalar scalar_from_json(Field f, const json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Scalar::parse(f, std::to_string(j.get<unsigned long long>()));
        return Scalar::parse(f, std::to_string(j.get<long long>()));
    }
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw InputError("scalar must be an integer or an \"n/d\" string, got " + j.dump());
}

json field_to_json(Field f)
{
    if (f.is_rational()) return "Q";
    return json{{"p", f.modulus()}};
}

Field field_from_json(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.contains("p")) return Field::prime(count(j.at("p"), "field.p"));
    throw InputError("field must be \"Q\" or {\"p\": prime}, got " + j.dump());
}

json algebra_to_json(const Algebra& a)
{
    json products = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vector v = a.product(i, j);
            if (!is_zero(v)) products.push_back({{"i", i}, {"j", j}, {"v", vector_to_json(v)}});
        }
    return {{"field", field_to_json(a.field())},
            {"dim", a.dim()},
            {"basis", a.names()},
            {"category", std::string(to_string(a.category()))},
            {"products", std::move(products)}};
}

Algebra algebra_from_json(const json& j)
{
    return guarded([&] {
        const Field f = field_from_json(field(j, "field"));
        const std::size_t n = count(field(j, "dim"), "dim");
        std::vector<std::string> names;
        if (j.contains("basis")) {
            for (const auto& s : array(j.at("basis"), n, "basis")) {
                if (!s.is_string()) throw InputError("basis names must be strings");
                names.push_back(s.get<std::string>());
            }
        }
        const Category cat = j.contains("category") ? parse_category(j.at("category").get<std::string>()) : Category::raw;
        std::vector<Algebra::Product> products;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        if (j.contains("products")) {
            if (!j.at("products").is_array()) throw InputError("products must be an array");
            for (const auto& p : j.at("products")) {
                const std::size_t i = count(field(p, "i"), "product index i"), jj = count(field(p, "j"), "product index j");
                if (i >= n || jj >= n)
                    throw InputError("product index (" + std::to_string(i) + ", " + std::to_string(jj) + ") out of range");
                if (!seen.emplace(i, jj).second)
                    throw InputError("product (" + std::to_string(i) + ", " + std::to_string(jj) + ") given twice");
                products.push_back({i, jj, vector_from_json(f, field(p, "v"), n, "product value")});
            }
        }
        return Algebra::from_products(f, n, cat, products, std::move(names));
    });
}

json action_to_json(const ActionPair& act)
{
    const std::size_t dB = act.B.dim(), dA = act.A.dim();
    return {{"B", algebra_to_json(act.B)},
            {"A", algebra_to_json(act.A)},
            {"left", tensor_to_json(act.left, dB, dA, dA)},
            {"right", tensor_to_json(act.right, dA, dB, dA)}};
}

ActionPair action_from_json(const json& j)
{
    return guarded([&] {
        Algebra B = algebra_from_json(field(j, "B")), A = algebra_from_json(field(j, "A"));
        if (B.field() != A.field()) throw InputError("acting and target algebras are over different fields");
        const Field f = A.field();
        const std::size_t dB = B.dim(), dA = A.dim();
        auto left = tensor_from_json(f, field(j, "left"), dB, dA, dA, "left");
        auto right = tensor_from_json(f, field(j, "right"), dA, dB, dA, "right");
        return make_action(std::move(B), std::move(A), std::move(left), std::move(right));
    });
}

json actor_to_json(const ActorAlgebra& actor)
{
    json basis = json::array();
    for (const auto& e : actor.elements) basis.push_back({{"L", matrix_to_json(e.L)}, {"R", matrix_to_json(e.R)}});
    return {{"kind", std::string(to_string(actor.kind))},
            {"target", algebra_to_json(actor.target)},
            {"basis", std::move(basis)},
            {"tensor", algebra_to_json(actor.algebra)},
            {"action", action_to_json(actor.action)}};
}

ActorAlgebra actor_from_json(const json& j)
{
    return guarded([&] {
        ActorAlgebra out;
        out.kind = parse_actor_kind(field(j, "kind").get<std::string>());
        out.target = algebra_from_json(field(j, "target"));
        out.algebra = algebra_from_json(field(j, "tensor"));
        out.action = action_from_json(field(j, "action"));
        const Field f = out.target.field();
        const std::size_t n = out.target.dim();
        const json& basis = field(j, "basis");
        if (!basis.is_array()) throw InputError("actor basis must be an array");
        std::vector<Vector> flat;
        for (const auto& e : basis) {
            BiMap m{matrix_from_json(f, field(e, "L"), n, "L"), matrix_from_json(f, field(e, "R"), n, "R")};
            flat.push_back(flatten(m));
            out.elements.push_back(std::move(m));
        }
        if (out.algebra.dim() != out.elements.size() || out.action.B.dim() != out.elements.size())
            throw InputError("actor basis, tensor and action disagree on the dimension");
        if (out.action.A.tensor() != out.target.tensor() || out.algebra.field() != f)
            throw InputError("actor action does not act on the target");
        for (std::size_t b = 0; b < out.elements.size(); ++b)
            if (out.action.left_matrix(b) != out.elements[b].L || out.action.right_matrix(b) != out.elements[b].R)
                throw InputError("actor action disagrees with basis element " + std::to_string(b));
        out.span = Subspace::span(f, 2 * n * n, flat);
        if (out.span.dim() != out.elements.size()) throw InputError("actor basis is linearly dependent");
        return out;
    });
}

json report_to_json(const Report& r)
{
    json details = json::array();
    for (const auto& d : r.details) details.push_back({{"label", d.label}, {"status", d.status}, {"note", d.note}});
    json out{{"check", r.check}, {"passed", r.passed}, {"details", std::move(details)}};
    if (!r.passed) {
        out["failed"] = r.failed;
        out["witness"] = r.witness;
        out["lhs"] = r.lhs;
        out["rhs"] = r.rhs;
    }
    return out;
}

Report report_from_json(const json& j)
{
    return guarded([&] {
        Report r;
        r.check = field(j, "check").get<std::string>();
        r.passed = field(j, "passed").get<bool>();
        r.failed = j.value("failed", "");
        r.witness = j.value("witness", std::vector<std::size_t>{});
        r.lhs = j.value("lhs", "");
        r.rhs = j.value("rhs", "");
        if (j.contains("details"))
            for (const auto& d : j.at("details"))
                r.details.push_back({d.at("label").get<std::string>(), d.at("status").get<std::string>(), d.value("note", "")});
        return r;
    });
}

json verdict_to_json(const Verdict& v, bool with_actor)
{
    json out{{"exists", v.exists},
             {"actor_kind", v.actor_kind},
             {"actor_dim", v.actor_dim},
             {"semidirect_dim", v.semidirect_dim},
             {"flags", {{"ann_zero", v.flags.ann_zero}, {"perfect", v.flags.perfect}}}};
    if (v.failure) out["failure"] = report_to_json(*v.failure);
    if (v.condition) out["condition"] = report_to_json(*v.condition);
    if (!v.note.empty()) out["note"] = v.note;
    if (with_actor && v.actor) out["actor"] = actor_to_json(*v.actor);
    return out;
}

json group_to_json(const Group& g)
{
    return {{"order", g.order}, {"table", g.table}, {"names", g.names}};
}

Group group_from_json(const json& j)
{
    return guarded([&] {
        const std::size_t n = count(field(j, "order"), "order");
        const json& t = array(field(j, "table"), n, "table");
        std::vector<std::vector<long long>> table;
        for (const auto& row : t) {
            if (!row.is_array()) throw InputError("table rows must be arrays");
            std::vector<long long> r;
            for (const auto& x : row) {
                if (!x.is_number_integer()) throw InputError("table entries must be integers");
                r.push_back(x.get<long long>());
            }
            table.push_back(std::move(r));
        }
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return make_group(table, std::move(names));
    });
}

json cond4_to_json(const Cond4Result& r)
{
    json pairs = json::array();
    for (auto o : r.pairs) pairs.push_back(std::string(to_string(o)));
    return {{"outcome", std::string(to_string(r.outcome))}, {"pairs", std::move(pairs)}, {"report", report_to_json(r.report)}};
}

json parse_json_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace actorkit
