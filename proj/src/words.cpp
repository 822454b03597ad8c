#include "actorkit/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "actorkit/errors.hpp"

namespace actorkit {

std::string_view to_string(WordMode m)
{
    switch (m) {
    case WordMode::plain: return "plain";
    case WordMode::comm: return "comm";
    case WordMode::anticomm: return "anticomm";
    }
    return "?";
}

WordMode parse_word_mode(std::string_view tag)
{
    if (tag == "plain") return WordMode::plain;
    if (tag == "comm") return WordMode::comm;
    if (tag == "anticomm") return WordMode::anticomm;
    throw InputError("unknown word mode '" + std::string(tag) + "'");
}

namespace {

const char var_name[] = {'x', 'y', 'z', 't'};

int perm_rank(const std::array<std::uint8_t, 3>& v)
{
    static const std::array<std::array<std::uint8_t, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int r = 0; r < 6; ++r)
        if (perms[r] == v) return r;
    return -1;
}

Monomial3 mono(char a, char b, char c, bool left)
{
    auto id = [](char ch) { return static_cast<std::uint8_t>(ch == 'x' ? 0 : ch == 'y' ? 1 : 2); };
    return {{id(a), id(b), id(c)}, left};
}

Word normalize(std::vector<Term> terms, WordSide side)
{
    std::map<int, Term> acc;
    for (const auto& t : terms) {
        auto [it, fresh] = acc.try_emplace(t.mono.index(), Term{0, t.mono});
        it->second.coeff += t.coeff;
    }
    Word w;
    w.side = side;
    for (auto& [k, t] : acc)
        if (t.coeff != 0) w.terms.push_back(t);
    return w;
}

class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    Word run(WordSide side)
    {
        skip();
        if (s_.substr(pos_) == "0") return Word{{}, side};
        std::vector<Term> terms;
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) {
                if (first) error("empty word");
                break;
            }
            std::int64_t sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                error("expected + or -");
            }
            skip();
            std::int64_t c = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    if (c > (INT64_MAX - 9) / 10) error("coefficient too large");
                    c = c * 10 + (get() - '0');
                }
                skip();
                if (peek() == '*') {
                    ++pos_;
                    skip();
                }
            }
            terms.push_back({sign * c, product()});
            first = false;
        }
        return normalize(std::move(terms), side);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void error(const std::string& what) const
    {
        throw InputError("word parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void expect(char ch)
    {
        skip();
        if (get() != ch) {
            --pos_;
            error(std::string("expected '") + ch + "'");
        }
        skip();
    }
    char var()
    {
        skip();
        const char ch = get();
        if (ch != 'x' && ch != 'y' && ch != 'z') {
            --pos_;
            error("expected x, y or z");
        }
        skip();
        return ch;
    }

    Monomial3 product()
    {
        Monomial3 m;
        if (peek() == '(') {
            ++pos_;
            const char a = var();
            expect('*');
            const char b = var();
            expect(')');
            expect('*');
            const char c = var();
            m = mono(a, b, c, true);
        } else {
            const char a = var();
            expect('*');
            expect('(');
            const char b = var();
            expect('*');
            const char c = var();
            expect(')');
            m = mono(a, b, c, false);
        }
        if (perm_rank(m.vars) < 0) error("each of x, y, z must occur exactly once");
        return m;
    }
};

}  // namespace

int Monomial3::index() const { return perm_rank(vars) * 2 + (left ? 0 : 1); }

std::string to_string(const Monomial3& m)
{
    const char a = var_name[m.vars[0]], b = var_name[m.vars[1]], c = var_name[m.vars[2]];
    std::string s;
    if (m.left) {
        s = {'(', a, '*', b, ')', '*', c};
    } else {
        s = {a, '*', '(', b, '*', c, ')'};
    }
    return s;
}

Word parse_word(std::string_view text, WordSide side) { return WordParser(text).run(side); }

std::string to_string(const Word& w)
{
    if (w.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        const auto& t = w.terms[i];
        const std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
        if (i == 0) {
            if (t.coeff < 0) s += "-";
        } else {
            s += t.coeff < 0 ? " - " : " + ";
        }
        if (mag != 1) s += std::to_string(mag) + "*";
        s += to_string(t.mono);
    }
    return s;
}

std::pair<int, Monomial3> canonical(const Monomial3& m, WordMode mode)
{
    if (mode == WordMode::plain) return {1, m};
    const int flip = mode == WordMode::anticomm ? -1 : 1;
    int sign = 1;
    // Bring to (a*b)*c: u*(v*w) = +-(v*w)*u.
    std::array<std::uint8_t, 3> v = m.vars;
    if (!m.left) {
        v = {m.vars[1], m.vars[2], m.vars[0]};
        sign *= flip;
    }
    if (v[0] > v[1]) {
        std::swap(v[0], v[1]);
        sign *= flip;
    }
    return {sign, Monomial3{v, true}};
}

Word canonicalize(const Word& w, WordMode mode)
{
    std::vector<Term> terms;
    for (const auto& t : w.terms) {
        auto [s, m] = canonical(t.mono, mode);
        terms.push_back({s * t.coeff, m});
    }
    return normalize(std::move(terms), w.side);
}

std::array<std::array<Monomial3, 2>, 4> t_set()
{
    return {{
        {mono('y', 'x', 'z', false), mono('z', 'x', 'y', false)},
        {mono('y', 'z', 'x', false), mono('z', 'y', 'x', false)},
        {mono('y', 'x', 'z', true), mono('z', 'x', 'y', true)},
        {mono('x', 'y', 'z', true), mono('x', 'z', 'y', true)},
    }};
}

Report check_T_coverage(const Word& w1, const Word& w2, WordMode mode)
{
    auto r = Report::start("T_coverage");
    std::set<Monomial3> present;
    std::set<bool> shapes;
    for (const Word* w : {&w1, &w2})
        for (const auto& t : canonicalize(*w, mode).terms) {
            present.insert(t.mono);
            shapes.insert(t.mono.left);
        }
    const auto T = t_set();
    for (std::size_t p = 0; p < T.size(); ++p) {
        const std::string pair = "{" + to_string(T[p][0]) + ", " + to_string(T[p][1]) + "}";
        std::optional<Monomial3> hit;
        for (const auto& m : T[p])
            if (!hit && present.count(canonical(m, mode).second)) hit = m;
        if (hit) {
            r.note("pair " + pair, "pass", "covered by " + to_string(*hit));
        } else {
            const bool renamed = shapes.count(canonical(T[p][0], mode).second.left) > 0;
            r.note("pair " + pair, "fail",
                   renamed ? "uncovered; a renamed instance of the same shape occurs" : "uncovered");
            r.fail("T pair " + pair + " uncovered", {p}, to_string(T[p][0]), to_string(T[p][1]));
        }
    }
    return r;
}

Report check_w2_symmetry(const Word& w2, int sign)
{
    return check_w2_symmetry(w2, sign, sign < 0 ? WordMode::anticomm : WordMode::comm);
}

Report check_w2_symmetry(const Word& w2, int sign, WordMode mode)
{
    if (sign != 1 && sign != -1) throw InputError("symmetry sign must be +1 or -1");
    auto r = Report::start("w2_swap_symmetry");
    std::vector<Term> swapped;
    for (auto t : w2.terms) {
        for (auto& v : t.mono.vars)
            if (v == 1 || v == 2) v = static_cast<std::uint8_t>(3 - v);
        swapped.push_back(t);
    }
    const Word lhs = canonicalize(normalize(std::move(swapped), w2.side), mode);
    Word rhs = canonicalize(w2, mode);
    for (auto& t : rhs.terms) t.coeff *= sign;
    r.note("swapped", "info", to_string(lhs));
    if (lhs != rhs) r.fail(std::string("W2(y,z;x) = ") + (sign < 0 ? "-" : "") + "W2(z,y;x)", {}, to_string(lhs), to_string(rhs));
    return r;
}

// ----------------------------------------------------------- condition 4

std::string_view to_string(Cond4Outcome o)
{
    switch (o) {
    case Cond4Outcome::equal: return "equal";
    case Cond4Outcome::unequal_at_depth: return "unequal-at-depth";
    case Cond4Outcome::undetermined: return "undetermined";
    }
    return "?";
}

namespace {

// Trees are fully parenthesized strings over x, y, z, t.
using Tree = std::string;
using Expr = std::map<Tree, std::int64_t>;

bool is_leaf(const Tree& t) { return t.size() == 1; }

std::pair<Tree, Tree> split(const Tree& t)
{
    int depth = 0;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        else if (t[i] == ')') --depth;
        else if (t[i] == '*' && depth == 0) return {t.substr(1, i - 1), t.substr(i + 1, t.size() - i - 2)};
    }
    return {t, {}};
}

Tree node(const Tree& a, const Tree& b) { return "(" + a + "*" + b + ")"; }

std::string display(const Tree& t) { return is_leaf(t) ? t : t.substr(1, t.size() - 2); }

std::string display(const Expr& e)
{
    if (e.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : e) {
        const std::int64_t mag = c < 0 ? -c : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mag != 1) s += std::to_string(mag) + "*";
        s += display(t);
        first = false;
    }
    return s;
}

bool add_to(Expr& e, const Tree& t, std::int64_t c)
{
    if (c == 0) return true;
    auto& slot = e[t];
    if (__builtin_add_overflow(slot, c, &slot)) return false;
    if (slot == 0) e.erase(t);
    return true;
}

class Rewriter {
public:
    Rewriter(const Word& w1, const Word& w2, WordMode mode) : w1_(w1), w2_(w2), mode_(mode)
    {
        flip_ = mode == WordMode::anticomm ? -1 : 1;
    }

    // Sign 0 means the tree vanishes (anticomm u*u).
    std::pair<int, Tree> canon(const Tree& t) const
    {
        if (mode_ == WordMode::plain || is_leaf(t)) return {1, t};
        auto [a, b] = split(t);
        auto [sa, ca] = canon(a);
        auto [sb, cb] = canon(b);
        int s = sa * sb;
        if (s == 0) return {0, t};
        if (ca == cb && mode_ == WordMode::anticomm) return {0, t};
        if (cb < ca) {
            std::swap(ca, cb);
            s *= flip_;
        }
        return {s, node(ca, cb)};
    }

    std::optional<Expr> canon(const Expr& e) const
    {
        Expr out;
        for (const auto& [t, c] : e) {
            auto [s, ct] = canon(t);
            if (!add_to(out, ct, s * c)) return std::nullopt;
        }
        return out;
    }

    // W1(p,q;r) rewrites (p*q)*r, W2(p,q;r) rewrites r*(p*q). Outside plain
    // mode a missing word is replaced through the swap.
    std::optional<Expr> w1(const Tree& p, const Tree& q, const Tree& r) const
    {
        if (!w1_.empty()) return subst(w1_, p, q, r, 1);
        if (mode_ != WordMode::plain && !w2_.empty()) return subst(w2_, p, q, r, flip_);
        return std::nullopt;
    }
    std::optional<Expr> w2(const Tree& p, const Tree& q, const Tree& r) const
    {
        if (!w2_.empty()) return subst(w2_, p, q, r, 1);
        if (mode_ != WordMode::plain && !w1_.empty()) return subst(w1_, p, q, r, flip_);
        return std::nullopt;
    }

    // One rule application anywhere in t, as unnormalized expressions.
    std::vector<Expr> rewrites(const Tree& t) const
    {
        std::vector<Expr> out;
        if (is_leaf(t)) return out;
        auto [a, b] = split(t);
        if (!is_leaf(a)) {
            auto [a1, a2] = split(a);
            if (!w1_.empty()) out.push_back(subst(w1_, a1, a2, b, 1));
            if (mode_ != WordMode::plain && !w2_.empty()) out.push_back(subst(w2_, a1, a2, b, flip_));
        }
        if (!is_leaf(b)) {
            auto [b1, b2] = split(b);
            if (!w2_.empty()) out.push_back(subst(w2_, b1, b2, a, 1));
            if (mode_ != WordMode::plain && !w1_.empty()) out.push_back(subst(w1_, b1, b2, a, flip_));
        }
        for (auto& e : rewrites(a)) out.push_back(wrap(e, b, true));
        for (auto& e : rewrites(b)) out.push_back(wrap(e, a, false));
        return out;
    }

    std::vector<Expr> successors(const Expr& e) const
    {
        std::vector<Expr> out;
        for (const auto& [t, c] : e)
            for (const auto& r : rewrites(t)) {
                Expr next = e;
                next.erase(t);
                bool ok = true;
                for (const auto& [u, k] : r) {
                    std::int64_t ck;
                    auto [s, cu] = canon(u);
                    if (__builtin_mul_overflow(c, k * s, &ck) || !add_to(next, cu, ck)) ok = false;
                }
                if (ok) out.push_back(std::move(next));
            }
        return out;
    }

    static Expr wrap(const Expr& e, const Tree& other, bool on_left)
    {
        Expr out;
        for (const auto& [t, c] : e) out[on_left ? node(t, other) : node(other, t)] = c;
        return out;
    }

private:
    const Word& w1_;
    const Word& w2_;
    WordMode mode_;
    int flip_;

    static Expr subst(const Word& w, const Tree& p, const Tree& q, const Tree& r, int sign)
    {
        const Tree slot[] = {r, p, q};  // x, y, z
        Expr out;
        for (const auto& term : w.terms) {
            const auto& v = term.mono.vars;
            const Tree t = term.mono.left ? node(node(slot[v[0]], slot[v[1]]), slot[v[2]])
                                          : node(slot[v[0]], node(slot[v[1]], slot[v[2]]));
            add_to(out, t, sign * term.coeff);
        }
        return out;
    }
};

struct Reach {
    std::map<Expr, int> level;
    bool saturated = false;
};

constexpr std::size_t state_cap = 20000;

// The unexpanded origin is never entered: through it every one-step
// expansion reaches every other one trivially.
Reach explore(const Rewriter& rw, const Expr& start, int depth, const Expr& origin)
{
    Reach r;
    r.level[origin] = -1;
    r.level[start] = 0;
    std::vector<Expr> frontier{start};
    for (int d = 1; d <= depth; ++d) {
        std::vector<Expr> next;
        for (const auto& e : frontier)
            for (auto& s : rw.successors(e))
                if (r.level.emplace(s, d).second) next.push_back(std::move(s));
        if (next.empty()) {
            r.saturated = true;
            break;
        }
        if (r.level.size() > state_cap) break;
        frontier = std::move(next);
    }
    return r;
}

}  // namespace

Cond4Result expand_condition4(const Word& w1, const Word& w2, int depth, WordMode mode)
{
    if (depth < 1) throw InputError("condition 4 depth must be at least 1");
    const Rewriter rw(w1, w2, mode);
    const Tree x = "x", y = "y", z = "z", t = "t", xy = node(x, y);

    struct Case {
        std::string label;
        Tree tree;
        std::optional<Expr> a, b;
    };
    auto wrap = [](const std::optional<Expr>& e, const Tree& o, bool on_left) -> std::optional<Expr> {
        if (!e) return std::nullopt;
        return Rewriter::wrap(*e, o, on_left);
    };
    const std::array<Case, 4> cases{{
        {"((x*y)*z)*t", node(node(xy, z), t), rw.w1(xy, z, t), wrap(rw.w1(x, y, z), t, true)},
        {"t*((x*y)*z)", node(t, node(xy, z)), rw.w2(xy, z, t), wrap(rw.w1(x, y, z), t, false)},
        {"(z*(x*y))*t", node(node(z, xy), t), rw.w1(z, xy, t), wrap(rw.w2(x, y, z), t, true)},
        {"t*(z*(x*y))", node(t, node(z, xy)), rw.w2(z, xy, t), wrap(rw.w2(x, y, z), t, false)},
    }};

    Cond4Result res;
    res.report = Report::start("condition4");
    res.report.note("depth", "info", std::to_string(depth) + ", mode " + std::string(to_string(mode)));
    bool any_unequal = false, all_equal = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const Case& c = cases[i];
        std::optional<Expr> a = c.a ? rw.canon(*c.a) : std::nullopt;
        std::optional<Expr> b = c.b ? rw.canon(*c.b) : std::nullopt;
        const std::optional<Expr> origin = rw.canon(Expr{{c.tree, 1}});
        if (!a || !b) {
            res.pairs[i] = Cond4Outcome::undetermined;
            all_equal = false;
            res.report.note(c.label, "fail", "undetermined: no rule for this bracketing");
            res.report.fail(c.label + ": undetermined", {i}, "", "");
            continue;
        }
        const Reach ra = explore(rw, *a, depth, *origin), rb = explore(rw, *b, depth, *origin);
        int best = -1;
        const Expr* meet = nullptr;
        for (const auto& [e, la] : ra.level)
            if (auto it = rb.level.find(e); la >= 0 && it != rb.level.end()) {
                const int d = std::max(la, it->second);
                if (best < 0 || d < best) {
                    best = d;
                    meet = &e;
                }
            }
        if (meet) {
            res.pairs[i] = Cond4Outcome::equal;
            res.report.note(c.label, "pass", "equal at depth " + std::to_string(best) + ": " + display(*meet));
            continue;
        }
        all_equal = false;
        if (ra.saturated && rb.saturated) {
            res.pairs[i] = Cond4Outcome::unequal_at_depth;
            any_unequal = true;
            res.report.note(c.label, "fail", "unequal: both sides saturate");
            res.report.fail(c.label + ": unequal-at-depth", {i}, display(*a), display(*b));
        } else {
            res.pairs[i] = Cond4Outcome::undetermined;
            res.report.note(c.label, "fail", "undetermined at depth " + std::to_string(depth));
            res.report.fail(c.label + ": undetermined", {i}, display(*a), display(*b));
        }
    }
    res.outcome = all_equal ? Cond4Outcome::equal : any_unequal ? Cond4Outcome::unequal_at_depth : Cond4Outcome::undetermined;
    return res;
}

// ----------------------------------------------------------- evaluation

namespace {

Vector evaluate(const Algebra& a, const Monomial3& m, const std::array<std::size_t, 3>& e)
{
    const std::size_t u = e[m.vars[0]], v = e[m.vars[1]], w = e[m.vars[2]];
    if (m.left) return a.right_basis_multiply(a.product(u, v), w);
    return a.left_basis_multiply(u, a.product(v, w));
}

Vector evaluate(const Algebra& a, const Word& w, const std::array<std::size_t, 3>& e)
{
    Vector out = zero_vector(a.field(), a.dim());
    for (const auto& t : w.terms) axpy(out, Scalar(a.field(), static_cast<long>(t.coeff)), evaluate(a, t.mono, e));
    return out;
}

}  // namespace

Report validate_word_on_algebra(const Algebra& a, const Word& w1, const Word& w2)
{
    auto r = Report::start("validate_words");
    const std::size_t n = a.dim();
    const Monomial3 lhs1 = mono('y', 'z', 'x', true), lhs2 = mono('x', 'y', 'z', false);
    for (std::size_t i = 0; i < n && r.passed; ++i)
        for (std::size_t j = 0; j < n && r.passed; ++j)
            for (std::size_t k = 0; k < n && r.passed; ++k) {
                const std::array<std::size_t, 3> e{i, j, k};
                if (!w1.empty()) {
                    const Vector l = evaluate(a, lhs1, e), rv = evaluate(a, w1, e);
                    if (l != rv) r.fail("(y*z)*x = " + to_string(w1), {i, j, k}, to_string(l), to_string(rv));
                }
                if (r.passed && !w2.empty()) {
                    const Vector l = evaluate(a, lhs2, e), rv = evaluate(a, w2, e);
                    if (l != rv) r.fail("x*(y*z) = " + to_string(w2), {i, j, k}, to_string(l), to_string(rv));
                }
            }
    return r;
}

WordSuite canonical_words(Category c)
{
    auto suite = [](const char* a, const char* b, WordMode m) {
        return WordSuite{parse_word(a, WordSide::w1), parse_word(b, WordSide::w2), m};
    };
    switch (c) {
    case Category::lie: return suite("y*(z*x) + (y*x)*z", "(x*y)*z - (x*z)*y", WordMode::anticomm);
    case Category::leibniz: return suite("y*(z*x) + (y*x)*z", "(x*y)*z - (x*z)*y", WordMode::plain);
    case Category::associative: return suite("y*(z*x)", "(x*y)*z", WordMode::plain);
    case Category::commutative: return suite("y*(z*x)", "(x*y)*z", WordMode::comm);
    case Category::alternative:
        return suite("y*(z*x) - (y*x)*z + y*(x*z)", "(x*y)*z + (y*x)*z - y*(x*z)", WordMode::plain);
    default: throw UnsupportedError("no canonical words for category " + std::string(to_string(c)));
    }
}

}  // namespace actorkit
