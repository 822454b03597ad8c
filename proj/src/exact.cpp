#include "actorkit/exact.hpp"


#include "actorkit/errors.hpp"

namespace actorkit {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 32))
        throw InputError("modulus " + std::to_string(p) + " too large (must be below 2^32)");
    if (!is_prime(p))
        throw InputError("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::string Field::to_string() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f, long value)
{
    if (f.is_rational()) {
        v_ = mpq_class(value);
    } else {
        const auto p = static_cast<long long>(f.modulus());
        long long r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        v_ = Residue{static_cast<std::uint64_t>(r), f.modulus()};
    }
}

Scalar::Scalar(Field f, const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw InputError("zero denominator");
    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        v_ = std::move(q);
    } else {
        const std::uint64_t p = f.modulus();
        const std::uint64_t d = reduce_mpz(den, p);
        if (d == 0) throw InputError("denominator divisible by the field characteristic");
        const std::uint64_t n = reduce_mpz(num, p);
        v_ = Residue{n * mod_pow(d, p - 2, p) % p, p};
    }
}

Scalar Scalar::parse(Field f, std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string str(s);
        if (str.empty()) throw InputError("empty scalar literal");
        std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
        if (start == str.size()) throw InputError("bad scalar literal '" + std::string(text) + "'");
        for (std::size_t i = start; i < str.size(); ++i)
            if (str[i] < '0' || str[i] > '9')
                throw InputError("bad scalar literal '" + std::string(text) + "'");
        if (str[0] == '+') str.erase(0, 1);
        return mpz_class(str, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(f, parse_int(text), mpz_class(1));
    return Scalar(f, parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Field Scalar::field() const noexcept
{
    if (const auto* r = std::get_if<Residue>(&v_)) return Field::prime_unchecked(r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const noexcept
{
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const noexcept
{
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

std::uint64_t Scalar::residue() const
{
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
    throw InputError("residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const
{
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw InputError("rational() on a finite-field scalar");
}

std::optional<long> Scalar::as_long() const
{
    if (const auto* r = std::get_if<Residue>(&v_)) return static_cast<long>(r->value);
    const auto& q = std::get<mpq_class>(v_);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

void Scalar::require_same_field(const Scalar& o) const
{
    const auto* a = std::get_if<Residue>(&v_);
    const auto* b = std::get_if<Residue>(&o.v_);
    if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
        throw InputError("mixed field descriptors: " + field().to_string() + " vs " +
                         o.field().to_string());
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw InputError("division by zero");
    Scalar out = *this;
    if (auto* r = std::get_if<Residue>(&out.v_)) {
        r->value = mod_pow(r->value, r->modulus - 2, r->modulus);
    } else {
        auto& q = std::get<mpq_class>(out.v_);
        q = 1 / q;
    }
    return out;
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    if (auto* r = std::get_if<Residue>(&out.v_)) {
        r->value = r->value == 0 ? 0 : r->modulus - r->value;
    } else {
        auto& q = std::get<mpq_class>(out.v_);
        q = -q;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&v_)) {
        r->value = (r->value + std::get<Residue>(o.v_).value) % r->modulus;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&v_)) {
        r->value = (r->value + r->modulus - std::get<Residue>(o.v_).value) % r->modulus;
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&v_)) {
        r->value = r->value * std::get<Residue>(o.v_).value % r->modulus;
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.require_same_field(b);
    if (const auto* r = std::get_if<Scalar::Residue>(&a.v_))
        return r->value == std::get<Scalar::Residue>(b.v_).value;
    return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const
{
    if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
}

// ---------------------------------------------------------------- vectors

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(std::span<const Scalar> v)
{
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v)
{
    Vector out(v.begin(), v.end());
    for (auto& x : out) x *= s;
    return out;
}

void axpy(std::span<Scalar> y, const Scalar& s, std::span<const Scalar> x)
{
    if (y.size() != x.size()) throw InputError("vector length mismatch");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += s * x[i];
}

std::string to_string(std::span<const Scalar> v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + "]";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, 0, cols);
    m.data_.reserve(rows.size() * cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::append_row(std::span<const Scalar> r)
{
    if (r.size() != cols_)
        throw InputError("row of length " + std::to_string(r.size()) + " in a matrix with " +
                         std::to_string(cols_) + " columns");
    for (const auto& s : r)
        if (s.field() != field_) throw InputError("mixed field descriptors in matrix row");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_) throw InputError("matrix-vector length mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

bool Matrix::is_zero() const { return actorkit::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    if (a.field_ != b.field_) throw InputError("mixed field descriptors in matrix product");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator*(const Scalar& s, Matrix m)
{
    for (auto& x : m.data_) x *= s;
    return m;
}

Matrix operator-(Matrix m)
{
    for (auto& x : m.data_) x = -x;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::validate() const
{
    if (data_.size() != rows_ * cols_) throw InputError("matrix entry count mismatch");
    for (const auto& s : data_)
        if (s.field() != field_) throw InputError("mixed field descriptors in matrix");
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m)
{
    m.validate();
    RrefResult res{m, 0, {}};
    Matrix& a = res.form;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
        const Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar factor = -a(i, c);
            axpy(a.row(i), factor, a.row(r));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m)
{
    const auto red = rref(m);
    const Field f = m.field();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;

    // Kernel vector for free column j: 1 at j, -R[i][j] at pivot i. The set is
    // re-reduced so the returned basis is the canonical RREF one.
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vector v = zero_vector(f, n);
        v[j] = Scalar::one(f);
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.form(i, j);
        rows.push_back(std::move(v));
    }
    auto basis = rref(Matrix::from_rows(f, n, rows));
    Matrix out(f, 0, n);
    for (std::size_t i = 0; i < basis.rank; ++i) out.append_row(basis.form.row(i));
    return out;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b)
{
    if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
    const Field f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        if (b[i].field() != f) throw InputError("mixed field descriptors in right-hand side");
        aug(i, m.cols()) = b[i];
    }
    const auto red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(f, m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.form(i, m.cols());
    return x;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& generators)
{
    auto red = rref(Matrix::from_rows(f, ambient, generators));
    Matrix basis(f, 0, ambient);
    for (std::size_t i = 0; i < red.rank; ++i) basis.append_row(red.form.row(i));
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::zero(Field f, std::size_t ambient) { return span(f, ambient, {}); }

Subspace Subspace::full(Field f, std::size_t ambient)
{
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vector(f, ambient, i));
    return span(f, ambient, gens);
}

Subspace Subspace::from_canonical(Matrix basis)
{
    Subspace s;
    s.ambient_ = basis.cols();
    auto red = rref(basis);
    if (red.rank != basis.rows() || !(red.form == basis))
        throw InputError("basis is not in canonical reduced row-echelon form");
    s.pivots_ = std::move(red.pivots);
    s.basis_ = std::move(basis);
    return s;
}

Vector Subspace::vector(std::size_t i) const
{
    auto r = basis_.row(i);
    return {r.begin(), r.end()};
}

Vector Subspace::reduce(std::span<const Scalar> v) const
{
    if (v.size() != ambient_) throw InputError("vector length does not match subspace ambient");
    Vector out(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Scalar c = out[pivots_[i]];
        if (!c.is_zero()) axpy(out, -c, basis_.row(i));
    }
    return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return actorkit::is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const
{
    if (!contains(v)) return std::nullopt;
    Vector c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

Vector Subspace::combine(std::span<const Scalar> coords) const
{
    if (coords.size() != dim()) throw InputError("coordinate length mismatch");
    Vector out = zero_vector(basis_.field(), ambient_);
    for (std::size_t i = 0; i < coords.size(); ++i) axpy(out, coords[i], basis_.row(i));
    return out;
}

}  // namespace actorkit
