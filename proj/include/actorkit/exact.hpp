#pragma once

// Exact scalars over Q (GMP rationals) and GF(p), dense matrices over them,
// and the handful of elimination routines everything else reduces to.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace actorkit {

class Field {
public:
    static Field rationals() noexcept { return Field{0}; }
    // Throws InputError unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string to_string() const;

    friend bool operator==(Field, Field) = default;

private:
    friend class Scalar;
    static Field prime_unchecked(std::uint64_t p) noexcept { return Field{p}; }
    explicit constexpr Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

class Scalar {
public:
    // Zero of Q.
    Scalar() = default;
    Scalar(Field f, long value);
    Scalar(Field f, const mpz_class& num, const mpz_class& den);

    static Scalar zero(Field f) { return {f, 0}; }
    static Scalar one(Field f) { return {f, 1}; }
    // Accepts "7", "-3", "2/3" (rational mode); values are reduced mod p otherwise.
    static Scalar parse(Field f, std::string_view text);

    Field field() const noexcept;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Only meaningful in GF(p) mode.
    std::uint64_t residue() const;
    // Only meaningful in rational mode.
    const mpq_class& rational() const;
    // True when the value is an integer that fits in a long.
    std::optional<long> as_long() const;

    Scalar inverse() const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    struct Residue {
        std::uint64_t value = 0;
        std::uint64_t modulus = 0;
    };

    void require_same_field(const Scalar& o) const;

    std::variant<mpq_class, Residue> v_{mpq_class{0}};
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
// In-place y += s * x.
void axpy(std::span<Scalar> y, const Scalar& s, std::span<const Scalar> x);
std::string to_string(std::span<const Scalar> v);

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    // Throws InputError on ragged rows or mixed fields.
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix identity(Field f, std::size_t n);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const noexcept { return data_; }

    void append_row(std::span<const Scalar> r);
    Matrix transpose() const;
    Vector apply(std::span<const Scalar> v) const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend Matrix operator-(Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    // Throws InputError if any entry lives in another field.
    void validate() const;

private:
    Field field_ = Field::rationals();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix form;  // zero rows dropped are kept; rows past `rank` are zero
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rows form the canonical (RREF) basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

// A subspace of F^n stored by its canonical RREF basis, so equal subspaces
// compare equal entry by entry.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& generators);
    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    // `basis` rows must already be in canonical RREF (e.g. nullspace output).
    static Subspace from_canonical(Matrix basis);

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector vector(std::size_t i) const;

    // Removes the components along pivot columns; zero iff v is in the span.
    Vector reduce(std::span<const Scalar> v) const;
    bool contains(std::span<const Scalar> v) const;
    std::optional<Vector> coordinates(std::span<const Scalar> v) const;
    Vector combine(std::span<const Scalar> coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace actorkit
