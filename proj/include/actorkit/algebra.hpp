#pragma once

// Finite-dimensional algebras given by structure constants,
//   e_i * e_j = sum_k c[i][j][k] e_k,
// with the identity checks and subspace computations built on them.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "actorkit/exact.hpp"
#include "actorkit/report.hpp"

namespace actorkit {

enum class Category { lie, leibniz, associative, commutative, alternative, module, raw };

std::string_view to_string(Category c);
// Throws InputError on unknown tags.
Category parse_category(std::string_view tag);

enum class Identity {
    axiom1,
    associativity,
    commutativity,
    antisymmetry,
    jacobi,
    leibniz,
    left_alternative,   // linearized: x(yz) = (xy)z + (yx)z - y(xz)
    right_alternative,  // linearized: (xy)z = x(yz) - (xz)y + x(zy)
    alternative_exhaustive,
    zero_product,
};

std::string_view to_string(Identity id);
// Accepts the names above plus "anticommutativity" for antisymmetry.
// Throws UnsupportedError on unknown tags.
Identity parse_identity(std::string_view tag);
// Identities whose conjunction defines the category (empty for raw).
std::vector<Identity> identity_suite(Category c);

class Algebra {
public:
    struct Product {
        std::size_t i;
        std::size_t j;
        Vector value;
    };

    Algebra() = default;
    // tensor is indexed (i*dim + j)*dim + k. Throws InputError on a shape or
    // field mismatch, or a nonzero tensor tagged as a module.
    Algebra(Field f, std::size_t dim, std::vector<Scalar> tensor, Category cat,
            std::vector<std::string> names = {});
    static Algebra from_products(Field f, std::size_t dim, Category cat,
                                 const std::vector<Product>& products,
                                 std::vector<std::string> names = {});
    static Algebra zero(Field f, std::size_t dim, Category cat = Category::module);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    Category category() const noexcept { return category_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<Scalar>& tensor() const noexcept { return tensor_; }
    const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const
    {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }

    Algebra with_category(Category c) const;

    // e_i * e_j
    Vector product(std::size_t i, std::size_t j) const;
    Vector multiply(std::span<const Scalar> u, std::span<const Scalar> v) const;
    // e_i * v and v * e_j, cheaper than the general product.
    Vector left_basis_multiply(std::size_t i, std::span<const Scalar> v) const;
    Vector right_basis_multiply(std::span<const Scalar> v, std::size_t j) const;

    // Matrices of x -> u*x and x -> x*u. Column m is the image of e_m.
    Matrix left_multiplication(std::span<const Scalar> u) const;
    Matrix right_multiplication(std::span<const Scalar> u) const;
    Matrix left_multiplication(std::size_t i) const;
    Matrix right_multiplication(std::size_t i) const;

    bool is_zero_product() const { return actorkit::is_zero(tensor_); }

private:
    Field field_ = Field::rationals();
    std::size_t dim_ = 0;
    std::vector<Scalar> tensor_;
    Category category_ = Category::raw;
    std::vector<std::string> names_;
};

// Multilinear identities are checked on all basis triples; the witness is the
// lexicographically first failing one.
Report check_identity(const Algebra& a, Identity id);
// Runs identity_suite(c); the first failure becomes the report's failure.
Report check_category(const Algebra& a, Category c);
inline Report check_category(const Algebra& a) { return check_category(a, a.category()); }

// Two-sided annihilator {x : x*a = a*x = 0 for all a}.
Subspace annihilator(const Algebra& a);
// span of all e_i * e_j.
Subspace derived_subspace(const Algebra& a);
Report is_ideal(const Algebra& a, const Subspace& s);
// Algebra on the non-pivot standard basis vectors with the induced product.
// Throws InputError when s is not an ideal.
Algebra quotient(const Algebra& a, const Subspace& ideal);

// Image of the algebra under the basis change e'_i = sum_k g(k, i) e_k.
// g must be invertible.
Algebra change_basis(const Algebra& a, const Matrix& g);

}  // namespace actorkit
