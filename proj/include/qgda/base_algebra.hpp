#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgda/cyclotomic.hpp"

namespace qgda {

class BaseElement;

struct ValidationFailure {
    std::string law;           // e.g. "associativity", "twist-order"
    std::vector<int> witness;  // basis indices that exhibit the failure
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string to_string() const;
};

// Finite-dimensional associative unital algebra over a cyclotomic field,
// given by structure constants, together with a distinguished algebra
// automorphism (the twist). Immutable; elements hold a shared handle.
class BaseAlgebra : public std::enable_shared_from_this<BaseAlgebra> {
public:
    using Ptr = std::shared_ptr<const BaseAlgebra>;
    using Coords = std::vector<CyclotomicNumber>;

    // structure[i][j] holds the coordinates of e_i * e_j; unit holds the
    // coordinates of the multiplicative identity; twist_matrix is column
    // convention: twist(e_j) = sum_i twist_matrix[i][j] e_i.
    // Throws Error on inconsistent dimensions. Laws are NOT checked here;
    // run validate() for that.
    static Ptr create(CyclotomicField::Ptr field,
                      std::vector<std::string> basis_names,
                      std::vector<std::vector<Coords>> structure,
                      Coords unit,
                      std::vector<Coords> twist_matrix,
                      std::string name = "custom");

    // Span of 1, x, ..., x^(n-1) with x^n = 1 over the n-th cyclotomic
    // field; twist sends x^i to q^i x^i.
    static Ptr cyclic_coordinate_algebra(int n);

    // Span of 1, j with j^2 = -1 over the rationals (second cyclotomic
    // field); twist is conjugation j -> -j.
    static Ptr gaussian_base();

    int dim() const { return dim_; }
    int n() const { return field_->n(); }
    const CyclotomicField::Ptr& field() const { return field_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const CyclotomicNumber& structure(int i, int j, int k) const {
        return structure_[i][j][k];
    }
    const std::vector<Coords>& twist_matrix() const { return twist_matrix_; }
    const Coords& unit_coords() const { return unit_; }

    BaseElement zero() const;
    BaseElement unit() const;
    BaseElement basis(int i) const;
    BaseElement element(Coords coords) const;

    // Checks unit laws, associativity, twist multiplicativity, twist
    // invertibility and twist order dividing n, each on the basis.
    ValidationReport validate() const;

private:
    BaseAlgebra(CyclotomicField::Ptr field, std::vector<std::string> basis_names,
                std::vector<std::vector<Coords>> structure, Coords unit,
                std::vector<Coords> twist_matrix, std::string name);

    CyclotomicField::Ptr field_;
    int dim_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<Coords>> structure_;
    Coords unit_;
    std::vector<Coords> twist_matrix_;
    std::string name_;
};

// Element of a BaseAlgebra, stored by coordinates over the algebra basis.
class BaseElement {
public:
    BaseElement(BaseAlgebra::Ptr algebra, BaseAlgebra::Coords coords);

    const BaseAlgebra::Ptr& algebra() const { return algebra_; }
    const BaseAlgebra::Coords& coords() const { return coords_; }
    const CyclotomicNumber& coord(int i) const { return coords_[i]; }

    bool is_zero() const;
    bool is_unit_element() const;  // equals the algebra unit

    BaseElement operator-() const;
    friend BaseElement operator+(const BaseElement& a, const BaseElement& b);
    friend BaseElement operator-(const BaseElement& a, const BaseElement& b);
    friend BaseElement operator*(const BaseElement& a, const BaseElement& b);
    BaseElement& operator+=(const BaseElement& other);
    BaseElement& operator-=(const BaseElement& other);
    BaseElement& operator*=(const BaseElement& other);

    BaseElement scaled(const CyclotomicNumber& c) const;
    BaseElement scaled(const Rational& r) const;

    // k-fold application of the twist automorphism; any integer k, reduced
    // modulo n (the twist has order dividing n on a valid algebra).
    BaseElement twist(int k = 1) const;

    BaseElement pow(long k) const;  // k >= 0, or k < 0 on invertible elements

    // Exact two-sided inverse; nullopt when the element is not a unit.
    std::optional<BaseElement> inverse() const;

    friend bool operator==(const BaseElement& a, const BaseElement& b);
    friend bool operator!=(const BaseElement& a, const BaseElement& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    BaseAlgebra::Ptr algebra_;
    BaseAlgebra::Coords coords_;
};

// Throws AlgebraMismatchError unless both elements share the same algebra
// object.
void require_same_algebra(const BaseElement& a, const BaseElement& b);

}  // namespace qgda
