#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qgda/rational.hpp"

namespace qgda {

class CyclotomicNumber;

// Monic minimal polynomial of a primitive n-th root of unity over the
// rationals, returned dense with coefficient i at index i.
std::vector<Rational> cyclotomic_minimal_poly(int n);

// The field obtained by adjoining a primitive n-th root of unity to the
// rationals. Immutable; elements keep a shared handle to their field and
// two fields are interchangeable whenever their n agrees.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
public:
    using Ptr = std::shared_ptr<const CyclotomicField>;

    static Ptr make(int n);  // n >= 1

    int n() const { return n_; }
    int degree() const { return static_cast<int>(minimal_poly_.size()) - 1; }
    const std::vector<Rational>& minimal_poly() const { return minimal_poly_; }

    CyclotomicNumber zero() const;
    CyclotomicNumber one() const;
    CyclotomicNumber from_rational(const Rational& r) const;
    CyclotomicNumber from_int(long v) const;
    // Coordinates over the power basis 1, z, ..., z^(degree-1); length must
    // equal degree.
    CyclotomicNumber from_coords(std::vector<Rational> coords) const;
    CyclotomicNumber root() const;              // the chosen primitive root
    CyclotomicNumber root_power(long k) const;  // root^k, any integer k

private:
    explicit CyclotomicField(int n);

    int n_;
    std::vector<Rational> minimal_poly_;
};

// Element of a cyclotomic field, stored as its unique coordinate vector over
// the power basis of the root. Value type; all operations return new values.
class CyclotomicNumber {
public:
    CyclotomicNumber(CyclotomicField::Ptr field, std::vector<Rational> coords);

    const CyclotomicField::Ptr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    int n() const { return field_->n(); }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // no contribution above the constant coordinate
    Rational rational_part() const { return coords_[0]; }

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a,
                                      const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a,
                                      const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a,
                                      const CyclotomicNumber& b);
    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const CyclotomicNumber& other);

    CyclotomicNumber scaled(const Rational& r) const;
    CyclotomicNumber inverse() const;  // throws DivisionByZeroError on zero
    CyclotomicNumber pow(long k) const;  // negative k inverts first

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a,
                           const CyclotomicNumber& b) {
        return !(a == b);
    }

    std::string to_string(const std::string& root_symbol = "q") const;

private:
    CyclotomicField::Ptr field_;
    std::vector<Rational> coords_;  // length == field_->degree()
};

// Throws FieldMismatchError unless both numbers live over the same n.
void require_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b);

}  // namespace qgda
