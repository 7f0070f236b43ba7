#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qgda {

// Arbitrary-precision rational number. Always kept in lowest terms with a
// positive denominator, so equality is plain coordinate equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    // Accepts "p" or "p/q" with optional leading '-'. Throws Error on
    // malformed text, DivisionByZeroError on zero denominator.
    static Rational from_string(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);  // throws DivisionByZeroError

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational reciprocal() const;  // throws DivisionByZeroError on zero

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) < 0;
    }

    // Human form: "3", "-1/2".
    std::string to_string() const;
    // Serialized form, always "p/q".
    std::string to_fraction_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;  // canonical
};

}  // namespace qgda
