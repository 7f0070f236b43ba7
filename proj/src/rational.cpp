#include "qgda/rational.hpp"

#include <cctype>
#include <ostream>

#include "qgda/errors.hpp"

namespace qgda {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0)
        throw DivisionByZeroError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    auto is_integer_text = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer_text(num, true) || !is_integer_text(den, false))
        throw Error("malformed rational literal: '" + std::string(text) + "'");
    // Base fixed at 10: the default base 0 would read leading zeros as octal.
    mpq_class value(std::string(num) + "/" + std::string(den), 10);
    if (value.get_den() == 0)
        throw DivisionByZeroError("rational with zero denominator: '" +
                                  std::string(text) + "'");
    return Rational(std::move(value));
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw DivisionByZeroError("rational division by zero");
    value_ /= other.value_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
    return Rational(1) / *this;
}

std::string Rational::to_string() const {
    return value_.get_str();
}

std::string Rational::to_fraction_string() const {
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace qgda
