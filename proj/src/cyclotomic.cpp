#include "qgda/cyclotomic.hpp"

#include <sstream>
#include <utility>

#include "qgda/errors.hpp"

namespace qgda {

namespace {

using Poly = std::vector<Rational>;  // coefficient i at index i

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (c.is_zero()) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder over the rationals; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (poly_is_zero(b)) throw DivisionByZeroError("polynomial division by zero");
    if (poly_deg(a) >= poly_deg(b))
        q.assign(a.size() - b.size() + 1, Rational());
    const Rational lead_inv = b.back().reciprocal();
    while (!poly_is_zero(a) && poly_deg(a) >= poly_deg(b)) {
        const int shift = poly_deg(a) - poly_deg(b);
        const Rational c = a.back() * lead_inv;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

Poly poly_mod(Poly a, const Poly& m) { return poly_divmod(std::move(a), m).second; }

// Extended Euclid: returns (g, s) with s*a == g (mod m) and g the gcd.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly m) {
    Poly old_r = std::move(a), r = std::move(m);
    Poly old_s = {Rational(1)}, s = {};
    while (!poly_is_zero(r)) {
        auto [q, rem] = poly_divmod(old_r, r);
        old_r = std::move(r);
        r = std::move(rem);
        Poly next_s = poly_add(old_s, poly_scale(poly_mul(q, s), Rational(-1)));
        old_s = std::move(s);
        s = std::move(next_s);
    }
    return {std::move(old_r), std::move(old_s)};
}

Poly coords_to_poly(const std::vector<Rational>& coords) {
    Poly p = coords;
    trim(p);
    return p;
}

std::vector<Rational> poly_to_coords(const Poly& p, int degree) {
    std::vector<Rational> coords(degree);
    for (size_t i = 0; i < p.size(); ++i) coords[i] = p[i];
    return coords;
}

}  // namespace

std::vector<Rational> cyclotomic_minimal_poly(int n) {
    if (n < 1) throw Error("cyclotomic index must be positive");
    // Divide z^n - 1 by every proper cyclotomic divisor, built bottom up.
    std::vector<Poly> table(n + 1);
    for (int m = 1; m <= n; ++m) {
        Poly f(m + 1);
        f[0] = Rational(-1);
        f[m] = Rational(1);
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = poly_divmod(std::move(f), table[d]);
            if (!poly_is_zero(r)) throw Error("cyclotomic division not exact");
            f = std::move(q);
        }
        table[m] = std::move(f);
    }
    return table[n];
}

CyclotomicField::CyclotomicField(int n)
    : n_(n), minimal_poly_(cyclotomic_minimal_poly(n)) {}

CyclotomicField::Ptr CyclotomicField::make(int n) {
    return Ptr(new CyclotomicField(n));
}

CyclotomicNumber CyclotomicField::zero() const {
    return CyclotomicNumber(shared_from_this(),
                            std::vector<Rational>(degree()));
}

CyclotomicNumber CyclotomicField::one() const { return from_int(1); }

CyclotomicNumber CyclotomicField::from_rational(const Rational& r) const {
    std::vector<Rational> coords(degree());
    coords[0] = r;
    return CyclotomicNumber(shared_from_this(), std::move(coords));
}

CyclotomicNumber CyclotomicField::from_int(long v) const {
    return from_rational(Rational(v));
}

CyclotomicNumber CyclotomicField::from_coords(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) != degree())
        throw Error("coordinate vector has wrong length for the field");
    return CyclotomicNumber(shared_from_this(), std::move(coords));
}

CyclotomicNumber CyclotomicField::root() const { return root_power(1); }

CyclotomicNumber CyclotomicField::root_power(long k) const {
    long e = k % n_;
    if (e < 0) e += n_;
    Poly p(e + 1);
    p[e] = Rational(1);
    p = poly_mod(std::move(p), minimal_poly_);
    return CyclotomicNumber(shared_from_this(), poly_to_coords(p, degree()));
}

CyclotomicNumber::CyclotomicNumber(CyclotomicField::Ptr field,
                                   std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw Error("coordinate vector has wrong length for the field");
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    if (!coords_[0].is_one()) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

void require_same_field(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n() != b.n())
        throw FieldMismatchError("operands live in different cyclotomic fields");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rational> coords = coords_;
    for (auto& c : coords) c = -c;
    return CyclotomicNumber(field_, std::move(coords));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_field(a, b);
    std::vector<Rational> coords = a.coords_;
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += b.coords_[i];
    return CyclotomicNumber(a.field_, std::move(coords));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_field(a, b);
    std::vector<Rational> coords = a.coords_;
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= b.coords_[i];
    return CyclotomicNumber(a.field_, std::move(coords));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_field(a, b);
    Poly p = poly_mod(poly_mul(coords_to_poly(a.coords_), coords_to_poly(b.coords_)),
                      a.field_->minimal_poly());
    return CyclotomicNumber(a.field_, poly_to_coords(p, a.field_->degree()));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
    return *this = *this + other;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
    return *this = *this - other;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other) {
    return *this = *this * other;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& r) const {
    std::vector<Rational> coords = coords_;
    for (auto& c : coords) c *= r;
    return CyclotomicNumber(field_, std::move(coords));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    auto [g, s] = poly_half_ext_gcd(coords_to_poly(coords_),
                                    field_->minimal_poly());
    // The minimal polynomial is irreducible, so the gcd with any nonzero
    // residue is a nonzero constant.
    if (poly_deg(g) != 0)
        throw Error("cyclotomic inverse: gcd not constant");
    Poly inv = poly_mod(poly_scale(s, g[0].reciprocal()),
                        field_->minimal_poly());
    return CyclotomicNumber(field_, poly_to_coords(inv, field_->degree()));
}

CyclotomicNumber CyclotomicNumber::pow(long k) const {
    CyclotomicNumber base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1
                            : static_cast<unsigned long>(k);
    CyclotomicNumber acc = field_->one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n() != b.n()) return false;
    return a.coords_ == b.coords_;
}

std::string CyclotomicNumber::to_string(const std::string& root_symbol) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit_coeff = mag.is_one() && i > 0;
        if (!unit_coeff) os << mag.to_string();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << root_symbol;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace qgda
