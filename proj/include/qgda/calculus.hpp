#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgda/extension.hpp"

namespace qgda {

// A degree-0 element x whose increment delta(x) = x - twist(x) is
// invertible; the anchor of the first-order differential calculus on the
// extension.
class Coordinate {
public:
    // nullopt when delta(x) is not invertible.
    static std::optional<Coordinate> make(ExtAlgebra::Ptr algebra,
                                          BaseElement x);

    const ExtAlgebra::Ptr& algebra() const { return algebra_; }
    const BaseElement& x() const { return x_; }
    const BaseElement& delta_x() const { return delta_x_; }
    const BaseElement& delta_x_inv() const { return delta_x_inv_; }
    ExtElement dx() const;  // tau * delta_x, the 1-form of the coordinate

private:
    Coordinate(ExtAlgebra::Ptr algebra, BaseElement x, BaseElement delta_x,
               BaseElement delta_x_inv);

    ExtAlgebra::Ptr algebra_;
    BaseElement x_;
    BaseElement delta_x_;
    BaseElement delta_x_inv_;
};

// Increment u - twist(u). Obeys delta(u v) = delta(u) v + twist(u) delta(v).
BaseElement delta(const BaseElement& u);

// Right derivative delta_x_inv * delta(u), the unique w with d(u) = dx * w.
BaseElement derivative(const BaseElement& u, const Coordinate& c);

// Conjugated twist delta_x_inv * twist(u) * delta_x; satisfies
// u * dx = dx * phi_dx(u) and the twisted Leibniz rule
// (u v)' = u' v + phi_dx(u) v'.
BaseElement phi_dx(const BaseElement& u, const Coordinate& c);

struct ChangeOfVariable {
    BaseElement y_prime_x;  // derivative of y with respect to x
    BaseElement x_prime_y;  // its inverse
};

// Both directions of the coordinate change; the two derivatives are exact
// mutual inverses.
ChangeOfVariable change_of_variable(const Coordinate& cx, const Coordinate& cy);

// Q_1 = delta_x, Q_(k+1) = twist(Q_k) * delta_x; coefficient of the k-th
// power of the coordinate 1-form: (dx)^k = tau^k Q_k. Range 1 <= k <= n.
BaseElement poly_Q(int k, const Coordinate& c);
// The same element as the explicit descending product
// twist^(k-1)(delta_x) ... twist(delta_x) delta_x.
BaseElement poly_Q_product(int k, const Coordinate& c);
// Explicit inverse delta_x_inv twist(delta_x_inv) ... twist^(k-1)(delta_x_inv).
BaseElement poly_Q_inverse(int k, const Coordinate& c);

// P_1 = delta_x, P_(k+1) = P_k - q^k twist(P_k); coefficient of the k-th
// differential of the coordinate: d^k x = tau^k P_k. Range 1 <= k <= n.
BaseElement poly_P(int k, const Coordinate& c);

// P_(n-1) + twist(P_(n-1)) + ... + twist^(n-1)(P_(n-1)); identically zero.
BaseElement poly_P_twisted_sum(const Coordinate& c);

// Connection-like coefficient defined by d((dx)^k) = (dx)^(k+1) Phi_k,
// solved exactly from that identity. Range 1 <= k <= n-1.
BaseElement poly_Phi(int k, const Coordinate& c);

// The two ambiguities in the printed recurrence for Phi_(k+1): whether the
// conjugation by delta_x twists its argument first, and whether the scalar
// factor on Phi_1 is q^(k-1) or q^k.
enum class ConjugationReading { Plain, Twisted };
enum class ExponentReading { KMinusOne, K };

// Builds Phi_k from Phi_1 by the chosen reading of the recurrence
// Phi_(k+1) = conj(Phi_k) + q^e Phi_1. Range 1 <= k <= n-1.
BaseElement poly_Phi_recurrence(int k, const Coordinate& c,
                                ConjugationReading conj, ExponentReading exp);

struct PhiReadingEntry {
    int k;  // the recurrence target, 2 <= k <= n-1
    // matches[conj][exp], indexed by the enum order above
    bool matches[2][2];
};

struct PhiReadingReport {
    std::vector<PhiReadingEntry> entries;
    // true when one and the same reading matches the solved Phi_k for every k
    bool unique_reading(ConjugationReading& conj, ExponentReading& exp) const;
    std::string to_string() const;
};

// Compares all four readings of the recurrence against the solved Phi_k for
// every k in 2..n-1.
PhiReadingReport adjudicate_phi_recurrence(const Coordinate& c);

enum class FormBasis { TauPower, DxPower };

// Homogeneous k-form written over a chosen right-module basis: tau^k u or
// (dx)^k u.
class KForm {
public:
    KForm(ExtAlgebra::Ptr algebra, int degree, FormBasis basis,
          BaseElement coeff);

    const ExtAlgebra::Ptr& algebra() const { return algebra_; }
    int degree() const { return degree_; }
    FormBasis basis() const { return basis_; }
    const BaseElement& coeff() const { return coeff_; }

    friend bool operator==(const KForm& a, const KForm& b);
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

    std::string to_string() const;

private:
    ExtAlgebra::Ptr algebra_;
    int degree_;
    FormBasis basis_;
    BaseElement coeff_;
};

// Basis conversions via (dx)^k = tau^k Q_k; degree 0 is basis-independent.
KForm form_to_dx_basis(const KForm& form, const Coordinate& c);
KForm form_to_tau_basis(const KForm& form, const Coordinate& c);

// The extension element the form denotes.
ExtElement form_to_ext(const KForm& form, const Coordinate& c);

// Differential of a dx-basis form of degree k <= n-2:
// d((dx)^k u) = (dx)^(k+1) (q^k u' + Phi_k u); degree 0 maps to dx u'.
// Throws Error on a tau-basis input or degree n-1.
KForm form_differential(const KForm& form, const Coordinate& c);

// First-order operator D u = q u' + Q_2^-1 P_2 u arising from
// differentiating 1-forms.
BaseElement operator_D(const BaseElement& u, const Coordinate& c);

// Higher analogue D^(k) u = q^k u' + Phi_k u; k = 0 gives the plain
// derivative. Range 0 <= k <= n-1.
BaseElement operator_D_k(int k, const BaseElement& u, const Coordinate& c);

struct LinearityCheck {
    BaseElement second_derivative;
    bool is_linear;
};

// Second derivative of u; at n = 2 it vanishes for every u, making all
// elements linear in the coordinate. Defined for any n.
LinearityCheck linearity_check(const BaseElement& u, const Coordinate& c);

}  // namespace qgda
