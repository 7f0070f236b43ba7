#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgda/base_algebra.hpp"

namespace qgda {

class ExtElement;

enum class InstanceKind { QuantumPlane, Quaternion, Custom };

// Graded extension A[tau] of a base algebra A: tau^n = sign * 1 with
// sign = +1 or -1, and u*tau = tau*twist(u) for u in A. Elements are stored
// in right-module coordinates, grade k holding the coefficient of tau^k.
// The grading is modulo n and the distinguished root q of the scalar field
// makes the extension a graded q-differential algebra.
class ExtAlgebra : public std::enable_shared_from_this<ExtAlgebra> {
public:
    using Ptr = std::shared_ptr<const ExtAlgebra>;

    static Ptr create(BaseAlgebra::Ptr base, int sign,
                      InstanceKind kind = InstanceKind::Custom,
                      std::string tau_symbol = "t");

    // Cyclic coordinate algebra extended by tau = y with y^n = 1; the two
    // generators obey x*y = q*y*x and x^n = y^n = 1.
    static Ptr quantum_plane(int n);

    // Gaussian base extended by tau = i with i^2 = -1; reproduces the
    // quaternions with k = i*j.
    static Ptr quaternions();

    const BaseAlgebra::Ptr& base() const { return base_; }
    int n() const { return base_->n(); }
    int sign() const { return sign_; }
    InstanceKind kind() const { return kind_; }
    const std::string& tau_symbol() const { return tau_symbol_; }
    const CyclotomicField::Ptr& field() const { return base_->field(); }
    CyclotomicNumber q() const { return field()->root(); }
    CyclotomicNumber q_pow(long k) const { return field()->root_power(k); }

    ExtElement zero() const;
    ExtElement unit() const;
    ExtElement tau() const;
    ExtElement tau_power(int k) const;  // k >= 0
    ExtElement embed(const BaseElement& u) const;          // grade 0
    ExtElement embed_at(int grade, const BaseElement& u) const;
    ExtElement from_parts(std::vector<BaseElement> parts) const;

private:
    ExtAlgebra(BaseAlgebra::Ptr base, int sign, InstanceKind kind,
               std::string tau_symbol);

    BaseAlgebra::Ptr base_;
    int sign_;
    InstanceKind kind_;
    std::string tau_symbol_;
};

// Element of the extension, one base coefficient per grade.
class ExtElement {
public:
    ExtElement(ExtAlgebra::Ptr algebra, std::vector<BaseElement> parts);

    const ExtAlgebra::Ptr& algebra() const { return algebra_; }
    const std::vector<BaseElement>& parts() const { return parts_; }
    const BaseElement& part(int k) const { return parts_[k]; }

    bool is_zero() const;

    // Grade of a homogeneous element; zero counts as homogeneous of grade 0;
    // nullopt when several grades are populated.
    std::optional<int> degree() const;
    ExtElement grade_project(int k) const;

    ExtElement operator-() const;
    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    ExtElement& operator+=(const ExtElement& other);
    ExtElement& operator-=(const ExtElement& other);
    ExtElement& operator*=(const ExtElement& other);

    ExtElement scaled(const CyclotomicNumber& c) const;
    ExtElement scaled(const Rational& r) const;

    ExtElement pow(long k) const;  // k >= 0, or k < 0 on invertible elements

    // Inverse of a homogeneous element whose coefficient is a unit of the
    // base algebra; nullopt otherwise (non-homogeneous included).
    std::optional<ExtElement> inverse() const;

    friend bool operator==(const ExtElement& a, const ExtElement& b);
    friend bool operator!=(const ExtElement& a, const ExtElement& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    ExtAlgebra::Ptr algebra_;
    std::vector<BaseElement> parts_;
};

void require_same_algebra(const ExtElement& a, const ExtElement& b);

// Graded q-commutator [v,u]_q = v*u - q^(|v||u|) u*v of homogeneous
// elements; throws NotHomogeneousError otherwise.
ExtElement q_commutator(const ExtElement& v, const ExtElement& u);

// The inner derivation u -> [v, u]_q, extended additively over the grades
// of u; v must be homogeneous.
ExtElement inner_derivation(const ExtElement& v, const ExtElement& u);

// Differential d(xi) = sum_k tau^(k+1) (u_k - q^k twist(u_k)); this is the
// inner derivation by tau and raises each grade by one.
ExtElement differential(const ExtElement& xi);

// m-fold application of the differential, m >= 0.
ExtElement d_power(const ExtElement& xi, int m);

// Diagnostic record for the nilpotency behaviour of the inner derivation by
// a degree-1 element v.
struct BracketNilpotency {
    ExtElement v_pow_n;
    bool is_pm_one;            // v^n equals +1 or -1
    bool d_n_vanishes;         // (d_v)^n kills the whole spanning set
    bool closed_form_holds;    // (d_v)^n(u) == v^n u - u v^n on the spanning set
    std::optional<ExtElement> nonvanishing_witness;  // element with (d_v)^n != 0
};

// Evaluates (d_v)^n on the spanning set tau^k e_i; v must be homogeneous of
// degree 1.
BracketNilpotency probe_bracket_nilpotency(const ExtElement& v);

}  // namespace qgda
