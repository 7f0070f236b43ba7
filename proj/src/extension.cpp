#include "qgda/extension.hpp"

#include <sstream>
#include <utility>

#include "qgda/errors.hpp"

namespace qgda {

ExtAlgebra::ExtAlgebra(BaseAlgebra::Ptr base, int sign, InstanceKind kind,
                       std::string tau_symbol)
    : base_(std::move(base)),
      sign_(sign),
      kind_(kind),
      tau_symbol_(std::move(tau_symbol)) {
    if (sign_ != 1 && sign_ != -1) throw Error("extension sign must be +1 or -1");
    if (base_->n() < 2) throw Error("extension needs n >= 2");
}

ExtAlgebra::Ptr ExtAlgebra::create(BaseAlgebra::Ptr base, int sign,
                                   InstanceKind kind, std::string tau_symbol) {
    return Ptr(new ExtAlgebra(std::move(base), sign, kind,
                              std::move(tau_symbol)));
}

ExtAlgebra::Ptr ExtAlgebra::quantum_plane(int n) {
    return create(BaseAlgebra::cyclic_coordinate_algebra(n), 1,
                  InstanceKind::QuantumPlane, "y");
}

ExtAlgebra::Ptr ExtAlgebra::quaternions() {
    return create(BaseAlgebra::gaussian_base(), -1, InstanceKind::Quaternion,
                  "i");
}

ExtElement ExtAlgebra::zero() const {
    return ExtElement(shared_from_this(),
                      std::vector<BaseElement>(n(), base_->zero()));
}

ExtElement ExtAlgebra::unit() const { return embed_at(0, base_->unit()); }

ExtElement ExtAlgebra::tau() const { return embed_at(1, base_->unit()); }

ExtElement ExtAlgebra::tau_power(int k) const {
    if (k < 0) throw Error("tau_power needs k >= 0");
    const int wraps = k / n();
    BaseElement coeff = base_->unit();
    if (sign_ == -1 && wraps % 2 == 1) coeff = -coeff;
    return embed_at(k % n(), coeff);
}

ExtElement ExtAlgebra::embed(const BaseElement& u) const {
    return embed_at(0, u);
}

ExtElement ExtAlgebra::embed_at(int grade, const BaseElement& u) const {
    if (grade < 0 || grade >= n()) throw Error("grade out of range");
    std::vector<BaseElement> parts(n(), base_->zero());
    parts[grade] = u;
    return ExtElement(shared_from_this(), std::move(parts));
}

ExtElement ExtAlgebra::from_parts(std::vector<BaseElement> parts) const {
    return ExtElement(shared_from_this(), std::move(parts));
}

ExtElement::ExtElement(ExtAlgebra::Ptr algebra, std::vector<BaseElement> parts)
    : algebra_(std::move(algebra)), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != algebra_->n())
        throw Error("extension element needs one part per grade");
    for (const auto& p : parts_)
        if (p.algebra() != algebra_->base())
            throw AlgebraMismatchError("part from a different base algebra");
}

bool ExtElement::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

std::optional<int> ExtElement::degree() const {
    int grade = 0;
    int populated = 0;
    for (int k = 0; k < algebra_->n(); ++k) {
        if (parts_[k].is_zero()) continue;
        ++populated;
        grade = k;
    }
    if (populated > 1) return std::nullopt;
    return grade;  // zero element counts as grade 0
}

ExtElement ExtElement::grade_project(int k) const {
    if (k < 0 || k >= algebra_->n()) throw Error("grade out of range");
    return algebra_->embed_at(k, parts_[k]);
}

void require_same_algebra(const ExtElement& a, const ExtElement& b) {
    if (a.algebra() != b.algebra())
        throw AlgebraMismatchError("operands live in different extensions");
}

ExtElement ExtElement::operator-() const {
    std::vector<BaseElement> parts;
    parts.reserve(parts_.size());
    for (const auto& p : parts_) parts.push_back(-p);
    return ExtElement(algebra_, std::move(parts));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    require_same_algebra(a, b);
    std::vector<BaseElement> parts;
    parts.reserve(a.parts_.size());
    for (size_t k = 0; k < a.parts_.size(); ++k)
        parts.push_back(a.parts_[k] + b.parts_[k]);
    return ExtElement(a.algebra_, std::move(parts));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    require_same_algebra(a, b);
    std::vector<BaseElement> parts;
    parts.reserve(a.parts_.size());
    for (size_t k = 0; k < a.parts_.size(); ++k)
        parts.push_back(a.parts_[k] - b.parts_[k]);
    return ExtElement(a.algebra_, std::move(parts));
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    require_same_algebra(a, b);
    const int n = a.algebra_->n();
    // (tau^i u)(tau^j v) = tau^(i+j) twist^j(u) v, with tau^n = sign.
    std::vector<BaseElement> parts(n, a.algebra_->base()->zero());
    for (int i = 0; i < n; ++i) {
        if (a.parts_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b.parts_[j].is_zero()) continue;
            BaseElement coeff = a.parts_[i].twist(j) * b.parts_[j];
            int grade = i + j;
            if (grade >= n) {
                grade -= n;
                if (a.algebra_->sign() == -1) coeff = -coeff;
            }
            parts[grade] += coeff;
        }
    }
    return ExtElement(a.algebra_, std::move(parts));
}

ExtElement& ExtElement::operator+=(const ExtElement& other) {
    return *this = *this + other;
}

ExtElement& ExtElement::operator-=(const ExtElement& other) {
    return *this = *this - other;
}

ExtElement& ExtElement::operator*=(const ExtElement& other) {
    return *this = *this * other;
}

ExtElement ExtElement::scaled(const CyclotomicNumber& c) const {
    std::vector<BaseElement> parts;
    parts.reserve(parts_.size());
    for (const auto& p : parts_) parts.push_back(p.scaled(c));
    return ExtElement(algebra_, std::move(parts));
}

ExtElement ExtElement::scaled(const Rational& r) const {
    std::vector<BaseElement> parts;
    parts.reserve(parts_.size());
    for (const auto& p : parts_) parts.push_back(p.scaled(r));
    return ExtElement(algebra_, std::move(parts));
}

ExtElement ExtElement::pow(long k) const {
    if (k < 0) {
        auto inv = inverse();
        if (!inv)
            throw NotInvertibleError(
                "negative power of a non-invertible element");
        return inv->pow(-k);
    }
    ExtElement acc = algebra_->unit();
    ExtElement base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<ExtElement> ExtElement::inverse() const {
    auto deg = degree();
    if (!deg) return std::nullopt;
    const int k = *deg;
    auto coeff_inv = parts_[k].inverse();
    if (!coeff_inv) return std::nullopt;
    if (k == 0) return algebra_->embed(*coeff_inv);
    // (tau^k u)^-1 = tau^(n-k) * sign * twist^(n-k)(u^-1).
    const int n = algebra_->n();
    BaseElement w = coeff_inv->twist(n - k);
    if (algebra_->sign() == -1) w = -w;
    ExtElement candidate = algebra_->embed_at(n - k, w);
    if (*this * candidate != algebra_->unit()) return std::nullopt;
    if (candidate * *this != algebra_->unit()) return std::nullopt;
    return candidate;
}

bool operator==(const ExtElement& a, const ExtElement& b) {
    if (a.algebra_ != b.algebra_) return false;
    return a.parts_ == b.parts_;
}

std::string ExtElement::to_string() const {
    std::ostringstream os;
    int nonzero_parts = 0;
    for (const auto& p : parts_)
        if (!p.is_zero()) ++nonzero_parts;
    bool first = true;
    for (int k = 0; k < algebra_->n(); ++k) {
        const auto& p = parts_[k];
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            const std::string body = p.to_string();
            // Parentheses only separate the scalar part from following
            // tau-terms; a lone grade-0 element prints bare.
            const bool compound = body.find(" + ") != std::string::npos ||
                                  body.find(" - ") != std::string::npos;
            os << (compound && nonzero_parts > 1 ? "(" + body + ")" : body);
            continue;
        }
        os << algebra_->tau_symbol();
        if (k > 1) os << "^" << k;
        if (!p.is_unit_element()) {
            const std::string body = p.to_string();
            const bool simple = body.find(' ') == std::string::npos;
            os << "*" << (simple ? body : "(" + body + ")");
        }
    }
    if (first) os << "0";
    return os.str();
}

ExtElement q_commutator(const ExtElement& v, const ExtElement& u) {
    require_same_algebra(v, u);
    auto dv = v.degree();
    auto du = u.degree();
    if (!dv || !du)
        throw NotHomogeneousError(
            "q-commutator needs homogeneous arguments");
    const CyclotomicNumber factor =
        v.algebra()->q_pow(static_cast<long>(*dv) * *du);
    return v * u - (u * v).scaled(factor);
}

ExtElement inner_derivation(const ExtElement& v, const ExtElement& u) {
    require_same_algebra(v, u);
    auto dv = v.degree();
    if (!dv) throw NotHomogeneousError("inner derivation needs homogeneous v");
    ExtElement acc = v.algebra()->zero();
    for (int l = 0; l < v.algebra()->n(); ++l) {
        if (u.part(l).is_zero()) continue;
        acc += q_commutator(v, u.grade_project(l));
    }
    return acc;
}

ExtElement differential(const ExtElement& xi) {
    const auto& alg = xi.algebra();
    const int n = alg->n();
    std::vector<BaseElement> parts(n, alg->base()->zero());
    for (int k = 0; k < n; ++k) {
        const auto& u = xi.part(k);
        if (u.is_zero()) continue;
        BaseElement coeff = u - u.twist().scaled(alg->q_pow(k));
        int grade = k + 1;
        if (grade == n) {
            grade = 0;
            if (alg->sign() == -1) coeff = -coeff;
        }
        parts[grade] += coeff;
    }
    return ExtElement(alg, std::move(parts));
}

ExtElement d_power(const ExtElement& xi, int m) {
    if (m < 0) throw Error("d_power needs m >= 0");
    ExtElement acc = xi;
    for (int i = 0; i < m; ++i) acc = differential(acc);
    return acc;
}

BracketNilpotency probe_bracket_nilpotency(const ExtElement& v) {
    auto deg = v.degree();
    if (!deg || *deg != 1)
        throw NotHomogeneousError(
            "nilpotency check needs a homogeneous element of degree 1");
    const auto& alg = v.algebra();
    const int n = alg->n();
    ExtElement v_pow_n = v.pow(n);
    const bool is_pm_one =
        v_pow_n == alg->unit() || v_pow_n == -alg->unit();
    bool d_n_vanishes = true;
    bool closed_form_holds = true;
    std::optional<ExtElement> witness;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < alg->base()->dim(); ++i) {
            ExtElement u = alg->embed_at(k, alg->base()->basis(i));
            ExtElement image = u;
            for (int step = 0; step < n; ++step)
                image = inner_derivation(v, image);
            if (!image.is_zero()) {
                d_n_vanishes = false;
                if (!witness) witness = u;
            }
            if (image != v_pow_n * u - u * v_pow_n) closed_form_holds = false;
        }
    }
    return BracketNilpotency{std::move(v_pow_n), is_pm_one, d_n_vanishes,
                        closed_form_holds, std::move(witness)};
}

}  // namespace qgda
