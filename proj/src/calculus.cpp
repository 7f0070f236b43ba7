#include "qgda/calculus.hpp"

#include <sstream>
#include <utility>

#include "qgda/errors.hpp"

namespace qgda {

namespace {

void require_part_of(const ExtAlgebra::Ptr& algebra, const BaseElement& u) {
    if (u.algebra() != algebra->base())
        throw AlgebraMismatchError("element from a different base algebra");
}

void require_same_coordinate_algebra(const Coordinate& c,
                                     const BaseElement& u) {
    require_part_of(c.algebra(), u);
}

}  // namespace

Coordinate::Coordinate(ExtAlgebra::Ptr algebra, BaseElement x,
                       BaseElement delta_x, BaseElement delta_x_inv)
    : algebra_(std::move(algebra)),
      x_(std::move(x)),
      delta_x_(std::move(delta_x)),
      delta_x_inv_(std::move(delta_x_inv)) {}

std::optional<Coordinate> Coordinate::make(ExtAlgebra::Ptr algebra,
                                           BaseElement x) {
    require_part_of(algebra, x);
    BaseElement dx = delta(x);
    auto inv = dx.inverse();
    if (!inv) return std::nullopt;
    return Coordinate(std::move(algebra), std::move(x), std::move(dx),
                      std::move(*inv));
}

ExtElement Coordinate::dx() const { return algebra_->embed_at(1, delta_x_); }

BaseElement delta(const BaseElement& u) { return u - u.twist(); }

BaseElement derivative(const BaseElement& u, const Coordinate& c) {
    require_same_coordinate_algebra(c, u);
    return c.delta_x_inv() * delta(u);
}

BaseElement phi_dx(const BaseElement& u, const Coordinate& c) {
    require_same_coordinate_algebra(c, u);
    return c.delta_x_inv() * u.twist() * c.delta_x();
}

ChangeOfVariable change_of_variable(const Coordinate& cx,
                                    const Coordinate& cy) {
    if (cx.algebra() != cy.algebra())
        throw AlgebraMismatchError("coordinates from different extensions");
    return ChangeOfVariable{cx.delta_x_inv() * cy.delta_x(),
                            cy.delta_x_inv() * cx.delta_x()};
}

BaseElement poly_Q(int k, const Coordinate& c) {
    if (k < 1 || k > c.algebra()->n())
        throw Error("Q_k index out of range");
    BaseElement acc = c.delta_x();
    for (int i = 2; i <= k; ++i) acc = acc.twist() * c.delta_x();
    return acc;
}

BaseElement poly_Q_product(int k, const Coordinate& c) {
    if (k < 1 || k > c.algebra()->n())
        throw Error("Q_k index out of range");
    BaseElement acc = c.delta_x().twist(k - 1);
    for (int j = k - 2; j >= 0; --j) acc *= c.delta_x().twist(j);
    return acc;
}

BaseElement poly_Q_inverse(int k, const Coordinate& c) {
    if (k < 1 || k > c.algebra()->n())
        throw Error("Q_k index out of range");
    BaseElement acc = c.delta_x_inv();
    for (int j = 1; j < k; ++j) acc *= c.delta_x_inv().twist(j);
    return acc;
}

BaseElement poly_P(int k, const Coordinate& c) {
    if (k < 1 || k > c.algebra()->n())
        throw Error("P_k index out of range");
    BaseElement acc = c.delta_x();
    for (int i = 1; i < k; ++i)
        acc = acc - acc.twist().scaled(c.algebra()->q_pow(i));
    return acc;
}

BaseElement poly_P_twisted_sum(const Coordinate& c) {
    const int n = c.algebra()->n();
    BaseElement p = poly_P(n - 1, c);
    BaseElement acc = p;
    for (int i = 1; i < n; ++i) acc += p.twist(i);
    return acc;
}

BaseElement poly_Phi(int k, const Coordinate& c) {
    const int n = c.algebra()->n();
    if (k < 1 || k > n - 1) throw Error("Phi_k index out of range");
    const ExtElement dx = c.dx();
    const ExtElement dx_k = dx.pow(k);
    const ExtElement lhs = differential(dx_k);
    const ExtElement dx_k1 = dx_k * dx;
    const int grade = (k + 1) % n;
    auto lead = dx_k1.part(grade).inverse();
    if (!lead)
        throw NotInvertibleError("leading coefficient of (dx)^(k+1) is singular");
    return *lead * lhs.part(grade);
}

BaseElement poly_Phi_recurrence(int k, const Coordinate& c,
                                ConjugationReading conj,
                                ExponentReading exp) {
    const int n = c.algebra()->n();
    if (k < 1 || k > n - 1) throw Error("Phi_k index out of range");
    const BaseElement phi1 = poly_Phi(1, c);
    BaseElement acc = phi1;
    for (int i = 1; i < k; ++i) {
        BaseElement conjugated =
            conj == ConjugationReading::Twisted
                ? phi_dx(acc, c)
                : c.delta_x_inv() * acc * c.delta_x();
        const long e = exp == ExponentReading::K ? i : i - 1;
        acc = conjugated + phi1.scaled(c.algebra()->q_pow(e));
    }
    return acc;
}

bool PhiReadingReport::unique_reading(ConjugationReading& conj,
                                      ExponentReading& exp) const {
    int found = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            bool all = true;
            for (const auto& e : entries)
                if (!e.matches[a][b]) all = false;
            if (all && !entries.empty()) {
                ++found;
                conj = static_cast<ConjugationReading>(a);
                exp = static_cast<ExponentReading>(b);
            }
        }
    return found == 1;
}

std::string PhiReadingReport::to_string() const {
    static const char* conj_names[2] = {"plain-conjugation", "twisted-conjugation"};
    static const char* exp_names[2] = {"q^(k-1)", "q^k"};
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "Phi_" << e.k << ":";
        bool any = false;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (e.matches[a][b]) {
                    os << " [" << conj_names[a] << ", " << exp_names[b] << "]";
                    any = true;
                }
        if (!any) os << " no reading matches";
        os << "\n";
    }
    return os.str();
}

PhiReadingReport adjudicate_phi_recurrence(const Coordinate& c) {
    PhiReadingReport report;
    const int n = c.algebra()->n();
    for (int k = 2; k <= n - 1; ++k) {
        PhiReadingEntry entry{k, {{false, false}, {false, false}}};
        const BaseElement oracle = poly_Phi(k, c);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                entry.matches[a][b] =
                    poly_Phi_recurrence(k, c, static_cast<ConjugationReading>(a),
                                        static_cast<ExponentReading>(b)) ==
                    oracle;
        report.entries.push_back(entry);
    }
    return report;
}

KForm::KForm(ExtAlgebra::Ptr algebra, int degree, FormBasis basis,
             BaseElement coeff)
    : algebra_(std::move(algebra)),
      degree_(degree),
      basis_(basis),
      coeff_(std::move(coeff)) {
    if (degree_ < 0 || degree_ >= algebra_->n())
        throw Error("form degree out of range");
    require_part_of(algebra_, coeff_);
}

bool operator==(const KForm& a, const KForm& b) {
    return a.algebra_ == b.algebra_ && a.degree_ == b.degree_ &&
           a.basis_ == b.basis_ && a.coeff_ == b.coeff_;
}

std::string KForm::to_string() const {
    if (degree_ == 0) return coeff_.to_string();
    std::ostringstream os;
    if (basis_ == FormBasis::TauPower) {
        os << algebra_->tau_symbol();
        if (degree_ > 1) os << "^" << degree_;
    } else {
        if (degree_ > 1)
            os << "(dx)^" << degree_;
        else
            os << "dx";
    }
    if (!coeff_.is_unit_element()) {
        const std::string body = coeff_.to_string();
        const bool simple = body.find(' ') == std::string::npos;
        os << "*" << (simple ? body : "(" + body + ")");
    }
    return os.str();
}

KForm form_to_dx_basis(const KForm& form, const Coordinate& c) {
    if (form.algebra() != c.algebra())
        throw AlgebraMismatchError("form and coordinate from different extensions");
    if (form.basis() == FormBasis::DxPower || form.degree() == 0)
        return KForm(form.algebra(), form.degree(), FormBasis::DxPower,
                     form.coeff());
    // tau^k u = (dx)^k Q_k^-1 u.
    return KForm(form.algebra(), form.degree(), FormBasis::DxPower,
                 poly_Q_inverse(form.degree(), c) * form.coeff());
}

KForm form_to_tau_basis(const KForm& form, const Coordinate& c) {
    if (form.algebra() != c.algebra())
        throw AlgebraMismatchError("form and coordinate from different extensions");
    if (form.basis() == FormBasis::TauPower || form.degree() == 0)
        return KForm(form.algebra(), form.degree(), FormBasis::TauPower,
                     form.coeff());
    // (dx)^k u = tau^k Q_k u.
    return KForm(form.algebra(), form.degree(), FormBasis::TauPower,
                 poly_Q(form.degree(), c) * form.coeff());
}

ExtElement form_to_ext(const KForm& form, const Coordinate& c) {
    KForm tau_form = form_to_tau_basis(form, c);
    return form.algebra()->embed_at(tau_form.degree(), tau_form.coeff());
}

KForm form_differential(const KForm& form, const Coordinate& c) {
    if (form.algebra() != c.algebra())
        throw AlgebraMismatchError("form and coordinate from different extensions");
    if (form.basis() != FormBasis::DxPower)
        throw Error("form differential expects the dx basis");
    const int k = form.degree();
    if (k > form.algebra()->n() - 2)
        throw Error("form differential undefined in top degree");
    return KForm(form.algebra(), k + 1, FormBasis::DxPower,
                 operator_D_k(k, form.coeff(), c));
}

BaseElement operator_D(const BaseElement& u, const Coordinate& c) {
    const BaseElement q2_inv_p2 =
        poly_Q_inverse(2, c) * poly_P(2, c);
    return derivative(u, c).scaled(c.algebra()->q()) + q2_inv_p2 * u;
}

BaseElement operator_D_k(int k, const BaseElement& u, const Coordinate& c) {
    const int n = c.algebra()->n();
    if (k < 0 || k > n - 1) throw Error("operator index out of range");
    if (k == 0) return derivative(u, c);
    return derivative(u, c).scaled(c.algebra()->q_pow(k)) +
           poly_Phi(k, c) * u;
}

LinearityCheck linearity_check(const BaseElement& u, const Coordinate& c) {
    BaseElement second = derivative(derivative(u, c), c);
    return LinearityCheck{second, second.is_zero()};
}

}  // namespace qgda
