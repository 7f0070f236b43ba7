#include "qgda/base_algebra.hpp"

#include <sstream>
#include <utility>

#include "qgda/errors.hpp"
#include "qgda/linalg.hpp"

namespace qgda {

std::string ValidationReport::to_string() const {
    if (ok()) return "all algebra laws hold";
    std::ostringstream os;
    for (const auto& f : failures) {
        os << f.law << " fails at (";
        for (size_t i = 0; i < f.witness.size(); ++i)
            os << (i ? "," : "") << f.witness[i];
        os << ")";
        if (!f.detail.empty()) os << ": " << f.detail;
        os << "\n";
    }
    return os.str();
}

BaseAlgebra::BaseAlgebra(CyclotomicField::Ptr field,
                         std::vector<std::string> basis_names,
                         std::vector<std::vector<Coords>> structure,
                         Coords unit, std::vector<Coords> twist_matrix,
                         std::string name)
    : field_(std::move(field)),
      dim_(static_cast<int>(basis_names.size())),
      basis_names_(std::move(basis_names)),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      twist_matrix_(std::move(twist_matrix)),
      name_(std::move(name)) {
    auto check_coords = [&](const Coords& c) {
        if (static_cast<int>(c.size()) != dim_)
            throw Error("coordinate vector length differs from dimension");
        for (const auto& x : c)
            if (x.n() != field_->n())
                throw FieldMismatchError("coefficient from a different field");
    };
    if (dim_ < 1) throw Error("algebra dimension must be positive");
    if (static_cast<int>(structure_.size()) != dim_)
        throw Error("structure table has wrong shape");
    for (const auto& row : structure_) {
        if (static_cast<int>(row.size()) != dim_)
            throw Error("structure table has wrong shape");
        for (const auto& c : row) check_coords(c);
    }
    check_coords(unit_);
    if (static_cast<int>(twist_matrix_.size()) != dim_)
        throw Error("twist matrix has wrong shape");
    for (const auto& row : twist_matrix_) check_coords(row);
}

BaseAlgebra::Ptr BaseAlgebra::create(CyclotomicField::Ptr field,
                                     std::vector<std::string> basis_names,
                                     std::vector<std::vector<Coords>> structure,
                                     Coords unit,
                                     std::vector<Coords> twist_matrix,
                                     std::string name) {
    return Ptr(new BaseAlgebra(std::move(field), std::move(basis_names),
                               std::move(structure), std::move(unit),
                               std::move(twist_matrix), std::move(name)));
}

BaseAlgebra::Ptr BaseAlgebra::cyclic_coordinate_algebra(int n) {
    if (n < 2) throw Error("cyclic coordinate algebra needs n >= 2");
    auto field = CyclotomicField::make(n);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            names.push_back("1");
        else if (i == 1)
            names.push_back("x");
        else
            names.push_back("x^" + std::to_string(i));
    }
    Coords zero_row(n, field->zero());
    std::vector<std::vector<Coords>> structure(
        n, std::vector<Coords>(n, zero_row));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            structure[i][j][(i + j) % n] = field->one();
    Coords unit = zero_row;
    unit[0] = field->one();
    std::vector<Coords> twist(n, zero_row);
    for (int i = 0; i < n; ++i) twist[i][i] = field->root_power(i);
    return create(std::move(field), std::move(names), std::move(structure),
                  std::move(unit), std::move(twist),
                  "cyclic:" + std::to_string(n));
}

BaseAlgebra::Ptr BaseAlgebra::gaussian_base() {
    auto field = CyclotomicField::make(2);
    std::vector<std::string> names = {"1", "j"};
    Coords zero_row(2, field->zero());
    std::vector<std::vector<Coords>> structure(
        2, std::vector<Coords>(2, zero_row));
    structure[0][0][0] = field->one();
    structure[0][1][1] = field->one();
    structure[1][0][1] = field->one();
    structure[1][1][0] = field->from_int(-1);
    Coords unit = zero_row;
    unit[0] = field->one();
    std::vector<Coords> twist(2, zero_row);
    twist[0][0] = field->one();
    twist[1][1] = field->from_int(-1);
    return create(std::move(field), std::move(names), std::move(structure),
                  std::move(unit), std::move(twist), "gaussian");
}

BaseElement BaseAlgebra::zero() const {
    return BaseElement(shared_from_this(), Coords(dim_, field_->zero()));
}

BaseElement BaseAlgebra::unit() const {
    return BaseElement(shared_from_this(), unit_);
}

BaseElement BaseAlgebra::basis(int i) const {
    if (i < 0 || i >= dim_) throw Error("basis index out of range");
    Coords coords(dim_, field_->zero());
    coords[i] = field_->one();
    return BaseElement(shared_from_this(), std::move(coords));
}

BaseElement BaseAlgebra::element(Coords coords) const {
    return BaseElement(shared_from_this(), std::move(coords));
}

ValidationReport BaseAlgebra::validate() const {
    ValidationReport report;
    const auto unit_el = unit();
    for (int i = 0; i < dim_; ++i) {
        const auto e = basis(i);
        if (unit_el * e != e)
            report.failures.push_back({"left-unit", {i}, "1*e != e"});
        if (e * unit_el != e)
            report.failures.push_back({"right-unit", {i}, "e*1 != e"});
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                const auto lhs = (basis(i) * basis(j)) * basis(k);
                const auto rhs = basis(i) * (basis(j) * basis(k));
                if (lhs != rhs)
                    report.failures.push_back(
                        {"associativity", {i, j, k}, "(ab)c != a(bc)"});
            }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if ((basis(i) * basis(j)).twist() != basis(i).twist() * basis(j).twist())
                report.failures.push_back(
                    {"twist-multiplicative", {i, j}, "t(ab) != t(a)t(b)"});
        }
    if (unit_el.twist() != unit_el)
        report.failures.push_back({"twist-unital", {}, "t(1) != 1"});
    {
        linalg::Matrix m(dim_);
        for (int i = 0; i < dim_; ++i) m[i] = twist_matrix_[i];
        if (linalg::rank(std::move(m)) != dim_)
            report.failures.push_back(
                {"twist-invertible", {}, "twist matrix is singular"});
    }
    // twist(k) reduces k modulo n, so the order check applies the matrix
    // n times by hand.
    auto apply_twist_matrix = [&](Coords coords) {
        Coords next(dim_, field_->zero());
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (twist_matrix_[i][j].is_zero() || coords[j].is_zero())
                    continue;
                next[i] += twist_matrix_[i][j] * coords[j];
            }
        return next;
    };
    for (int i = 0; i < dim_; ++i) {
        Coords coords(dim_, field_->zero());
        coords[i] = field_->one();
        Coords image = coords;
        for (int step = 0; step < n(); ++step)
            image = apply_twist_matrix(std::move(image));
        if (image != coords)
            report.failures.push_back(
                {"twist-order", {i}, "n-fold twist is not the identity"});
    }
    return report;
}

BaseElement::BaseElement(BaseAlgebra::Ptr algebra, BaseAlgebra::Coords coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != algebra_->dim())
        throw Error("coordinate vector length differs from dimension");
    for (const auto& c : coords_)
        if (c.n() != algebra_->n())
            throw FieldMismatchError("coefficient from a different field");
}

bool BaseElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool BaseElement::is_unit_element() const { return *this == algebra_->unit(); }

void require_same_algebra(const BaseElement& a, const BaseElement& b) {
    if (a.algebra() != b.algebra())
        throw AlgebraMismatchError("operands live in different base algebras");
}

BaseElement BaseElement::operator-() const {
    BaseAlgebra::Coords coords = coords_;
    for (auto& c : coords) c = -c;
    return BaseElement(algebra_, std::move(coords));
}

BaseElement operator+(const BaseElement& a, const BaseElement& b) {
    require_same_algebra(a, b);
    BaseAlgebra::Coords coords = a.coords_;
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += b.coords_[i];
    return BaseElement(a.algebra_, std::move(coords));
}

BaseElement operator-(const BaseElement& a, const BaseElement& b) {
    require_same_algebra(a, b);
    BaseAlgebra::Coords coords = a.coords_;
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= b.coords_[i];
    return BaseElement(a.algebra_, std::move(coords));
}

BaseElement operator*(const BaseElement& a, const BaseElement& b) {
    require_same_algebra(a, b);
    const auto& alg = *a.algebra_;
    BaseAlgebra::Coords coords(alg.dim(), alg.field()->zero());
    for (int i = 0; i < alg.dim(); ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (int j = 0; j < alg.dim(); ++j) {
            if (b.coords_[j].is_zero()) continue;
            const CyclotomicNumber prod = a.coords_[i] * b.coords_[j];
            for (int k = 0; k < alg.dim(); ++k) {
                const auto& c = alg.structure(i, j, k);
                if (!c.is_zero()) coords[k] += prod * c;
            }
        }
    }
    return BaseElement(a.algebra_, std::move(coords));
}

BaseElement& BaseElement::operator+=(const BaseElement& other) {
    return *this = *this + other;
}

BaseElement& BaseElement::operator-=(const BaseElement& other) {
    return *this = *this - other;
}

BaseElement& BaseElement::operator*=(const BaseElement& other) {
    return *this = *this * other;
}

BaseElement BaseElement::scaled(const CyclotomicNumber& c) const {
    BaseAlgebra::Coords coords = coords_;
    for (auto& x : coords) x *= c;
    return BaseElement(algebra_, std::move(coords));
}

BaseElement BaseElement::scaled(const Rational& r) const {
    BaseAlgebra::Coords coords = coords_;
    for (auto& x : coords) x = x.scaled(r);
    return BaseElement(algebra_, std::move(coords));
}

BaseElement BaseElement::twist(int k) const {
    const int n = algebra_->n();
    int e = ((k % n) + n) % n;
    BaseAlgebra::Coords coords = coords_;
    const auto& m = algebra_->twist_matrix();
    for (int step = 0; step < e; ++step) {
        BaseAlgebra::Coords next(algebra_->dim(), algebra_->field()->zero());
        for (int i = 0; i < algebra_->dim(); ++i)
            for (int j = 0; j < algebra_->dim(); ++j) {
                if (m[i][j].is_zero() || coords[j].is_zero()) continue;
                next[i] += m[i][j] * coords[j];
            }
        coords = std::move(next);
    }
    return BaseElement(algebra_, std::move(coords));
}

BaseElement BaseElement::pow(long k) const {
    if (k < 0) {
        auto inv = inverse();
        if (!inv)
            throw NotInvertibleError(
                "negative power of a non-invertible element");
        return inv->pow(-k);
    }
    BaseElement acc = algebra_->unit();
    BaseElement base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<BaseElement> BaseElement::inverse() const {
    const int dim = algebra_->dim();
    // Right multiplication by the unknown w: (u*w)_k = sum_j M[k][j] w_j.
    linalg::Matrix m(dim, std::vector<CyclotomicNumber>(
                              dim, algebra_->field()->zero()));
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
            CyclotomicNumber acc = algebra_->field()->zero();
            for (int i = 0; i < dim; ++i) {
                const auto& c = algebra_->structure(i, j, k);
                if (!c.is_zero() && !coords_[i].is_zero())
                    acc += coords_[i] * c;
            }
            m[k][j] = acc;
        }
    auto w = linalg::solve(std::move(m), algebra_->unit_coords());
    if (!w) return std::nullopt;
    BaseElement candidate(algebra_, std::move(*w));
    if (*this * candidate != algebra_->unit() ||
        candidate * *this != algebra_->unit())
        return std::nullopt;
    return candidate;
}

bool operator==(const BaseElement& a, const BaseElement& b) {
    if (a.algebra_ != b.algebra_) return false;
    return a.coords_ == b.coords_;
}

std::string BaseElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < algebra_->dim(); ++i) {
        const auto& c = coords_[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string& name = algebra_->basis_names()[i];
        const std::string scalar = c.to_string();
        if (name == "1") {
            os << scalar;
        } else if (c.is_one()) {
            os << name;
        } else {
            const bool compound = scalar.find(' ') != std::string::npos;
            os << (compound ? "(" + scalar + ")" : scalar) << "*" << name;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace qgda
