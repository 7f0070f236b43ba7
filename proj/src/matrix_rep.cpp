#include "qgda/matrix_rep.hpp"

#include <utility>

#include "qgda/errors.hpp"
#include "qgda/linalg.hpp"
#include "qgda/random.hpp"

namespace qgda {

namespace {

void require_compatible(const CycMatrix& a, const CycMatrix& b) {
    if (a.field()->n() != b.field()->n())
        throw FieldMismatchError("matrix entries live over different fields");
    if (a.size() != b.size())
        throw Error("matrix sizes differ: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
}

}  // namespace

CycMatrix::CycMatrix(CyclotomicField::Ptr field, int size)
    : field_(std::move(field)), size_(size) {
    if (size_ <= 0) throw Error("matrix size must be positive");
    entries_.assign(static_cast<std::size_t>(size_) * size_, field_->zero());
}

CycMatrix CycMatrix::identity(CyclotomicField::Ptr field, int size) {
    CycMatrix m(std::move(field), size);
    for (int i = 0; i < size; ++i) m.set(i, i, m.field_->one());
    return m;
}

void CycMatrix::set(int r, int c, CyclotomicNumber v) {
    if (r < 0 || r >= size_ || c < 0 || c >= size_)
        throw Error("matrix index out of range");
    if (v.n() != field_->n())
        throw FieldMismatchError("entry field does not match matrix field");
    entries_[static_cast<std::size_t>(r) * size_ + c] = std::move(v);
}

bool CycMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    require_compatible(a, b);
    CycMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
        out.entries_[i] += b.entries_[i];
    return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
    require_compatible(a, b);
    CycMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
        out.entries_[i] -= b.entries_[i];
    return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    require_compatible(a, b);
    CycMatrix out(a.field_, a.size_);
    for (int r = 0; r < a.size_; ++r) {
        for (int k = 0; k < a.size_; ++k) {
            const CyclotomicNumber& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < a.size_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.entries_[static_cast<std::size_t>(r) * a.size_ + c] +=
                    ark * b.at(k, c);
            }
        }
    }
    return out;
}

CycMatrix CycMatrix::scaled(const CyclotomicNumber& c) const {
    if (c.n() != field_->n())
        throw FieldMismatchError("scalar field does not match matrix field");
    CycMatrix out = *this;
    for (auto& e : out.entries_) e *= c;
    return out;
}

CycMatrix CycMatrix::pow(int k) const {
    if (k < 0) throw Error("matrix power expects a nonnegative exponent");
    CycMatrix acc = identity(field_, size_);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.field_->n() != b.field_->n() || a.size_ != b.size_) return false;
    return a.entries_ == b.entries_;
}

std::string CycMatrix::to_string() const {
    std::string out = "[";
    for (int r = 0; r < size_; ++r) {
        if (r > 0) out += ", ";
        out += "[";
        for (int c = 0; c < size_; ++c) {
            if (c > 0) out += ", ";
            out += at(r, c).to_string();
        }
        out += "]";
    }
    out += "]";
    return out;
}

CyclotomicNumber embed_scalar(const CyclotomicNumber& c,
                              const CyclotomicField::Ptr& target) {
    const int n = c.n();
    const int m = target->n();
    if (m % n != 0)
        throw Error("cannot embed a root-of-unity field of index " +
                    std::to_string(n) + " into index " + std::to_string(m));
    const long step = m / n;
    CyclotomicNumber acc = target->zero();
    const auto& coords = c.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        acc += target->root_power(step * static_cast<long>(i)).scaled(coords[i]);
    }
    return acc;
}

MatrixRep::MatrixRep(ExtAlgebra::Ptr algebra, CyclotomicField::Ptr matrix_field,
                     CycMatrix tau_image, std::vector<CycMatrix> basis_images)
    : algebra_(std::move(algebra)),
      matrix_field_(std::move(matrix_field)),
      tau_image_(std::move(tau_image)),
      basis_images_(std::move(basis_images)) {}

MatrixRep MatrixRep::quantum_plane(const ExtAlgebra::Ptr& algebra) {
    if (!algebra || algebra->kind() != InstanceKind::QuantumPlane)
        throw Error("matrix model requires the cyclic-coordinate instance");
    const int n = algebra->n();
    const auto field = algebra->field();

    // The coordinate acts diagonally by powers of q, tau by the cyclic shift;
    // together they realize x y = q y x with x^n = y^n = 1.
    CycMatrix x(field, n);
    for (int i = 0; i < n; ++i) x.set(i, i, field->root_power(i));
    CycMatrix y(field, n);
    for (int i = 0; i < n; ++i) y.set((i + 1) % n, i, field->one());

    std::vector<CycMatrix> basis_images;
    basis_images.reserve(n);
    for (int i = 0; i < n; ++i) basis_images.push_back(x.pow(i));
    return MatrixRep(algebra, field, std::move(y), std::move(basis_images));
}

MatrixRep MatrixRep::quaternion(const ExtAlgebra::Ptr& algebra) {
    if (!algebra || algebra->kind() != InstanceKind::Quaternion)
        throw Error("matrix model requires the quaternion instance");
    // 2x2 matrices over the fourth cyclotomic field; z denotes its root.
    const auto field = CyclotomicField::make(4);
    const auto z = field->root();

    CycMatrix t(field, 2);
    t.set(0, 0, z);
    t.set(1, 1, -z);

    CycMatrix j(field, 2);
    j.set(0, 1, field->one());
    j.set(1, 0, -field->one());

    std::vector<CycMatrix> basis_images;
    basis_images.push_back(CycMatrix::identity(field, 2));
    basis_images.push_back(std::move(j));
    return MatrixRep(algebra, field, std::move(t), std::move(basis_images));
}

MatrixRep MatrixRep::of(const ExtAlgebra::Ptr& algebra) {
    if (!algebra) throw Error("matrix model requires an algebra");
    switch (algebra->kind()) {
        case InstanceKind::QuantumPlane:
            return quantum_plane(algebra);
        case InstanceKind::Quaternion:
            return quaternion(algebra);
        case InstanceKind::Custom:
            break;
    }
    throw Error("no bundled matrix model for a custom algebra");
}

CycMatrix MatrixRep::zero_matrix() const {
    return CycMatrix(matrix_field_, size());
}

CycMatrix MatrixRep::identity_matrix() const {
    return CycMatrix::identity(matrix_field_, size());
}

CycMatrix MatrixRep::represent(const BaseElement& u) const {
    if (u.algebra() != algebra_->base())
        throw AlgebraMismatchError(
            "element does not belong to the represented base algebra");
    CycMatrix acc = zero_matrix();
    for (int i = 0; i < algebra_->base()->dim(); ++i) {
        if (u.coord(i).is_zero()) continue;
        acc = acc + basis_images_[i].scaled(embed_scalar(u.coord(i),
                                                         matrix_field_));
    }
    return acc;
}

CycMatrix MatrixRep::represent(const ExtElement& xi) const {
    if (xi.algebra() != algebra_)
        throw AlgebraMismatchError(
            "element does not belong to the represented extension");
    CycMatrix acc = zero_matrix();
    for (int k = 0; k < algebra_->n(); ++k) {
        if (xi.part(k).is_zero()) continue;
        acc = acc + tau_image_.pow(k) * represent(xi.part(k));
    }
    return acc;
}

bool MatrixRep::faithful_on_basis() const {
    const int n = algebra_->n();
    const int dim = algebra_->base()->dim();
    linalg::Matrix rows;
    rows.reserve(static_cast<std::size_t>(n) * dim);
    for (int k = 0; k < n; ++k) {
        const CycMatrix tk = tau_image_.pow(k);
        for (int i = 0; i < dim; ++i) {
            const CycMatrix image = tk * basis_images_[i];
            std::vector<CyclotomicNumber> row;
            row.reserve(static_cast<std::size_t>(size()) * size());
            for (int r = 0; r < size(); ++r)
                for (int c = 0; c < size(); ++c) row.push_back(image.at(r, c));
            rows.push_back(std::move(row));
        }
    }
    return linalg::rank(rows) == n * dim;
}

namespace {

std::string pair_witness(const char* label, int i, int j) {
    return std::string(label) + " i=" + std::to_string(i) +
           " j=" + std::to_string(j);
}

}  // namespace

CheckList oracle_suite(const MatrixRep& rep, const Coordinate& c,
                       std::uint64_t seed) {
    const auto& algebra = rep.algebra();
    if (c.algebra() != algebra)
        throw AlgebraMismatchError(
            "coordinate does not belong to the represented extension");
    const auto& base = algebra->base();
    const int n = algebra->n();
    const int dim = base->dim();
    const CycMatrix I = rep.identity_matrix();
    const CycMatrix& T = rep.tau_image();
    const auto q_m = embed_scalar(algebra->q(), rep.matrix_field());
    auto q_pow_m = [&](long k) {
        return embed_scalar(algebra->q_pow(k), rep.matrix_field());
    };

    CheckList out;
    RandomSource rng(seed);

    out.add("unit-image", rep.represent(base->unit()) == I);

    {
        const CycMatrix tn = T.pow(n);
        const CycMatrix expect =
            algebra->sign() == 1 ? I : I.scaled(-rep.matrix_field()->one());
        out.add("tau-power-sign", tn == expect,
                tn == expect ? "" : "tau image to the n-th power");
    }

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < dim && ok; ++i) {
            for (int j = 0; j < dim && ok; ++j) {
                const CycMatrix lhs =
                    rep.basis_image(i) * rep.basis_image(j);
                const CycMatrix rhs =
                    rep.represent(base->basis(i) * base->basis(j));
                if (lhs != rhs) {
                    ok = false;
                    witness = pair_witness("basis pair", i, j);
                }
            }
        }
        out.add("basis-product-homomorphism", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < dim && ok; ++i) {
            const CycMatrix lhs = rep.basis_image(i) * T;
            const CycMatrix rhs = T * rep.represent(base->basis(i).twist());
            if (lhs != rhs) {
                ok = false;
                witness = "basis index " + std::to_string(i);
            }
        }
        out.add("twist-commutation", ok, witness);
    }

    {
        bool sum_ok = true;
        bool prod_ok = true;
        std::string sum_witness, prod_witness;
        for (int trial = 0; trial < 30; ++trial) {
            const ExtElement xi = rng.ext_element(algebra);
            const ExtElement eta = rng.ext_element(algebra);
            const CycMatrix mx = rep.represent(xi);
            const CycMatrix my = rep.represent(eta);
            if (sum_ok && rep.represent(xi + eta) != mx + my) {
                sum_ok = false;
                sum_witness = "trial " + std::to_string(trial);
            }
            if (prod_ok && rep.represent(xi * eta) != mx * my) {
                prod_ok = false;
                prod_witness = "trial " + std::to_string(trial);
            }
        }
        out.add("sum-homomorphism", sum_ok, sum_witness);
        out.add("product-homomorphism", prod_ok, prod_witness);
    }

    {
        // The differential is the graded bracket with tau; per grade k the
        // matrix side reads T*M_k - q^k M_k*T.
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const ExtElement xi = rng.ext_element(algebra);
            CycMatrix bracket = rep.zero_matrix();
            for (int k = 0; k < n; ++k) {
                const CycMatrix mk = rep.represent(xi.grade_project(k));
                bracket = bracket + T * mk - (mk * T).scaled(q_pow_m(k));
            }
            if (rep.represent(differential(xi)) != bracket) {
                ok = false;
                witness = "trial " + std::to_string(trial);
            }
        }
        out.add("differential-bracket", ok, witness);
    }

    {
        // Replay n applications of the bracket purely on per-grade matrices;
        // every grade must be annihilated.
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const ExtElement xi = rng.ext_element(algebra);
            std::vector<CycMatrix> parts;
            parts.reserve(n);
            for (int k = 0; k < n; ++k)
                parts.push_back(rep.represent(xi.grade_project(k)));
            for (int step = 0; step < n; ++step) {
                std::vector<CycMatrix> next(
                    static_cast<std::size_t>(n), rep.zero_matrix());
                for (int k = 0; k < n; ++k) {
                    next[(k + 1) % n] = next[(k + 1) % n] + T * parts[k] -
                                        (parts[k] * T).scaled(q_pow_m(k));
                }
                parts = std::move(next);
            }
            for (int k = 0; k < n; ++k) {
                if (!parts[k].is_zero()) {
                    ok = false;
                    witness = "trial " + std::to_string(trial) + " grade " +
                              std::to_string(k);
                    break;
                }
            }
        }
        out.add("nilpotency", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        const ExtElement x_ext = algebra->embed(c.x());
        const ExtElement dx_ext = c.dx();
        for (int k = 1; k < n && ok; ++k) {
            const CycMatrix tk = T.pow(k);
            if (rep.represent(d_power(x_ext, k)) !=
                tk * rep.represent(poly_P(k, c))) {
                ok = false;
                witness = "differential power k=" + std::to_string(k);
                break;
            }
            if (rep.represent(dx_ext.pow(k)) !=
                tk * rep.represent(poly_Q(k, c))) {
                ok = false;
                witness = "form power k=" + std::to_string(k);
                break;
            }
            if (rep.represent(differential(dx_ext.pow(k))) !=
                rep.represent(dx_ext.pow(k + 1)) *
                    rep.represent(poly_Phi(k, c))) {
                ok = false;
                witness = "connection coefficient k=" + std::to_string(k);
            }
        }
        out.add("coordinate-polynomials", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        const CycMatrix dx_m = rep.represent(c.dx());
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const BaseElement u = rng.base_element(base);
            const CycMatrix um = rep.represent(u);
            if (rep.represent(differential(algebra->embed(u))) !=
                dx_m * rep.represent(derivative(u, c))) {
                ok = false;
                witness = "derivative trial " + std::to_string(trial);
                break;
            }
            if (um * dx_m != dx_m * rep.represent(phi_dx(u, c))) {
                ok = false;
                witness = "commutation trial " + std::to_string(trial);
            }
        }
        out.add("one-form-identities", ok, witness);
    }

    if (algebra->kind() == InstanceKind::QuantumPlane) {
        const CycMatrix xr = rep.basis_image(1);
        bool ok = xr * T == (T * xr).scaled(q_m) && xr.pow(n) == I &&
                  T.pow(n) == I;
        out.add("generator-relations", ok);
    } else if (algebra->kind() == InstanceKind::Quaternion) {
        const CycMatrix ir = T;
        const CycMatrix jr = rep.basis_image(1);
        const CycMatrix kr = ir * jr;
        const CycMatrix minus_i = I.scaled(-rep.matrix_field()->one());
        bool ok = ir.pow(2) == minus_i && jr.pow(2) == minus_i &&
                  kr.pow(2) == minus_i && ir * jr == kr &&
                  jr * ir == kr.scaled(-rep.matrix_field()->one()) &&
                  kr * ir == jr &&
                  ir * kr == jr.scaled(-rep.matrix_field()->one()) &&
                  jr * kr == ir &&
                  kr * jr == ir.scaled(-rep.matrix_field()->one());
        out.add("generator-relations", ok);
    }

    out.add("faithful-on-basis", rep.faithful_on_basis());

    return out;
}

}  // namespace qgda
