#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qgda/calculus.hpp"
#include "qgda/report.hpp"

namespace qgda {

// Square matrix over a cyclotomic field, row-major.
class CycMatrix {
public:
    CycMatrix(CyclotomicField::Ptr field, int size);
    static CycMatrix identity(CyclotomicField::Ptr field, int size);

    int size() const { return size_; }
    const CyclotomicField::Ptr& field() const { return field_; }
    const CyclotomicNumber& at(int r, int c) const {
        return entries_[r * size_ + c];
    }
    void set(int r, int c, CyclotomicNumber v);

    bool is_zero() const;

    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    CycMatrix scaled(const CyclotomicNumber& c) const;
    CycMatrix pow(int k) const;  // k >= 0

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    CyclotomicField::Ptr field_;
    int size_;
    std::vector<CyclotomicNumber> entries_;
};

// Maps a scalar into a larger cyclotomic field whose index is a multiple of
// the source index, sending the source root to the matching power of the
// target root. Throws Error when the indices do not divide.
CyclotomicNumber embed_scalar(const CyclotomicNumber& c,
                              const CyclotomicField::Ptr& target);

// Exact matrix model of a built-in extension: images for tau and every base
// basis vector, over a possibly larger cyclotomic field.
class MatrixRep {
public:
    // X = diag(1, q, ..., q^(n-1)) for the coordinate, Y = the cyclic shift
    // for tau; matrices live over the algebra's own field.
    static MatrixRep quantum_plane(const ExtAlgebra::Ptr& algebra);

    // 2x2 matrices over the fourth cyclotomic field: tau = i maps to
    // diag(z, -z) and j to the standard symplectic matrix.
    static MatrixRep quaternion(const ExtAlgebra::Ptr& algebra);

    // Dispatch on the built-in instance kind; throws Error for custom
    // algebras, which carry no bundled representation.
    static MatrixRep of(const ExtAlgebra::Ptr& algebra);

    const ExtAlgebra::Ptr& algebra() const { return algebra_; }
    const CyclotomicField::Ptr& matrix_field() const { return matrix_field_; }
    int size() const { return tau_image_.size(); }
    const CycMatrix& tau_image() const { return tau_image_; }
    const CycMatrix& basis_image(int i) const { return basis_images_[i]; }

    CycMatrix zero_matrix() const;
    CycMatrix identity_matrix() const;

    CycMatrix represent(const BaseElement& u) const;
    CycMatrix represent(const ExtElement& xi) const;

    // Exact linear independence of the images of tau^k e_i.
    bool faithful_on_basis() const;

private:
    MatrixRep(ExtAlgebra::Ptr algebra, CyclotomicField::Ptr matrix_field,
              CycMatrix tau_image, std::vector<CycMatrix> basis_images);

    ExtAlgebra::Ptr algebra_;
    CyclotomicField::Ptr matrix_field_;
    CycMatrix tau_image_;
    std::vector<CycMatrix> basis_images_;
};

// Replays the algebra's defining relations, the homomorphism property, the
// differential bracket, nilpotency, the coordinate polynomials, and exact
// faithfulness through the matrix model.
CheckList oracle_suite(const MatrixRep& rep, const Coordinate& c,
                       std::uint64_t seed);

}  // namespace qgda
