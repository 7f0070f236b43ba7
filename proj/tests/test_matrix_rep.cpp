#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgda/errors.hpp"
#include "qgda/matrix_rep.hpp"
#include "qgda/random.hpp"

using namespace qgda;

namespace {

Coordinate canonical(const ExtAlgebra::Ptr& alg) {
    auto c = Coordinate::make(alg, alg->base()->basis(1));
    REQUIRE(c.has_value());
    return *c;
}

}  // namespace

TEST_CASE("matrix arithmetic over a cyclotomic field") {
    auto f = CyclotomicField::make(4);
    CycMatrix a(f, 2);
    a.set(0, 0, f->one());
    a.set(0, 1, f->root());
    CycMatrix b(f, 2);
    b.set(1, 0, f->from_int(2));
    b.set(1, 1, -f->one());

    CycMatrix sum = a + b;
    CHECK(sum.at(0, 0) == f->one());
    CHECK(sum.at(0, 1) == f->root());
    CHECK(sum.at(1, 0) == f->from_int(2));
    CHECK(sum.at(1, 1) == -f->one());

    // Row-by-column with z^2 = -1 folded in where products of roots appear.
    CycMatrix prod = a * b;
    CHECK(prod.at(0, 0) == f->root().scaled(Rational(2)));
    CHECK(prod.at(0, 1) == -f->root());
    CHECK(prod.at(1, 0) == f->zero());
    CHECK(prod.at(1, 1) == f->zero());

    CHECK((a - a).is_zero());
    CHECK(a.scaled(f->from_int(3)).at(0, 1) == f->root().scaled(Rational(3)));

    CycMatrix id = CycMatrix::identity(f, 2);
    CHECK(id * a == a);
    CHECK(a * id == a);
    CHECK(a.pow(0) == id);
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS_AS(a.pow(-1), Error);

    CHECK(a != b);
    CHECK(a == a);
    CHECK_FALSE(CycMatrix(f, 2) == CycMatrix(f, 3));

    CHECK(id.to_string() == "[[1, 0], [0, 1]]");
}

TEST_CASE("matrix shape and field guards") {
    auto f4 = CyclotomicField::make(4);
    auto f3 = CyclotomicField::make(3);
    CycMatrix a(f4, 2);
    CycMatrix b(f4, 3);
    CycMatrix c(f3, 2);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * c, FieldMismatchError);
    CHECK_THROWS_AS(a.scaled(f3->one()), FieldMismatchError);
    CHECK_THROWS_AS(a.set(2, 0, f4->one()), Error);
    CHECK_THROWS_AS(a.set(0, 0, f3->one()), FieldMismatchError);
    CHECK_THROWS_AS(CycMatrix(f4, 0), Error);
}

TEST_CASE("scalar embedding into a larger root-of-unity field") {
    auto f2 = CyclotomicField::make(2);
    auto f3 = CyclotomicField::make(3);
    auto f4 = CyclotomicField::make(4);
    auto f12 = CyclotomicField::make(12);

    // Rationals embed as themselves.
    CHECK(embed_scalar(f2->from_rational(Rational(3, 2)), f4) ==
          f4->from_rational(Rational(3, 2)));
    // The source root lands on the matching power of the target root.
    CHECK(embed_scalar(f3->root(), f12) == f12->root_power(4));
    CHECK(embed_scalar(f4->root(), f12) == f12->root_power(3));
    // Same index is the identity map.
    CHECK(embed_scalar(f4->root() + f4->one(), f4) == f4->root() + f4->one());

    // Ring homomorphism on random values.
    RandomSource rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        auto x = rng.scalar(f3);
        auto y = rng.scalar(f3);
        CHECK(embed_scalar(x + y, f12) ==
              embed_scalar(x, f12) + embed_scalar(y, f12));
        CHECK(embed_scalar(x * y, f12) ==
              embed_scalar(x, f12) * embed_scalar(y, f12));
    }
    // The embedded root keeps its multiplicative order.
    CHECK(embed_scalar(f3->root(), f12).pow(3) == f12->one());
    CHECK(embed_scalar(f3->root(), f12) != f12->one());

    CHECK_THROWS_AS(embed_scalar(f3->root(), f4), Error);
}

TEST_CASE("cyclic-coordinate matrices: diagonal coordinate, shift for tau") {
    auto alg = ExtAlgebra::quantum_plane(3);
    auto rep = MatrixRep::quantum_plane(alg);
    auto f = alg->field();
    CHECK(rep.size() == 3);
    CHECK(rep.matrix_field()->n() == 3);

    const CycMatrix& y = rep.tau_image();
    const CycMatrix x = rep.basis_image(1);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(x.at(i, j) == (i == j ? f->root_power(i) : f->zero()));
            CHECK(y.at(i, j) == ((i == (j + 1) % 3) ? f->one() : f->zero()));
        }
    }

    CHECK(rep.basis_image(0) == rep.identity_matrix());
    CHECK(rep.basis_image(2) == x * x);
    CHECK(x * y == (y * x).scaled(f->root()));
    CHECK(x.pow(3) == rep.identity_matrix());
    CHECK(y.pow(3) == rep.identity_matrix());

    CHECK(rep.represent(alg->base()->basis(1)) == x);
    CHECK(rep.represent(alg->tau()) == y);
    CHECK(rep.represent(alg->unit()) == rep.identity_matrix());
    CHECK(rep.represent(alg->tau_power(3)) == rep.identity_matrix());
}

TEST_CASE("quaternion matrices over the fourth cyclotomic field") {
    auto alg = ExtAlgebra::quaternions();
    auto rep = MatrixRep::quaternion(alg);
    auto f = rep.matrix_field();
    CHECK(f->n() == 4);
    CHECK(rep.size() == 2);
    auto z = f->root();

    const CycMatrix& t = rep.tau_image();
    CHECK(t.at(0, 0) == z);
    CHECK(t.at(1, 1) == -z);
    CHECK(t.at(0, 1) == f->zero());
    CHECK(t.at(1, 0) == f->zero());

    const CycMatrix j = rep.basis_image(1);
    CHECK(j.at(0, 1) == f->one());
    CHECK(j.at(1, 0) == -f->one());

    const CycMatrix k = t * j;
    CHECK(k.at(0, 0) == f->zero());
    CHECK(k.at(0, 1) == z);
    CHECK(k.at(1, 0) == z);
    CHECK(k.at(1, 1) == f->zero());

    const CycMatrix minus_i = rep.identity_matrix().scaled(-f->one());
    CHECK(t * t == minus_i);
    CHECK(j * j == minus_i);
    CHECK(k * k == minus_i);
    CHECK(t * j == k);
    CHECK(j * t == k.scaled(-f->one()));
    CHECK(k * t == j);
    CHECK(j * k == t);

    // tau^2 = -1 carries the sign of the extension.
    CHECK(rep.represent(alg->tau_power(2)) == minus_i);

    // Scalars of the base (index two) embed into the index-four entries.
    auto u = alg->base()->basis(0).scaled(Rational(1, 2)) -
             alg->base()->basis(1).scaled(Rational(3, 1));
    const CycMatrix m = rep.represent(u);
    CHECK(m.at(0, 0) == f->from_rational(Rational(1, 2)));
    CHECK(m.at(0, 1) == f->from_int(-3));
    CHECK(m.at(1, 0) == f->from_int(3));
    CHECK(m.at(1, 1) == f->from_rational(Rational(1, 2)));
}

TEST_CASE("dispatch picks the model for the instance kind") {
    auto qp = ExtAlgebra::quantum_plane(4);
    auto qu = ExtAlgebra::quaternions();
    CHECK(MatrixRep::of(qp).tau_image() ==
          MatrixRep::quantum_plane(qp).tau_image());
    CHECK(MatrixRep::of(qu).tau_image() ==
          MatrixRep::quaternion(qu).tau_image());

    auto custom = ExtAlgebra::create(BaseAlgebra::cyclic_coordinate_algebra(3),
                                     1);
    CHECK_THROWS_AS(MatrixRep::of(custom), Error);
    CHECK_THROWS_AS(MatrixRep::quantum_plane(custom), Error);
    CHECK_THROWS_AS(MatrixRep::quaternion(qp), Error);
}

TEST_CASE("representation is a graded homomorphism on random elements") {
    for (auto alg : {ExtAlgebra::quantum_plane(2), ExtAlgebra::quantum_plane(4),
                     ExtAlgebra::quaternions()}) {
        auto rep = MatrixRep::of(alg);
        RandomSource rng(23);
        for (int trial = 0; trial < 15; ++trial) {
            auto xi = rng.ext_element(alg);
            auto eta = rng.ext_element(alg);
            CHECK(rep.represent(xi * eta) ==
                  rep.represent(xi) * rep.represent(eta));
            CHECK(rep.represent(xi + eta) ==
                  rep.represent(xi) + rep.represent(eta));
            CHECK(rep.represent(differential(xi)) ==
                  rep.tau_image() * rep.represent(xi) -
                      [&] {
                          CycMatrix acc = rep.zero_matrix();
                          for (int k = 0; k < alg->n(); ++k)
                              acc = acc +
                                    (rep.represent(xi.grade_project(k)) *
                                     rep.tau_image())
                                        .scaled(embed_scalar(
                                            alg->q_pow(k), rep.matrix_field()));
                          return acc;
                      }());
        }
    }
}

TEST_CASE("elements of a foreign algebra are rejected") {
    auto alg = ExtAlgebra::quantum_plane(3);
    auto other = ExtAlgebra::quantum_plane(3);  // distinct object, same shape
    auto rep = MatrixRep::of(alg);
    CHECK_THROWS_AS(rep.represent(other->tau()), AlgebraMismatchError);
    CHECK_THROWS_AS(rep.represent(other->base()->basis(1)),
                    AlgebraMismatchError);
    CHECK_THROWS_AS(oracle_suite(rep, canonical(other), 1),
                    AlgebraMismatchError);
}

TEST_CASE("images of the module basis stay linearly independent") {
    CHECK(MatrixRep::of(ExtAlgebra::quantum_plane(2)).faithful_on_basis());
    CHECK(MatrixRep::of(ExtAlgebra::quantum_plane(5)).faithful_on_basis());
    CHECK(MatrixRep::of(ExtAlgebra::quaternions()).faithful_on_basis());
}

TEST_CASE("oracle suite passes on every built-in instance") {
    std::vector<ExtAlgebra::Ptr> algebras = {
        ExtAlgebra::quantum_plane(2), ExtAlgebra::quantum_plane(3),
        ExtAlgebra::quantum_plane(4), ExtAlgebra::quantum_plane(5),
        ExtAlgebra::quaternions()};
    for (const auto& alg : algebras) {
        CAPTURE(alg->base()->name());
        auto rep = MatrixRep::of(alg);
        auto report = oracle_suite(rep, canonical(alg), 20260816);
        for (const auto& check : report.checks) {
            CAPTURE(check.name);
            CAPTURE(check.witness);
            CHECK(check.passed);
        }
        CHECK(report.ok());
        CHECK(report.checks.size() >= 10);
        CHECK(report.to_text().find("FAIL") == std::string::npos);
        CHECK(report.to_text().find("pass  faithful-on-basis") !=
              std::string::npos);
    }
}
