#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgda/base_algebra.hpp"
#include "qgda/errors.hpp"

using namespace qgda;

namespace {

BaseElement from_ints(const BaseAlgebra::Ptr& alg, std::vector<long> v) {
    BaseAlgebra::Coords coords;
    coords.reserve(v.size());
    for (long x : v) coords.push_back(alg->field()->from_int(x));
    return alg->element(std::move(coords));
}

BaseElement random_element(const BaseAlgebra::Ptr& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<long> pick(0, alg->field()->degree() - 1);
    BaseAlgebra::Coords coords;
    for (int i = 0; i < alg->dim(); ++i) {
        std::vector<Rational> scalar(alg->field()->degree());
        scalar[pick(rng)] = Rational(num(rng), den(rng));
        coords.push_back(alg->field()->from_coords(std::move(scalar)));
    }
    return alg->element(std::move(coords));
}

}  // namespace

TEST_CASE("cyclic coordinate algebra multiplies by exponent addition") {
    auto alg = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto x = alg->basis(1);
    auto x2 = alg->basis(2);
    CHECK(x * x == x2);
    CHECK(x * x2 == alg->unit());
    CHECK(from_ints(alg, {1, 1, 0}) * from_ints(alg, {1, 0, 1}) ==
          from_ints(alg, {2, 1, 1}));
}

TEST_CASE("cyclic twist scales each power by a root power") {
    auto alg = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto q = alg->field()->root();
    auto x = alg->basis(1);
    CHECK(x.twist() == x.scaled(q));
    CHECK(x.twist(2) == x.scaled(q * q));
    CHECK(x.twist(3) == x);
    CHECK(x.twist(-1) == x.twist(2));
    CHECK(alg->unit().twist() == alg->unit());
}

TEST_CASE("explicit inverse in the cyclic algebra") {
    auto alg = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto q = alg->field()->root();
    auto one_minus_q = alg->field()->one() - q;
    auto u = alg->basis(1).scaled(one_minus_q);
    auto inv = u.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == alg->basis(2).scaled(one_minus_q.inverse()));
    CHECK(*inv * u == alg->unit());
}

TEST_CASE("zero divisors have no inverse") {
    auto alg = BaseAlgebra::cyclic_coordinate_algebra(3);
    CHECK_FALSE(from_ints(alg, {1, 1, 1}).inverse().has_value());
    CHECK_FALSE(alg->zero().inverse().has_value());
}

TEST_CASE("negative powers use the inverse") {
    auto alg = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto x = alg->basis(1);
    CHECK(x.pow(-1) == alg->basis(2));
    CHECK(x.pow(0) == alg->unit());
    CHECK(x.pow(4) == x);
    CHECK_THROWS_AS(from_ints(alg, {1, 1, 1}).pow(-1), NotInvertibleError);
}

TEST_CASE("gaussian base behaves like the complex rationals") {
    auto alg = BaseAlgebra::gaussian_base();
    auto j = alg->basis(1);
    CHECK(j * j == -alg->unit());
    CHECK(j.twist() == -j);
    CHECK(j - j.twist() == j.scaled(Rational(2)));
    auto u = from_ints(alg, {3, 4});
    auto inv = u.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == alg->element({alg->field()->from_rational(Rational(3, 25)),
                                alg->field()->from_rational(Rational(-4, 25))}));
}

TEST_CASE("nonzero gaussian elements are always invertible") {
    auto alg = BaseAlgebra::gaussian_base();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = random_element(alg, rng);
        if (u.is_zero()) continue;
        auto inv = u.inverse();
        REQUIRE(inv.has_value());
        CHECK(u * *inv == alg->unit());
        CHECK(*inv * u == alg->unit());
    }
}

TEST_CASE("built-in algebras validate cleanly") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(BaseAlgebra::cyclic_coordinate_algebra(n)->validate().ok());
    }
    CHECK(BaseAlgebra::gaussian_base()->validate().ok());
}

TEST_CASE("validation pinpoints a corrupted unit row") {
    auto good = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto f = good->field();
    auto structure = [&] {
        std::vector<std::vector<BaseAlgebra::Coords>> s;
        for (int i = 0; i < 3; ++i) {
            s.emplace_back();
            for (int j = 0; j < 3; ++j) {
                BaseAlgebra::Coords c;
                for (int k = 0; k < 3; ++k) c.push_back(good->structure(i, j, k));
                s.back().push_back(std::move(c));
            }
        }
        return s;
    }();
    structure[0][0] = {f->zero(), f->one(), f->zero()};
    auto bad = BaseAlgebra::create(f, good->basis_names(), std::move(structure),
                                   good->unit_coords(), good->twist_matrix());
    auto report = bad->validate();
    CHECK_FALSE(report.ok());
    bool unit_failure = false;
    for (const auto& failure : report.failures)
        if (failure.law == "left-unit" && failure.witness == std::vector<int>{0})
            unit_failure = true;
    CHECK(unit_failure);
}

TEST_CASE("validation pinpoints broken associativity") {
    auto good = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto f = good->field();
    std::vector<std::vector<BaseAlgebra::Coords>> structure;
    for (int i = 0; i < 3; ++i) {
        structure.emplace_back();
        for (int j = 0; j < 3; ++j) {
            BaseAlgebra::Coords c;
            for (int k = 0; k < 3; ++k) c.push_back(good->structure(i, j, k));
            structure.back().push_back(std::move(c));
        }
    }
    // x * x^2 redefined to x while x^2 * x stays 1.
    structure[1][2] = {f->zero(), f->one(), f->zero()};
    auto bad = BaseAlgebra::create(f, good->basis_names(), std::move(structure),
                                   good->unit_coords(), good->twist_matrix());
    auto report = bad->validate();
    bool assoc_failure = false;
    for (const auto& failure : report.failures)
        if (failure.law == "associativity" &&
            failure.witness == std::vector<int>{1, 1, 1})
            assoc_failure = true;
    CHECK(assoc_failure);
}

TEST_CASE("validation rejects a twist that is not an automorphism") {
    auto good = BaseAlgebra::cyclic_coordinate_algebra(2);
    auto f = good->field();
    std::vector<std::vector<BaseAlgebra::Coords>> structure;
    for (int i = 0; i < 2; ++i) {
        structure.emplace_back();
        for (int j = 0; j < 2; ++j) {
            BaseAlgebra::Coords c;
            for (int k = 0; k < 2; ++k) c.push_back(good->structure(i, j, k));
            structure.back().push_back(std::move(c));
        }
    }
    std::vector<BaseAlgebra::Coords> twist = {
        {f->one(), f->zero()}, {f->zero(), f->from_int(2)}};
    auto bad = BaseAlgebra::create(f, good->basis_names(), std::move(structure),
                                   good->unit_coords(), std::move(twist));
    auto report = bad->validate();
    bool mult_failure = false, order_failure = false;
    for (const auto& failure : report.failures) {
        if (failure.law == "twist-multiplicative") mult_failure = true;
        if (failure.law == "twist-order") order_failure = true;
    }
    CHECK(mult_failure);
    CHECK(order_failure);
}

TEST_CASE("elements of different algebras do not mix") {
    auto a = BaseAlgebra::cyclic_coordinate_algebra(3);
    auto b = BaseAlgebra::gaussian_base();
    CHECK_THROWS_AS(a->unit() + b->unit(), AlgebraMismatchError);
    CHECK_THROWS_AS(a->unit() * b->unit(), AlgebraMismatchError);
    CHECK(a->unit() != b->unit());
    // Same content under two distinct handles still counts as distinct.
    auto a2 = BaseAlgebra::cyclic_coordinate_algebra(3);
    CHECK_THROWS_AS(a->unit() + a2->unit(), AlgebraMismatchError);
}

TEST_CASE("ring laws on random cyclic elements") {
    std::mt19937_64 rng(20260816);
    for (int n = 2; n <= 6; ++n) {
        auto alg = BaseAlgebra::cyclic_coordinate_algebra(n);
        CAPTURE(n);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_element(alg, rng);
            auto b = random_element(alg, rng);
            auto c = random_element(alg, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b).twist() == a.twist() * b.twist());
            CHECK(a.twist(n) == a);
            auto inv = a.inverse();
            if (inv) {
                CHECK(a * *inv == alg->unit());
                CHECK(*inv * a == alg->unit());
            }
        }
    }
}

TEST_CASE("element display") {
    auto alg = BaseAlgebra::cyclic_coordinate_algebra(3);
    CHECK(alg->zero().to_string() == "0");
    CHECK(alg->unit().to_string() == "1");
    CHECK(alg->basis(2).to_string() == "x^2");
    auto q = alg->field()->root();
    auto u = alg->unit() + alg->basis(1).scaled(alg->field()->one() + q);
    CHECK(u.to_string() == "1 + (1 + q)*x");
    CHECK(alg->basis(1).scaled(q).to_string() == "q*x");
}
