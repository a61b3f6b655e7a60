#include <doctest.h>

#include <random>

#include "momentkit/error.hpp"
#include "momentkit/linalg.hpp"
#include "momentkit/poly.hpp"
#include "oracles.hpp"

using namespace momentkit;

namespace {

MultiPoly x() { return MultiPoly::variable(2, 0); }
MultiPoly y() { return MultiPoly::variable(2, 1); }
LinearForm form(std::initializer_list<long> c) { return LinearForm(RationalVec::from_ints(c)); }

}  // namespace

TEST_CASE("rationals parse canonically and print as p/q") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("4/-6")) == "-2/3");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK(floor(Rational(-1, 2)) == -1);
    CHECK(ceil(Rational(-1, 2)) == 0);
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(ceil(Rational(6, 2)) == 3);
}

TEST_CASE("arithmetic is exact") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        Rational a = oracle::random_rational(rng, 1000, 997), b = oracle::random_rational(rng, 1000, 991);
        CHECK((a + b) - b == a);
    }
    // Far beyond 64 bits.
    Rational big(Integer("123456789012345678901234567890"), Integer(7));
    CHECK(big * 7 == Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(RationalVec::from_ints({2, 4})) == RationalVec::from_ints({1, 2}));
    CHECK(primitive(RationalVec{Rational(1, 2), Rational(1, 3)}) == RationalVec::from_ints({3, 2}));
    CHECK(primitive(RationalVec::from_ints({-3, 0, 6})) == RationalVec::from_ints({-1, 0, 2}));
    CHECK_THROWS_AS(primitive(RationalVec::from_ints({0, 0})), DomainError);
}

TEST_CASE("primitive is idempotent and invariant under positive scaling") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        RationalVec v = oracle::random_nonzero_vec(rng, 3);
        const RationalVec p = primitive(v);
        CHECK(primitive(p) == p);
        Rational c = abs(oracle::random_rational(rng, 50, 13));
        if (c == 0) continue;
        CHECK(primitive(c * v) == p);
        // p is a positive multiple of v
        std::size_t k = 0;
        while (v[k] == 0) ++k;
        CHECK(p[k] / v[k] > 0);
    }
}

TEST_CASE("linear-form divisibility examples") {
    CHECK(divides_linear(form({1, 0}), x() * x() + x() * y()));
    CHECK(divides_linear(form({1, -1}), x() * x() - y() * y()));
    CHECK_FALSE(divides_linear(form({1, 0}), y()));
    CHECK_THROWS_AS(divides_linear(form({0, 0}), y()), DomainError);
}

TEST_CASE("quotient by a linear form") {
    CHECK(poly_quotient_by_linear(form({1, 0}), x() * x()) == x());
    CHECK(poly_quotient_by_linear(form({1, -1}), x() * x() - y() * y()) == x() + y());
    CHECK(poly_quotient_by_linear(form({0, 1}), MultiPoly(2)).is_zero());
    CHECK_THROWS_AS(poly_quotient_by_linear(form({1, 0}), y()), DomainError);
}

TEST_CASE("divide/multiply round trip on random input") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 1 + i % 3;
        LinearForm ell(oracle::random_nonzero_vec(rng, n));
        MultiPoly f = oracle::random_poly(rng, n, 3, 4);
        MultiPoly prod = ell.to_poly() * f;
        CHECK(divides_linear(ell, prod));
        CHECK(poly_quotient_by_linear(ell, prod) == f);
    }
}

TEST_CASE("divisibility agrees with vanishing at random hyperplane points") {
    std::mt19937_64 rng(4);
    int divisible = 0, not_divisible = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + i % 2;
        LinearForm ell(oracle::random_nonzero_vec(rng, n));
        // Half the cases are multiples of ell plus (sometimes) a perturbation.
        MultiPoly f = ell.to_poly() * oracle::random_poly(rng, n, 2, 3);
        if (i % 2) f += oracle::random_poly(rng, n, 2, 1);
        bool vanishes = true;
        for (int s = 0; s < 50 && vanishes; ++s)
            vanishes = f.evaluate(oracle::random_point_on_hyperplane(rng, ell.coefficients())) == 0;
        const bool exact = divides_linear(ell, f);
        CHECK(exact == vanishes);
        (exact ? divisible : not_divisible)++;
    }
    CHECK(divisible > 0);
    CHECK(not_divisible > 0);
}

TEST_CASE("evaluation is a ring morphism") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = oracle::random_poly(rng, 3, 3, 4), g = oracle::random_poly(rng, 3, 3, 4);
        RationalVec pt = oracle::random_vec(rng, 3);
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    }
}

TEST_CASE("polynomial basics") {
    MultiPoly zero(2);
    CHECK(zero.degree() == -1);
    CHECK(zero.str() == "0");
    MultiPoly f = x() * x() - Rational(1, 2) * x() * y() + MultiPoly::constant(2, 3);
    CHECK(f.degree() == 2);
    CHECK(f.str() == "x1^2 - 1/2*x1*x2 + 3");
    CHECK_FALSE(f.is_homogeneous());
    CHECK((f - f).is_zero());
    CHECK((f - f).terms().empty());
    CHECK(monomials_of_degree(2, 2).size() == 3);
    CHECK(monomials_of_degree(3, 3).size() == 10);
    CHECK(form({1, -3}).pivot() == 1);
    CHECK(form({2, -2}).pivot() == 0);
}

TEST_CASE("exact linear algebra") {
    Matrix m = Matrix::from_rows({RationalVec::from_ints({1, 2}), RationalVec::from_ints({3, 4})});
    CHECK(determinant(m) == -2);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((*inv) * RationalVec::from_ints({1, 0}) == RationalVec{Rational(-2), Rational(3, 2)});
    Matrix singular = Matrix::from_rows({RationalVec::from_ints({1, 2}), RationalVec::from_ints({2, 4})});
    CHECK(rank(singular) == 1);
    CHECK_FALSE(inverse(singular));
    CHECK_FALSE(solve(singular, RationalVec::from_ints({1, 1})));
    auto ns = nullspace(singular);
    REQUIRE(ns.size() == 1);
    CHECK((singular * ns[0]).is_zero());
}
