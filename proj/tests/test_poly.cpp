#include "ek/poly.hpp"

#include "random_rationals.hpp"

#include "doctest.h"

using ek::Poly;
using ek::Rational;

TEST_CASE("stripping and degree") {
    CHECK(Poly({1, 2, 0, 0}).degree() == 1);
    CHECK(Poly({0, 0}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly({1, -1}) - Poly({1, -1}) == Poly());
}

TEST_CASE("evaluation, calculus") {
    const Poly p({Rational(1, 6), -1, 1});  // x^2 - x + 1/6
    CHECK(p(Rational(1, 2)) == Rational(-1, 12));
    CHECK(p.derivative() == Poly({-1, 2}));
    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.antiderivative().coeff(0).is_zero());
    CHECK(p.integrate(0, 1) == Rational(0));
    CHECK(p.eval(0.5) == doctest::Approx(-1.0 / 12.0));
}

TEST_CASE("affine composition") {
    // x^2 - x at (-x + 1) stays x^2 - x.
    const Poly e2({0, -1, 1});
    CHECK(e2.compose_affine(-1, 1) == e2);
    CHECK(Poly({0, 1}).compose_affine(Rational(1, 2), Rational(1, 2)) ==
          Poly({Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("serialization") {
    CHECK(Poly({Rational(1, 6), -1, 1}).to_string() == "x^2 - x + 1/6");
    CHECK(Poly({Rational(-1, 2), 1}).to_string("u") == "u - 1/2");
    CHECK(Poly({0, Rational(-3, 4)}).to_string() == "-3/4*x");
    CHECK(Poly().to_string() == "0");
}

TEST_CASE("property: ring axioms and composition on random polynomials up to degree 10") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly p = ek::testing::random_poly(rng, 10);
        const Poly q = ek::testing::random_poly(rng, 10);
        const Poly r = ek::testing::random_poly(rng, 10);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        const Rational a = ek::testing::random_rational(rng);
        const Rational c = ek::testing::random_rational(rng);
        // Composition is a ring homomorphism.
        CHECK((p * q).compose_affine(a, c) == p.compose_affine(a, c) * q.compose_affine(a, c));
        CHECK((p + q).compose_affine(a, c) == p.compose_affine(a, c) + q.compose_affine(a, c));
        const Rational x = ek::testing::random_rational(rng);
        CHECK(p.compose_affine(a, c)(x) == p(a * x + c));
    }
}
