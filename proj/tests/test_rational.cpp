#include "ek/rational.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using ek::Rational;

namespace {

/// Random integer of up to 128 bits, either sign.
mpz_class random_wide(std::mt19937_64& rng) {
    mpz_class hi(static_cast<unsigned long>(rng()));
    mpz_class lo(static_cast<unsigned long>(rng()));
    mpz_class v = (hi << 64) + lo;
    return rng() % 2 == 0 ? v : mpz_class(-v);
}

}  // namespace

TEST_CASE("canonical form") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("serialization omits unit denominators") {
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK(Rational(-5, 1).to_string() == "-5");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/0"), std::domain_error);
}

TEST_CASE("powers and ordering") {
    CHECK(Rational::pow2(10) == Rational(1024));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
}

TEST_CASE("factorials exceed 64 bits exactly") {
    CHECK(ek::factorial(25).get_str() == "15511210043330985984000000");
    CHECK(ek::binomial(10, 3) == 120);
    CHECK(ek::binomial(3, 5) == 0);
}

TEST_CASE("property: (a/b + c/d) - c/d == a/b for 128-bit inputs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        mpz_class b = random_wide(rng);
        mpz_class d = random_wide(rng);
        if (b == 0) b = 1;
        if (d == 0) d = 1;
        const Rational x(random_wide(rng), b);
        const Rational y(random_wide(rng), d);
        CHECK((x + y) - y == x);
        CHECK((x * y) / y == x);
        // Canonical invariants hold after arithmetic.
        const Rational z = x * y + x;
        mpz_class g;
        const mpz_class num = z.numerator();
        const mpz_class den = z.denominator();
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        CHECK(den > 0);
        CHECK(g == 1);
    }
}
