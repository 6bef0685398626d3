#include "ek/euler_bernoulli.hpp"

#include "doctest.h"

#include <thread>
#include <vector>

using ek::Poly;
using ek::Rational;

TEST_CASE("first Euler polynomials") {
    CHECK(ek::euler_poly(0) == Poly({1}));
    CHECK(ek::euler_poly(1) == Poly({Rational(-1, 2), 1}));
    CHECK(ek::euler_poly(2) == Poly({0, -1, 1}));
    CHECK(ek::euler_poly(3) == Poly({Rational(1, 4), 0, Rational(-3, 2), 1}));
    CHECK(ek::euler_poly(4) == Poly({0, 1, 0, -2, 1}));
    // E_10 = x^10 - 5x^9 + 30x^7 - 126x^5 + 255x^3 - 155x
    CHECK(ek::euler_poly(10) == Poly({0, -155, 0, 255, 0, -126, 0, 30, 0, -5, 1}));
    CHECK(ek::euler_poly(2)(Rational(1, 2)) == Rational(-1, 4));
}

TEST_CASE("defining shift property E_n(x) + E_n(x+1) = 2 x^n") {
    for (unsigned n = 0; n <= 24; ++n) {
        const Poly& e = ek::euler_poly(n);
        CHECK(e + e.compose_affine(1, 1) == Poly::monomial(n, 2));
    }
}

TEST_CASE("Bernoulli numbers") {
    CHECK(ek::bernoulli(0) == Rational(1));
    CHECK(ek::bernoulli(1) == Rational(-1, 2));
    CHECK(ek::bernoulli(2) == Rational(1, 6));
    CHECK(ek::bernoulli(4) == Rational(-1, 30));
    CHECK(ek::bernoulli(6) == Rational(1, 42));
    CHECK(ek::bernoulli(12) == Rational(-691, 2730));
    CHECK(ek::bernoulli(24) == Rational(-236364091, 2730));
    for (unsigned n = 3; n <= 25; n += 2) {
        CHECK(ek::bernoulli(n).is_zero());
    }
}

TEST_CASE("Euler numbers") {
    const long expected[] = {1, -1, 5, -61, 1385, -50521, 2702765};
    for (unsigned k = 0; k < 7; ++k) {
        const Rational e = ek::euler_number(2 * k);
        CHECK(e.is_integer());
        CHECK(e == Rational(expected[k]));
    }
    CHECK_THROWS_AS(ek::euler_number(3), std::invalid_argument);
}

TEST_CASE("identity suite") {
    const auto checks = ek::euler_identity_suite();
    CHECK(checks.size() == 6);
    for (const auto& c : checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("individual identities over their ranges") {
    for (unsigned n = 1; n <= 24; ++n) {
        CHECK(ek::euler_poly(n).derivative() == ek::euler_poly(n - 1) * Rational(n));
    }
    for (unsigned n = 1; n <= 12; ++n) {
        const Rational lhs = ek::euler_poly(2 * n - 1)(0);
        CHECK(lhs == -Rational(1, n) * (Rational::pow2(2 * n) - 1) * ek::bernoulli(2 * n));
        CHECK(ek::euler_poly(2 * n)(1).is_zero());
    }
}

TEST_CASE("check_over_range reports the first failure") {
    const auto c = ek::check_over_range("toy", 0, 10, [](unsigned n) { return n < 4; });
    CHECK_FALSE(c.pass);
    CHECK(c.detail == "fails at n=4");
}

TEST_CASE("concurrent first use yields identical tables") {
    // Indices beyond anything touched above, so the cache grows under contention.
    std::vector<std::vector<Poly>> seen(4);
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < seen.size(); ++t) {
        pool.emplace_back([&, t] {
            for (unsigned n = 40; n-- > 26;) {
                seen[t].push_back(ek::euler_poly(n));
            }
        });
    }
    pool.clear();
    for (std::size_t t = 1; t < seen.size(); ++t) {
        CHECK(seen[t] == seen[0]);
    }
    CHECK(ek::euler_poly(39).derivative() == ek::euler_poly(38) * Rational(39));
}
