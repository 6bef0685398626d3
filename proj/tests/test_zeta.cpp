#include "ek/zeta.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using ek::ExactConstant;
using ek::Rational;

namespace {

// Reference values computed independently at 50 digits and rounded to double.
constexpr double kZeta[] = {0.0, 0.0,
                            1.6449340668482264, 1.2020569031595942, 1.0823232337111381,
                            1.03692775514337, 1.0173430619844492, 1.008349277381923,
                            1.0040773561979444, 1.0020083928260821, 1.000994575127818,
                            1.0004941886041194, 1.000246086553308, 1.0001227133475785};

constexpr double kBeta[] = {0.0, 0.7853981633974483, 0.0, 0.9689461462593694, 0.0,
                            0.9961578280770881, 0.0, 0.9995545078905399, 0.0,
                            0.9999496841872201, 0.0, 0.9999943749738237};

// sum over all integers k of (4k+1)^-n, even n.
constexpr double kEvenS[] = {0.0, 0.0, 1.2337005501361697, 0.0, 1.0146780316041921, 0.0,
                             1.001447076640942, 0.0, 1.000155179025296, 0.0,
                             1.000017041363045, 0.0, 1.000001885848583};

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("polytope volumes") {
    const Rational expected[] = {0, 0, {1, 2}, {1, 4}, {1, 6}, {5, 48}, {1, 15}, {61, 1440},
                                 {17, 630}, {277, 16128}, {31, 2835}, {50521, 7257600}, {691, 155925}};
    for (unsigned n = 2; n <= 12; ++n) {
        INFO("n = " << n);
        CHECK(ek::delta(n) == expected[n]);
        CHECK(ek::delta(n, ek::DeltaMethod::Closed) == expected[n]);
    }
    CHECK_THROWS_AS(ek::delta(1), std::invalid_argument);
    CHECK_THROWS_AS(ek::delta(0), std::invalid_argument);
}

TEST_CASE("exact constants") {
    CHECK(ek::s_value(2) == ExactConstant{{1, 8}, 2});
    CHECK(ek::s_value(4) == ExactConstant{{1, 96}, 4});
    CHECK(ek::s_value(3) == ExactConstant{{1, 32}, 3});
    CHECK(ek::zeta_even(1) == ExactConstant{{1, 6}, 2});
    CHECK(ek::zeta_even(2) == ExactConstant{{1, 90}, 4});
    CHECK(ek::zeta_even(3) == ExactConstant{{1, 945}, 6});
    CHECK(ek::s_odd(0) == ExactConstant{{1, 4}, 1});
    CHECK(ek::s_odd(1) == ExactConstant{{1, 32}, 3});
    CHECK(ek::s_odd(2) == ExactConstant{{5, 1536}, 5});
    CHECK_FALSE(ek::s_odd_in_volume_range(0));
    CHECK(ek::s_odd_in_volume_range(1));
    CHECK(ek::zeta_even(1).to_string() == "1/6*pi^2");
    CHECK(ek::s_odd(0).to_string() == "1/4*pi");
    CHECK(ExactConstant{{3, 2}, 0}.to_string() == "3/2");
    CHECK_THROWS_AS(ek::zeta_even(0), std::invalid_argument);
}

TEST_CASE("zeta(2n) against independent values") {
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(rel_close(ek::zeta_even(n).numeric(), kZeta[2 * n], 1e-14));
    }
}

TEST_CASE("S(2n) and zeta(2n) are linked exactly") {
    // sum over odd positive integers of k^-2n equals S(2n), and is (1 - 2^-2n) zeta(2n).
    for (unsigned n = 1; n <= 6; ++n) {
        const ExactConstant s = ek::s_value(2 * n);
        const ExactConstant z = ek::zeta_even(n);
        CHECK(s.pi_power == z.pi_power);
        CHECK(s.rational_part == (Rational(1) - Rational::pow2(-2L * n)) * z.rational_part);
    }
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(ek::s_value(2 * n + 1) == ek::s_odd(n));
    }
}

TEST_CASE("S(n) numerics against independent values") {
    for (unsigned n = 2; n <= 12; n += 2) {
        CHECK(rel_close(ek::s_value(n).numeric(), kEvenS[n], 1e-14));
    }
    for (unsigned n = 1; n <= 11; n += 2) {
        CHECK(rel_close(ek::s_odd((n - 1) / 2).numeric(), kBeta[n], 1e-14));
    }
}

TEST_CASE("series oracles") {
    for (unsigned s = 2; s <= 13; ++s) {
        INFO("s = " << s);
        CHECK(std::abs(ek::series_zeta(s) - kZeta[s]) < 2e-13);
    }
    for (unsigned s = 1; s <= 11; s += 2) {
        INFO("s = " << s);
        CHECK(std::abs(ek::series_beta(s) - kBeta[s]) < 2e-13);
    }
    for (unsigned n = 2; n <= 12; n += 2) {
        INFO("n = " << n);
        CHECK(std::abs(ek::series_S(n) - kEvenS[n]) < 2e-13);
    }
}

TEST_CASE("series agree with exact S(n) within twice the tolerance") {
    const ek::SeriesConfig cfg;
    for (unsigned n = 2; n <= 10; ++n) {
        INFO("n = " << n);
        CHECK(std::abs(ek::series_S(n, cfg) - ek::s_value(n).numeric()) < 2 * cfg.tolerance);
    }
}

TEST_CASE("series failures") {
    ek::SeriesConfig tight;
    tight.max_terms = 10;
    CHECK_THROWS_AS(ek::series_S(2, tight), ek::SeriesNotConverged);
    CHECK_THROWS_AS(ek::series_beta(1, tight), ek::SeriesNotConverged);
    CHECK_THROWS_AS(ek::series_zeta(3, tight), ek::SeriesNotConverged);
    CHECK_THROWS_AS(ek::series_S(1), std::invalid_argument);
    CHECK_THROWS_AS(ek::series_beta(0), std::invalid_argument);
    CHECK_THROWS_AS(ek::series_zeta(1), std::invalid_argument);
    ek::SeriesConfig bad;
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(ek::series_S(2, bad), std::invalid_argument);
}

TEST_CASE("odd zeta by quadrature") {
    for (unsigned n = 1; n <= 6; ++n) {
        INFO("n = " << n);
        CHECK(std::abs(ek::zeta_odd_quadrature(n) - kZeta[2 * n + 1]) < 1e-10);
    }
    ek::QuadratureConfig lobatto;
    lobatto.endpoint_handling = ek::EndpointHandling::LimitValue;
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(std::abs(ek::zeta_odd_quadrature(n, lobatto) - kZeta[2 * n + 1]) < 1e-10);
    }
    CHECK_THROWS_AS(ek::zeta_odd_quadrature(0), std::invalid_argument);
    ek::QuadratureConfig bad;
    bad.panels = 0;
    CHECK_THROWS_AS(ek::zeta_odd_quadrature(1, bad), std::invalid_argument);
}

TEST_CASE("quadrature error shrinks with panel doubling until rounding") {
    for (unsigned n : {1u, 3u}) {
        double previous = 1.0;
        for (unsigned panels = 1; panels <= 32; panels *= 2) {
            ek::QuadratureConfig cfg;
            cfg.panels = panels;
            cfg.nodes_per_panel = 6;
            const double err = std::abs(ek::zeta_odd_quadrature(n, cfg) - kZeta[2 * n + 1]);
            INFO("n = " << n << " panels = " << panels << " err = " << err);
            CHECK((err < previous || err < 1e-14));
            previous = std::max(err, 1e-15);
        }
        CHECK(previous < 1e-13);
    }
}

TEST_CASE("odd zeta by the log-tan integral") {
    for (unsigned n = 1; n <= 5; ++n) {
        INFO("n = " << n);
        CHECK(std::abs(ek::zeta_odd_logtan(n) - kZeta[2 * n + 1]) < 1e-8);
    }
    ek::QuadratureConfig lobatto;
    lobatto.endpoint_handling = ek::EndpointHandling::LimitValue;
    CHECK_THROWS_AS(ek::zeta_odd_logtan(1, lobatto), std::invalid_argument);
    CHECK_THROWS_AS(ek::zeta_odd_logtan(0), std::invalid_argument);
}
