#include "ek/zeta.hpp"

#include "ek/euler_bernoulli.hpp"
#include "ek/kernel.hpp"
#include "ek/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace ek {

double ExactConstant::numeric() const {
    long double pi_k = 1.0L;
    for (unsigned k = 0; k < pi_power; ++k) {
        pi_k *= std::numbers::pi_v<long double>;
    }
    return static_cast<double>(static_cast<long double>(rational_part.to_double()) * pi_k);
}

std::string ExactConstant::to_string() const {
    if (pi_power == 0) {
        return rational_part.to_string();
    }
    std::string out = rational_part.to_string() + "*pi";
    if (pi_power > 1) {
        out += "^" + std::to_string(pi_power);
    }
    return out;
}

void QuadratureConfig::validate() const {
    if (panels < 1) {
        throw std::invalid_argument("QuadratureConfig: panels must be >= 1");
    }
    if (nodes_per_panel < 2) {
        throw std::invalid_argument("QuadratureConfig: nodes_per_panel must be >= 2");
    }
}

void SeriesConfig::validate() const {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("SeriesConfig: tolerance must be > 0");
    }
    if (max_terms < 1) {
        throw std::invalid_argument("SeriesConfig: max_terms must be >= 1");
    }
}

namespace {

Rational sign_pow(unsigned n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

void require_volume_index(unsigned n, const char* what) {
    if (n < 2) {
        throw std::invalid_argument(std::string(what) +
                                    ": n must be >= 2 (the polytope identity holds for n >= 2), got " +
                                    std::to_string(n));
    }
}

long double pi_pow(unsigned k) {
    long double p = 1.0L;
    for (unsigned i = 0; i < k; ++i) {
        p *= std::numbers::pi_v<long double>;
    }
    return p;
}

long double factorial_ld(unsigned n) {
    long double f = 1.0L;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

std::vector<double> to_doubles(const Poly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(c.to_double());
    }
    return out;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// Smallest power-of-two count N (capped at max_terms) whose bound(N) is
/// below target; throws SeriesNotConverged otherwise.
template <typename Bound>
std::uint64_t terms_needed(Bound bound, double target, std::uint64_t max_terms, const char* what) {
    std::uint64_t n = 1;
    while (!(bound(n) < target)) {
        if (n >= max_terms) {
            throw SeriesNotConverged(std::string(what) + ": tolerance not reached within " +
                                     std::to_string(max_terms) + " terms");
        }
        n = std::min<std::uint64_t>(2 * n, max_terms);
    }
    return n;
}

/// sum_{j>=0} (-1)^j a(j) for positive, decreasing, convex a. Uses the average
/// of two consecutive partial sums, whose error is at most (a(N) - a(N+1)) / 2.
template <typename Term>
double alternating_sum(Term a, double scale, const SeriesConfig& cfg, const char* what) {
    auto bound = [&](std::uint64_t n) {
        const auto j = static_cast<double>(n);
        return scale * 0.5 * (a(j) - a(j + 1.0));
    };
    const std::uint64_t n = terms_needed(bound, 0.5 * cfg.tolerance, cfg.max_terms, what);
    quad::CompensatedSum sum;
    const double last = 0.5 * a(static_cast<double>(n));
    sum.add(n % 2 == 0 ? last : -last);
    for (std::uint64_t j = n; j-- > 0;) {
        const double t = a(static_cast<double>(j));
        sum.add(j % 2 == 0 ? t : -t);
    }
    return sum.value();
}

}  // namespace

Rational delta(unsigned n, DeltaMethod method) {
    require_volume_index(n, "delta");
    if (method == DeltaMethod::Trace) {
        return trace(closed_form(n));
    }
    const unsigned m = n / 2;
    if (n % 2 == 0) {
        return closed_form_prefactor(n) * euler_poly(2 * m - 1)(0);
    }
    return closed_form_prefactor(n) * euler_poly(2 * m)(Rational(1, 2));
}

ExactConstant s_value(unsigned n) {
    require_volume_index(n, "s_value");
    return {delta(n) * Rational::pow2(-static_cast<long>(n)), n};
}

ExactConstant zeta_even(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("zeta_even: n must be >= 1");
    }
    const Rational coeff = sign_pow(n + 1) * Rational::pow2(2L * n - 1) / Rational(factorial(2 * n));
    return {coeff * bernoulli(2 * n), 2 * n};
}

ExactConstant s_odd(unsigned n) {
    const Rational coeff = sign_pow(n) / (Rational(2) * Rational(factorial(2 * n)));
    return {coeff * Rational::pow2(-(2L * n + 1)) * euler_number(2 * n), 2 * n + 1};
}

double zeta_odd_quadrature(unsigned n, const QuadratureConfig& cfg) {
    if (n < 1) {
        throw std::invalid_argument("zeta_odd_quadrature: n must be >= 1 (1/sin(pi u) is not integrable)");
    }
    cfg.validate();
    const std::vector<double> e = to_doubles(euler_poly(2 * n));
    // E_{2n}(u)/sin(pi u) -> 2n E_{2n-1}(0) / pi at both ends; the integrand is
    // symmetric about 1/2, so it is always evaluated on the half nearer 0.
    const double end_value = 2.0 * n * euler_poly(2 * n - 1)(0).to_double() / std::numbers::pi;
    const bool closed = cfg.endpoint_handling == EndpointHandling::LimitValue;
    auto integrand = [&](double u) {
        const double t = u <= 0.5 ? u : 1.0 - u;
        if (t <= 0.0) {
            if (!closed) {
                throw std::runtime_error("zeta_odd_quadrature: open rule touched an endpoint");
            }
            return end_value;
        }
        return horner(e, t) / std::sin(std::numbers::pi * t);
    };
    const auto rule = closed ? quad::gauss_lobatto(cfg.nodes_per_panel) : quad::gauss_legendre(cfg.nodes_per_panel);
    const auto breaks = quad::uniform_breaks(cfg.panels, 0.0, 1.0);
    const double integral = quad::integrate(integrand, breaks, rule);
    if (!std::isfinite(integral)) {
        throw std::runtime_error("zeta_odd_quadrature: non-finite integral");
    }
    const long double sign = n % 2 == 0 ? 1.0L : -1.0L;
    const long double prefactor =
        sign * pi_pow(2 * n + 1) / (4.0L * (1.0L - std::ldexp(1.0L, -static_cast<int>(2 * n + 1))) * factorial_ld(2 * n));
    return static_cast<double>(prefactor * integral);
}

double zeta_odd_logtan(unsigned n, const QuadratureConfig& cfg) {
    if (n < 1) {
        throw std::invalid_argument("zeta_odd_logtan: n must be >= 1");
    }
    cfg.validate();
    if (cfg.endpoint_handling != EndpointHandling::OpenShifted) {
        throw std::invalid_argument("zeta_odd_logtan: ln tan is unbounded at the endpoints; use open nodes");
    }
    const Poly diag = diagonal(closed_form(2 * n));
    const std::vector<double> near_zero = to_doubles(diag);
    const std::vector<double> near_one = to_doubles(diag.compose_affine(-1, 1));  // K(1-t, 1-t)
    auto integrand = [&](double u) {
        if (u <= 0.5) {
            return std::log(std::tan(0.5 * std::numbers::pi * u)) * horner(near_zero, u);
        }
        const double t = 1.0 - u;
        return -std::log(std::tan(0.5 * std::numbers::pi * t)) * horner(near_one, t);
    };
    const auto breaks = quad::graded_breaks(2 * cfg.panels);
    const double integral = quad::integrate(integrand, breaks, quad::gauss_legendre(cfg.nodes_per_panel));
    if (!std::isfinite(integral)) {
        throw std::runtime_error("zeta_odd_logtan: non-finite integral");
    }
    const long double prefactor = -2.0L * pi_pow(2 * n) / (std::ldexp(1.0L, static_cast<int>(2 * n + 1)) - 1.0L);
    return static_cast<double>(prefactor * integral);
}

double series_S(unsigned n, const SeriesConfig& cfg) {
    require_volume_index(n, "series_S");
    cfg.validate();
    const double dn = n;
    auto term = [dn](double denom) { return std::pow(denom, -dn); };

    if (n % 2 == 1) {
        // sum_{m>=0} (4m+1)^-n - (4m+3)^-n = sum_{j>=0} (-1)^j (2j+1)^-n
        return series_beta(n, cfg);
    }

    // Both tails positive: f(x) = (4x+1)^-n + (4x+3)^-n. After M terms the
    // tail is int_M^inf f + f(M)/2 - f'(M)/12 with remainder at most
    // |f'''(M)|/720 (f is completely monotone).
    auto f = [&](double x) { return term(4.0 * x + 1.0) + term(4.0 * x + 3.0); };
    auto df = [&](double x) {
        return -4.0 * dn * (std::pow(4.0 * x + 1.0, -dn - 1.0) + std::pow(4.0 * x + 3.0, -dn - 1.0));
    };
    auto bound = [&](std::uint64_t m) {
        const double x = static_cast<double>(m);
        const double d3 = 64.0 * dn * (dn + 1.0) * (dn + 2.0) *
                          (std::pow(4.0 * x + 1.0, -dn - 3.0) + std::pow(4.0 * x + 3.0, -dn - 3.0));
        return d3 / 720.0;
    };
    const std::uint64_t m = terms_needed(bound, 0.5 * cfg.tolerance, cfg.max_terms, "series_S");
    const double x = static_cast<double>(m);
    quad::CompensatedSum sum;
    const double integral =
        (std::pow(4.0 * x + 1.0, 1.0 - dn) + std::pow(4.0 * x + 3.0, 1.0 - dn)) / (4.0 * (dn - 1.0));
    sum.add(-df(x) / 12.0);
    sum.add(0.5 * f(x));
    sum.add(integral);
    for (std::uint64_t k = m; k-- > 0;) {
        sum.add(f(static_cast<double>(k)));
    }
    return sum.value();
}

double series_beta(unsigned s, const SeriesConfig& cfg) {
    if (s < 1) {
        throw std::invalid_argument("series_beta: s must be >= 1");
    }
    cfg.validate();
    const double ds = s;
    return alternating_sum([ds](double j) { return std::pow(2.0 * j + 1.0, -ds); }, 1.0, cfg, "series_beta");
}

double series_zeta(unsigned s, const SeriesConfig& cfg) {
    if (s < 2) {
        throw std::invalid_argument("series_zeta: s must be >= 2");
    }
    cfg.validate();
    const double ds = s;
    const double eta_to_zeta = 1.0 / (1.0 - std::ldexp(1.0, 1 - static_cast<int>(s)));
    const double eta =
        alternating_sum([&](double j) { return std::pow(j + 1.0, -ds); }, eta_to_zeta, cfg, "series_zeta");
    return eta * eta_to_zeta;
}

}  // namespace ek
