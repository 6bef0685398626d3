#ifndef EK_ZETA_HPP
#define EK_ZETA_HPP

#include "ek/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ek {

/// rational_part * pi^pi_power, held exactly.
struct ExactConstant {
    Rational rational_part;
    unsigned pi_power = 0;

    /// Double rendering: the rational part is truncated to double (at most one
    /// ulp low), pi^k is formed in long double from std::numbers::pi, and the
    /// product is rounded once to double. Relative error stays within a few ulp.
    double numeric() const;

    /// "p/q*pi^k", "p/q*pi", or "p/q" when pi_power is 0.
    std::string to_string() const;

    friend bool operator==(const ExactConstant&, const ExactConstant&) = default;
};

enum class EndpointHandling {
    /// Gauss-Legendre nodes; the integrand is never evaluated at 0 or 1.
    OpenShifted,
    /// Gauss-Lobatto nodes including the endpoints, where the continuous
    /// extension of the integrand is used.
    LimitValue,
};

struct QuadratureConfig {
    unsigned panels = 16;
    unsigned nodes_per_panel = 20;
    EndpointHandling endpoint_handling = EndpointHandling::OpenShifted;

    /// Throws std::invalid_argument unless panels >= 1 and nodes_per_panel >= 2.
    void validate() const;
};

struct SeriesConfig {
    double tolerance = 1e-13;
    std::uint64_t max_terms = 100'000'000;

    void validate() const;
};

/// Raised when a series cannot certify its tolerance within max_terms.
class SeriesNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DeltaMethod {
    Trace,   ///< int_0^1 K_n(u,u) du from the closed-form kernel
    Closed,  ///< Euler-polynomial values at 0 (even n) or 1/2 (odd n)
};

/// Volume of the cyclic polytope {u_i > 0, u_i + u_{i+1} < 1}. n >= 2.
Rational delta(unsigned n, DeltaMethod method = DeltaMethod::Trace);

/// S(n) = sum over all integers k of (4k+1)^-n = (pi/2)^n delta_n. n >= 2.
ExactConstant s_value(unsigned n);

/// zeta(2n) = (-1)^{n+1} 2^{2n-1} / (2n)! B_{2n} pi^{2n}. n >= 1.
ExactConstant zeta_even(unsigned n);

/// S(2n+1) = (-1)^n / (2 (2n)!) (pi/2)^{2n+1} E_{2n} (Euler number). n = 0 gives
/// S(1) = pi/4, which sits outside the polytope-volume range n >= 2.
ExactConstant s_odd(unsigned n);

/// True when s_odd(n) corresponds to a polytope volume (2n + 1 >= 2).
constexpr bool s_odd_in_volume_range(unsigned n) { return n >= 1; }

/// zeta(2n+1) from the one-dimensional integral of E_{2n}(u) / sin(pi u) over
/// [0, 1] by composite Gauss quadrature on uniform panels. n >= 1.
double zeta_odd_quadrature(unsigned n, const QuadratureConfig& cfg = {});

/// zeta(2n+1) from the integral of ln tan(pi u / 2) K_{2n}(u,u) over [0, 1].
/// The logarithmic endpoint singularities are handled by panels that halve
/// toward both ends, 2 * cfg.panels levels per side (outermost width
/// 4^-panels), with interior Gauss-Legendre nodes. LimitValue is rejected
/// since the integrand has no finite endpoint value. n >= 1.
double zeta_odd_logtan(unsigned n, const QuadratureConfig& cfg = {});

/// Direct summation of S(n) = sum_k (4k+1)^-n. Even n adds an Euler-Maclaurin
/// tail whose remainder is bounded by its first omitted term; odd n is the
/// alternating Dirichlet beta series with averaged partial sums. n >= 2.
double series_S(unsigned n, const SeriesConfig& cfg = {});

/// Dirichlet beta(s) = sum_{j>=0} (-1)^j (2j+1)^-s, the same sum as S(s) for
/// odd s; also accepts s = 1 (pi/4). s >= 1.
double series_beta(unsigned s, const SeriesConfig& cfg = {});

/// zeta(s) = eta(s) / (1 - 2^{1-s}) with eta summed as an alternating series
/// using averaged partial sums. s >= 2.
double series_zeta(unsigned s, const SeriesConfig& cfg = {});

}  // namespace ek

#endif  // EK_ZETA_HPP
