#include "ek/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ek::quad {

namespace {

/// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(unsigned n, double x) {
    double p0 = 1.0;
    double p1 = x;
    if (n == 0) {
        return {1.0, 0.0};
    }
    for (unsigned k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

Rule gauss_legendre(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("gauss_legendre: need at least one node");
    }
    Rule rule{std::vector<double>(n), std::vector<double>(n)};
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, d] = legendre(n, x);
            dp = d;
            const double dx = p / d;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        dp = legendre(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

Rule gauss_lobatto(unsigned n) {
    if (n < 2) {
        throw std::invalid_argument("gauss_lobatto: need at least two nodes");
    }
    const unsigned deg = n - 1;
    const double end_weight = 2.0 / (n * (n - 1.0));
    Rule rule{std::vector<double>(n), std::vector<double>(n)};
    rule.nodes.front() = -1.0;
    rule.nodes.back() = 1.0;
    rule.weights.front() = end_weight;
    rule.weights.back() = end_weight;
    // Interior nodes are the roots of P'_{n-1}.
    for (unsigned i = 1; i <= (n - 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * i / deg);
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(deg, x);
            const double d2p = (2.0 * x * dp - deg * (deg + 1.0) * p) / (1.0 - x * x);
            const double dx = dp / d2p;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double p = legendre(deg, x).first;
        const double w = end_weight / (p * p);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        const double p = legendre(deg, 0.0).first;
        rule.nodes[n / 2] = 0.0;
        rule.weights[n / 2] = end_weight / (p * p);
    }
    return rule;
}

std::vector<double> uniform_breaks(unsigned panels, double a, double b) {
    if (panels == 0) {
        throw std::invalid_argument("uniform_breaks: need at least one panel");
    }
    std::vector<double> out(panels + 1);
    for (unsigned i = 0; i <= panels; ++i) {
        out[i] = a + (b - a) * i / panels;
    }
    out.back() = b;
    return out;
}

std::vector<double> graded_breaks(unsigned levels) {
    if (levels == 0) {
        throw std::invalid_argument("graded_breaks: need at least one level");
    }
    std::vector<double> out;
    out.reserve(2 * levels + 1);
    out.push_back(0.0);
    for (unsigned k = levels; k >= 1; --k) {
        out.push_back(std::ldexp(1.0, -static_cast<int>(k)));
    }
    for (unsigned k = 2; k <= levels; ++k) {
        out.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(k)));
    }
    out.push_back(1.0);
    return out;
}

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        correction_ += (sum_ - t) + x;
    } else {
        correction_ += (x - t) + sum_;
    }
    sum_ = t;
}

double integrate(const std::function<double(double)>& f, std::span<const double> breaks,
                 const Rule& rule) {
    CompensatedSum total;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p];
        const double b = breaks[p + 1];
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        CompensatedSum panel;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            panel.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
        }
        total.add(half * panel.value());
    }
    return total.value();
}

}  // namespace ek::quad
