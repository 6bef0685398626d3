#ifndef EK_QUADRATURE_HPP
#define EK_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace ek::quad {

/// Nodes and weights of an interpolatory rule on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (open: every node is interior). n >= 1.
Rule gauss_legendre(unsigned n);

/// n-point Gauss-Lobatto rule (closed: includes both endpoints). n >= 2.
Rule gauss_lobatto(unsigned n);

/// panels + 1 equally spaced breakpoints on [a, b].
std::vector<double> uniform_breaks(unsigned panels, double a, double b);

/// Breakpoints on [0, 1] whose panel widths halve geometrically toward both
/// ends: levels panels per side, the innermost two being [1/4, 1/2] and
/// [1/2, 3/4], the outermost [0, 2^-levels] and its mirror.
std::vector<double> graded_breaks(unsigned levels);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + correction_; }

private:
    double sum_ = 0.0;
    double correction_ = 0.0;
};

/// Composite rule over consecutive breakpoints. Panel contributions are
/// accumulated in breakpoint order, so the result does not depend on how
/// the caller evaluates f.
double integrate(const std::function<double(double)>& f, std::span<const double> breaks,
                 const Rule& rule);

}  // namespace ek::quad

#endif  // EK_QUADRATURE_HPP
