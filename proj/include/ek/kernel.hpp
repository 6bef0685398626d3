#ifndef EK_KERNEL_HPP
#define EK_KERNEL_HPP

#include "ek/bivar_poly.hpp"
#include "ek/euler_bernoulli.hpp"
#include "ek/rational.hpp"

#include <string>
#include <vector>

namespace ek {

/// Line separating the two polynomial pieces of a kernel.
enum class Split {
    Diagonal,      ///< u = v; even orders
    AntiDiagonal,  ///< u + v = 1; odd orders
};

std::string to_string(Split split);

/// Kernel K_n(u, v) of the n-th power of (Tf)(u) = int_0^{1-u} f(v) dv on
/// [0,1]^2, as two polynomial pieces.
///
/// branch_le holds where the split expression (u - v for Diagonal, u + v - 1
/// for AntiDiagonal) is <= 0, branch_ge where it is >= 0. On the line itself
/// the kernel takes the average of both pieces (step function with
/// theta(0) = 1/2).
class PiecewiseKernel {
public:
    /// Throws std::invalid_argument when order is 0 or the split does not
    /// match the order's parity.
    PiecewiseKernel(unsigned order, Split split, BivarPoly branch_le, BivarPoly branch_ge);

    unsigned order() const { return order_; }
    Split split() const { return split_; }
    const BivarPoly& branch_le() const { return branch_le_; }
    const BivarPoly& branch_ge() const { return branch_ge_; }

    /// Human-readable split line, "u = v" or "u + v = 1".
    std::string split_line() const;

    friend bool operator==(const PiecewiseKernel& a, const PiecewiseKernel& b) = default;

private:
    unsigned order_;
    Split split_;
    BivarPoly branch_le_;
    BivarPoly branch_ge_;
};

constexpr Split split_for_order(unsigned order) {
    return order % 2 == 0 ? Split::Diagonal : Split::AntiDiagonal;
}

/// Prefactor of the Euler-polynomial closed form:
///   order 2m:   (-1)^m 2^{2m-2} / (2m-1)!
///   order 2m+1: (-1)^m 2^{2m-1} / (2m)!
Rational closed_form_prefactor(unsigned order);

/// K_n in closed form from the Euler polynomials. Cached; n = 0 throws
/// std::invalid_argument.
const PiecewiseKernel& closed_form(unsigned n);

/// K_{n+1}(u, v) = int_0^{1-u} K_n(w, v) dw by exact piecewise integration.
PiecewiseKernel recurrence_step(const PiecewiseKernel& k);

/// K(u, v) with theta(0) = 1/2 on the split line. Throws std::domain_error
/// outside [0,1]^2.
Rational eval(const PiecewiseKernel& k, const Rational& u, const Rational& v);

/// int_0^1 K(u, u) du.
Rational trace(const PiecewiseKernel& k);

/// K(u, u) as a polynomial in u. Only defined for Diagonal kernels, where both
/// pieces agree on the diagonal; throws std::invalid_argument otherwise.
Poly diagonal(const PiecewiseKernel& k);

/// K(u, v) == K(v, u) as a polynomial identity per piece.
bool is_symmetric(const PiecewiseKernel& k);

/// The two pieces agree on the split line (fails for order 1 by design).
bool is_continuous(const PiecewiseKernel& k);

/// Diagonal-value, constant-sum and difference identities of the kernels,
/// together with symmetry (orders 1-10) and continuity (orders 2-10).
std::vector<IdentityCheck> kernel_identity_suite();

}  // namespace ek

#endif  // EK_KERNEL_HPP
