#ifndef EK_EULER_BERNOULLI_HPP
#define EK_EULER_BERNOULLI_HPP

#include "ek/poly.hpp"
#include "ek/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ek {

/// Euler polynomial E_n(x), built from
///   E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x).
/// Results are cached process-wide; the cache is safe for concurrent callers
/// and returned references stay valid for the life of the process.
const Poly& euler_poly(unsigned n);

/// Bernoulli number B_n from sum_{j=0}^{m} C(m+1,j) B_j = 0, B_0 = 1
/// (so B_1 = -1/2). Cached like euler_poly.
const Rational& bernoulli(unsigned n);

/// Euler number E_n = 2^n E_n(1/2). Only even n is accepted; odd n throws
/// std::invalid_argument.
Rational euler_number(unsigned n);

/// Outcome of one exact identity checked over an index range.
struct IdentityCheck {
    std::string name;
    unsigned first = 0;
    unsigned last = 0;
    bool pass = false;
    /// First failing index, when pass is false.
    std::string detail;
};

/// Evaluates holds(n) for n in [first, last], stopping at the first failure.
IdentityCheck check_over_range(std::string name, unsigned first, unsigned last,
                               const std::function<bool(unsigned)>& holds);

/// Derivative, reflection, Bernoulli link and the vanishing/antisymmetry
/// identities of the Euler polynomials, each over its standard index range.
std::vector<IdentityCheck> euler_identity_suite();

}  // namespace ek

#endif  // EK_EULER_BERNOULLI_HPP
