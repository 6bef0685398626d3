#ifndef EK_BIVAR_POLY_HPP
#define EK_BIVAR_POLY_HPP

#include "ek/poly.hpp"
#include "ek/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace ek {

enum class Var { U, V };

constexpr Var other(Var v) { return v == Var::U ? Var::V : Var::U; }

/// The affine form u_coeff*u + v_coeff*v + constant.
struct Affine {
    Rational u_coeff;
    Rational v_coeff;
    Rational constant;

    static Affine u() { return {1, 0, 0}; }
    static Affine v() { return {0, 1, 0}; }
    static Affine of(Var var) { return var == Var::U ? u() : v(); }
};

/// Polynomial in (u, v) with exact rational coefficients. Only nonzero terms
/// are stored, keyed by the exponent pair (i, j) of u^i v^j.
class BivarPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;
    using Terms = std::map<Exponents, Rational>;

    BivarPoly() = default;
    explicit BivarPoly(Terms terms);

    static BivarPoly constant(const Rational& c);
    static BivarPoly monomial(unsigned i, unsigned j, const Rational& c = 1);
    /// Lifts a univariate polynomial into the given variable.
    static BivarPoly from_poly(const Poly& p, Var var);
    static BivarPoly from_affine(const Affine& a);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coeff(unsigned i, unsigned j) const;
    /// Highest exponent of var; -1 for the zero polynomial.
    int degree(Var var) const;
    int total_degree() const;

    Rational operator()(const Rational& u, const Rational& v) const;

    BivarPoly derivative(Var var) const;
    /// P with dP/dvar = *this and no var-free terms added.
    BivarPoly antiderivative(Var var) const;

    /// p(first(u,v), second(u,v)).
    BivarPoly compose(const Affine& first, const Affine& second) const;
    /// Replaces var by an affine form in the new (u, v).
    BivarPoly substitute(Var var, const Affine& value) const;

    /// (i, j) -> (j, i).
    BivarPoly swapped() const;

    /// Converts to a univariate polynomial in var; throws std::domain_error
    /// when the other variable still appears.
    Poly to_poly(Var var) const;
    /// p(x, x).
    Poly diagonal() const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    BivarPoly& operator*=(const Rational& c);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
    friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

    /// Graded lexicographic, u before v: "1/4*u^2*v - 1/2*v".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    Terms terms_;
};

/// p(a_u*u + a_v*v + c) expanded into a bivariate polynomial.
BivarPoly poly_compose_affine(const Poly& p, const Affine& arg);

/// Antiderivative of p in var (zero constant of integration).
BivarPoly bivar_antiderivative(const BivarPoly& p, Var var);

/// Substitutes var := scale*other + shift; the result depends only on the
/// other variable.
BivarPoly bivar_eval_substitute(const BivarPoly& p, Var var, const Rational& scale,
                                const Rational& shift);

}  // namespace ek

#endif  // EK_BIVAR_POLY_HPP
