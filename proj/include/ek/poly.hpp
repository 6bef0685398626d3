#ifndef EK_POLY_HPP
#define EK_POLY_HPP

#include "ek/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ek {

/// Univariate polynomial with exact rational coefficients, stored in ascending
/// degree with trailing zeros stripped. The zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    /// x^k
    static Poly monomial(unsigned k, const Rational& c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k, zero beyond the degree.
    Rational coeff(unsigned k) const;

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// Exact integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const;

    /// p(scale * x + shift) as a univariate polynomial.
    Poly compose_affine(const Rational& scale, const Rational& shift) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Descending degree, e.g. "x^2 - x + 1/6".
    std::string to_string(const std::string& var = "x") const;

private:
    void strip();

    std::vector<Rational> coeffs_;
};

/// Helper for serializers: renders one signed term "c*var^k" into out,
/// handling the sign separator and unit coefficients.
void append_term(std::string& out, const Rational& coeff, const std::string& monomial);

}  // namespace ek

#endif  // EK_POLY_HPP
