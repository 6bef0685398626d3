#ifndef EK_RATIONAL_HPP
#define EK_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ek {

/// Exact fraction over arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator, so two values are
/// equal exactly when their numerators and denominators are.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value)  // NOLINT(google-explicit-constructor)
        : value_(std::is_signed_v<T> ? mpz_class(static_cast<long>(value))
                                     : mpz_class(static_cast<unsigned long>(value))) {}
    Rational(const mpz_class& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// num/den; throws std::domain_error when den is zero.
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// 2^exponent for any signed exponent.
    static Rational pow2(long exponent);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Nearest-below double as produced by mpq_get_d (truncation toward zero,
    /// so at most one ulp from the exact value).
    double to_double() const { return value_.get_d(); }

    /// "p/q", or just "p" when q == 1.
    std::string to_string() const;

    Rational pow(unsigned exponent) const;
    Rational abs() const;
    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// n! as an exact integer.
mpz_class factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned n, unsigned k);

}  // namespace ek

#endif  // EK_RATIONAL_HPP
