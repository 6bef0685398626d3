#include "ek/poly.hpp"

#include <algorithm>

namespace ek {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::monomial(unsigned k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Poly::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

Rational Poly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (coeffs_.empty()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    }
    return Poly(std::move(out));
}

Rational Poly::integrate(const Rational& a, const Rational& b) const {
    const Poly anti = antiderivative();
    return anti(b) - anti(a);
}

Poly Poly::compose_affine(const Rational& scale, const Rational& shift) const {
    // Horner in polynomial form: acc = acc * (scale x + shift) + c_k.
    const Poly lin({shift, scale});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + Poly::constant(*it);
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    strip();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

void append_term(std::string& out, const Rational& coeff, const std::string& monomial) {
    const bool negative = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (out.empty()) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
        out += mag.to_string();
    } else if (mag == Rational(1)) {
        out += monomial;
    } else {
        out += mag.to_string() + "*" + monomial;
    }
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        std::string mono;
        if (k == 1) {
            mono = var;
        } else if (k > 1) {
            mono = var + "^" + std::to_string(k);
        }
        append_term(out, coeffs_[k], mono);
    }
    return out;
}

}  // namespace ek
