#include "ek/bivar_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ek {

BivarPoly::BivarPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(unsigned i, unsigned j, const Rational& c) {
    BivarPoly p;
    p.add_term({i, j}, c);
    return p;
}

BivarPoly BivarPoly::from_poly(const Poly& p, Var var) {
    BivarPoly out;
    const auto& c = p.coeffs();
    for (unsigned k = 0; k < c.size(); ++k) {
        out.add_term(var == Var::U ? Exponents{k, 0} : Exponents{0, k}, c[k]);
    }
    return out;
}

BivarPoly BivarPoly::from_affine(const Affine& a) {
    BivarPoly out;
    out.add_term({1, 0}, a.u_coeff);
    out.add_term({0, 1}, a.v_coeff);
    out.add_term({0, 0}, a.constant);
    return out;
}

void BivarPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational BivarPoly::coeff(unsigned i, unsigned j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational() : it->second;
}

int BivarPoly::degree(Var var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, static_cast<int>(var == Var::U ? e.first : e.second));
    }
    return d;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, static_cast<int>(e.first + e.second));
    }
    return d;
}

Rational BivarPoly::operator()(const Rational& u, const Rational& v) const {
    const int du = degree(Var::U);
    const int dv = degree(Var::V);
    std::vector<Rational> upow(std::max(du, 0) + 1, Rational(1));
    std::vector<Rational> vpow(std::max(dv, 0) + 1, Rational(1));
    for (std::size_t k = 1; k < upow.size(); ++k) upow[k] = upow[k - 1] * u;
    for (std::size_t k = 1; k < vpow.size(); ++k) vpow[k] = vpow[k - 1] * v;
    Rational acc;
    for (const auto& [e, c] : terms_) {
        acc += c * upow[e.first] * vpow[e.second];
    }
    return acc;
}

BivarPoly BivarPoly::derivative(Var var) const {
    BivarPoly out;
    for (const auto& [e, c] : terms_) {
        const unsigned k = var == Var::U ? e.first : e.second;
        if (k == 0) {
            continue;
        }
        const Exponents ne = var == Var::U ? Exponents{k - 1, e.second} : Exponents{e.first, k - 1};
        out.add_term(ne, c * Rational(k));
    }
    return out;
}

BivarPoly BivarPoly::antiderivative(Var var) const {
    BivarPoly out;
    for (const auto& [e, c] : terms_) {
        const unsigned k = var == Var::U ? e.first : e.second;
        const Exponents ne = var == Var::U ? Exponents{k + 1, e.second} : Exponents{e.first, k + 1};
        out.add_term(ne, c / Rational(k + 1));
    }
    return out;
}

namespace {

std::vector<BivarPoly> powers_of(const BivarPoly& base, int max_exp) {
    std::vector<BivarPoly> p;
    p.reserve(static_cast<std::size_t>(std::max(max_exp, 0)) + 1);
    p.push_back(BivarPoly::constant(1));
    for (int k = 1; k <= max_exp; ++k) {
        p.push_back(p.back() * base);
    }
    return p;
}

}  // namespace

BivarPoly BivarPoly::compose(const Affine& first, const Affine& second) const {
    const auto fp = powers_of(from_affine(first), degree(Var::U));
    const auto sp = powers_of(from_affine(second), degree(Var::V));
    BivarPoly out;
    for (const auto& [e, c] : terms_) {
        out += (fp[e.first] * sp[e.second]) * c;
    }
    return out;
}

BivarPoly BivarPoly::substitute(Var var, const Affine& value) const {
    return var == Var::U ? compose(value, Affine::v()) : compose(Affine::u(), value);
}

BivarPoly BivarPoly::swapped() const {
    Terms t;
    for (const auto& [e, c] : terms_) {
        t.emplace(Exponents{e.second, e.first}, c);
    }
    BivarPoly out;
    out.terms_ = std::move(t);
    return out;
}

Poly BivarPoly::to_poly(Var var) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(var), 0)) + 1);
    for (const auto& [e, coef] : terms_) {
        const unsigned keep = var == Var::U ? e.first : e.second;
        const unsigned drop = var == Var::U ? e.second : e.first;
        if (drop != 0) {
            throw std::domain_error("BivarPoly::to_poly: other variable still present");
        }
        c[keep] += coef;
    }
    return Poly(std::move(c));
}

Poly BivarPoly::diagonal() const { return substitute(Var::V, Affine::u()).to_poly(Var::U); }

BivarPoly BivarPoly::operator-() const {
    BivarPoly out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) {
        coef *= c;
    }
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    return out;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const unsigned da = a.first.first + a.first.second;
        const unsigned db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    auto power = [](const char* name, unsigned k) -> std::string {
        if (k == 0) return "";
        if (k == 1) return name;
        return std::string(name) + "^" + std::to_string(k);
    };
    std::string out;
    for (const auto& [e, c] : sorted) {
        std::string mono = power("u", e.first);
        const std::string vp = power("v", e.second);
        if (!vp.empty()) {
            mono += mono.empty() ? vp : "*" + vp;
        }
        append_term(out, c, mono);
    }
    return out;
}

BivarPoly poly_compose_affine(const Poly& p, const Affine& arg) {
    const BivarPoly lin = BivarPoly::from_affine(arg);
    BivarPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + BivarPoly::constant(*it);
    }
    return acc;
}

BivarPoly bivar_antiderivative(const BivarPoly& p, Var var) { return p.antiderivative(var); }

BivarPoly bivar_eval_substitute(const BivarPoly& p, Var var, const Rational& scale,
                                const Rational& shift) {
    Affine value{0, 0, shift};
    (other(var) == Var::U ? value.u_coeff : value.v_coeff) = scale;
    return p.substitute(var, value);
}

}  // namespace ek
