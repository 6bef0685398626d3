#include "ek/kernel.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace ek {

std::string to_string(Split split) { return split == Split::Diagonal ? "diagonal" : "antidiagonal"; }

PiecewiseKernel::PiecewiseKernel(unsigned order, Split split, BivarPoly branch_le, BivarPoly branch_ge)
    : order_(order), split_(split), branch_le_(std::move(branch_le)), branch_ge_(std::move(branch_ge)) {
    if (order == 0) {
        throw std::invalid_argument("PiecewiseKernel: order must be >= 1");
    }
    if (split != split_for_order(order)) {
        throw std::invalid_argument("PiecewiseKernel: split does not match parity of order " +
                                    std::to_string(order));
    }
}

std::string PiecewiseKernel::split_line() const { return split_ == Split::Diagonal ? "u = v" : "u + v = 1"; }

Rational closed_form_prefactor(unsigned order) {
    if (order == 0) {
        throw std::invalid_argument("closed_form_prefactor: order must be >= 1");
    }
    const unsigned m = order / 2;
    const Rational sign = m % 2 == 0 ? 1 : -1;
    if (order % 2 == 0) {
        return sign * Rational::pow2(2L * m - 2) / Rational(factorial(2 * m - 1));
    }
    return sign * Rational::pow2(2L * m - 1) / Rational(factorial(2 * m));
}

namespace {

PiecewiseKernel build_closed_form(unsigned n) {
    const Rational c = closed_form_prefactor(n);
    const Rational half(1, 2);
    const unsigned m = n / 2;
    if (n % 2 == 0) {
        // E_{2m-1}((u+v)/2) + E_{2m-1}(|u-v|/2)
        const Poly& e = euler_poly(2 * m - 1);
        const BivarPoly sum = poly_compose_affine(e, {half, half, 0});
        const BivarPoly u_minus_v = poly_compose_affine(e, {half, -half, 0});
        const BivarPoly v_minus_u = poly_compose_affine(e, {-half, half, 0});
        return {n, Split::Diagonal, (sum + v_minus_u) * c, (sum + u_minus_v) * c};
    }
    // Below the line: E_{2m}((1-u+v)/2) + E_{2m}((1-u-v)/2)
    // Above the line: E_{2m}((1-u+v)/2) - E_{2m}((u+v-1)/2)
    const Poly& e = euler_poly(2 * m);
    const BivarPoly shifted = poly_compose_affine(e, {-half, half, half});
    const BivarPoly below = poly_compose_affine(e, {-half, -half, half});
    const BivarPoly above = poly_compose_affine(e, {half, half, -half});
    return {n, Split::AntiDiagonal, (shifted + below) * c, (shifted - above) * c};
}

/// int_{lo}^{hi} piece(w, v) dw where the bounds are affine in the outer (u, v).
BivarPoly integrate_inner(const BivarPoly& piece, const Affine& lo, const Affine& hi) {
    const BivarPoly anti = piece.antiderivative(Var::U);
    return anti.substitute(Var::U, hi) - anti.substitute(Var::U, lo);
}

}  // namespace

const PiecewiseKernel& closed_form(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("closed_form: order must be >= 1");
    }
    static std::mutex mutex;
    static std::deque<PiecewiseKernel> cache;  // cache[k] holds order k + 1
    std::lock_guard lock(mutex);
    while (cache.size() < n) {
        cache.push_back(build_closed_form(static_cast<unsigned>(cache.size()) + 1));
    }
    return cache[n - 1];
}

PiecewiseKernel recurrence_step(const PiecewiseKernel& k) {
    // The next kernel is int_0^{1-u} K(w, v) dw. The inner kernel switches
    // pieces at a breakpoint w* that depends on v; whether w* falls inside
    // [0, 1-u] decides the outer piece, which is why the split line flips.
    const Affine zero{0, 0, 0};
    const Affine one_minus_u{-1, 0, 1};
    const BivarPoly& le = k.branch_le();
    const BivarPoly& ge = k.branch_ge();

    if (k.split() == Split::Diagonal) {
        // Inner breakpoint w* = v (le for w <= v, ge for w >= v).
        //   u + v <= 1: v lies in [0, 1-u]; integrate le on [0, v], ge on [v, 1-u].
        //   u + v >= 1: the whole range sits below v; integrate le on [0, 1-u].
        const Affine at_v = Affine::v();
        BivarPoly below = integrate_inner(le, zero, at_v) + integrate_inner(ge, at_v, one_minus_u);
        BivarPoly above = integrate_inner(le, zero, one_minus_u);
        return {k.order() + 1, Split::AntiDiagonal, std::move(below), std::move(above)};
    }

    // Inner breakpoint w* = 1 - v (le for w <= 1-v, ge for w >= 1-v).
    //   u <= v: 1-v lies in [0, 1-u]; integrate le on [0, 1-v], ge on [1-v, 1-u].
    //   u >= v: the whole range sits below 1-v; integrate le on [0, 1-u].
    const Affine one_minus_v{0, -1, 1};
    BivarPoly below = integrate_inner(le, zero, one_minus_v) + integrate_inner(ge, one_minus_v, one_minus_u);
    BivarPoly above = integrate_inner(le, zero, one_minus_u);
    return {k.order() + 1, Split::Diagonal, std::move(below), std::move(above)};
}

Rational eval(const PiecewiseKernel& k, const Rational& u, const Rational& v) {
    const Rational zero;
    const Rational one(1);
    if (u < zero || u > one || v < zero || v > one) {
        throw std::domain_error("eval: (u, v) must lie in [0,1]^2, got (" + u.to_string() + ", " +
                                v.to_string() + ")");
    }
    const Rational side = k.split() == Split::Diagonal ? u - v : u + v - one;
    if (side.sign() < 0) {
        return k.branch_le()(u, v);
    }
    if (side.sign() > 0) {
        return k.branch_ge()(u, v);
    }
    return (k.branch_le()(u, v) + k.branch_ge()(u, v)) / Rational(2);
}

Rational trace(const PiecewiseKernel& k) {
    if (k.split() == Split::Diagonal) {
        return k.branch_le().diagonal().integrate(0, 1);
    }
    // The diagonal crosses u + v = 1 at u = 1/2.
    const Rational half(1, 2);
    return k.branch_le().diagonal().integrate(0, half) + k.branch_ge().diagonal().integrate(half, 1);
}

Poly diagonal(const PiecewiseKernel& k) {
    if (k.split() != Split::Diagonal) {
        throw std::invalid_argument("diagonal: kernel of order " + std::to_string(k.order()) +
                                    " is piecewise along the diagonal");
    }
    return k.branch_le().diagonal();
}

bool is_symmetric(const PiecewiseKernel& k) {
    if (k.split() == Split::Diagonal) {
        return k.branch_le().swapped() == k.branch_ge();
    }
    return k.branch_le().swapped() == k.branch_le() && k.branch_ge().swapped() == k.branch_ge();
}

bool is_continuous(const PiecewiseKernel& k) {
    const Affine line = k.split() == Split::Diagonal ? Affine::u() : Affine{-1, 0, 1};
    return k.branch_le().substitute(Var::V, line) == k.branch_ge().substitute(Var::V, line);
}

std::vector<IdentityCheck> kernel_identity_suite() {
    std::vector<IdentityCheck> out;

    out.push_back(check_over_range("kernel diagonal: K_{2n}(u,u) = c_{2n} [E_{2n-1}(u) + E_{2n-1}(0)]", 1, 6,
                                   [](unsigned n) {
        const Poly& e = euler_poly(2 * n - 1);
        const Poly expected = (e + Poly::constant(e(0))) * closed_form_prefactor(2 * n);
        return diagonal(closed_form(2 * n)) == expected;
    }));

    out.push_back(check_over_range(
        "constant sum: K_{2n+1}(u,u) + K_{2n+1}(1-u,1-u) = (-1)^n 2^{2n}/(2n)! E_{2n}(1/2)", 0, 6, [](unsigned n) {
        const PiecewiseKernel& k = closed_form(2 * n + 1);
        // For u <= 1/2 the point (u,u) is below the line and (1-u,1-u) above it.
        const Poly lhs = k.branch_le().diagonal() + k.branch_ge().diagonal().compose_affine(-1, 1);
        const Rational sign = n % 2 == 0 ? 1 : -1;
        const Rational rhs =
            sign * Rational::pow2(2L * n) / Rational(factorial(2 * n)) * euler_poly(2 * n)(Rational(1, 2));
        return lhs == Poly::constant(rhs);
    }));

    out.push_back(check_over_range(
        "difference: K_{2n}(u,u) - K_{2n}(1-u,1-u) = (-1)^n 2^{2n-1}/(2n)! E_{2n}'(u)", 1, 6, [](unsigned n) {
        const Poly d = diagonal(closed_form(2 * n));
        const Rational sign = n % 2 == 0 ? 1 : -1;
        const Rational c = sign * Rational::pow2(2L * n - 1) / Rational(factorial(2 * n));
        return d - d.compose_affine(-1, 1) == euler_poly(2 * n).derivative() * c;
    }));

    out.push_back(check_over_range("symmetry: K_n(u,v) = K_n(v,u)", 1, 10,
                                   [](unsigned n) { return is_symmetric(closed_form(n)); }));

    out.push_back(check_over_range("continuity across the split line", 2, 10,
                                   [](unsigned n) { return is_continuous(closed_form(n)); }));

    return out;
}

}  // namespace ek
