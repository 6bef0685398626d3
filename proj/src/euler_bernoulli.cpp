#include "ek/euler_bernoulli.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace ek {

namespace {

/// Append-only table grown on demand. std::deque keeps references to existing
/// entries valid while new ones are appended.
template <typename T>
class GrowingTable {
public:
    using Builder = std::function<T(const std::deque<T>&, unsigned)>;

    explicit GrowingTable(Builder build) : build_(std::move(build)) {}

    const T& get(unsigned n) {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size()) {
                return values_[n];
            }
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= n) {
            values_.push_back(build_(values_, static_cast<unsigned>(values_.size())));
        }
        return values_[n];
    }

private:
    Builder build_;
    std::shared_mutex mutex_;
    std::deque<T> values_;
};

GrowingTable<Poly>& euler_table() {
    static GrowingTable<Poly> table([](const std::deque<Poly>& prev, unsigned n) {
        Poly sum;
        for (unsigned k = 0; k < n; ++k) {
            sum += prev[k] * Rational(binomial(n, k));
        }
        return Poly::monomial(n) - sum * Rational(1, 2);
    });
    return table;
}

GrowingTable<Rational>& bernoulli_table() {
    static GrowingTable<Rational> table([](const std::deque<Rational>& prev, unsigned m) {
        if (m == 0) {
            return Rational(1);
        }
        Rational sum;
        for (unsigned j = 0; j < m; ++j) {
            sum += prev[j] * Rational(binomial(m + 1, j));
        }
        return -sum / Rational(m + 1);
    });
    return table;
}

}  // namespace

IdentityCheck check_over_range(std::string name, unsigned first, unsigned last,
                               const std::function<bool(unsigned)>& holds) {
    IdentityCheck check{std::move(name), first, last, true, {}};
    for (unsigned n = first; n <= last; ++n) {
        if (!holds(n)) {
            check.pass = false;
            check.detail = "fails at n=" + std::to_string(n);
            break;
        }
    }
    return check;
}

const Poly& euler_poly(unsigned n) { return euler_table().get(n); }

const Rational& bernoulli(unsigned n) { return bernoulli_table().get(n); }

Rational euler_number(unsigned n) {
    if (n % 2 != 0) {
        throw std::invalid_argument("euler_number: index must be even, got " + std::to_string(n));
    }
    return Rational::pow2(n) * euler_poly(n)(Rational(1, 2));
}

std::vector<IdentityCheck> euler_identity_suite() {
    std::vector<IdentityCheck> out;

    out.push_back(check_over_range("derivative: E_n' = n E_{n-1}", 1, 24, [](unsigned n) {
        return euler_poly(n).derivative() == euler_poly(n - 1) * Rational(n);
    }));

    out.push_back(check_over_range("reflection: E_n(1-x) = (-1)^n E_n(x)", 0, 24, [](unsigned n) {
        const Poly& e = euler_poly(n);
        return e.compose_affine(-1, 1) == (n % 2 == 0 ? e : -e);
    }));

    out.push_back(check_over_range("odd from even: E_{2n-1} = (1/2n) d/du E_{2n}", 1, 12, [](unsigned n) {
        return euler_poly(2 * n - 1) == euler_poly(2 * n).derivative() * Rational(1, 2 * n);
    }));

    out.push_back(check_over_range("Bernoulli link: E_{2n-1}(0) = -(2/2n)(2^{2n}-1) B_{2n}", 1, 12, [](unsigned n) {
        const Rational rhs = -Rational(2, 2 * n) * (Rational::pow2(2 * n) - 1) * bernoulli(2 * n);
        return euler_poly(2 * n - 1)(0) == rhs;
    }));

    out.push_back(check_over_range("antisymmetry: E_{2n+1}((1-v)/2) + E_{2n+1}((1+v)/2) = 0", 0, 11, [](unsigned n) {
        const Poly& e = euler_poly(2 * n + 1);
        const Poly sum = e.compose_affine(Rational(-1, 2), Rational(1, 2)) +
                         e.compose_affine(Rational(1, 2), Rational(1, 2));
        return sum.is_zero();
    }));

    out.push_back(check_over_range("zeros: E_{2n}(0) = E_{2n}(1) = 0", 1, 12, [](unsigned n) {
        const Poly& e = euler_poly(2 * n);
        return e(0).is_zero() && e(1).is_zero();
    }));

    return out;
}

}  // namespace ek
