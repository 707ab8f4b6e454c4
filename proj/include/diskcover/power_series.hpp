#pragma once

#include "diskcover/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diskcover {

struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm() : std::domain_error("power series has zero constant term") {}
};

struct BadConstantTerm : std::domain_error {
    explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// Truncated formal power series in t with exact rational coefficients.
///
/// The coefficient map is sparse; an absent exponent is an exact zero.
/// Arithmetic truncates to the minimum of the operand orders and never
/// extends precision. The parity flag asserts support on even exponents
/// only and is maintained through every operation.
class PowerSeries {
public:
    explicit PowerSeries(int truncation_order, bool even_only = false)
        : order_(truncation_order), even_only_(even_only) {
        if (truncation_order < 0)
            throw std::invalid_argument("PowerSeries: negative truncation order");
    }

    static PowerSeries constant(const Rational& c, int order, bool even_only = false) {
        PowerSeries s(order, even_only);
        s.set(0, c);
        return s;
    }

    static PowerSeries one(int order, bool even_only = false) {
        return constant(Rational(1), order, even_only);
    }

    int order() const { return order_; }
    bool even_only() const { return even_only_; }
    const std::map<int, Rational>& coefficients() const { return coeff_; }

    Rational coeff(int exponent) const {
        auto it = coeff_.find(exponent);
        return it == coeff_.end() ? Rational(0) : it->second;
    }

    /// Stores a coefficient. Exponents beyond the truncation order are
    /// discarded; a nonzero odd-exponent coefficient violates the parity
    /// flag and is rejected.
    void set(int exponent, const Rational& value) {
        if (exponent < 0)
            throw std::invalid_argument("PowerSeries::set: negative exponent");
        if (exponent > order_)
            return;
        if (value.is_zero()) {
            coeff_.erase(exponent);
            return;
        }
        if (even_only_ && exponent % 2 != 0)
            throw std::invalid_argument("PowerSeries::set: odd exponent in even-parity series");
        coeff_[exponent] = value;
    }

    PowerSeries truncated(int new_order) const {
        PowerSeries s(new_order, even_only_);
        for (const auto& [e, c] : coeff_)
            s.set(e, c);
        return s;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.order_ == b.order_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.order_, b.order_), a.even_only_ && b.even_only_);
        for (const auto& [e, c] : a.coeff_)
            s.set(e, c);
        for (const auto& [e, c] : b.coeff_)
            s.set(e, s.coeff(e) + c);
        return s;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        return a + (-b);
    }

    PowerSeries operator-() const {
        PowerSeries s(order_, even_only_);
        for (const auto& [e, c] : coeff_)
            s.set(e, -c);
        return s;
    }

    /// Cauchy product truncated to the minimum operand order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries s(std::min(a.order_, b.order_), a.even_only_ && b.even_only_);
        for (const auto& [ea, ca] : a.coeff_) {
            if (ea > s.order_)
                break;
            for (const auto& [eb, cb] : b.coeff_) {
                int e = ea + eb;
                if (e > s.order_)
                    break;
                s.set(e, s.coeff(e) + ca * cb);
            }
        }
        return s;
    }

    friend PowerSeries operator*(const Rational& c, const PowerSeries& a) {
        PowerSeries s(a.order_, a.even_only_);
        for (const auto& [e, v] : a.coeff_)
            s.set(e, c * v);
        return s;
    }

    /// Multiplicative inverse up to truncation; requires a nonzero
    /// constant term.
    PowerSeries inverse() const {
        Rational a0 = coeff(0);
        if (a0.is_zero())
            throw ZeroConstantTerm();
        PowerSeries b(order_, even_only_);
        Rational inv0 = a0.inverse();
        b.set(0, inv0);
        for (int n = 1; n <= order_; ++n) {
            Rational acc(0);
            for (const auto& [k, ak] : coeff_) {
                if (k < 1)
                    continue;
                if (k > n)
                    break;
                acc += ak * b.coeff(n - k);
            }
            b.set(n, -inv0 * acc);
        }
        return b;
    }

private:
    int order_;
    bool even_only_;
    std::map<int, Rational> coeff_;
};

/// exp of a series with zero constant term, by the standard recursion
/// n b_n = sum_k k a_k b_{n-k}.
inline PowerSeries exp(const PowerSeries& a) {
    if (!a.coeff(0).is_zero())
        throw BadConstantTerm("series exp requires constant term 0");
    PowerSeries b(a.order(), a.even_only());
    b.set(0, Rational(1));
    for (int n = 1; n <= a.order(); ++n) {
        Rational acc(0);
        for (const auto& [k, ak] : a.coefficients()) {
            if (k < 1)
                continue;
            if (k > n)
                break;
            acc += Rational(k) * ak * b.coeff(n - k);
        }
        b.set(n, acc / Rational(n));
    }
    return b;
}

/// log of a series with constant term 1.
inline PowerSeries log(const PowerSeries& a) {
    if (a.coeff(0) != Rational(1))
        throw BadConstantTerm("series log requires constant term 1");
    PowerSeries c(a.order(), a.even_only());
    for (int n = 1; n <= a.order(); ++n) {
        Rational acc = Rational(n) * a.coeff(n);
        for (int k = 1; k < n; ++k) {
            Rational ck = c.coeff(k);
            if (!ck.is_zero())
                acc -= Rational(k) * ck * a.coeff(n - k);
        }
        c.set(n, acc / Rational(n));
    }
    return c;
}

/// Truncated series of sin(t/2)/(t/2): the coefficient of t^{2k} is
/// (-1)^k / (4^k (2k+1)!).
inline PowerSeries sin_half_series(int order) {
    PowerSeries s(order, true);
    BigInt four_pow = 1;
    for (int k = 0; 2 * k <= order; ++k) {
        BigInt den = four_pow * factorial(2 * k + 1);
        s.set(2 * k, Rational(k % 2 == 0 ? BigInt(1) : BigInt(-1), den));
        four_pow *= 4;
    }
    return s;
}

/// Bernoulli number B_n via sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1.
inline Rational bernoulli(int n) {
    if (n < 0)
        throw std::invalid_argument("bernoulli: negative index");
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -acc / Rational(m + 1);
    }
    return b[n];
}

} // namespace diskcover
