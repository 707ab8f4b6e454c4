#include "diskcover/power_series.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

using diskcover::PowerSeries;
using diskcover::Rational;

namespace {

// Independent oracles working on dense coefficient vectors, kept separate
// from the PowerSeries implementation.

std::vector<Rational> dense(const PowerSeries& s) {
    std::vector<Rational> v(s.order() + 1, Rational(0));
    for (const auto& [e, c] : s.coefficients())
        v[e] = c;
    return v;
}

std::vector<Rational> dense_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                std::size_t order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Solves a * b = 1 for b as a lower-triangular linear system.
std::vector<Rational> dense_inverse(const std::vector<Rational>& a) {
    std::vector<Rational> b(a.size(), Rational(0));
    b[0] = a[0].inverse();
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += a[k] * b[n - k];
        b[n] = -acc * b[0];
    }
    return b;
}

// log(a) by composing log(1+x) = x - x^2/2 + x^3/3 - ... with x = a - 1.
std::vector<Rational> dense_log(const std::vector<Rational>& a) {
    std::size_t order = a.size() - 1;
    std::vector<Rational> x = a;
    x[0] = Rational(0);
    std::vector<Rational> out(a.size(), Rational(0));
    std::vector<Rational> pow(a.size(), Rational(0));
    pow[0] = Rational(1);
    for (std::size_t k = 1; k <= order; ++k) {
        pow = dense_mul(pow, x, order);
        Rational sign(k % 2 == 1 ? 1 : -1);
        for (std::size_t e = 0; e <= order; ++e)
            out[e] += sign * pow[e] / Rational(static_cast<long long>(k));
    }
    return out;
}

PowerSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    PowerSeries s(order);
    for (int e = 0; e <= order; ++e)
        if (rng() % 3 != 0)
            s.set(e, Rational(num(rng), den(rng)));
    if (unit_constant)
        s.set(0, Rational(1));
    return s;
}

} // namespace

TEST_CASE("sin_half_series coefficients") {
    PowerSeries s = diskcover::sin_half_series(8);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(2) == Rational(-1, 24));
    CHECK(s.coeff(4) == Rational(1, 1920));
    CHECK(s.even_only());
    SECTION("signs alternate and odd exponents vanish") {
        PowerSeries t = diskcover::sin_half_series(30);
        int expected_sign = 1;
        for (int e = 0; e <= 30; ++e) {
            if (e % 2 == 1) {
                CHECK(t.coeff(e).is_zero());
            } else {
                Rational c = t.coeff(e);
                CHECK((expected_sign > 0 ? c > Rational(0) : c < Rational(0)));
                expected_sign = -expected_sign;
            }
        }
    }
}

TEST_CASE("series multiplication") {
    PowerSeries one = PowerSeries::one(6);
    CHECK(one * one == one);

    PowerSeries p(6), q(6);
    p.set(0, Rational(1));
    p.set(2, Rational(1));
    q.set(0, Rational(1));
    q.set(2, Rational(-1));
    PowerSeries expected(6);
    expected.set(0, Rational(1));
    expected.set(4, Rational(-1));
    CHECK(p * q == expected);

    SECTION("against the dense long-multiplication oracle") {
        PowerSeries s = diskcover::sin_half_series(8);
        PowerSeries inv = s.inverse();
        auto product = dense_mul(dense(s), dense(inv), 8);
        CHECK(product[0] == Rational(1));
        for (int e = 1; e <= 8; ++e)
            CHECK(product[e] == Rational(0));
        CHECK(s * inv == PowerSeries::one(8, true));
    }

    SECTION("truncation order is the minimum of operand orders") {
        CHECK((diskcover::sin_half_series(10) * diskcover::sin_half_series(6)).order() == 6);
    }
}

TEST_CASE("series inverse") {
    CHECK(PowerSeries::one(5).inverse() == PowerSeries::one(5));

    PowerSeries geo(6);
    geo.set(0, Rational(1));
    geo.set(2, Rational(-1));
    PowerSeries inv = geo.inverse();
    for (int e = 0; e <= 6; e += 2)
        CHECK(inv.coeff(e) == Rational(1));

    SECTION("inverse of sin(t/2)/(t/2), frozen from the triangular-solve oracle") {
        PowerSeries s = diskcover::sin_half_series(8);
        auto oracle = dense_inverse(dense(s));
        CHECK(oracle[2] == Rational(1, 24));
        CHECK(oracle[4] == Rational(7, 5760));
        CHECK(oracle[6] == Rational(31, 967680));
        PowerSeries inv2 = s.inverse();
        for (int e = 0; e <= 8; ++e)
            CHECK(inv2.coeff(e) == oracle[e]);
    }

    CHECK_THROWS_AS(PowerSeries(4).inverse(), diskcover::ZeroConstantTerm);
}

TEST_CASE("series exp and log") {
    CHECK(diskcover::exp(PowerSeries(5)) == PowerSeries::one(5));

    PowerSeries t2(8, true);
    t2.set(2, Rational(1));
    CHECK(diskcover::log(diskcover::exp(t2)) == t2);

    SECTION("log of sin(t/2)/(t/2) against the composition oracle") {
        PowerSeries s = diskcover::sin_half_series(10);
        auto oracle = dense_log(dense(s));
        CHECK(oracle[2] == Rational(-1, 24));
        CHECK(oracle[4] == Rational(-1, 2880));
        CHECK(oracle[6] == Rational(-1, 181440));
        PowerSeries l = diskcover::log(s);
        for (int e = 0; e <= 10; ++e)
            CHECK(l.coeff(e) == oracle[e]);
    }

    SECTION("round trips on random series") {
        std::mt19937 rng(11);
        for (int i = 0; i < 20; ++i) {
            PowerSeries a = random_series(rng, 12, true);
            CHECK(diskcover::exp(diskcover::log(a)) == a);
            PowerSeries b = random_series(rng, 12, false);
            b.set(0, Rational(0));
            CHECK(diskcover::log(diskcover::exp(b)) == b);
        }
    }

    CHECK_THROWS_AS(diskcover::exp(PowerSeries::one(3)), diskcover::BadConstantTerm);
    CHECK_THROWS_AS(diskcover::log(PowerSeries(3)), diskcover::BadConstantTerm);
}

TEST_CASE("ring laws at fixed truncation") {
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        PowerSeries a = random_series(rng, 9, false);
        PowerSeries b = random_series(rng, 9, false);
        PowerSeries c = random_series(rng, 9, false);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.coeff(0).is_zero())
            CHECK(a * a.inverse() == PowerSeries::one(9));
    }
}

TEST_CASE("parity flag is enforced and preserved") {
    PowerSeries s(6, true);
    CHECK_THROWS_AS(s.set(3, Rational(1)), std::invalid_argument);
    s.set(2, Rational(1, 2));
    CHECK((s * s).even_only());
    CHECK((s + s).even_only());
}

TEST_CASE("bernoulli numbers") {
    CHECK(diskcover::bernoulli(0) == Rational(1));
    CHECK(diskcover::bernoulli(1) == Rational(-1, 2));
    CHECK(diskcover::bernoulli(2) == Rational(1, 6));
    CHECK(diskcover::bernoulli(4) == Rational(-1, 30));
    CHECK(diskcover::bernoulli(12) == Rational(-691, 2730));
    for (int n = 3; n < 20; n += 2)
        CHECK(diskcover::bernoulli(n).is_zero());

    SECTION("cross-check of log-sine coefficients") {
        // [t^{2k}] log(sin(t/2)/(t/2)) = (-1)^k B_{2k} / (2k (2k)!).
        PowerSeries l = diskcover::log(diskcover::sin_half_series(20));
        for (int k = 1; k <= 10; ++k) {
            Rational sign(k % 2 == 0 ? 1 : -1);
            Rational expected = sign * diskcover::bernoulli(2 * k) /
                                Rational(diskcover::BigInt(2 * k) * diskcover::factorial(2 * k));
            CHECK(l.coeff(2 * k) == expected);
        }
    }
}
