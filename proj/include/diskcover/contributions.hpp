#pragma once

#include "diskcover/partitions.hpp"
#include "diskcover/power_series.hpp"
#include "diskcover/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace diskcover {

struct ZeroMaslovFactor : std::domain_error {
    ZeroMaslovFactor() : std::domain_error("Maslov factor m must be nonzero") {}
};

/// The generating series sum_g C(g,1) t^{2g}: the inverse of
/// sin(t/2)/(t/2), truncated at t^{2*max_g}.
inline PowerSeries gf_series(int max_g) {
    return sin_half_series(2 * max_g).inverse();
}

namespace detail {

/// Products m * alpha_g for 1 <= g <= max_g, which are independent of m:
/// m * alpha_g = -[t^{2g}] log(sin(t/2)/(t/2)).
inline std::map<int, Rational> weighted_alpha(int max_g) {
    PowerSeries l = log(sin_half_series(2 * max_g));
    std::map<int, Rational> out;
    for (int g = 1; g <= max_g; ++g)
        out[g] = -l.coeff(2 * g);
    return out;
}

} // namespace detail

/// The per-genus ghost weights alpha_g, normalized by the Maslov factor m
/// so that exp(sum m*alpha_g t^{2g}) inverts sin(t/2)/(t/2).
inline std::map<int, Rational> alpha_coefficients(int max_g, const Rational& m) {
    if (m.is_zero())
        throw ZeroMaslovFactor();
    auto out = detail::weighted_alpha(max_g);
    Rational inv_m = m.inverse();
    for (auto& [g, a] : out)
        a *= inv_m;
    return out;
}

/// The contribution C(g,h): zero for h > 1, and for h = 1 the sum over
/// closed-only ghost partitions of g of 1/|Aut| times the product of the
/// ghost weights m*alpha_{g_i}. C(0,1) = 1 (the smooth disk).
inline Rational contribution(int g, int h, const Rational& m) {
    if (g < 0 || h < 1)
        throw std::invalid_argument("contribution: need g >= 0, h >= 1");
    if (h > 1)
        return Rational(0);
    if (g == 0)
        return Rational(1);
    auto weights = detail::weighted_alpha(g);
    (void)m; // every term involves only the products m*alpha_g
    Rational total(0);
    for (const auto& lambda : enumerate_partitions(g, 1)) {
        if (!lambda.open.empty())
            continue;
        Rational term(1);
        for (int gi : lambda.closed)
            term *= weights.at(gi);
        total += term / Rational(static_cast<long long>(automorphism_order(lambda)));
    }
    return total;
}

/// The ordered-branch variant: sum over ordered compositions
/// g_1 + ... + g_r = g (g_i >= 1) of the products of ghost weights.
inline Rational contribution_ordered(int g, const Rational& m) {
    if (g < 1)
        throw std::invalid_argument("contribution_ordered: need g >= 1");
    auto weights = detail::weighted_alpha(g);
    (void)m;
    std::vector<Rational> by_genus(g + 1, Rational(0));
    by_genus[0] = Rational(1);
    for (int n = 1; n <= g; ++n)
        for (int k = 1; k <= n; ++k)
            by_genus[n] += weights.at(k) * by_genus[n - k];
    return by_genus[g];
}

/// Checks that the partition sum and the series inversion agree through
/// genus max_g, coefficient by coefficient, exactly.
inline bool verify_generating_function(int max_g, const Rational& m) {
    PowerSeries series = gf_series(max_g);
    for (int g = 0; g <= max_g; ++g)
        if (contribution(g, 1, m) != series.coeff(2 * g))
            return false;
    return true;
}

/// C(1,1): the single-ghost case, equal to the Maslov factor times the
/// genus-one ghost weight.
inline Rational special_case_11(const Rational& m) {
    return contribution(1, 1, m);
}

/// Immutable table of alpha and contribution values up to a genus bound.
struct ContributionTable {
    Rational maslov_factor;
    std::map<int, Rational> alpha;   // 1..max_genus
    std::map<int, Rational> contrib; // 0..max_genus
    int max_genus = 0;
};

inline ContributionTable build_table(int max_g, const Rational& m) {
    if (max_g < 1)
        throw std::invalid_argument("build_table: need max_g >= 1");
    ContributionTable t;
    t.maslov_factor = m;
    t.max_genus = max_g;
    t.alpha = alpha_coefficients(max_g, m);
    PowerSeries series = gf_series(max_g);
    for (int g = 0; g <= max_g; ++g)
        t.contrib[g] = series.coeff(2 * g);
    return t;
}

} // namespace diskcover
