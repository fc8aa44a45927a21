#pragma once

/**
 * @file counting.hpp
 * @brief Moebius-sum coprime counting and the bivariate generating
 *        functions of the two open halves of F_m.
 *
 * Each quantity has two independent routes: direct enumeration, and the
 * Moebius closed form. The closed forms for the halves of F_m are rational
 * functions whose bracketed factors are exact polynomials; they are expanded
 * here as truncated formal power series over a box strictly larger than the
 * true support, and the overhang is required to vanish.
 */

#include <vector>

#include "polynomial.hpp"

namespace farey {

/// Positive divisors of n, ascending.
inline std::vector<integer> divisors(integer n) {
    if (n < 1) throw std::invalid_argument("divisors of a non-positive integer");
    std::vector<integer> small, large;
    for (integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// |{j in [lo, hi] : gcd(i, j) = 1}| by the Moebius sum over d | i.
inline integer coprime_count(integer i, integer lo, integer hi) {
    if (i < 1) throw std::invalid_argument("coprime_count needs i >= 1");
    if (lo > hi + 1) throw std::invalid_argument("coprime_count interval must have lo <= hi + 1");
    integer total = 0;
    for (integer d : divisors(i)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        total += mu * (floor_div(hi, d) - floor_div(lo - 1, d));
    }
    return total;
}

/// sum_{j in [lo, hi], gcd(i, j) = 1} y^j via the Moebius closed form; each
/// (y^{d*ceil(lo/d)} - y^{d*(floor(hi/d)+1)}) / (1 - y^d) is summed as a
/// finite geometric progression.
inline UnivarPoly coprime_powersum(integer i, integer lo, integer hi) {
    if (i < 1) throw std::invalid_argument("coprime_powersum needs i >= 1");
    if (lo < 1 || lo > hi + 1)
        throw std::invalid_argument("coprime_powersum needs 1 <= lo <= hi + 1");
    UnivarPoly out;
    for (integer d : divisors(i)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        const integer first = d * ceil_div(lo, d);
        const integer stop = d * (floor_div(hi, d) + 1);
        for (integer e = first; e < stop; e += d) out.add_term(e, mu);
    }
    return out;
}

enum class GfMethod { enumerate, closed_form };

namespace detail {

inline BivarPoly gf_enumerate(Order m, bool upper) {
    BivarPoly out;
    const integer mv = m.value();
    for (integer k = 1; k <= mv; ++k)
        for (integer h = 1; h < k; ++h) {
            if (2 * h == k || (2 * h < k) == upper) continue;
            if (std::gcd(h, k) == 1) out.add_term({h, k}, 1);
        }
    return out;
}

/**
 * Closed forms. With C = ceil(m/(2d)) and L = floor(m/d), the lower half is
 *
 *   sum_d mu(d) y^d/(1-y^d) [ (x^d y^2d - x^dC y^2dC)/(1 - x^d y^2d)
 *                             - (x^d - x^dC)/(1 - x^d) y^dL ]
 *
 * and the upper half replaces y^d/(1-y^d) by x^d y^d/(1 - x^d y^d) and the
 * second numerator by x^{d(L-C+1)} - x^{dL}; d runs over [1, ceil(m/2) - 1].
 */
inline BivarPoly gf_closed_form(Order m, bool upper) {
    const integer mv = m.value();
    const integer top_d = ceil_div(mv, 2) - 1;
    const integer cap_x = upper ? mv - 1 : top_d;
    const integer cap_y = mv;
    // Working box; terms of the finished sum above (cap_x, cap_y) must cancel.
    const integer box_x = 2 * cap_x + 2;
    const integer box_y = 2 * cap_y + 2;
    auto mono = [](integer dx, integer dy) { return BivarPoly::monomial(dx, dy); };
    auto geom = [&](integer dx, integer dy) { return BivarPoly::geometric(dx, dy, box_x, box_y); };

    BivarPoly total;
    for (integer d = 1; d <= top_d; ++d) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const integer c = ceil_div(mv, 2 * d);
        const integer l = mv / d;

        BivarPoly diagonal = (mono(d, 2 * d) - mono(d * c, 2 * d * c))
                                 .truncated_mul(geom(d, 2 * d), box_x, box_y);
        BivarPoly x_run = upper ? mono(d * (l - c + 1), 0) - mono(d * l, 0)
                                : mono(d, 0) - mono(d * c, 0);
        BivarPoly edge = x_run.truncated_mul(geom(d, 0), box_x, box_y)
                             .truncated_mul(mono(0, d * l), box_x, box_y);
        BivarPoly bracket = diagonal - edge;

        BivarPoly prefactor = upper ? mono(d, d).truncated_mul(geom(d, d), box_x, box_y)
                                    : mono(0, d).truncated_mul(geom(0, d), box_x, box_y);
        total += prefactor.truncated_mul(bracket, box_x, box_y).scaled(mu);
    }
    for (auto& [mnm, coeff] : total.terms())
        if (mnm.dx > cap_x || mnm.dy > cap_y)
            throw std::logic_error("closed form left a term outside its degree caps");
    return total;
}

}  // namespace detail

/// sum of x^h y^k over h/k in F_m with 0/1 < h/k < 1/2.
inline BivarPoly gf_lower(Order m, GfMethod method) {
    return method == GfMethod::enumerate ? detail::gf_enumerate(m, false)
                                         : detail::gf_closed_form(m, false);
}

/// sum of x^h y^k over h/k in F_m with 1/2 < h/k < 1/1.
inline BivarPoly gf_upper(Order m, GfMethod method) {
    return method == GfMethod::enumerate ? detail::gf_enumerate(m, true)
                                         : detail::gf_closed_form(m, true);
}

/// Maps each term x^h y^k to x^{k-h} y^k (the dual h/k -> (k-h)/k on exponents).
inline BivarPoly dual_exponents(const BivarPoly& p) {
    BivarPoly out;
    for (auto& [mnm, coeff] : p.terms()) {
        if (mnm.dx > mnm.dy) throw std::invalid_argument("x-degree exceeds y-degree");
        out.add_term({mnm.dy - mnm.dx, mnm.dy}, coeff);
    }
    return out;
}

}  // namespace farey
