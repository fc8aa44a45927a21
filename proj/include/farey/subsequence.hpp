#pragma once

/**
 * @file subsequence.hpp
 * @brief The subsequence F(B(2m), m) of F_2m: fractions h/k with
 *        k - m <= h <= m.
 *
 * Its left half (<= 1/2) and right half (>= 1/2) are each in monotone
 * bijection with F_m, which transfers the F_m neighbor formulas here.
 */

#include <algorithm>
#include <array>
#include <string_view>
#include <vector>

#include "classic.hpp"

namespace farey {

enum class HalfTag { left, right };

/// k <= 2m and k - m <= h <= m, on raw (not necessarily reduced) components.
constexpr bool fbm_admits(integer h, integer k, integer m) {
    return k >= 1 && h >= 0 && k <= 2 * m && k - m <= h && h <= m;
}

inline bool fbm_member(const Fraction& f, Order m) { return fbm_admits(f.h(), f.k(), m); }

/// Brute force: reduced h/k with k <= 2m and k - m <= h <= m, sorted.
inline std::vector<Fraction> fbm_oracle(Order m) {
    std::vector<Fraction> out;
    const integer mv = m.value();
    for (integer k = 1; k <= 2 * mv; ++k)
        for (integer h = std::max<integer>(0, k - mv); h <= std::min(k, mv); ++h)
            if (std::gcd(h, k) == 1) out.emplace_back(h, k);
    std::sort(out.begin(), out.end());
    return out;
}

/// One half of fbm_oracle(m); 1/2 belongs to both.
inline std::vector<Fraction> fbm_half(Order m, HalfTag half) {
    std::vector<Fraction> all = fbm_oracle(m);
    std::vector<Fraction> out;
    for (const Fraction& f : all)
        if (half == HalfTag::left ? f <= Fraction::half() : f >= Fraction::half()) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Monotone bijections
// ---------------------------------------------------------------------------

enum class MapId {
    dual_fm,          // F_m -> F_m,        h/k -> (k-h)/k
    left_to_fm,       // left -> F_m,       h/k -> h/(k-h)
    fm_to_left,       // F_m -> left,       h/k -> h/(k+h)
    right_to_fm,      // right -> F_m,      h/k -> (2h-k)/h
    fm_to_right,      // F_m -> right,      h/k -> k/(2k-h)
    left_to_fm_rev,   // left -> F_m,       h/k -> (k-2h)/(k-h)
    fm_to_left_rev,   // F_m -> left,       h/k -> (k-h)/(2k-h)
    right_to_fm_rev,  // right -> F_m,      h/k -> (k-h)/h
    fm_to_right_rev,  // F_m -> right,      h/k -> k/(k+h)
    dual_fbm,         // F(B(2m),m) -> F(B(2m),m), h/k -> (k-h)/k
};

/// Sequences a map can act on.
enum class Domain { fm, left, right, fbm };

struct MapInfo {
    MapId id;
    std::string_view name;  // CLI name
    Domain source;
    Domain target;
    bool order_reversing;
    MapId inverse;
};

inline constexpr std::array<MapInfo, 10> all_maps{{
    {MapId::dual_fm, "eq10", Domain::fm, Domain::fm, true, MapId::dual_fm},
    {MapId::left_to_fm, "eq11", Domain::left, Domain::fm, false, MapId::fm_to_left},
    {MapId::fm_to_left, "eq12", Domain::fm, Domain::left, false, MapId::left_to_fm},
    {MapId::right_to_fm_rev, "eq13", Domain::right, Domain::fm, true, MapId::fm_to_right_rev},
    {MapId::fm_to_right_rev, "eq14", Domain::fm, Domain::right, true, MapId::right_to_fm_rev},
    {MapId::left_to_fm_rev, "eq15", Domain::left, Domain::fm, true, MapId::fm_to_left_rev},
    {MapId::right_to_fm, "eq16", Domain::right, Domain::fm, false, MapId::fm_to_right},
    {MapId::fm_to_right, "eq20", Domain::fm, Domain::right, false, MapId::right_to_fm},
    {MapId::fm_to_left_rev, "eq21", Domain::fm, Domain::left, true, MapId::left_to_fm_rev},
    {MapId::dual_fbm, "dual_fbm", Domain::fbm, Domain::fbm, true, MapId::dual_fbm},
}};

inline const MapInfo& map_info(MapId id) {
    for (const MapInfo& info : all_maps)
        if (info.id == id) return info;
    throw std::logic_error("unknown map id");
}

inline MapId map_by_name(std::string_view name) {
    for (const MapInfo& info : all_maps)
        if (info.name == name) return info.id;
    throw std::invalid_argument("unknown map '" + std::string(name) + "'");
}

inline bool in_domain(const Fraction& f, Domain d, Order m) {
    switch (d) {
    case Domain::fm: return fm_member(f, m);
    case Domain::left: return fbm_member(f, m) && f <= Fraction::half();
    case Domain::right: return fbm_member(f, m) && f >= Fraction::half();
    case Domain::fbm: return fbm_member(f, m);
    }
    return false;
}

inline std::string_view domain_name(Domain d) {
    switch (d) {
    case Domain::fm: return "F_m";
    case Domain::left: return "the left halfsequence";
    case Domain::right: return "the right halfsequence";
    case Domain::fbm: return "F(B(2m),m)";
    }
    return "?";
}

/// Full source or target sequence of a map, ascending.
inline std::vector<Fraction> domain_sequence(Domain d, Order m) {
    switch (d) {
    case Domain::fm: return farey_oracle(m);
    case Domain::left: return fbm_half(m, HalfTag::left);
    case Domain::right: return fbm_half(m, HalfTag::right);
    case Domain::fbm: return fbm_oracle(m);
    }
    return {};
}

inline Fraction apply_map(MapId id, const Fraction& f, Order m) {
    const MapInfo& info = map_info(id);
    if (!in_domain(f, info.source, m))
        throw std::invalid_argument(to_string(f) + " is not in " +
                                    std::string(domain_name(info.source)) + " for m=" +
                                    std::to_string(m.value()));
    const integer h = f.h(), k = f.k();
    Fraction image;
    switch (id) {
    case MapId::dual_fm:
    case MapId::dual_fbm: image = Fraction(k - h, k); break;
    case MapId::left_to_fm: image = Fraction(h, k - h); break;
    case MapId::fm_to_left: image = Fraction(h, k + h); break;
    case MapId::right_to_fm: image = Fraction(2 * h - k, h); break;
    case MapId::fm_to_right: image = Fraction(k, 2 * k - h); break;
    case MapId::left_to_fm_rev: image = Fraction(k - 2 * h, k - h); break;
    case MapId::fm_to_left_rev: image = Fraction(k - h, 2 * k - h); break;
    case MapId::right_to_fm_rev: image = Fraction(k - h, h); break;
    case MapId::fm_to_right_rev: image = Fraction(k, k + h); break;
    }
    if (!in_domain(image, info.target, m))
        throw std::logic_error("map image " + to_string(image) + " left its target sequence");
    return image;
}

// ---------------------------------------------------------------------------
// Neighbors
// ---------------------------------------------------------------------------

namespace detail {

inline void require_fbm_member(const Fraction& f, Order m) {
    if (!fbm_member(f, m))
        throw std::invalid_argument(to_string(f) + " is not in F(B(" +
                                    std::to_string(2 * m.value()) + ")," +
                                    std::to_string(m.value()) + ")");
}

/// num_times / divisor, which must be exact.
inline integer exact_div(wide num_times, integer divisor) {
    if (num_times % divisor != 0) throw std::logic_error("neighbor formula is not integral");
    return narrow(num_times / divisor);
}

}  // namespace detail

/**
 * Predecessor in F(B(2m),m).
 *
 * Fractions <= 1/2 (1/2 included) use the left-half congruences, the rest
 * the right-half ones. The predecessor of 1/1 is m/(m+1); there k - h = 0,
 * so witness_b is set to the numerator of the F_m image, 1.
 */
inline NeighborReport fbm_pred(const Fraction& f, Order m) {
    detail::require_fbm_member(f, m);
    if (f == Fraction::zero()) throw std::invalid_argument("0/1 has no predecessor");
    const integer h = f.h(), k = f.k(), mv = m.value(), d = k - h;
    if (f == Fraction::one()) return {Fraction(mv, mv + 1), mv, 1};

    integer a = 0, b = 0;
    if (f <= Fraction::half()) {
        // (k-h)a == -1 (mod h) on [ceil(hm/(k-h)) - h, ceil(hm/(k-h)) - 1]
        integer top = ceil_div(checked_mul(h, mv), d);
        a = solve_congruence(d, -1, h, top - h, top - 1);
        // hb == 1 (mod k-h) on [m-k+h+1, m]
        b = solve_congruence(h, 1, d, mv - d + 1, mv);
    } else {
        // ka == -1 (mod h) on [m-h+1, m]
        a = solve_congruence(k, -1, h, mv - h + 1, mv);
        // hb == 1 (mod k-h) on [ceil(((k-h)m+2)/h) - k + h, ceil(((k-h)m+2)/h) - 1]
        integer top = ceil_div(checked_mul(d, mv) + 2, h);
        b = solve_congruence(h, 1, d, top - d, top - 1);
    }
    Fraction by_a(a, detail::exact_div(static_cast<wide>(k) * a + 1, h));
    Fraction by_b(detail::exact_div(static_cast<wide>(h) * b - 1, d),
                  detail::exact_div(static_cast<wide>(k) * b - 1, d));
    detail::require_routes_agree(by_a, by_b);
    return {by_a, a, b};
}

/**
 * Successor in F(B(2m),m).
 *
 * Fractions < 1/2 use the left-half congruences; 1/2 and above the
 * right-half ones. The successor of 0/1 is 1/(m+1), with witness_a set to
 * its numerator since h = 0 leaves no a-route.
 */
inline NeighborReport fbm_succ(const Fraction& f, Order m) {
    detail::require_fbm_member(f, m);
    if (f == Fraction::one()) throw std::invalid_argument("1/1 has no successor");
    const integer h = f.h(), k = f.k(), mv = m.value(), d = k - h;

    integer a = 0, b = 0;
    if (f < Fraction::half()) {
        // hb == -1 (mod k-h) on [m-k+h+1, m]
        b = solve_congruence(h, -1, d, mv - d + 1, mv);
        if (f == Fraction::zero()) return {Fraction(1, mv + 1), 1, b};
        // (k-h)a == 1 (mod h) on [ceil((hm+2)/(k-h)) - h, ceil((hm+2)/(k-h)) - 1]
        integer top = ceil_div(checked_mul(h, mv) + 2, d);
        a = solve_congruence(d, 1, h, top - h, top - 1);
    } else {
        // ka == 1 (mod h) on [m-h+1, m]
        a = solve_congruence(k, 1, h, mv - h + 1, mv);
        // hb == -1 (mod k-h) on [ceil((k-h)m/h) - k + h, ceil((k-h)m/h) - 1]
        integer top = ceil_div(checked_mul(d, mv), h);
        b = solve_congruence(h, -1, d, top - d, top - 1);
    }
    Fraction by_a(a, detail::exact_div(static_cast<wide>(k) * a - 1, h));
    Fraction by_b(detail::exact_div(static_cast<wide>(h) * b + 1, d),
                  detail::exact_div(static_cast<wide>(k) * b + 1, d));
    detail::require_routes_agree(by_a, by_b);
    return {by_a, a, b};
}

// ---------------------------------------------------------------------------
// Closed forms for special fractions
// ---------------------------------------------------------------------------

enum class SubsequenceForm {
    unit,             // 1/(j+1)
    left_mid,         // (j-1)/(2j-1)
    right_mid,        // j/(2j-1)
    unit_complement,  // j/(j+1)
    two,              // 2/(j+2), j odd
    left_mid2,        // (j-2)/(2(j-1)), j odd
    right_mid2,       // j/(2(j-1)), j odd
    two_complement,   // j/(j+2), j odd
};

struct NeighborPair {
    Fraction fraction;
    Fraction predecessor;
    Fraction successor;
};

/**
 * The fraction a form designates, after checking the hypotheses: membership,
 * the strict comparison with 1/2 (and < 1/1 for right_mid), and odd j for
 * the last four forms. left_mid at j = 1 is 0/1, which has no predecessor,
 * so j >= 2 is required there.
 */
inline Fraction subsequence_form_fraction(SubsequenceForm form, integer j, Order m) {
    if (j < 1) throw std::invalid_argument("j must be positive");
    auto odd_j = [&] {
        if (j % 2 == 0) throw std::invalid_argument("this form needs an odd j");
    };
    integer h = 0, k = 1;
    int side = 0;  // -1: must be < 1/2, +1: must be > 1/2
    switch (form) {
    case SubsequenceForm::unit: h = 1, k = j + 1, side = -1; break;
    case SubsequenceForm::left_mid:
        if (j < 2) throw std::invalid_argument("(j-1)/(2j-1) needs j >= 2");
        h = j - 1, k = 2 * j - 1, side = -1;
        break;
    case SubsequenceForm::right_mid: h = j, k = 2 * j - 1, side = 1; break;
    case SubsequenceForm::unit_complement: h = j, k = j + 1, side = 1; break;
    case SubsequenceForm::two: odd_j(), h = 2, k = j + 2, side = -1; break;
    case SubsequenceForm::left_mid2:
        odd_j();
        if (j < 3) throw std::invalid_argument("(j-2)/(2(j-1)) needs j >= 3");
        h = j - 2, k = 2 * (j - 1), side = -1;
        break;
    case SubsequenceForm::right_mid2:
        odd_j();
        if (j < 3) throw std::invalid_argument("j/(2(j-1)) needs j >= 3");
        h = j, k = 2 * (j - 1), side = 1;
        break;
    case SubsequenceForm::two_complement: odd_j(), h = j, k = j + 2, side = 1; break;
    }
    if (side < 0 && !(2 * h < k))
        throw std::invalid_argument("guard violated: designated fraction is not below 1/2");
    if (side > 0 && !(2 * h > k && h < k))
        throw std::invalid_argument("guard violated: designated fraction is not strictly between 1/2 and 1/1");
    if (!fbm_admits(h, k, m))
        throw std::invalid_argument("designated fraction " + std::to_string(h) + "/" +
                                    std::to_string(k) + " is not in F(B(2m),m) for m=" +
                                    std::to_string(m.value()));
    Fraction f(h, k);
    if (f.k() != k) throw std::logic_error("designated fraction is not reduced");
    return f;
}

/// Closed-form neighbors of the eight special shapes in F(B(2m),m).
inline NeighborPair special_neighbors_fbm(SubsequenceForm form, integer j, Order m) {
    const Fraction f = subsequence_form_fraction(form, j, m);
    const integer mv = m.value();
    const integer c = ceil_div(mv, j) - 1;
    const integer c2 = ceil_div(mv + 2, j) - 1;
    const integer p = detail::parity_step(ceil_div(2 * mv, j));
    const integer s = detail::parity_step(ceil_div(2 * (mv + 1), j));
    using detail::halved;
    using detail::halved_denominator;

    switch (form) {
    case SubsequenceForm::unit:
        return {f, Fraction(c, (j + 1) * c + 1), Fraction(c2, (j + 1) * c2 - 1)};
    case SubsequenceForm::left_mid:
        return {f, Fraction((j - 1) * c2 - 1, (2 * j - 1) * c2 - 2),
                Fraction((j - 1) * c + 1, (2 * j - 1) * c + 2)};
    case SubsequenceForm::right_mid:
        return {f, Fraction(j * c + 1, (2 * j - 1) * c + 2),
                Fraction(j * c2 - 1, (2 * j - 1) * c2 - 2)};
    case SubsequenceForm::unit_complement:
        return {f, Fraction(j * c2 - 1, (j + 1) * c2 - 1), Fraction(j * c + 1, (j + 1) * c + 1)};
    case SubsequenceForm::two:
        return {f, halved_denominator(p, (j + 2) * p + 1), halved_denominator(s, (j + 2) * s - 1)};
    case SubsequenceForm::left_mid2:
        return {f, halved((j - 2) * s - 1, 2 * ((j - 1) * s - 1)),
                halved((j - 2) * p + 1, 2 * ((j - 1) * p + 1))};
    case SubsequenceForm::right_mid2:
        return {f, halved(j * p + 1, 2 * ((j - 1) * p + 1)),
                halved(j * s - 1, 2 * ((j - 1) * s - 1))};
    case SubsequenceForm::two_complement:
        return {f, halved(j * s - 1, (j + 2) * s - 1), halved(j * p + 1, (j + 2) * p + 1)};
    }
    throw std::logic_error("unknown form");
}

// ---------------------------------------------------------------------------
// Runs of consecutive fractions
// ---------------------------------------------------------------------------

struct ConsecutiveRuns {
    std::vector<Fraction> unit_run;          // 0/1, 1/(m+1), 1/m, ..., 1/(ceil(m/2)+1)
    std::vector<Fraction> below_half_run;    // (c-1)/(2c-1), ..., (m-1)/(2m-1), 1/2
    std::vector<Fraction> above_half_run;    // 1/2, m/(2m-1), ..., c/(2c-1)
    std::vector<Fraction> complement_run;    // c/(c+1), ..., m/(m+1), 1/1
};

inline ConsecutiveRuns consecutive_runs(Order m) {
    const integer mv = m.value();
    const integer c = ceil_div(mv, 2);
    ConsecutiveRuns runs;
    runs.unit_run.push_back(Fraction::zero());
    for (integer t = mv + 1; t >= c + 1; --t) runs.unit_run.emplace_back(1, t);
    for (integer t = c; t <= mv; ++t) runs.below_half_run.emplace_back(t - 1, 2 * t - 1);
    runs.below_half_run.push_back(Fraction::half());
    runs.above_half_run.push_back(Fraction::half());
    for (integer t = mv; t >= c; --t) runs.above_half_run.emplace_back(t, 2 * t - 1);
    for (integer t = c; t <= mv; ++t) runs.complement_run.emplace_back(t, t + 1);
    runs.complement_run.push_back(Fraction::one());
    return runs;
}

}  // namespace farey
