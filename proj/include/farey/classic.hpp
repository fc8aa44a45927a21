#pragma once

/**
 * @file classic.hpp
 * @brief The Farey sequence F_m: enumeration, the next-term recurrence,
 *        the order-reversing dual, and closed-form neighbor queries.
 *
 * Neighbor queries solve a single linear congruence over an interval whose
 * length equals the modulus, so each query costs O(log m). Both witnesses
 * (the numerator-side `a` and the denominator-side `b`) are computed and
 * must reconstruct the same fraction.
 */

#include <algorithm>
#include <iterator>
#include <optional>
#include <vector>

#include "numeric.hpp"

namespace farey {

/// A neighbor together with the two congruence solutions that produced it.
struct NeighborReport {
    Fraction neighbor;
    integer witness_a = 0;
    integer witness_b = 0;

    friend bool operator==(const NeighborReport&, const NeighborReport&) = default;
};

inline bool fm_member(const Fraction& f, Order m) { return f.k() <= m; }

/// Brute force: every reduced h/k with k <= m, sorted.
inline std::vector<Fraction> farey_oracle(Order m) {
    std::vector<Fraction> out;
    for (integer k = 1; k <= m; ++k)
        for (integer h = 0; h <= k; ++h)
            if (std::gcd(h, k) == 1) out.emplace_back(h, k);
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Lazily continues F_m from two adjacent terms using
 * next = (q*c - a)/(q*d - b), q = floor((m + b)/d).
 *
 * Yields the terms after `start_next`, ending with 1/1.
 */
class FareyStream {
public:
    FareyStream(Order m, Fraction start, Fraction start_next)
        : m_(m), prev_(start), cur_(start_next) {
        if (!fm_member(start, m) || !fm_member(start_next, m))
            throw std::invalid_argument("stream seeds must belong to F_m");
        if (determinant(start, start_next) != 1 || start.k() + start_next.k() <= m)
            throw std::invalid_argument("stream seeds " + to_string(start) + ", " +
                                        to_string(start_next) + " are not adjacent in F_m");
    }

    /// Next term, or nullopt once 1/1 has been passed.
    std::optional<Fraction> next() {
        if (cur_ == Fraction::one()) return std::nullopt;
        integer q = (m_.value() + prev_.k()) / cur_.k();
        Fraction nxt(q * cur_.h() - prev_.h(), q * cur_.k() - prev_.k());
        prev_ = cur_;
        cur_ = nxt;
        return nxt;
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Fraction;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(FareyStream* s) : stream_(s) { ++*this; }

        const Fraction& operator*() const { return *value_; }
        iterator& operator++() {
            value_ = stream_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) {
            return !it.value_.has_value();
        }

    private:
        FareyStream* stream_ = nullptr;
        std::optional<Fraction> value_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() { return {}; }

private:
    Order m_;
    Fraction prev_;
    Fraction cur_;
};

/// F_m generated by the recurrence from (0/1, 1/m).
inline std::vector<Fraction> farey_by_recurrence(Order m) {
    std::vector<Fraction> out{Fraction::zero(), Fraction(1, m)};
    FareyStream stream(m, out[0], out[1]);
    for (const Fraction& f : stream) out.push_back(f);
    return out;
}

/// h/k -> (k-h)/k; order-reversing involution of F_m.
inline Fraction dual_fm(const Fraction& f) { return Fraction(f.k() - f.h(), f.k()); }

namespace detail {

inline void require_fm_member(const Fraction& f, Order m) {
    if (!fm_member(f, m))
        throw std::invalid_argument(to_string(f) + " is not in F_" + std::to_string(m.value()));
}

inline Fraction exact_fraction(wide num, wide den_times, integer divisor) {
    if (den_times % divisor != 0)
        throw std::logic_error("neighbor formula produced a non-integral denominator");
    return Fraction(narrow(num), narrow(den_times / divisor));
}

inline void require_routes_agree(const Fraction& a_route, const Fraction& b_route) {
    if (a_route != b_route)
        throw std::logic_error("neighbor witnesses disagree: " + to_string(a_route) + " vs " +
                               to_string(b_route));
}

}  // namespace detail

/// Predecessor of f in F_m.
inline NeighborReport pred_fm(const Fraction& f, Order m) {
    detail::require_fm_member(f, m);
    if (f == Fraction::zero()) throw std::invalid_argument("0/1 has no predecessor");
    const integer h = f.h(), k = f.k(), mv = m.value();
    if (f == Fraction::one()) return {Fraction(mv - 1, mv), mv - 1, mv};

    // k*a == -1 (mod h), ceil(hm/k) - h <= a <= ceil(hm/k) - 1
    integer top = ceil_div(checked_mul(h, mv), k);
    integer a = solve_congruence(k, -1, h, top - h, top - 1);
    Fraction by_a = detail::exact_fraction(a, static_cast<wide>(k) * a + 1, h);

    // h*b == 1 (mod k), m - k + 1 <= b <= m
    integer b = solve_congruence(h, 1, k, mv - k + 1, mv);
    wide num = static_cast<wide>(h) * b - 1;
    if (num % k != 0) throw std::logic_error("b-route numerator is not integral");
    Fraction by_b(narrow(num / k), b);
    detail::require_routes_agree(by_a, by_b);
    return {by_a, a, b};
}

/// Successor of f in F_m.
inline NeighborReport succ_fm(const Fraction& f, Order m) {
    detail::require_fm_member(f, m);
    if (f == Fraction::one()) throw std::invalid_argument("1/1 has no successor");
    const integer h = f.h(), k = f.k(), mv = m.value();
    if (f == Fraction::zero()) {
        // h = 0 leaves no a-route; a is the neighbor's numerator.
        return {Fraction(1, mv), 1, mv};
    }

    // k*a == 1 (mod h), ceil((hm+2)/k) - h <= a <= ceil((hm+2)/k) - 1
    integer top = ceil_div(checked_mul(h, mv) + 2, k);
    integer a = solve_congruence(k, 1, h, top - h, top - 1);
    Fraction by_a = detail::exact_fraction(a, static_cast<wide>(k) * a - 1, h);

    // h*b == -1 (mod k), m - k + 1 <= b <= m
    integer b = solve_congruence(h, -1, k, mv - k + 1, mv);
    wide num = static_cast<wide>(h) * b + 1;
    if (num % k != 0) throw std::logic_error("b-route numerator is not integral");
    Fraction by_b(narrow(num / k), b);
    detail::require_routes_agree(by_a, by_b);
    return {by_a, a, b};
}

/// Fraction shapes with dedicated closed-form neighbors in F_m.
enum class ClassicForm {
    unit,            // 1/j
    unit_complement, // (j-1)/j
    two,             // 2/j, j odd
    two_complement,  // (j-2)/j, j odd
};

struct SpecialNeighbors {
    Fraction fraction;
    std::optional<Fraction> predecessor;
    std::optional<Fraction> successor;
};

/// The fraction a form designates for a given j, after validating j.
inline Fraction classic_form_fraction(ClassicForm form, integer j, Order m) {
    if (j < 1) throw std::invalid_argument("j must be positive");
    Fraction f;
    switch (form) {
    case ClassicForm::unit: f = Fraction(1, j); break;
    case ClassicForm::unit_complement: f = Fraction(j - 1, j); break;
    case ClassicForm::two:
    case ClassicForm::two_complement:
        if (j < 3 || j % 2 == 0)
            throw std::invalid_argument("forms 2/j and (j-2)/j need an odd j >= 3");
        f = form == ClassicForm::two ? Fraction(2, j) : Fraction(j - 2, j);
        break;
    }
    if (f.k() != j || j > m)
        throw std::invalid_argument("designated fraction for j=" + std::to_string(j) +
                                    " is not in F_" + std::to_string(m.value()));
    return f;
}

namespace detail {

/// n/d where d is given doubled: returns n / (twice_d / 2).
inline Fraction halved_denominator(integer n, integer twice_d) {
    if (twice_d % 2 != 0) throw std::logic_error("closed form produced an odd doubled value");
    return Fraction(n, twice_d / 2);
}

/// Both numerator and denominator given doubled.
inline Fraction halved(integer twice_n, integer twice_d) {
    if (twice_n % 2 != 0 || twice_d % 2 != 0)
        throw std::logic_error("closed form produced an odd doubled value");
    return Fraction(twice_n / 2, twice_d / 2);
}

/// c - 1 if c is even, c - 2 if c is odd.
constexpr integer parity_step(integer c) { return c % 2 == 0 ? c - 1 : c - 2; }

}  // namespace detail

/// Closed-form neighbors of 1/j, (j-1)/j, 2/j and (j-2)/j in F_m.
inline SpecialNeighbors special_neighbors_fm(ClassicForm form, integer j, Order m) {
    SpecialNeighbors out{classic_form_fraction(form, j, m), std::nullopt, std::nullopt};
    const integer mv = m.value();
    switch (form) {
    case ClassicForm::unit: {
        integer c = ceil_div(mv, j) - 1;
        out.predecessor = Fraction(c, j * c + 1);
        if (j > 1) {
            integer c2 = ceil_div(mv + 2, j) - 1;
            out.successor = Fraction(c2, j * c2 - 1);
        }
        break;
    }
    case ClassicForm::unit_complement: {
        if (j > 1) {
            integer c2 = ceil_div(mv + 2, j) - 1;
            out.predecessor = Fraction((j - 1) * c2 - 1, j * c2 - 1);
        }
        integer c = ceil_div(mv, j) - 1;
        out.successor = Fraction((j - 1) * c + 1, j * c + 1);
        break;
    }
    case ClassicForm::two: {
        integer p = detail::parity_step(ceil_div(2 * mv, j));
        out.predecessor = detail::halved_denominator(p, j * p + 1);
        integer s = detail::parity_step(ceil_div(2 * (mv + 1), j));
        out.successor = detail::halved_denominator(s, j * s - 1);
        break;
    }
    case ClassicForm::two_complement: {
        integer p = detail::parity_step(ceil_div(2 * (mv + 1), j));
        out.predecessor = detail::halved((j - 2) * p - 1, j * p - 1);
        integer s = detail::parity_step(ceil_div(2 * mv, j));
        out.successor = detail::halved((j - 2) * s + 1, j * s + 1);
        break;
    }
    }
    return out;
}

}  // namespace farey
