#pragma once

/**
 * @file numeric.hpp
 * @brief Exact integer helpers and the reduced Fraction type.
 *
 * Every fraction handled by the library lives in [0/1, 1/1] and is stored in
 * lowest terms. Orders are bounded by Order::max so that all intermediate
 * products fit comfortably in 128-bit arithmetic.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

using integer = std::int64_t;
using wide = __int128;

/// Floor of a/b for b > 0.
constexpr integer floor_div(integer a, integer b) {
    integer q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

/// Ceiling of a/b for b > 0.
constexpr integer ceil_div(integer a, integer b) {
    integer q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

/// Non-negative remainder of a modulo m (m > 0).
constexpr integer mod_floor(wide a, integer m) {
    wide r = a % m;
    if (r < 0) r += m;
    return static_cast<integer>(r);
}

/// Narrows a 128-bit intermediate, throwing instead of wrapping.
inline integer narrow(wide v) {
    if (v > static_cast<wide>(INT64_MAX) || v < static_cast<wide>(INT64_MIN))
        throw std::overflow_error("farey: intermediate value exceeds 64 bits");
    return static_cast<integer>(v);
}

inline integer checked_mul(integer a, integer b) {
    return narrow(static_cast<wide>(a) * b);
}

/// Order m of a Farey (sub)sequence, 2 <= m <= 2^30.
class Order {
public:
    static constexpr integer min = 2;
    static constexpr integer max = integer{1} << 30;

    explicit Order(integer m) : m_(m) {
        if (m < min || m > max)
            throw std::invalid_argument("order must satisfy 2 <= m <= 2^30, got " +
                                        std::to_string(m));
    }

    constexpr integer value() const { return m_; }
    constexpr operator integer() const { return m_; }

private:
    integer m_;
};

/// Reduced fraction h/k with 0 <= h <= k, k >= 1 and gcd(h, k) = 1.
class Fraction {
public:
    /// 0/1
    constexpr Fraction() = default;

    /// Canonicalizing constructor; rejects k = 0 and h outside [0, k].
    Fraction(integer h, integer k) {
        if (k <= 0) throw std::invalid_argument("fraction denominator must be positive");
        if (h < 0 || h > k)
            throw std::invalid_argument("fraction " + std::to_string(h) + "/" +
                                        std::to_string(k) + " is outside [0/1, 1/1]");
        integer g = std::gcd(h, k);
        h_ = h / g;
        k_ = k / g;
    }

    constexpr integer h() const { return h_; }
    constexpr integer k() const { return k_; }

    static Fraction zero() { return {}; }
    static Fraction one() { return Fraction(1, 1); }
    static Fraction half() { return Fraction(1, 2); }

    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;

    friend std::strong_ordering operator<=>(const Fraction& f, const Fraction& g) {
        wide lhs = static_cast<wide>(f.h_) * g.k_;
        wide rhs = static_cast<wide>(g.h_) * f.k_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    integer h_ = 0;
    integer k_ = 1;
};

inline Fraction reduce(integer h, integer k) { return Fraction(h, k); }

inline std::strong_ordering compare(const Fraction& f, const Fraction& g) { return f <=> g; }

inline Fraction mediant(const Fraction& f, const Fraction& g) {
    if (g < f) throw std::invalid_argument("mediant expects f <= g");
    return Fraction(f.h() + g.h(), f.k() + g.k());
}

/// Determinant g.h*f.k - f.h*g.k; equals 1 exactly for Farey neighbors f < g.
inline integer determinant(const Fraction& f, const Fraction& g) {
    return narrow(static_cast<wide>(g.h()) * f.k() - static_cast<wide>(f.h()) * g.k());
}

inline std::string to_string(const Fraction& f) {
    return std::to_string(f.h()) + "/" + std::to_string(f.k());
}

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.h() << '/' << f.k();
}

/// Parses exactly "h/k" (decimal digits, no sign, no whitespace) and canonicalizes.
inline Fraction parse_fraction(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("malformed fraction '" + std::string(text) +
                                     "', expected h/k");
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) throw bad();
    auto parse_part = [&](std::string_view part) {
        for (char c : part)
            if (c < '0' || c > '9') throw bad();
        integer v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) throw bad();
        return v;
    };
    integer h = parse_part(text.substr(0, slash));
    integer k = parse_part(text.substr(slash + 1));
    return Fraction(h, k);
}

struct BezoutResult {
    integer g;  // gcd, non-negative
    integer s;
    integer t;  // s*a + t*b == g
};

/// Extended Euclid: s*a + t*b = gcd(a, b).
inline BezoutResult extended_gcd(integer a, integer b) {
    if (a == 0 && b == 0) throw std::invalid_argument("extended_gcd(0, 0) is undefined");
    integer old_r = a, r = b;
    integer old_s = 1, s = 0;
    integer old_t = 0, t = 1;
    while (r != 0) {
        integer q = old_r / r;
        integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

/// Inverse of c modulo mod, in [0, mod).
inline integer mod_inverse(integer c, integer mod) {
    if (mod <= 0) throw std::invalid_argument("modulus must be positive");
    if (mod == 1) return 0;
    auto [g, s, t] = extended_gcd(mod_floor(c, mod), mod);
    (void)t;
    if (g != 1) throw std::invalid_argument("value is not invertible modulo " + std::to_string(mod));
    return mod_floor(s, mod);
}

/**
 * The unique x in [lo, hi] with c*x == r (mod mod).
 *
 * The interval must hold exactly `mod` integers, which pins the solution
 * down. Computed from the modular inverse; no scanning.
 */
inline integer solve_congruence(integer c, integer r, integer mod, integer lo, integer hi) {
    if (mod <= 0) throw std::invalid_argument("modulus must be positive");
    if (static_cast<wide>(hi) - lo + 1 != mod)
        throw std::invalid_argument("congruence interval length must equal the modulus");
    if (std::gcd(mod_floor(c, mod), mod) != 1)
        throw std::invalid_argument("congruence coefficient is not coprime to the modulus");
    if (mod == 1) return lo;
    integer x0 = mod_floor(static_cast<wide>(mod_floor(r, mod)) * mod_inverse(c, mod), mod);
    return lo + mod_floor(static_cast<wide>(x0) - lo, mod);
}

/// Moebius function by trial division.
inline int mobius(integer n) {
    if (n < 1) throw std::invalid_argument("mobius is defined on positive integers");
    int result = 1;
    for (integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace farey
