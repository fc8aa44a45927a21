#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse integer polynomials in y, and in x and y, with
 *        box-truncated multiplication for formal power series work.
 *
 * Zero coefficients are never stored, so equality is map equality.
 */

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace farey {

namespace detail {

inline integer checked_add(integer a, integer b) {
    integer r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

inline std::string render_term(integer coeff, integer dx, integer dy) {
    std::string out;
    bool unit = coeff == 1 || coeff == -1;
    if (coeff == -1) out += "-";
    if (!unit || (dx == 0 && dy == 0)) out += std::to_string(unit ? 1 : coeff);
    auto factor = [&](char var, integer e) {
        if (e == 0) return;
        if (!out.empty() && out != "-") out += "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    };
    factor('x', dx);
    factor('y', dy);
    return out;
}

}  // namespace detail

/// Exponent pair of x^dx y^dy; ordered by (dy, dx).
struct Monomial {
    integer dx = 0;
    integer dy = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.dy <=> b.dy; c != 0) return c;
        return a.dx <=> b.dx;
    }
};

class UnivarPoly {
public:
    using map_type = std::map<integer, integer>;

    UnivarPoly() = default;

    static UnivarPoly monomial(integer dy, integer coeff = 1) {
        UnivarPoly p;
        p.add_term(dy, coeff);
        return p;
    }

    void add_term(integer dy, integer coeff) {
        if (dy < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) return;
        integer v = detail::checked_add(terms_[dy], coeff);
        if (v == 0)
            terms_.erase(dy);
        else
            terms_[dy] = v;
    }

    integer coefficient(integer dy) const {
        auto it = terms_.find(dy);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Value at y = 1.
    integer at_one() const {
        integer sum = 0;
        for (auto [e, c] : terms_) sum = detail::checked_add(sum, c);
        return sum;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    UnivarPoly& operator+=(const UnivarPoly& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += detail::render_term(c, 0, e);
        }
        return out;
    }

private:
    map_type terms_;
};

class BivarPoly {
public:
    using map_type = std::map<Monomial, integer>;

    BivarPoly() = default;

    static BivarPoly monomial(integer dx, integer dy, integer coeff = 1) {
        BivarPoly p;
        p.add_term({dx, dy}, coeff);
        return p;
    }

    /// sum_{n >= 0} (x^dx y^dy)^n, truncated to the box dx <= cap_x, dy <= cap_y.
    static BivarPoly geometric(integer dx, integer dy, integer cap_x, integer cap_y) {
        if (dx < 0 || dy < 0 || (dx == 0 && dy == 0))
            throw std::invalid_argument("geometric series needs a non-constant monomial");
        BivarPoly p;
        for (integer ex = 0, ey = 0; ex <= cap_x && ey <= cap_y; ex += dx, ey += dy)
            p.add_term({ex, ey}, 1);
        return p;
    }

    void add_term(Monomial mono, integer coeff) {
        if (mono.dx < 0 || mono.dy < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) return;
        integer v = detail::checked_add(terms_[mono], coeff);
        if (v == 0)
            terms_.erase(mono);
        else
            terms_[mono] = v;
    }

    integer coefficient(Monomial mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    integer max_dx() const {
        integer r = 0;
        for (auto& [mono, c] : terms_) r = std::max(r, mono.dx);
        return r;
    }
    integer max_dy() const { return terms_.empty() ? 0 : terms_.rbegin()->first.dy; }

    /// Product with every term outside the box dropped.
    BivarPoly truncated_mul(const BivarPoly& o, integer cap_x, integer cap_y) const {
        BivarPoly r;
        for (auto& [ma, ca] : terms_) {
            if (ma.dx > cap_x || ma.dy > cap_y) continue;
            for (auto& [mb, cb] : o.terms_) {
                Monomial mc{ma.dx + mb.dx, ma.dy + mb.dy};
                if (mc.dx > cap_x || mc.dy > cap_y) continue;
                r.add_term(mc, checked_mul(ca, cb));
            }
        }
        return r;
    }

    BivarPoly& operator+=(const BivarPoly& o) {
        for (auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o) {
        for (auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

    BivarPoly scaled(integer factor) const {
        BivarPoly r;
        for (auto& [mono, c] : terms_) r.add_term(mono, checked_mul(c, factor));
        return r;
    }

    /// Substitutes x = 1.
    UnivarPoly at_x_one() const {
        UnivarPoly r;
        for (auto& [mono, c] : terms_) r.add_term(mono.dy, c);
        return r;
    }

    /// Value at x = y = 1.
    integer at_one() const { return at_x_one().at_one(); }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    /// Terms by (dy, dx) ascending as "c*x^a*y^b", joined by " + ".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [mono, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += detail::render_term(c, mono.dx, mono.dy);
        }
        return out;
    }

private:
    map_type terms_;
};

}  // namespace farey
