#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls the congruence machinery, the closed forms, or the library's
// sequence builders.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct Frac {
    i64 h;
    i64 k;
    friend bool operator==(const Frac&, const Frac&) = default;
};

/// Reduced fractions with k <= max_k passing `keep`, sorted by value via
/// long double keys with exact tie-breaks (distinct reduced fractions with
/// small denominators never collide in long double).
template <class Keep>
std::vector<Frac> sorted_fractions(i64 max_k, Keep keep) {
    std::vector<std::pair<long double, Frac>> items;
    for (i64 k = 1; k <= max_k; ++k)
        for (i64 h = 0; h <= k; ++h)
            if (std::gcd(h, k) == 1 && keep(h, k))
                items.push_back({static_cast<long double>(h) / static_cast<long double>(k), {h, k}});
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Frac> out;
    out.reserve(items.size());
    for (auto& [v, f] : items) out.push_back(f);
    return out;
}

inline std::vector<Frac> farey(i64 m) {
    return sorted_fractions(m, [](i64, i64) { return true; });
}

inline std::vector<Frac> farey_boolean(i64 m) {
    return sorted_fractions(2 * m, [m](i64 h, i64 k) { return k - m <= h && h <= m; });
}

/// Position of f in a sorted list, by linear scan.
inline std::optional<std::size_t> index_of(const std::vector<Frac>& seq, Frac f) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == f) return i;
    return std::nullopt;
}

/// Position map for repeated lookups.
inline std::map<std::pair<i64, i64>, std::size_t> index_map(const std::vector<Frac>& seq) {
    std::map<std::pair<i64, i64>, std::size_t> out;
    for (std::size_t i = 0; i < seq.size(); ++i) out[{seq[i].h, seq[i].k}] = i;
    return out;
}

/// Smallest x in [lo, hi] with mod | (c*x - r), by scanning.
inline std::optional<i64> scan_congruence(i64 c, i64 r, i64 mod, i64 lo, i64 hi) {
    for (i64 x = lo; x <= hi; ++x) {
        i64 v = c * x - r;
        if (((v % mod) + mod) % mod == 0) return x;
    }
    return std::nullopt;
}

/// Moebius values for 1..n by a sieve.
inline std::vector<int> mobius_sieve(i64 n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (i64 p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (i64 q = p; q <= n; q += p) {
            if (q > p) composite[q] = true;
            mu[q] = -mu[q];
        }
        for (i64 q = p * p; q <= n; q += p * p) mu[q] = 0;
    }
    return mu;
}

inline i64 coprime_scan(i64 i, i64 lo, i64 hi) {
    i64 count = 0;
    for (i64 j = lo; j <= hi; ++j)
        if (std::gcd(i, j < 0 ? -j : j) == 1) ++count;
    return count;
}

/// Number of subsets K of a region list, with their per-column positive
/// counts; calls visit(mask, size, positives_per_column).
template <class Visit>
void for_each_subset(const std::vector<std::vector<int>>& signs, Visit visit) {
    const std::size_t n = signs.size();
    const std::size_t cols = n == 0 ? 0 : signs[0].size();
    std::vector<i64> positives(cols);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::fill(positives.begin(), positives.end(), 0);
        i64 size = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (!(mask >> r & 1)) continue;
            ++size;
            for (std::size_t c = 0; c < cols; ++c)
                if (signs[r][c] > 0) ++positives[c];
        }
        visit(mask, size, positives);
    }
}

}  // namespace oracle
