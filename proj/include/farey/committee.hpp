#pragma once

/**
 * @file committee.hpp
 * @brief Central hyperplane arrangements as oriented sign matrices,
 *        committees of regions, and the committee decision rule.
 *
 * Regions are sign vectors: entry i tells on which side of oriented
 * hyperplane i the region lies. Central arrangements are closed under
 * negation of sign vectors, so every hyperplane has exactly half of the
 * regions on its positive side.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subsequence.hpp"

namespace farey {

enum class Side : signed char { negative = -1, positive = 1 };

using SignVector = std::vector<Side>;

enum class ClassLabel { A, B };

struct Hyperplane {
    std::size_t id = 0;
    std::optional<ClassLabel> label;
    std::optional<std::vector<double>> normal;  // as given, before orientation folding
};

class CentralArrangement {
public:
    /// Validates distinct regions, distinct hyperplanes and antipodal closure.
    CentralArrangement(std::vector<Hyperplane> hyperplanes, std::vector<SignVector> regions)
        : hyperplanes_(std::move(hyperplanes)), regions_(std::move(regions)) {
        const std::size_t n = hyperplanes_.size();
        if (n == 0) throw std::invalid_argument("arrangement needs at least one hyperplane");
        if (regions_.empty()) throw std::invalid_argument("arrangement has no regions");
        for (const SignVector& r : regions_)
            if (r.size() != n)
                throw std::invalid_argument("region sign vector length does not match hyperplane count");
        std::set<SignVector> seen(regions_.begin(), regions_.end());
        if (seen.size() != regions_.size())
            throw std::invalid_argument("region sign vectors are not pairwise distinct");
        for (const SignVector& r : regions_)
            if (!seen.contains(negate(r)))
                throw std::invalid_argument("arrangement is not central: a region lacks its antipode");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                bool same = true, opposite = true;
                for (const SignVector& r : regions_) {
                    same = same && r[a] == r[b];
                    opposite = opposite && r[a] != r[b];
                }
                if (same || opposite)
                    throw std::invalid_argument("duplicate hyperplanes " + std::to_string(a) +
                                                " and " + std::to_string(b));
            }
    }

    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const std::vector<SignVector>& regions() const { return regions_; }
    std::size_t region_count() const { return regions_.size(); }
    std::size_t hyperplane_count() const { return hyperplanes_.size(); }

    static SignVector negate(const SignVector& r) {
        SignVector out(r.size());
        std::transform(r.begin(), r.end(), out.begin(), [](Side s) {
            return s == Side::positive ? Side::negative : Side::positive;
        });
        return out;
    }

    void require_hyperplane(std::size_t id) const {
        if (id >= hyperplanes_.size())
            throw std::out_of_range("unknown hyperplane id " + std::to_string(id));
    }

private:
    std::vector<Hyperplane> hyperplanes_;
    std::vector<SignVector> regions_;
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Next non-blank line that is not a '#' comment.
inline bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') return true;
    }
    return false;
}

/// Parses a row of '+' and '-' (ASCII hyphen or U+2212).
inline SignVector parse_sign_row(const std::string& row) {
    SignVector out;
    for (std::size_t i = 0; i < row.size();) {
        if (row[i] == '+') {
            out.push_back(Side::positive);
            ++i;
        } else if (row[i] == '-') {
            out.push_back(Side::negative);
            ++i;
        } else if (row.compare(i, 3, "\xE2\x88\x92") == 0) {
            out.push_back(Side::negative);
            i += 3;
        } else if (row[i] == ' ' || row[i] == '\t') {
            ++i;
        } else {
            throw std::invalid_argument("unexpected character in sign row '" + row + "'");
        }
    }
    return out;
}

inline CentralArrangement load_sign_matrix(std::istream& in, std::istringstream& header) {
    long long n_regions = -1, n_hyperplanes = -1;
    std::string extra;
    if (!(header >> n_regions >> n_hyperplanes) || (header >> extra) || n_regions < 1 ||
        n_hyperplanes < 1)
        throw std::invalid_argument("sign-matrix header must be 'signs <n_regions> <n_hyperplanes>'");
    std::vector<SignVector> regions;
    std::string line;
    while (next_content_line(in, line)) {
        regions.push_back(parse_sign_row(line));
        if (regions.back().size() != static_cast<std::size_t>(n_hyperplanes))
            throw std::invalid_argument("sign row '" + line + "' does not have " +
                                        std::to_string(n_hyperplanes) + " entries");
    }
    if (regions.size() != static_cast<std::size_t>(n_regions))
        throw std::invalid_argument("expected " + std::to_string(n_regions) + " sign rows, got " +
                                    std::to_string(regions.size()));
    std::vector<Hyperplane> hyperplanes(static_cast<std::size_t>(n_hyperplanes));
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) hyperplanes[i].id = i;
    return CentralArrangement(std::move(hyperplanes), std::move(regions));
}

inline CentralArrangement load_normals2d(std::istream& in) {
    std::vector<Hyperplane> hyperplanes;
    std::vector<std::array<double, 2>> oriented;
    std::string line;
    while (next_content_line(in, line)) {
        std::istringstream row(line);
        std::string label, extra;
        double px = 0, py = 0;
        if (!(row >> label >> px >> py) || (row >> extra) || (label != "A" && label != "B"))
            throw std::invalid_argument("normals2d line must be '<A|B> <px> <py>', got '" + line + "'");
        if (!std::isfinite(px) || !std::isfinite(py) || (px == 0 && py == 0))
            throw std::invalid_argument("normal vector must be finite and non-zero");
        Hyperplane hp;
        hp.id = hyperplanes.size();
        hp.label = label == "A" ? ClassLabel::A : ClassLabel::B;
        hp.normal = std::vector<double>{px, py};
        // h := -p for class A, h := p for class B
        double sign = label == "A" ? -1.0 : 1.0;
        oriented.push_back({sign * px, sign * py});
        hyperplanes.push_back(std::move(hp));
    }
    if (hyperplanes.empty()) throw std::invalid_argument("normals2d input lists no hyperplanes");
    for (std::size_t a = 0; a < oriented.size(); ++a)
        for (std::size_t b = a + 1; b < oriented.size(); ++b) {
            double cross = oriented[a][0] * oriented[b][1] - oriented[a][1] * oriented[b][0];
            double scale = std::hypot(oriented[a][0], oriented[a][1]) *
                           std::hypot(oriented[b][0], oriented[b][1]);
            if (std::abs(cross) <= 1e-12 * scale)
                throw std::invalid_argument("hyperplanes " + std::to_string(a) + " and " +
                                            std::to_string(b) + " have parallel normals");
        }

    // Each line through the origin contributes two boundary rays; the 2n
    // sectors between consecutive rays are the regions.
    std::vector<double> rays;
    for (auto& h : oriented) {
        double along = std::atan2(h[1], h[0]) + std::numbers::pi / 2;
        for (double t : {along, along + std::numbers::pi})
            rays.push_back(std::fmod(std::fmod(t, 2 * std::numbers::pi) + 2 * std::numbers::pi,
                                     2 * std::numbers::pi));
    }
    std::sort(rays.begin(), rays.end());
    std::vector<SignVector> regions;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        double lo = rays[i];
        double hi = i + 1 < rays.size() ? rays[i + 1] : rays[0] + 2 * std::numbers::pi;
        double mid = (lo + hi) / 2;
        double vx = std::cos(mid), vy = std::sin(mid);
        SignVector r;
        for (auto& h : oriented) r.push_back(h[0] * vx + h[1] * vy > 0 ? Side::positive : Side::negative);
        regions.push_back(std::move(r));
    }
    return CentralArrangement(std::move(hyperplanes), std::move(regions));
}

}  // namespace detail

/**
 * Reads either
 *
 *     signs <n_regions> <n_hyperplanes>
 *     ++-
 *     ...
 *
 * or
 *
 *     normals2d
 *     A 1.0 0.0
 *     B 0.5 2
 *     ...
 *
 * Blank lines and lines starting with '#' are skipped.
 */
inline CentralArrangement load_arrangement(std::istream& in) {
    std::string line;
    if (!detail::next_content_line(in, line)) throw std::invalid_argument("empty arrangement input");
    std::istringstream header(line);
    std::string kind;
    header >> kind;
    if (kind == "signs") return detail::load_sign_matrix(in, header);
    if (kind == "normals2d") {
        std::string extra;
        if (header >> extra) throw std::invalid_argument("normals2d header takes no arguments");
        return detail::load_normals2d(in);
    }
    throw std::invalid_argument("unknown arrangement format '" + kind + "'");
}

inline CentralArrangement load_arrangement(const std::string& text) {
    std::istringstream in(text);
    return load_arrangement(in);
}

/// |T_H^+|; equals half the region count in a central arrangement.
inline std::size_t positive_side_count(const CentralArrangement& arr, std::size_t hyperplane_id) {
    arr.require_hyperplane(hyperplane_id);
    std::size_t count = 0;
    for (const SignVector& r : arr.regions())
        if (r[hyperplane_id] == Side::positive) ++count;
    if (2 * count != arr.region_count())
        throw std::logic_error("central arrangement with unbalanced hyperplane");
    return count;
}

struct HyperplaneVote {
    std::size_t hyperplane_id;
    Fraction ratio;          // |K cap T_H^+| / |K|, reduced
    bool strict_majority;    // ratio in the right half of F(B(|T|),|T|/2), minus 1/2
};

struct CommitteeReport {
    bool is_committee = false;
    std::vector<HyperplaneVote> votes;
};

/// Region index set; non-empty with valid, distinct indices.
class RegionSubset {
public:
    RegionSubset(const CentralArrangement& arr, std::vector<std::size_t> indices)
        : indices_(std::move(indices)) {
        if (indices_.empty()) throw std::invalid_argument("region subset must be non-empty");
        std::sort(indices_.begin(), indices_.end());
        if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
            throw std::invalid_argument("region subset lists an index twice");
        if (indices_.back() >= arr.region_count())
            throw std::out_of_range("region index " + std::to_string(indices_.back()) +
                                    " out of range");
    }

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }

private:
    std::vector<std::size_t> indices_;
};

/// Strict majority on the positive side of every hyperplane.
inline CommitteeReport is_committee(const CentralArrangement& arr, const RegionSubset& subset) {
    const integer total = static_cast<integer>(arr.region_count());
    const integer half = total / 2;
    const integer size = static_cast<integer>(subset.size());
    CommitteeReport report;
    report.is_committee = true;
    for (std::size_t id = 0; id < arr.hyperplane_count(); ++id) {
        integer positive = 0;
        for (std::size_t r : subset.indices())
            if (arr.regions()[r][id] == Side::positive) ++positive;
        Fraction ratio(positive, size);
        bool in_right = fbm_admits(ratio.h(), ratio.k(), half) && ratio > Fraction::half();
        report.votes.push_back({id, ratio, in_right});
        report.is_committee = report.is_committee && in_right;
    }
    return report;
}

inline constexpr std::size_t max_exhaustive_regions = 24;

/// Ascending set of reduced ratios |R cap T_H^+| / |R| over all non-empty
/// region subsets R, by exhaustive enumeration.
inline std::vector<Fraction> enumerate_ratios(const CentralArrangement& arr, std::size_t hyperplane_id) {
    arr.require_hyperplane(hyperplane_id);
    const std::size_t n = arr.region_count();
    if (n > max_exhaustive_regions)
        throw std::invalid_argument("exhaustive subset enumeration is capped at " +
                                    std::to_string(max_exhaustive_regions) + " regions");
    std::uint32_t positive_mask = 0;
    for (std::size_t r = 0; r < n; ++r)
        if (arr.regions()[r][hyperplane_id] == Side::positive) positive_mask |= std::uint32_t{1} << r;

    // seen[size][positives]
    std::vector<std::vector<bool>> seen(n + 1, std::vector<bool>(n + 1, false));
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t subset = 1; subset < end; ++subset)
        seen[std::popcount(subset)][std::popcount(subset & positive_mask)] = true;
    std::set<Fraction> ratios;
    for (std::size_t size = 1; size <= n; ++size)
        for (std::size_t pos = 0; pos <= size; ++pos)
            if (seen[size][pos]) ratios.emplace(static_cast<integer>(pos), static_cast<integer>(size));
    return {ratios.begin(), ratios.end()};
}

/// enumerate_ratios, checked against F(B(|T|), |T|/2); needs |T| >= 4.
inline std::vector<Fraction> ratio_collection(const CentralArrangement& arr, std::size_t hyperplane_id) {
    if (arr.region_count() < 4) throw std::invalid_argument("ratio collection needs at least 4 regions");
    std::vector<Fraction> out = enumerate_ratios(arr, hyperplane_id);
    if (out != fbm_oracle(Order(static_cast<integer>(arr.region_count() / 2))))
        throw std::logic_error("ratio collection differs from F(B(|T|),|T|/2)");
    return out;
}

enum class Decision { class_A, class_B, undecided };

/**
 * Committee decision rule: class A when fewer than half of <g, w> are
 * positive, class B when more than half are, undecided on an exact tie.
 */
inline Decision classify_pattern(const std::vector<std::vector<double>>& representatives,
                                 const std::vector<double>& g) {
    if (representatives.empty()) throw std::invalid_argument("no representatives");
    std::size_t positive = 0;
    for (const auto& w : representatives) {
        if (w.size() != g.size()) throw std::invalid_argument("dimension mismatch");
        double dot = 0;
        for (std::size_t i = 0; i < w.size(); ++i) dot += w[i] * g[i];
        if (dot == 0) throw std::invalid_argument("degenerate input: zero inner product");
        if (dot > 0) ++positive;
    }
    if (2 * positive < representatives.size()) return Decision::class_A;
    if (2 * positive > representatives.size()) return Decision::class_B;
    return Decision::undecided;
}

}  // namespace farey
