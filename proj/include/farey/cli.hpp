#pragma once

/**
 * @file cli.hpp
 * @brief Subcommands of the `farey` tool.
 *
 * Exit codes: 0 success, 1 identity-check mismatch, 2 usage or domain error.
 * Everything writes to caller-supplied streams so the commands can be run
 * in-process.
 */

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classic.hpp"
#include "committee.hpp"
#include "counting.hpp"
#include "subsequence.hpp"

namespace farey::cli {

enum class OutputMode { plain, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Largest order for which `bench` also runs the enumeration path.
inline constexpr integer bench_enumeration_limit = 10'000;

using json = nlohmann::json;

inline json to_json(const Fraction& f) { return {{"h", f.h()}, {"k", f.k()}}; }

inline json to_json(const std::vector<Fraction>& seq) {
    json arr = json::array();
    for (const Fraction& f : seq) arr.push_back(to_json(f));
    return arr;
}

inline std::string join_ascending(const std::vector<Fraction>& seq) {
    std::string out;
    for (const Fraction& f : seq) {
        if (!out.empty()) out += " < ";
        out += to_string(f);
    }
    return out;
}

inline OutputMode default_output_mode() {
    const char* env = std::getenv("FAREY_OUTPUT");
    return env != nullptr && std::string(env) == "json" ? OutputMode::json : OutputMode::plain;
}

enum class Family { fm, fbm };

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

/// Walks F_m (recurrence) or F(B(2m),m) (successor formulas) over [from, to].
inline std::vector<Fraction> walk(Family family, Order m, Fraction from, Fraction to) {
    std::vector<Fraction> out{from};
    if (from == to) return out;
    if (family == Family::fm) {
        Fraction next = succ_fm(from, m).neighbor;
        out.push_back(next);
        if (next == to) return out;
        FareyStream stream(m, from, next);
        for (const Fraction& f : stream) {
            out.push_back(f);
            if (f == to) break;
        }
    } else {
        Fraction cur = from;
        while (cur != to) {
            cur = fbm_succ(cur, m).neighbor;
            out.push_back(cur);
        }
    }
    return out;
}

inline int cmd_gen(integer m_raw, Family family, const std::string& half, OutputMode mode,
                   std::ostream& out) {
    Order m(m_raw);
    if (family == Family::fbm && 2 * m_raw > Order::max)
        throw std::invalid_argument("fbm generation needs 2m <= 2^30");
    Fraction from = half == "right" ? Fraction::half() : Fraction::zero();
    Fraction to = half == "left" ? Fraction::half() : Fraction::one();
    std::vector<Fraction> seq = walk(family, m, from, to);
    if (mode == OutputMode::json) {
        json j{{"family", family == Family::fm ? "fm" : "fbm"},
               {"m", m.value()},
               {"sequence", to_json(seq)}};
        if (!half.empty()) j["half"] = half;
        out << j.dump() << '\n';
    } else {
        out << join_ascending(seq) << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// neighbors
// ---------------------------------------------------------------------------

inline ClassicForm classic_form_by_name(const std::string& name) {
    static const std::map<std::string, ClassicForm> names{
        {"unit", ClassicForm::unit},
        {"unit_complement", ClassicForm::unit_complement},
        {"two", ClassicForm::two},
        {"two_complement", ClassicForm::two_complement}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown F_m form '" + name + "'");
    return it->second;
}

inline SubsequenceForm subsequence_form_by_name(const std::string& name) {
    static const std::map<std::string, SubsequenceForm> names{
        {"unit", SubsequenceForm::unit},
        {"left_mid", SubsequenceForm::left_mid},
        {"right_mid", SubsequenceForm::right_mid},
        {"unit_complement", SubsequenceForm::unit_complement},
        {"two", SubsequenceForm::two},
        {"left_mid2", SubsequenceForm::left_mid2},
        {"right_mid2", SubsequenceForm::right_mid2},
        {"two_complement", SubsequenceForm::two_complement}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown F(B(2m),m) form '" + name + "'");
    return it->second;
}

struct NeighborsRequest {
    integer m = 0;
    Family family = Family::fm;
    std::string frac;
    std::string form;
    integer j = 0;
    std::string side = "both";
};

inline int cmd_neighbors(const NeighborsRequest& req, OutputMode mode, std::ostream& out) {
    Order m(req.m);
    const bool want_pred = req.side != "succ";
    const bool want_succ = req.side != "pred";
    std::optional<Fraction> fraction;
    if (!req.frac.empty()) fraction = parse_fraction(req.frac);

    std::optional<Fraction> pred, succ;
    std::optional<NeighborReport> pred_report, succ_report;
    std::string detail;

    if (!req.form.empty()) {
        if (req.j == 0) throw std::invalid_argument("--form needs --j");
        Fraction designated;
        if (req.family == Family::fm) {
            SpecialNeighbors sn = special_neighbors_fm(classic_form_by_name(req.form), req.j, m);
            designated = sn.fraction;
            pred = sn.predecessor;
            succ = sn.successor;
        } else {
            NeighborPair np = special_neighbors_fbm(subsequence_form_by_name(req.form), req.j, m);
            designated = np.fraction;
            pred = np.predecessor;
            succ = np.successor;
        }
        if (fraction && *fraction != designated)
            throw std::invalid_argument("--frac " + to_string(*fraction) + " differs from the form's fraction " +
                                        to_string(designated));
        fraction = designated;
        if (want_pred && !pred) throw std::invalid_argument(to_string(designated) + " has no predecessor");
        if (want_succ && !succ) throw std::invalid_argument(to_string(designated) + " has no successor");
        detail = "closed form " + req.form + " j=" + std::to_string(req.j);
    } else {
        if (!fraction) throw std::invalid_argument("--frac or --form is required");
        auto pred_fn = req.family == Family::fm ? pred_fm : fbm_pred;
        auto succ_fn = req.family == Family::fm ? succ_fm : fbm_succ;
        if (want_pred) {
            pred_report = pred_fn(*fraction, m);
            pred = pred_report->neighbor;
        }
        if (want_succ) {
            succ_report = succ_fn(*fraction, m);
            succ = succ_report->neighbor;
        }
        detail = "witnesses";
        if (pred_report)
            detail += " pred(a=" + std::to_string(pred_report->witness_a) +
                      ", b=" + std::to_string(pred_report->witness_b) + ")";
        if (succ_report)
            detail += " succ(a=" + std::to_string(succ_report->witness_a) +
                      ", b=" + std::to_string(succ_report->witness_b) + ")";
    }
    if (!want_pred) pred.reset();
    if (!want_succ) succ.reset();

    if (mode == OutputMode::json) {
        json j{{"family", req.family == Family::fm ? "fm" : "fbm"},
               {"m", m.value()},
               {"fraction", to_json(*fraction)}};
        if (pred) j["pred"] = to_json(*pred);
        if (succ) j["succ"] = to_json(*succ);
        if (!req.form.empty()) {
            j["form"] = req.form;
            j["j"] = req.j;
        }
        json w = json::object();
        if (pred_report) w["pred"] = {{"a", pred_report->witness_a}, {"b", pred_report->witness_b}};
        if (succ_report) w["succ"] = {{"a", succ_report->witness_a}, {"b", succ_report->witness_b}};
        if (!w.empty()) j["witnesses"] = w;
        out << j.dump() << '\n';
    } else {
        std::vector<Fraction> row;
        if (pred) row.push_back(*pred);
        row.push_back(*fraction);
        if (succ) row.push_back(*succ);
        out << join_ascending(row) << '\n' << detail << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

inline int cmd_map(integer m_raw, const std::string& name, const std::string& frac, OutputMode mode,
                   std::ostream& out) {
    Order m(m_raw);
    MapId id = map_by_name(name);
    Fraction f = parse_fraction(frac);
    Fraction image = apply_map(id, f, m);
    if (mode == OutputMode::json)
        out << json{{"map", name}, {"m", m.value()}, {"from", to_json(f)}, {"image", to_json(image)}}.dump()
            << '\n';
    else
        out << to_string(image) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// gfcheck
// ---------------------------------------------------------------------------

inline int cmd_gfcheck(integer m_raw, const std::string& half, bool show, OutputMode mode,
                       std::ostream& out) {
    Order m(m_raw);
    auto gf = half == "upper" ? gf_upper : gf_lower;
    BivarPoly enumerated = gf(m, GfMethod::enumerate);
    BivarPoly closed = gf(m, GfMethod::closed_form);
    const bool match = enumerated == closed;
    if (mode == OutputMode::json) {
        json j{{"m", m.value()},
               {"half", half},
               {"enumerate_terms", enumerated.size()},
               {"closed_form_terms", closed.size()},
               {"match", match}};
        if (show) {
            j["enumerate"] = enumerated.to_string();
            j["closed_form"] = closed.to_string();
        }
        out << j.dump() << '\n';
    } else {
        out << "enumerate terms=" << enumerated.size() << '\n'
            << "closed_form terms=" << closed.size() << '\n';
        if (show) {
            out << "enumerate: " << enumerated.to_string() << '\n';
            out << "closed_form: " << closed.to_string() << '\n';
        }
        out << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------------------
// committee
// ---------------------------------------------------------------------------

inline std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = detail::trim(item);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed region index list '" + text + "'");
        out.push_back(static_cast<std::size_t>(std::stoull(item)));
    }
    return out;
}

inline std::string fbm_label(std::size_t regions) {
    return "F(B(" + std::to_string(regions) + ")," + std::to_string(regions / 2) + ")";
}

struct CommitteeRequest {
    std::string input;
    std::string check_k;
    bool ratios = false;
    std::size_t hyperplane = 0;
};

inline int cmd_committee(const CommitteeRequest& req, OutputMode mode, std::ostream& out) {
    std::ifstream file(req.input);
    if (!file) throw std::invalid_argument("cannot open arrangement file '" + req.input + "'");
    CentralArrangement arr = load_arrangement(file);

    if (req.ratios == !req.check_k.empty())
        throw std::invalid_argument("use exactly one of --check-k or --ratios");

    if (!req.check_k.empty()) {
        RegionSubset subset(arr, parse_index_list(req.check_k));
        CommitteeReport report = is_committee(arr, subset);
        if (mode == OutputMode::json) {
            json votes = json::array();
            for (auto& v : report.votes)
                votes.push_back({{"hyperplane", v.hyperplane_id},
                                 {"ratio", to_json(v.ratio)},
                                 {"strict_majority", v.strict_majority}});
            out << json{{"committee", report.is_committee}, {"votes", votes}}.dump() << '\n';
            return exit_ok;
        }
        bool uniform = std::all_of(report.votes.begin(), report.votes.end(),
                                   [&](const HyperplaneVote& v) { return v.ratio == report.votes[0].ratio; });
        std::string list;
        for (auto& v : report.votes) list += (list.empty() ? "" : ", ") + to_string(v.ratio);
        if (report.is_committee)
            out << "committee (" << list << ")\n";
        else if (uniform && report.votes.size() > 1)
            out << "not a committee (fraction " << to_string(report.votes[0].ratio)
                << " at every hyperplane)\n";
        else
            out << "not a committee (" << list << ")\n";
        for (auto& v : report.votes)
            out << "hyperplane " << v.hyperplane_id << ": " << to_string(v.ratio)
                << (v.strict_majority ? " in right half minus 1/2" : " not in right half minus 1/2") << '\n';
        return exit_ok;
    }

    std::vector<Fraction> ratios = enumerate_ratios(arr, req.hyperplane);
    const std::size_t n = arr.region_count();
    if (n < 4) throw std::invalid_argument("ratio comparison needs at least 4 regions");
    const bool match = ratios == fbm_oracle(Order(static_cast<integer>(n / 2)));
    if (mode == OutputMode::json) {
        out << json{{"hyperplane", req.hyperplane},
                    {"regions", n},
                    {"ratios", to_json(ratios)},
                    {"matches", fbm_label(n)},
                    {"match", match}}
                   .dump()
            << '\n';
    } else {
        out << join_ascending(ratios) << " (" << (match ? "= " : "!= ") << fbm_label(n) << ")\n";
    }
    return match ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

/// Random members of F_m or F(B(2m),m): uniform denominator, uniform
/// admissible numerator, rejection of non-coprime pairs.
inline std::vector<Fraction> random_members(Family family, Order m, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const integer mv = m.value();
    std::vector<Fraction> out;
    out.reserve(count);
    while (out.size() < count) {
        integer k = std::uniform_int_distribution<integer>(1, family == Family::fm ? mv : 2 * mv)(rng);
        integer lo = family == Family::fm ? 0 : std::max<integer>(0, k - mv);
        integer hi = family == Family::fm ? k : std::min(k, mv);
        integer h = std::uniform_int_distribution<integer>(lo, hi)(rng);
        if (std::gcd(h, k) == 1) out.emplace_back(h, k);
    }
    return out;
}

struct QueryAnswer {
    std::optional<Fraction> pred;
    std::optional<Fraction> succ;
    friend bool operator==(const QueryAnswer&, const QueryAnswer&) = default;
};

inline QueryAnswer formula_answer(Family family, const Fraction& f, Order m) {
    QueryAnswer a;
    if (f != Fraction::zero()) a.pred = (family == Family::fm ? pred_fm(f, m) : fbm_pred(f, m)).neighbor;
    if (f != Fraction::one()) a.succ = (family == Family::fm ? succ_fm(f, m) : fbm_succ(f, m)).neighbor;
    return a;
}

/// One ascending sweep of the full sequence answers every query.
inline std::vector<QueryAnswer> enumeration_answers(Family family, Order m, const std::vector<Fraction>& queries) {
    std::vector<Fraction> targets(queries);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::vector<QueryAnswer> by_target(targets.size());

    std::size_t next_target = 0;
    std::optional<std::size_t> awaiting_succ;
    std::optional<Fraction> prev;
    auto visit = [&](const Fraction& f) {
        if (awaiting_succ) {
            by_target[*awaiting_succ].succ = f;
            awaiting_succ.reset();
        }
        if (next_target < targets.size() && targets[next_target] == f) {
            by_target[next_target].pred = prev;
            awaiting_succ = next_target++;
        }
        prev = f;
    };

    const Order order(family == Family::fm ? m.value() : 2 * m.value());
    const Fraction first(1, order.value());
    visit(Fraction::zero());
    bool keep_first = family == Family::fm || fbm_member(first, m);
    if (keep_first) visit(first);
    FareyStream stream(order, Fraction::zero(), first);
    for (const Fraction& f : stream)
        if (family == Family::fm || fbm_member(f, m)) visit(f);

    std::vector<QueryAnswer> out;
    out.reserve(queries.size());
    for (const Fraction& q : queries) {
        auto it = std::lower_bound(targets.begin(), targets.end(), q);
        out.push_back(by_target[static_cast<std::size_t>(it - targets.begin())]);
    }
    return out;
}

/// 1 + sum of Euler phi(k) for k <= m, by a linear sieve.
inline integer farey_length(integer m) {
    std::vector<integer> phi(static_cast<std::size_t>(m) + 1);
    for (integer i = 0; i <= m; ++i) phi[i] = i;
    for (integer p = 2; p <= m; ++p)
        if (phi[p] == p)
            for (integer q = p; q <= m; q += p) phi[q] -= phi[q] / p;
    integer total = 1;
    for (integer k = 1; k <= m; ++k) total += phi[k];
    return total;
}

struct BenchRequest {
    integer m = 0;
    Family family = Family::fm;
    std::size_t queries = 1000;
    std::uint64_t seed = 1;
};

inline int cmd_bench(const BenchRequest& req, OutputMode mode, std::ostream& out) {
    Order m(req.m);
    if (req.family == Family::fbm && 2 * req.m > Order::max)
        throw std::invalid_argument("fbm queries need 2m <= 2^30");
    if (req.queries == 0) throw std::invalid_argument("--queries must be positive");
    using clock = std::chrono::steady_clock;
    std::vector<Fraction> queries = random_members(req.family, m, req.queries, req.seed);

    auto t0 = clock::now();
    std::vector<QueryAnswer> fast;
    fast.reserve(queries.size());
    for (const Fraction& q : queries) fast.push_back(formula_answer(req.family, q, m));
    double formula_s = std::chrono::duration<double>(clock::now() - t0).count();

    const bool enumerate = req.m <= bench_enumeration_limit;
    double enum_s = 0;
    std::size_t agree = 0;
    if (enumerate) {
        auto t1 = clock::now();
        std::vector<QueryAnswer> slow = enumeration_answers(req.family, m, queries);
        enum_s = std::chrono::duration<double>(clock::now() - t1).count();
        for (std::size_t i = 0; i < queries.size(); ++i) agree += fast[i] == slow[i] ? 1 : 0;
    }
    const bool ok = !enumerate || agree == queries.size();
    const double n = static_cast<double>(queries.size());
    // |F_m| ~ 3 m^2 / pi^2
    const double estimated_terms = 3.0 * std::pow(static_cast<double>(req.family == Family::fm ? req.m : 2 * req.m), 2) /
                                   (std::numbers::pi * std::numbers::pi);

    if (mode == OutputMode::json) {
        json j{{"m", m.value()},
               {"family", req.family == Family::fm ? "fm" : "fbm"},
               {"queries", queries.size()},
               {"seed", req.seed},
               {"formula_total_s", formula_s},
               {"formula_per_query_us", formula_s / n * 1e6},
               {"enumeration_run", enumerate}};
        if (enumerate) {
            j["enumeration_total_s"] = enum_s;
            j["enumeration_per_query_us"] = enum_s / n * 1e6;
            j["agree"] = agree;
        } else {
            j["estimated_sequence_terms"] = estimated_terms;
        }
        out << j.dump() << '\n';
    } else {
        out << std::setprecision(4);
        out << "formula: " << queries.size() << " queries in " << formula_s * 1e3 << " ms ("
            << formula_s / n * 1e6 << " us/query)\n";
        if (enumerate) {
            out << "enumeration: " << queries.size() << " queries in " << enum_s * 1e3 << " ms ("
                << enum_s / n * 1e6 << " us/query, one full sweep)\n";
            out << "agreement: " << agree << "/" << queries.size() << '\n';
        } else {
            out << "enumeration: skipped (m > " << bench_enumeration_limit << ", about "
                << std::setprecision(3) << estimated_terms << " terms)\n";
        }
    }
    return ok ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Farey sequences, the subsequence F(B(2m),m), and committees of regions", "farey"};
    app.require_subcommand(1);

    bool json_flag = false, plain_flag = false;
    app.add_flag("--json", json_flag, "JSON output")->group("Output");
    app.add_flag("--plain", plain_flag, "plain output (overrides FAREY_OUTPUT)")->group("Output");
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", json_flag, "JSON output");
        sub->add_flag("--plain", plain_flag, "plain output");
    };
    const std::map<std::string, Family> families{{"fm", Family::fm}, {"fbm", Family::fbm}};

    integer m = 0;
    Family family = Family::fm;
    std::function<int(OutputMode)> action;

    auto* gen = app.add_subcommand("gen", "print F_m or F(B(2m),m) in ascending order");
    std::string half;
    gen->add_option("--m", m, "order")->required();
    gen->add_option("--family", family, "fm | fbm")->required()->transform(CLI::CheckedTransformer(families));
    gen->add_option("--half", half, "left | right")->check(CLI::IsMember({"left", "right"}));
    add_output_flags(gen);
    gen->callback([&] { action = [&](OutputMode mode) { return cmd_gen(m, family, half, mode, out); }; });

    auto* nb = app.add_subcommand("neighbors", "predecessor and successor of a fraction");
    NeighborsRequest nreq;
    nb->add_option("--m", nreq.m, "order")->required();
    nb->add_option("--family", nreq.family, "fm | fbm")->required()->transform(CLI::CheckedTransformer(families));
    nb->add_option("--frac", nreq.frac, "fraction h/k");
    nb->add_option("--form", nreq.form, "closed-form shape (e.g. unit, two, right_mid)");
    nb->add_option("--j", nreq.j, "parameter j of the form");
    nb->add_option("--side", nreq.side, "pred | succ | both")->check(CLI::IsMember({"pred", "succ", "both"}));
    add_output_flags(nb);
    nb->callback([&] { action = [&](OutputMode mode) { return cmd_neighbors(nreq, mode, out); }; });

    auto* mp = app.add_subcommand("map", "apply one of the monotone bijections");
    std::string map_name, map_frac;
    mp->add_option("--m", m, "order")->required();
    mp->add_option("--map", map_name, "eq10 eq11 eq12 eq13 eq14 eq15 eq16 eq20 eq21 dual_fbm")->required();
    mp->add_option("--frac", map_frac, "fraction h/k")->required();
    add_output_flags(mp);
    mp->callback([&] { action = [&](OutputMode mode) { return cmd_map(m, map_name, map_frac, mode, out); }; });

    auto* gf = app.add_subcommand("gfcheck", "compare enumeration and closed form of a half generating function");
    std::string gf_half;
    bool show = false;
    gf->add_option("--m", m, "order")->required();
    gf->add_option("--half", gf_half, "lower | upper")->required()->check(CLI::IsMember({"lower", "upper"}));
    gf->add_flag("--show", show, "print both polynomials");
    add_output_flags(gf);
    gf->callback([&] { action = [&](OutputMode mode) { return cmd_gfcheck(m, gf_half, show, mode, out); }; });

    auto* cm = app.add_subcommand("committee", "committee verdicts and vote-ratio collections");
    CommitteeRequest creq;
    cm->add_option("--input", creq.input, "arrangement file")->required();
    cm->add_option("--check-k", creq.check_k, "comma-separated region indices");
    cm->add_flag("--ratios", creq.ratios, "print the vote-ratio collection");
    cm->add_option("--hyperplane", creq.hyperplane, "hyperplane id for --ratios");
    add_output_flags(cm);
    cm->callback([&] { action = [&](OutputMode mode) { return cmd_committee(creq, mode, out); }; });

    auto* bn = app.add_subcommand("bench", "time formula neighbor queries against enumeration");
    BenchRequest breq;
    bn->add_option("--m", breq.m, "order")->required();
    bn->add_option("--family", breq.family, "fm | fbm")->transform(CLI::CheckedTransformer(families));
    bn->add_option("--queries", breq.queries, "number of random queries");
    bn->add_option("--seed", breq.seed, "RNG seed");
    add_output_flags(bn);
    bn->callback([&] { action = [&](OutputMode mode) { return cmd_bench(breq, mode, out); }; });

    std::vector<const char*> argv{"farey"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    OutputMode mode = default_output_mode();
    if (json_flag) mode = OutputMode::json;
    if (plain_flag) mode = OutputMode::plain;
    try {
        return action(mode);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "consistency check failed: " << e.what() << '\n';
        return exit_mismatch;
    }
}

}  // namespace farey::cli
