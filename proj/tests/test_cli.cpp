#include <gtest/gtest.h>

#include <cstdlib>
#include <regex>
#include <sstream>

#include <farey/cli.hpp>

#include "oracle.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = farey::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name; }

std::string join(const std::vector<oracle::Frac>& seq) {
    std::string out;
    for (auto f : seq) out += (out.empty() ? "" : " < ") + std::to_string(f.h) + "/" + std::to_string(f.k);
    return out;
}

// All "h/k" tokens of a plain rendering, or all {"h","k"} objects of a JSON one, sorted.
std::vector<std::string> plain_fractions(const std::string& text) {
    std::vector<std::string> out;
    std::regex pattern(R"((\d+)/(\d+))");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern); it != std::sregex_iterator(); ++it)
        out.push_back(it->str());
    std::sort(out.begin(), out.end());
    return out;
}

void collect_json(const nlohmann::json& j, std::vector<std::string>& out) {
    if (j.is_object() && j.contains("h") && j.contains("k")) {
        out.push_back(std::to_string(j["h"].get<long long>()) + "/" + std::to_string(j["k"].get<long long>()));
        return;
    }
    if (j.is_structured())
        for (const auto& item : j) collect_json(item, out);
}

std::vector<std::string> json_fractions(const std::string& text) {
    std::vector<std::string> out;
    collect_json(nlohmann::json::parse(text), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Gen, GoldenSequences) {
    auto fm = run({"gen", "--m", "5", "--family", "fm"});
    EXPECT_EQ(fm.code, 0);
    EXPECT_EQ(fm.out, "0/1 < 1/5 < 1/4 < 1/3 < 2/5 < 1/2 < 3/5 < 2/3 < 3/4 < 4/5 < 1/1\n");
    auto fbm = run({"gen", "--m", "5", "--family", "fbm"});
    EXPECT_EQ(fbm.code, 0);
    EXPECT_EQ(fbm.out,
              "0/1 < 1/6 < 1/5 < 1/4 < 2/7 < 1/3 < 3/8 < 2/5 < 3/7 < 4/9 < 1/2 < 5/9 < 4/7 < 3/5 < 5/8 < "
              "2/3 < 5/7 < 3/4 < 4/5 < 5/6 < 1/1\n");
}

TEST(Gen, MatchesOracle) {
    for (int m : {2, 7, 31, 64}) {
        EXPECT_EQ(run({"gen", "--m", std::to_string(m), "--family", "fm"}).out, join(oracle::farey(m)) + "\n");
        EXPECT_EQ(run({"gen", "--m", std::to_string(m), "--family", "fbm"}).out,
                  join(oracle::farey_boolean(m)) + "\n");
    }
}

TEST(Gen, Halves) {
    EXPECT_EQ(run({"gen", "--m", "5", "--family", "fbm", "--half", "left"}).out,
              "0/1 < 1/6 < 1/5 < 1/4 < 2/7 < 1/3 < 3/8 < 2/5 < 3/7 < 4/9 < 1/2\n");
    EXPECT_EQ(run({"gen", "--m", "5", "--family", "fbm", "--half", "right"}).out,
              "1/2 < 5/9 < 4/7 < 3/5 < 5/8 < 2/3 < 5/7 < 3/4 < 4/5 < 5/6 < 1/1\n");
}

TEST(Gen, UsageErrors) {
    EXPECT_EQ(run({"gen", "--m", "1", "--family", "fm"}).code, 2);
    EXPECT_EQ(run({"gen", "--m", "5", "--family", "xx"}).code, 2);
    EXPECT_EQ(run({"gen", "--family", "fm"}).code, 2);
    EXPECT_EQ(run({"gen", "--m", "five", "--family", "fm"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    auto r = run({"gen", "--m", "1", "--family", "fm"});
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Gen, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("neighbors"), std::string::npos);
}

TEST(Neighbors, Examples) {
    auto a = run({"neighbors", "--m", "5", "--family", "fbm", "--frac", "2/5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "3/8 < 2/5 < 3/7");
    auto b = run({"neighbors", "--m", "100", "--family", "fm", "--frac", "3/7"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "41/96 < 3/7 < 43/100\nwitnesses pred(a=41, b=96) succ(a=43, b=100)\n");
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--frac", "0/1"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--frac", "0/1", "--side", "succ"}).out,
              "0/1 < 1/5\nwitnesses succ(a=1, b=5)\n");
}

TEST(Neighbors, Forms) {
    auto r = run({"neighbors", "--m", "5", "--family", "fbm", "--form", "two", "--j", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3/8 < 2/5 < 3/7\nclosed form two j=3\n");
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--form", "unit", "--j", "4"}).out,
              "1/5 < 1/4 < 1/3\nclosed form unit j=4\n");
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--form", "unit", "--j", "1", "--side", "pred"}).out,
              "4/5 < 1/1\nclosed form unit j=1\n");
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--form", "unit", "--j", "1"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fbm", "--form", "unit", "--j", "1"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fbm", "--form", "two", "--j", "4"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fbm", "--form", "bogus", "--j", "3"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fbm", "--form", "two", "--j", "3", "--frac", "1/3"}).code, 2);
}

TEST(Neighbors, DomainErrors) {
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fbm", "--frac", "1/7"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--frac", "2/4"}).code, 0);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--frac", "1/0"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm"}).code, 2);
    EXPECT_EQ(run({"neighbors", "--m", "5", "--family", "fm", "--frac", "1/1"}).code, 2);
}

TEST(Map, Examples) {
    auto r = run({"map", "--m", "5", "--map", "eq11", "--frac", "3/8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3/5\n");
    EXPECT_EQ(run({"map", "--m", "5", "--map", "eq10", "--frac", "1/2"}).out, "1/2\n");
    EXPECT_EQ(run({"map", "--m", "5", "--map", "eq11", "--frac", "3/5"}).code, 2);
    EXPECT_EQ(run({"map", "--m", "5", "--map", "eq99", "--frac", "1/2"}).code, 2);
    EXPECT_EQ(run({"map", "--m", "5", "--map", "eq21", "--frac", "0/1"}).out, "1/2\n");
    EXPECT_EQ(run({"map", "--m", "5", "--map", "dual_fbm", "--frac", "4/9"}).out, "5/9\n");
}

TEST(GfCheck, Examples) {
    auto lower = run({"gfcheck", "--m", "5", "--half", "lower"});
    EXPECT_EQ(lower.code, 0);
    EXPECT_EQ(lower.out, "enumerate terms=4\nclosed_form terms=4\nMATCH\n");
    auto upper = run({"gfcheck", "--m", "2", "--half", "upper"});
    EXPECT_EQ(upper.code, 0);
    EXPECT_EQ(upper.out, "enumerate terms=0\nclosed_form terms=0\nMATCH\n");
    auto big = run({"gfcheck", "--m", "60", "--half", "lower"});
    EXPECT_EQ(big.code, 0);
    EXPECT_NE(big.out.find("MATCH"), std::string::npos);
    EXPECT_EQ(run({"gfcheck", "--m", "5", "--half", "middle"}).code, 2);
}

TEST(GfCheck, Show) {
    auto r = run({"gfcheck", "--m", "5", "--half", "lower", "--show"});
    EXPECT_NE(r.out.find("closed_form: x*y^3 + x*y^4 + x*y^5 + x^2*y^5"), std::string::npos);
}

TEST(Committee, Ratios) {
    auto r = run({"committee", "--input", sample("two_lines.txt"), "--ratios", "--hyperplane", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0/1 < 1/3 < 1/2 < 2/3 < 1/1 (= F(B(4),2))\n");
    auto six = run({"committee", "--input", sample("three_lines.txt"), "--ratios", "--hyperplane", "2"});
    EXPECT_EQ(six.out, join(oracle::farey_boolean(3)) + " (= F(B(6),3))\n");
}

TEST(Committee, CheckK) {
    auto all = run({"committee", "--input", sample("three_lines.txt"), "--check-k", "0,1,2,3,4,5"});
    EXPECT_EQ(all.code, 0);
    EXPECT_EQ(all.out.substr(0, all.out.find('\n')), "not a committee (fraction 1/2 at every hyperplane)");
    auto good = run({"committee", "--input", sample("hexagon_signs.txt"), "--check-k", "0,2,4"});
    EXPECT_EQ(good.code, 0);
    EXPECT_EQ(good.out.substr(0, good.out.find('\n')), "committee (2/3, 2/3, 2/3)");
}

TEST(Committee, Errors) {
    EXPECT_EQ(run({"committee", "--input", sample("missing.txt"), "--ratios"}).code, 2);
    EXPECT_EQ(run({"committee", "--input", sample("two_lines.txt")}).code, 2);
    EXPECT_EQ(run({"committee", "--input", sample("two_lines.txt"), "--ratios", "--check-k", "0"}).code, 2);
    EXPECT_EQ(run({"committee", "--input", sample("two_lines.txt"), "--check-k", "0,x"}).code, 2);
    EXPECT_EQ(run({"committee", "--input", sample("two_lines.txt"), "--check-k", "9"}).code, 2);
    EXPECT_EQ(run({"committee", "--input", sample("two_lines.txt"), "--ratios", "--hyperplane", "7"}).code, 2);
}

TEST(Bench, AgreementBelowLimit) {
    auto r = run({"bench", "--m", "10000", "--queries", "1000", "--seed", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("agreement: 1000/1000"), std::string::npos) << r.out;
    auto f = run({"bench", "--m", "3000", "--family", "fbm", "--queries", "300", "--seed", "7"});
    EXPECT_EQ(f.code, 0);
    EXPECT_NE(f.out.find("agreement: 300/300"), std::string::npos) << f.out;
}

TEST(Bench, SkipsEnumerationAboveLimit) {
    auto r = run({"bench", "--m", "1000000", "--queries", "1000", "--seed", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("enumeration: skipped"), std::string::npos);
    EXPECT_EQ(run({"bench", "--m", "1", "--queries", "10"}).code, 2);
    EXPECT_EQ(run({"bench", "--m", "100", "--queries", "0"}).code, 2);
}

TEST(Output, JsonAndPlainCarrySameFractions) {
    const std::vector<std::vector<std::string>> commands{
        {"gen", "--m", "9", "--family", "fm"},
        {"gen", "--m", "6", "--family", "fbm", "--half", "right"},
        {"neighbors", "--m", "100", "--family", "fm", "--frac", "3/7"},
        {"neighbors", "--m", "5", "--family", "fbm", "--form", "right_mid", "--j", "5"},
        {"map", "--m", "5", "--map", "eq11", "--frac", "3/8"},
        {"committee", "--input", sample("two_lines.txt"), "--ratios", "--hyperplane", "1"},
    };
    for (auto cmd : commands) {
        auto plain = run(cmd);
        auto detail_line = plain.out.find('\n');
        std::string fractions_only = plain.out.substr(0, detail_line);
        cmd.push_back("--json");
        auto js = run(cmd);
        ASSERT_EQ(js.code, 0) << js.err;
        std::vector<std::string> from_json = json_fractions(js.out);
        // JSON for map also echoes the input fraction
        if (cmd[0] == "map") fractions_only = cmd[6] + " " + fractions_only;
        EXPECT_EQ(plain_fractions(fractions_only), from_json) << cmd[0];
    }
}

TEST(Output, EnvironmentSelectsJson) {
    ::setenv("FAREY_OUTPUT", "json", 1);
    auto js = run({"gen", "--m", "3", "--family", "fm"});
    auto forced = run({"gen", "--m", "3", "--family", "fm", "--plain"});
    ::unsetenv("FAREY_OUTPUT");
    auto parsed = nlohmann::json::parse(js.out);
    EXPECT_EQ(parsed["family"], "fm");
    EXPECT_EQ(parsed["sequence"].size(), 5u);
    EXPECT_EQ(forced.out, "0/1 < 1/3 < 1/2 < 2/3 < 1/1\n");
}

TEST(Output, Deterministic) {
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(run({"gen", "--m", "40", "--family", "fbm"}).out, run({"gen", "--m", "40", "--family", "fbm"}).out);
        auto a = run({"bench", "--m", "500", "--queries", "50", "--seed", "3", "--json"});
        auto b = run({"bench", "--m", "500", "--queries", "50", "--seed", "3", "--json"});
        auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
        EXPECT_EQ(ja["agree"], jb["agree"]);
        EXPECT_EQ(ja["queries"], 50);
    }
    EXPECT_EQ(farey::cli::random_members(farey::cli::Family::fm, farey::Order(1000), 20, 9),
              farey::cli::random_members(farey::cli::Family::fm, farey::Order(1000), 20, 9));
}
