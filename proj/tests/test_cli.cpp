#include <sstream>

#include "json.hpp"
#include "test_util.hpp"
#include "tlab/cli.hpp"
#include "tlab/constructions.hpp"

using namespace tlab;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;

    std::vector<std::string> lines() const {
        std::vector<std::string> v;
        std::istringstream s(out);
        for (std::string l; std::getline(s, l);) v.push_back(l);
        return v;
    }
    Json last_json() const { return Json::parse(lines().back()); }
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Construct) {
    const auto r = cli({"construct", "T3(6)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, to_mcnf(turan3(6)));
    const auto f = parse_mcnf(r.out);
    EXPECT_EQ(f.clauses.size(), 6u);
}

TEST(Cli, CountFromStdin) {
    const auto r = cli({"count", "--t", "2"}, to_mcnf(test::t5()));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.last_json();
    EXPECT_EQ(j["record"], "count");
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["tau"], 2);
    EXPECT_EQ(j["count"], 7);

    const auto d = cli({"count", "-"}, to_mcnf(clique(4, 3)));
    EXPECT_EQ(d.last_json()["t"], 2);
    EXPECT_EQ(d.last_json()["count"], 6);
}

TEST(Cli, EnumerateCertify) {
    const auto f = build_family({FormulaType::T0, 0, 2});
    const auto r = cli({"enumerate", "--mode", "both", "--certify", "--stats-json"}, to_mcnf(f));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = r.lines();
    ASSERT_EQ(lines.size(), 9u + 3u);
    for (int i = 0; i < 9; ++i) EXPECT_NE(lines[i].front(), '{');
    const auto cert = Json::parse(lines[9]);
    EXPECT_EQ(cert["record"], "cert");
    EXPECT_TRUE(cert["ok"].get<bool>());
    EXPECT_EQ(cert["count"], 9);
    EXPECT_EQ(Json::parse(lines[10])["mode"], "structured");
    EXPECT_EQ(Json::parse(lines[11])["mode"], "generic");
}

TEST(Cli, EnumerateLinesAreOneBased) {
    const auto r = cli({"enumerate"}, "p mcnf 3 1\n1 2 3\n");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n2\n3\n");
}

TEST(Cli, Classify) {
    const auto r = cli({"classify"}, to_mcnf(test::t5()));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.last_json();
    EXPECT_EQ(j["record"], "classify");
    EXPECT_EQ(j["type"], "0");
    EXPECT_EQ(j["tau"], 2);
    EXPECT_TRUE(j["property"].is_string());
    EXPECT_TRUE(j["odd_s"].get<bool>());

    const auto e = cli({"classify"}, "p mcnf 3 0\n");
    EXPECT_TRUE(e.last_json()["property"].is_null());

    EXPECT_EQ(cli({"classify"}, "p mcnf 3 1\n2\n").code, 2);
}

TEST(Cli, Bound) {
    const auto r = cli({"bound", "--type", "0", "--s", "1", "--t", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.last_json()["value_num"], "7");
    EXPECT_EQ(r.last_json()["value_den"], "1");

    const auto b = cli({"bound", "--type", "0", "--boundary", "s_eq_2t", "--t", "3"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(b.last_json()["boundary"], "s_eq_2t");

    EXPECT_EQ(cli({"bound", "--type", "9", "--t", "2"}).code, 2);
    EXPECT_EQ(cli({"bound", "--type", "0", "--boundary", "nope", "--t", "2"}).code, 2);
}

TEST(Cli, Search) {
    const auto r = cli({"search", "--n", "5", "--t", "2", "--dump"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.lines().front());
    EXPECT_EQ(j["max_count"], 7);
    EXPECT_NE(r.out.find("c argmax 1\np mcnf 5"), std::string::npos);
    EXPECT_EQ(cli({"search", "--n", "7", "--t", "3"}).code, 2);
}

TEST(Cli, Circuit) {
    const auto r = cli({"circuit", "--n", "8", "--t", "4", "--restarts", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.last_json();
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(j["lower_bound"], "2");
    EXPECT_GE(j["size"].get<int>(), 2);
    EXPECT_EQ(cli({"circuit", "--n", "5", "--t", "2", "--seed", "K(4,3)"}).code, 2);
}

TEST(Cli, AuditStrictness) {
    const auto r = cli({"audit"});
    EXPECT_EQ(r.code, 0);
    int not_ok = 0;
    for (const auto& l : r.lines()) not_ok += !Json::parse(l)["ok"].get<bool>();
    EXPECT_EQ(not_ok, 1);
    EXPECT_EQ(cli({"audit", "--strict"}).code, 1);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"bound", "--type", "0"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
    EXPECT_EQ(cli({"construct", "Q(3)"}).code, 2);
    EXPECT_EQ(cli({"count"}, "p mcnf x\n").code, 2);
    const auto m = cli({"enumerate", "--t", "3"}, to_mcnf(clique(4, 3)));
    EXPECT_EQ(m.code, 2);
    EXPECT_FALSE(m.err.empty());
    EXPECT_EQ(cli({"count", "/nonexistent/file.mcnf"}).code, 2);
}
