#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
    const std::string cmd = std::string(CONVCODE_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& name) { return std::string(CONVCODE_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, InfoLine) {
    const auto r = cli("info " + data("e213.gm"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n=2 k=1 delta=3 indices=[3] basic=yes minimal=yes memory=3\n");
}

TEST(Cli, EqualReportsDifferingPair) {
    auto r = cli("equal " + data("g1.gm") + " " + data("g2.gm"));
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "generalized adjacency matrices differ\n");
    r = cli("equal " + data("g1.gm") + " " + data("g1.gm"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "generalized adjacency matrices are equal; perm=[0,1]\n");
}

TEST(Cli, SpectrumJsonSlices) {
    const auto r = cli("spectrum " + data("e213.gm") + " --trunc 12 --json");
    ASSERT_EQ(r.status, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "spectrum");
    EXPECT_EQ(j["truncation"], 12);
    std::map<std::pair<int, int>, int> got;
    for (const auto& c : j["omega"])
        for (const auto& [a, n] : c["terms"].items())
            if (std::stoi(a) <= 9) got[{c["l"].get<int>(), std::stoi(a)}] = n.get<int>();
    const std::map<std::pair<int, int>, int> expect = {
        {{5, 6}, 1}, {{4, 7}, 1}, {{6, 7}, 1},  {{7, 7}, 1},  {{6, 8}, 1}, {{7, 8}, 1},
        {{8, 8}, 1}, {{9, 8}, 2}, {{8, 9}, 4}, {{9, 9}, 1}, {{10, 9}, 3}, {{11, 9}, 3}};
    EXPECT_EQ(got, expect);
}

TEST(Cli, JsonIsByteStable) {
    const auto a = cli("distances " + data("g2.gm") + " --json");
    const auto b = cli("distances " + data("g2.gm") + " --json");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BlockCodes) {
    auto r = cli("ccf " + data("hamming74.gm"));
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("block code"), std::string::npos);
    EXPECT_EQ(cli("diagram " + data("hamming74.gm")).status, 2);
    r = cli("spectrum " + data("hamming74.gm") + " --trunc 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "T=1\nOmega = 7LW^3 + 7LW^4 + LW^7\nPhi = 1 + 7LW^3 + 7LW^4 + LW^7\n");
}

TEST(Cli, DotMatchesGolden) {
    const auto r = cli("diagram " + data("g1.gm") + " --dot");
    EXPECT_EQ(r.status, 0);
    std::ifstream in(std::string(CONVCODE_GOLDEN_DIR) + "/g1.dot");
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(r.out, golden.str());
}

TEST(Cli, ExitCodes) {
    auto r = cli("info " + data("missing.gm"));
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("cannot open"), std::string::npos);

    const std::string bad = ::testing::TempDir() + "bad.gm";
    std::ofstream(bad) << "field p=2 m=1\nk=1 n=3\n1 ; 0 1\n";
    r = cli("info " + bad);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;

    EXPECT_EQ(cli("oracle " + data("e213.gm") + " --lmax 20 --budget 100").status, 3);
    EXPECT_EQ(cli("adjacency " + data("eccf_f16.gm")).status, 3);
    EXPECT_EQ(cli("nonsense").status, 2);
    EXPECT_EQ(cli("mono-equiv " + data("g1.gm") + " " + data("g2.gm")).status, 1);
    EXPECT_EQ(cli("macwilliams " + data("e213.gm")).status, 2);
}

TEST(Cli, OtherCommands) {
    auto r = cli("lemma-a1 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "gamma=2 bijections=24 fixing_zero=6 satisfying=1 holds=yes\n");
    r = cli("recover " + data("eccf_f16.gm"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("k=2 gamma=3 indices=[1,2]", 0), 0u) << r.out;
    r = cli("oracle " + data("g1.gm") + " --lmax 5");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("matches spectrum: yes"), std::string::npos);
    r = cli("macwilliams " + data("g2.gm"));
    EXPECT_EQ(r.status, 0);
    r = cli("dual " + data("e213.gm"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "field p=2 m=1\nk=1 n=2\n1 0 1 1 ; 1 1 1 1\n");
    r = cli("distances " + data("e213.gm"));
    EXPECT_NE(r.out.find("free_distance=6 certified=yes"), std::string::npos) << r.out;
}
