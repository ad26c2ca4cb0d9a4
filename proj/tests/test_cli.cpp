#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(COSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t lines(const std::string& s) {
    std::size_t c = 0;
    for (char ch : s) c += ch == '\n';
    return c;
}

} // namespace

TEST(Cli, Poly) {
    auto r = run("poly --p 4 --k 1 --q 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x(x+1)^2(x^3-2x^2-5x+4)");
    EXPECT_EQ(run("poly --p 3 --k 2 --q 1").code, 2);
    auto j = run("poly --p 5 --k 2 --q 3 --format json");
    EXPECT_EQ(j.code, 0);
    auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["cubic"], nlohmann::json::array({"12", "-10", "-3", "1"}));
}

TEST(Cli, Mates) {
    auto r = run("mates --p 8 --k 3 --q 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1 mate"), std::string::npos);
    EXPECT_NE(r.out.find("P3 (2,-3,6) ∪ 1K_1"), std::string::npos);
    auto das = run("mates --p 8 --k 1 --q 1");
    EXPECT_NE(das.out.find("DAS, 0 mates"), std::string::npos);
    auto p5 = run("mates --p 11 --k 6 --q 14 --format json");
    auto j = nlohmann::json::parse(p5.out);
    ASSERT_EQ(j["mates"].size(), 1u);
    EXPECT_EQ(j["mates"][0]["type"], nlohmann::json::array({1, 2, -10, 8, 1}));
    EXPECT_EQ(j["mates"][0]["isolated"], 3);
    EXPECT_EQ(run("mates --p 8 --k 3 --q 4 --format xml").code, 2);
}

TEST(Cli, CensusSummaryAndFile) {
    auto path = std::filesystem::temp_directory_path() / "cospec_cli_census.csv";
    auto r = run("census --p 4 --k 1:1 --q 1:1 --out " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "DAS=1 non-DAS=0\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(lines(ss.str()), 2u);
    std::filesystem::remove(path);
}

TEST(Cli, CensusIsIndependentOfJobs) {
    auto a = run("census --p 8 --k 1:6 --q 1:30 --format csv --jobs 1");
    auto b = run("census --p 8 --k 1:6 --q 1:30 --format csv --jobs 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CensusErrors) {
    EXPECT_EQ(run("census --p 8 --k 0:3 --q 1:2").code, 2);
    EXPECT_EQ(run("census --p 8 --k 1:3 --q 5:2").code, 2);
    EXPECT_EQ(run("census --p 8 --k 1:3 --q 1:2 --jobs zero").code, 2);
    EXPECT_EQ(run("census --p 4 --k 1:1 --q 1:1 --out /nonexistent-dir/x.csv").code, 4);
}

TEST(Cli, Verify) {
    for (const char* args : {"verify --p 10 --k 1 --q 7", "verify --p 9 --k 1 --q 36", "verify --p 3 --k 1 --q 1"}) {
        auto r = run(args);
        EXPECT_EQ(r.code, 0) << args;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << args;
    }
    EXPECT_NE(run("verify --p 9 --k 1 --q 36").out.find("P4 (4,3,-8,3) ∪ 27K_1"), std::string::npos);
    EXPECT_NE(run("verify --p 3 --k 1 --q 1").out.find("DAS"), std::string::npos);
}

TEST(Cli, Graph) {
    auto e = run("graph --family pineapple --p 4 --k 1 --q 1 --format edgelist");
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(lines(e.out), 7u);
    auto g6 = run("graph --family cs --indep 3 --clique 36 --format graph6");
    EXPECT_EQ(g6.code, 0);
    EXPECT_EQ(g6.out[0], static_cast<char>(63 + 39));
    EXPECT_EQ(lines(g6.out), 1u);
    auto me = run("graph --family mixedext --base 5 --type 1,2,-4,2,1 --format edgelist");
    EXPECT_EQ(me.code, 0);
    EXPECT_EQ(lines(me.out), 22u);
    EXPECT_EQ(run("graph --family cs --indep 0 --clique 2").code, 2);
    EXPECT_EQ(run("graph --family mixedext --type 1,0,2").code, 2);
    EXPECT_EQ(run("graph --family mixedext --base 4 --type 1,2,3").code, 2);
}

TEST(Cli, Scan) {
    auto r = run("scan --orders 5:12");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 missed, 0 spurious"), std::string::npos);
    EXPECT_EQ(run("scan --order 30 --cap 24").code, 2);
    EXPECT_EQ(run("scan --order 10 --cap 4").code, 2);
    auto j = run("scan --order 10 --format json");
    EXPECT_TRUE(nlohmann::json::parse(j.out)["passed"].get<bool>());
}

TEST(Cli, Usage) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("mates --p 5").code, 2);
    EXPECT_EQ(run("mates --p x --k 1 --q 1").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}
