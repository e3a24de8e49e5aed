#include <gtest/gtest.h>
#include <triflag/io.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace triflag;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TRIFLAG_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const char* name) { return std::string(SAMPLES_DIR) + "/" + name; }

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

int count_of(const std::string& s, const std::string& needle) {
    int k = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
    return k;
}

}  // namespace

TEST(Cli, EnumCounts) {
    auto r = run("enum --b 1,1 --c 1,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 5);
    r = run("enum --b 1,1,1 --c 1,1,1 --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).size(), 28u);
    EXPECT_EQ(count_lines(run("enum --b 2 --c 1,1").out), 2);
}

TEST(Cli, HasseFormatsAgree) {
    const auto dot = run("hasse --b 1,1,1 --c 1,1,1");
    EXPECT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(count_of(dot.out, " -> "), 72);
    EXPECT_EQ(count_of(dot.out, "[label="), 28 + 72);
    const auto js = json::parse(run("hasse --b 1,1,1 --c 1,1,1 --format json").out);
    EXPECT_EQ(js["elements"].size(), 28u);
    EXPECT_EQ(js["covers"].size(), 72u);
    EXPECT_EQ(run("hasse --b 1,1,1 --c 1,1,1").out, dot.out);
    EXPECT_EQ(run("hasse --b 1,1 --c 1,1 --format text").out.rfind("5 elements, 6 covers", 0), 0u);
}

TEST(Cli, Compare) {
    auto r = run("compare " + sample("e_123_3.json") + " " + sample("z_321_12.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("incomparable\n", 0), 0u);
    EXPECT_NE(r.out.find("lhs <= rhs fails at rbar(0,2) lhs=0 rhs=1"), std::string::npos);
    EXPECT_EQ(run("compare " + sample("min_n3.json") + " " + sample("max_n3.json")).out.rfind("<\n", 0), 0u);
    EXPECT_EQ(run("compare " + sample("max_n3.json") + " " + sample("min_n3.json")).out.rfind(">\n", 0), 0u);
    EXPECT_EQ(run("compare " + sample("z_321_12.json") + " " + sample("z_321_12.json")).out, "=\n");
    auto js = json::parse(run("compare --format json " + sample("e_123_3.json") + " " + sample("z_321_12.json")).out);
    EXPECT_EQ(js["verdict"], "incomparable");
    EXPECT_EQ(js["forward"]["table"], "rbar");
}

TEST(Cli, Chain) {
    auto r = run("chain " + sample("min_n2.json") + " " + sample("max_n2.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("2 moves\n", 0), 0u);
    r = run("chain " + sample("min_n3.json") + " " + sample("max_n3.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("5 moves\n", 0), 0u);
    EXPECT_EQ(count_lines(r.out), 6);
    EXPECT_EQ(run("chain " + sample("e_123_3.json") + " " + sample("z_321_12.json")).code, 3);
}

TEST(Cli, Verify) {
    auto r = run("verify --b 1,1,1 --c 1,1,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("28 elements, 72 covers\n", 0), 0u);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    r = run("verify --b 1,1 --c 1,1 --witness");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("6 of 6 edges geometrically verified"), std::string::npos);
    auto js = json::parse(run("verify --b 2,1 --c 1,1,1 --format json").out);
    EXPECT_EQ(js["pass"], true);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("enum --b 1,1").code, 2);
    EXPECT_EQ(run("enum --b 1,1 --c 1,1,1").code, 2);
    EXPECT_EQ(run("enum --b 1,x --c 1,1").code, 2);
    EXPECT_EQ(run("compare " + sample("min_n2.json") + " " + sample("max_n3.json")).code, 2);
    EXPECT_EQ(run("compare /nonexistent.json " + sample("max_n3.json")).code, 2);
    EXPECT_EQ(run("enum --b 1,1 --c 1,1 --format dot").code, 2);
}
