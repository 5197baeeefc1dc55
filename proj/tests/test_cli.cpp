#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("reduce") {
    RunResult r = run("reduce -n 2 \"a A b\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "b\n");
}

TEST_CASE("abelianize") {
    RunResult r = run("abelianize -n 2 \"a b a^-1 b\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 2\n");
}

TEST_CASE("subgroup report") {
    RunResult r = run("subgroup -n 2 \"a^3\" \"b\" \"a b a^-1\" \"a^2 b a^-2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "index: 3\n"
          "rank: 4\n"
          "normal: true\n"
          "basis: a^3, b, a b a^-1, a^2 b a^-2\n");
}

TEST_CASE("member") {
    CHECK(run("member -n 2 -w \"a^3\" \"a^3\" \"b\"").out == "true\n");
    CHECK(run("member -n 2 -w \"a\" \"a^3\" \"b\"").out == "false\n");
}

TEST_CASE("enumerate json counts") {
    RunResult r = run("enumerate -n 2 -e 3 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("count") == 13);
    CHECK(j.at("classCount") == 7);
    CHECK(j.at("normalCount") == 4);
    CHECK(j.at("subgroups").size() == 13);
    for (const auto& rec : j.at("subgroups")) {
        CHECK(rec.at("index") == 3);
        CHECK(rec.at("rank") == 4);
    }
}

TEST_CASE("classes") {
    RunResult r = run("classes -n 2 -e 2 --format json");
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("classes").size() == 3);
    for (const auto& cls : j.at("classes"))
        CHECK(cls.at("normal") == true);
}

TEST_CASE("construct cyclic-cover") {
    RunResult r = run("construct cyclic-cover -n 2 -k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "index: 3\n"
          "rank: 4\n"
          "normal: true\n"
          "basis: a, b a b^-1, b^2 a b^-2, b^3\n"
          "cycle generator: b\n");
}

TEST_CASE("construct infinite-example") {
    RunResult r = run("construct infinite-example -r 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("index: infinite\n") != std::string::npos);
    CHECK(r.out.find("rank: 4\n") != std::string::npos);
    CHECK(r.out.find("normal: false\n") != std::string::npos);
}

TEST_CASE("exists") {
    CHECK(run("exists subgroup --ambient 2 --sub 5").out == "true\n");
    CHECK(run("exists subgroup --ambient 1 --sub 2").out == "false\n");
    CHECK(run("exists normal --ambient 2 --sub 4").out == "true\n");
    CHECK(run("exists normal --ambient 3 --sub 4").out == "false\n");
    CHECK(run("exists quotient --from 3 --onto 2").out == "true\n");
    CHECK(run("exists quotient --from 2 --onto 3").out == "false\n");
}

TEST_CASE("export round trips through the module parser") {
    RunResult r = run("export -n 2 \"a b a^-1\" --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("rank") == 2);
    CHECK(j.at("vertices") == 2);

    RunResult dot = run("export -n 2 \"a\" \"b\"");
    CHECK(dot.out.find("digraph cover {") != std::string::npos);
    CHECK(dot.out.find("doublecircle") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("reduce -n 2 \"z\"").exit_code == 1);   // domain error
    CHECK(run("reduce").exit_code == 2);               // usage error
    CHECK(run("frobnicate").exit_code == 2);           // unknown verb
    CHECK(run("enumerate -n 2 -e 9 --cap 10").exit_code == 1);  // cap guard
}

TEST_CASE("byte-identical determinism") {
    std::string a = run("enumerate -n 2 -e 3 --format json").out;
    std::string b = run("enumerate -n 2 -e 3 --format json").out;
    CHECK(a == b);
    CHECK(!a.empty());
    CHECK(a.back() == '\n');
}
