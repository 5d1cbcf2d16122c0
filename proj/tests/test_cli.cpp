#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mcg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

// JSON lines with timing fields removed.
std::vector<nlohmann::json> untimed(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto j = nlohmann::json::parse(line);
        j.erase("ms");
        out.push_back(j);
    }
    return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "--suite", "thm2", "--genus", "2", "--rep", "both"}).code == 0);
    Run thm3 = run({"verify", "--suite", "thm3", "--genus", "2", "--rep", "pi1"});
    CHECK(thm3.code == 0);
    CHECK(thm3.out.find("M4 [M4] g=2 pi1 fails expected") != std::string::npos);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"verify", "--suite", "thm1", "--genus", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "thm2", "--rep", "hom"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify json lines are deterministic and follow the schema") {
    auto a = temp("mcgkit_cli_a.jsonl"), b = temp("mcgkit_cli_b.jsonl");
    REQUIRE(run({"verify", "--suite", "thm3", "--rep", "both", "--jobs", "2", "--json", a.string()}).code == 0);
    REQUIRE(run({"verify", "--suite", "thm3", "--rep", "both", "--json", b.string()}).code == 0);
    auto ja = untimed(slurp(a)), jb = untimed(slurp(b));
    CHECK(ja == jb);
    REQUIRE(ja.size() > 1);
    for (std::size_t i = 0; i + 1 < ja.size(); ++i) {
        for (const char* key : {"id", "tag", "genus", "rep", "status"}) CHECK(ja[i].contains(key));
        if (ja[i]["status"] == "fails") CHECK(ja[i].contains("witness"));
    }
    CHECK(ja.back()["summary"] == true);
    CHECK(ja.back()["unexpected"] == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("expand and eval") {
    Run s = run({"expand", "--symbol", "s", "--genus", "2"});
    CHECK(s.code == 0);
    CHECK(s.out == "b1 a1 a1 b1\n");
    CHECK(run({"expand", "--symbol", "t9", "--genus", "2"}).code == 2);
    Run e = run({"eval", "--word", "b1", "--genus", "1", "--rep", "sp"});
    CHECK(e.code == 0);
    CHECK(run({"eval", "--word", "b1 b1'", "--genus", "2"}).out == "x1 -> x1\ny1 -> y1\nx2 -> x2\ny2 -> y2\n");
}

TEST_CASE("farey") {
    Run r = run({"farey", "reduce", "--path", "1/0 0/1 1/1 1/0", "--json", "-"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["triangles"] == 1);
    CHECK(j["valid"] == true);
    CHECK(run({"farey", "reduce", "--path", "1/0 1/2 1/0"}).code == 2);
    CHECK(run({"farey", "connect", "--from", "1/0", "--to", "3/2"}).out == "1/0 1/1 3/2\n");
    Run a = run({"farey", "random", "--count", "200", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"farey", "random", "--count", "200", "--seed", "3"}).out);
}

TEST_CASE("rewrite") {
    Run s = run({"rewrite", "search", "--lhs", "(a1 b1) * a1", "--rhs", "b1", "--genus", "1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("end: b1") != std::string::npos);
    CHECK(run({"rewrite", "search", "--lhs", "a1", "--rhs", "b1", "--genus", "1", "--max-steps", "3"}).code == 1);

    auto script = temp("mcgkit_cli.script");
    std::ofstream(script) << s.out;
    CHECK(run({"rewrite", "replay", "--script", script.string()}).code == 0);
    std::ofstream(script) << "genus: 1\nstart: a1 b1\nend: b1 a1\n";
    CHECK(run({"rewrite", "replay", "--script", script.string()}).code == 1);
    CHECK(run({"rewrite", "replay", "--script", "/nonexistent.script"}).code == 2);
    std::filesystem::remove(script);
}

TEST_CASE("catalog export") {
    auto out = temp("mcgkit_cli_thm2.txt");
    CHECK(run({"catalog", "export", "--name", "thm2", "--genus", "2", "--out", out.string()}).code == 0);
    CHECK(slurp(out).rfind("presentation thm2 genus 2\n", 0) == 0);
    CHECK(run({"catalog", "export", "--name", "nope", "--genus", "2", "--out", out.string()}).code == 2);
    std::filesystem::remove(out);
}

}  // TEST_SUITE
