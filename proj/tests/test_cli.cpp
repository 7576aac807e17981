#include <doctest.h>

#include <sstream>

#include "branchcov/cli.hpp"
#include "branchcov/report.hpp"

using namespace branchcov;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("betti table")
{
    auto r = run({"--format", "json", "betti", "--d", "4"});
    CHECK(r.code == cli::pass);
    CHECK(r.out.find("\"betti\":[1,0,1,0,2,0,1]") != std::string::npos);
}

TEST_CASE("factor-count by both methods")
{
    auto r = run({"--format", "text", "factor-count", "--d", "3", "--mu", "2,1", "--nu", "2,1", "--lam", "3",
                  "--method", "both"});
    CHECK(r.code == cli::pass);
    CHECK(r.out == "brute 3\nchars 3\nmatch\n");
}

TEST_CASE("cup output in json")
{
    auto r = run({"--no-cache", "--format", "json", "cup", "--d", "4", "--mu", "2,1,1", "--nu", "2,1,1"});
    CHECK(r.code == cli::pass);
    CHECK(r.out == "{\"coeffs\":[{\"c\":\"3\",\"lam\":\"3,1\"},{\"c\":\"2\",\"lam\":\"2,2\"}],\"d\":4}\n");
}

TEST_CASE("usage errors name the flag")
{
    auto missing = run({"betti"});
    CHECK(missing.code == cli::usage);
    CHECK(missing.err.find("--d") != std::string::npos);
    auto format = run({"--format", "yaml", "betti", "--d", "3"});
    CHECK(format.code == cli::usage);
    CHECK(format.err.find("--format") != std::string::npos);
    auto big = run({"factor-count", "--d", "13", "--mu", "2", "--nu", "2", "--lam", "2"});
    CHECK(big.code == cli::usage);
    auto mu = run({"factor-count", "--d", "3", "--mu", "2,2", "--nu", "2,1", "--lam", "3"});
    CHECK(mu.code == cli::usage);
    CHECK(mu.err.find("--mu") != std::string::npos);
    CHECK(run({"nonsense"}).code == cli::usage);
}

TEST_CASE("stable table is constant down each column in range")
{
    auto r = run({"--format", "csv", "stable-table", "--max-d", "12"});
    CHECK(r.code == cli::pass);
    CHECK(r.out.find("\r\n") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical")
{
    std::vector<std::vector<std::string>> commands{
        {"--seed", "17", "--trials", "50", "monoid-check", "--check", "all", "--max-d", "4"},
        {"--seed", "17", "--trials", "200", "cover-check", "--check", "lemma", "--max-d", "5"},
        {"--format", "csv", "chars", "--d", "5"},
        {"--format", "text", "ring-verify", "--d", "5"},
    };
    for (const auto& cmd : commands) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == cli::pass);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    auto seeded = run({"--seed", "18", "--trials", "50", "monoid-check", "--check", "all", "--max-d", "4"});
    CHECK(seeded.out != run(commands[0]).out);
}

TEST_CASE("report emission")
{
    Report empty;
    empty.csv_header = {"d", "b0"};
    CHECK(emit(empty, Format::csv) == "d,b0\r\n");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("plain") == "plain");

    Report r;
    r.json["x"] = 1;
    r.json["a"] = 2;
    r.text = {"line"};
    CHECK(emit(r, Format::json) == "{\"a\":2,\"x\":1}\n");
    r.fail("counterexample");
    r.fail("second");
    auto j = emit(r, Format::json);
    CHECK(j.find("\"passed\":false") != std::string::npos);
    CHECK(j.find("counterexample") != std::string::npos);
    CHECK(j.find("second") == std::string::npos);
    CHECK(emit(r, Format::text).find("CONTRACT VIOLATION") != std::string::npos);
    CHECK(emit(r, Format::json) == j);
}
