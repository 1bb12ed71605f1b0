#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algforge/cli.hpp"
#include "algforge/commands.hpp"
#include "support.hpp"

using namespace algforge;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("exit codes") {
        CHECK(run({"check", "builtin:E0"}).code == 0);
        CHECK(run({"lie", "builtin:E0"}).code == 1);
        CHECK(run({"lie", "builtin:E0prime_lie"}).code == 0);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"check"}).code == 2);
        CHECK(run({"check", "builtin:E0", "--nope"}).code == 2);
        CHECK(run({"check", "builtin:Nope"}).code == 2);
        CHECK(run({"check", "/nonexistent/file.alg"}).code == 2);
        CHECK(run({"--version"}).code == 0);
        CHECK(run({"--help"}).code == 0);
        CHECK(run({"connection-report", "builtin:E0", "--connection", "missing"}).code == 2);
    }

    TEST_CASE("lie report lists the failing triples") {
        const Run r = run({"lie", "builtin:E0"});
        CHECK(r.out.find("X11, X21, X12") != std::string::npos);
        CHECK(r.out.find("X21, X12, X22") != std::string::npos);
    }

    TEST_CASE("json output is deterministic and well formed") {
        const Run a = run({"--json", "--seed", "3", "jacobiator", "builtin:E0", "--triples", "1,2,3"});
        const Run b = run({"--json", "--seed", "3", "jacobiator", "builtin:E0", "--triples", "X11,X21,X12"});
        CHECK(a.code == 1);
        CHECK(a.out == b.out);
        const auto j = nlohmann::json::parse(a.out);
        CHECK(j["command"] == "jacobiator");
        CHECK(j["seed"] == 3);
        CHECK(j["checks"].size() == 1);
        CHECK(j["input_digest"] == digest(serialize(builtin("E0"))));
    }

    TEST_CASE("triples") {
        const Document d = builtin("E0");
        CHECK(parse_triple(d, "1,2,3") == Triple{0, 1, 2});
        CHECK(parse_triple(d, "X22, X11 ,X12") == Triple{3, 0, 2});
        CHECK_THROWS_AS(parse_triple(d, "1,2"), UsageError);
        CHECK_THROWS_AS(parse_triple(d, "0,1,2"), UsageError);
        CHECK_THROWS_AS(parse_triple(d, "X11,X21,Q"), UsageError);
    }

    TEST_CASE("derive writes a document that parses and is Lie") {
        const std::string out = (std::filesystem::temp_directory_path() / "algforge_unit_derived.alg").string();
        CHECK(run({"derive", "builtin:E0", "--connection", "torsion_free", "-o", out}).code == 0);
        CHECK(run({"lie", out}).code == 0);
        CHECK(run({"derive", "builtin:E0", "--connection", "flat", "-o", out}).code == 1);
    }

    TEST_CASE("documents from files") {
        const std::string good = temp_file("algforge_unit_good.alg", serialize(builtin("E01")));
        const std::string bad = temp_file("algforge_unit_bad.alg", "base 1 (x)\nbundle E rank 1 gens (A)\nanchor A -> d2\n");
        CHECK(run({"lie", good}).code == 0);
        const Run r = run({"check", bad});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 3") != std::string::npos);
    }

    TEST_CASE("max degree from the environment") {
        ::setenv("ALGFORGE_MAX_DEGREE", "x", 1);
        CHECK(run({"check", "builtin:E0"}).code == 2);
        ::setenv("ALGFORGE_MAX_DEGREE", "2", 1);
        CHECK(run({"cohomology", "builtin:E0", "--form", "w21"}).code != 2);
        ::unsetenv("ALGFORGE_MAX_DEGREE");
    }

    TEST_CASE("other commands") {
        CHECK(run({"connection-report", "builtin:E0", "--connection", "torsion_free"}).code == 0);
        CHECK(run({"charclass", "builtin:E0", "--connection", "torsion_free", "--max-k", "1"}).code == 0);
        CHECK(run({"transgression", "builtin:E0", "--c1", "flat", "--c2", "torsion_free"}).code == 0);
        CHECK(run({"nijenhuis", "builtin:E0", "--endo", "J"}).code == 0);
        const Run obs = run({"--json", "--max-degree", "1", "obstruction", "builtin:E0", "--triple", "1,2,3"});
        CHECK(obs.code == 0);
        CHECK(obs.out.find("infeasible") != std::string::npos);
    }
}
