#include <doctest.h>

#include <json.hpp>

#include "algforge/report.hpp"

using namespace algforge;

TEST_SUITE("report") {
    TEST_CASE("digest is FNV-1a 64") {
        CHECK(digest("") == "cbf29ce484222325");
        CHECK(digest("a") == "af63dc4c8601ec8c");
        CHECK(digest("foobar") == "85944171f73967e8");
    }

    TEST_CASE("exit codes") {
        Report r;
        CHECK(r.passed());
        CHECK(r.exit_code() == 0);
        r.add("ok", true);
        CHECK(r.exit_code() == 0);
        r.add("bad", false, "X11", "note");
        CHECK_FALSE(r.passed());
        CHECK(r.exit_code() == 1);
        Report q;
        q.checks.push_back({"maybe", Status::inconclusive, "", ""});
        CHECK(q.exit_code() == 1);
    }

    TEST_CASE("json schema") {
        Report r;
        r.command = "lie";
        r.input_digest = digest("x");
        r.seed = 7;
        r.add("axioms", true);
        r.add("jacobi", false, "2*K2", "nonzero");
        const std::string text = to_json(r);
        const auto j = nlohmann::ordered_json::parse(text);
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items()) keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"command", "input_digest", "checks", "seed", "version"});
        CHECK(j["version"] == "algforge 1.0.0");
        CHECK(j["seed"] == 7);
        CHECK(j["checks"][0]["status"] == "pass");
        CHECK_FALSE(j["checks"][0].contains("witness"));
        CHECK(j["checks"][1]["status"] == "fail");
        CHECK(j["checks"][1]["witness"] == "2*K2");
        CHECK(j["checks"][1]["note"] == "nonzero");
        CHECK(to_json(r) == text);
    }

    TEST_CASE("text layout") {
        Report r;
        r.add("axioms", true);
        r.add("jacobi", false, "2*K2");
        const std::string text = to_text(r);
        CHECK(text.find("[PASS] axioms") != std::string::npos);
        CHECK(text.find("[FAIL] jacobi") != std::string::npos);
        CHECK(text.find("2*K2") != std::string::npos);
        CHECK(text.find("1/2 checks passed") != std::string::npos);
        CHECK(to_string(Status::inconclusive) == "inconclusive");
    }
}
