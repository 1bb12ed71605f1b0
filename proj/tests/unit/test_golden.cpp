#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace algforge;

namespace {

std::string read(const std::string& name) {
    std::ifstream in(std::filesystem::path(ALGFORGE_GOLDEN_DIR) / name);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("golden") {
    TEST_CASE("hand-written E0 matches the builtin") { CHECK(parse_document(read("e0.alg")) == builtin("E0")); }

    TEST_CASE("serialized builtins") {
        const std::vector<std::pair<std::string, std::string>> files{
            {"e0_prime.alg", "E0prime"},   {"e0_prime_lie.alg", "E0prime_lie"}, {"e0_doubleprime.alg", "E0doubleprime"},
            {"e00.alg", "E00"},            {"e01.alg", "E01"},                  {"e02.alg", "E02"},
            {"tangent2.alg", "tangent(2)"}};
        for (const auto& [file, name] : files) {
            CAPTURE(file);
            CHECK(parse_document(read(file)) == builtin(name));
        }
    }

    TEST_CASE("other valid documents") {
        const Document so3 = parse_document(read("so3_action.alg"));
        CHECK(check_lie(so3.algebroid).lie());
        const Document bad = parse_document(read("bad_anchor.alg"));
        CHECK_FALSE(check_axioms(bad.algebroid).ok());
        const Document ex = parse_document(read("exact_forms.alg"));
        CHECK(*ex.form("dx1") == differential(ex.algebroid, Form::function(4, test::P("x1"))));
        for (const char* f : {"so3_action.alg", "bad_anchor.alg", "exact_forms.alg"}) {
            const Document d = parse_document(read(f));
            CHECK(parse_document(serialize(d)) == d);
        }
    }

    TEST_CASE("invalid documents") {
        for (const char* f : {"bad_character.alg", "dangling_operator.alg"}) {
            CAPTURE(f);
            CHECK_THROWS_AS(parse_document(read(std::string("invalid/") + f)), ParseError);
        }
        for (const char* f : {"diagonal_bracket.alg", "missing_base.alg", "kernel_not_in_kernel.alg", "field_out_of_range.alg", "mixed_degrees.alg",
                              "rank_mismatch.alg", "undeclared_generator.alg"}) {
            CAPTURE(f);
            CHECK_THROWS_AS(parse_document(read(std::string("invalid/") + f)), SemanticError);
        }
    }
}
