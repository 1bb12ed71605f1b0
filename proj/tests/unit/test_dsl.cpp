#include <doctest.h>

#include "support.hpp"

using namespace algforge;
using namespace algforge::test;

namespace {

Document random_document(Rng& rng) {
    const std::size_t n = 1 + rng.below(2), m = 1 + rng.below(3);
    const std::vector<std::string> all{"A", "B", "C"};
    std::vector<std::string> gens(all.begin(), all.begin() + long(m));
    std::vector<VectorField> anchor;
    for (std::size_t i = 0; i < m; ++i) {
        VectorField v(n, n);
        for (std::size_t k = 0; k < n; ++k) v[k] = random_poly(rng, n, 2, 2);
        anchor.push_back(v);
    }
    StructureTable table;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Section s(m, n);
            for (std::size_t k = 0; k < m; ++k) s[k] = random_poly(rng, n, 1, 2);
            table[{i, j}] = s;
        }
    Document d;
    d.bundle_name = "R";
    d.algebroid = Algebroid(BaseSpace{default_var_names(n)}, gens, anchor, table);
    d.sections.push_back({"s1", random_section(rng, d.algebroid, 2)});
    d.connections.push_back({"nabla", random_connection(rng, d.algebroid, 1)});
    Endomorphism e;
    for (std::size_t i = 0; i < m; ++i) e.images.push_back(random_section(rng, d.algebroid, 1));
    d.endos.push_back({"T", e});
    PolyMatrix g(m, std::vector<Poly>(m, Poly(n)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) g[i][j] = g[j][i] = random_poly(rng, n, 1, 2);
    d.cometrics.push_back({"g", CoMetric(g)});
    for (unsigned deg = 0; deg <= m; ++deg)
        d.forms.push_back({"f" + std::to_string(deg), random_form(rng, m, n, deg, 2)});
    return d;
}

SourcePos parse_error_pos(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.pos();
    }
    FAIL("no parse error");
    return {};
}

SourcePos semantic_error_pos(const std::string& text) {
    try {
        parse_document(text);
    } catch (const SemanticError& e) {
        return e.pos();
    }
    FAIL("no semantic error");
    return {};
}

const std::string kHeader = "base 2 (x1, x2)\nbundle E rank 2 gens (A, B)\n";

}  // namespace

TEST_SUITE("dsl") {
    TEST_CASE("expression syntax") {
        CHECK(P("2^3*x1^2") == P("8*x1^2"));
        CHECK_THROWS_AS(P("2^3^2"), SemanticError);
        CHECK_THROWS_AS(P("x1^x2"), SemanticError);
        CHECK(P("-x1^2") == -(P("x1") * P("x1")));
        CHECK(P("1/2*x1 + x1/2") == P("x1"));
        CHECK(P("(x1 + x2)*(x1 - x2)") == P("x1^2 - x2^2"));
        CHECK_THROWS_AS(P("2 x1"), ParseError);
        CHECK_THROWS_AS(P("x3"), SemanticError);
        CHECK_THROWS_AS(P("x1 +"), ParseError);
        CHECK_THROWS(P("1/0"));
    }

    TEST_CASE("statements") {
        const Document d = parse_document(kHeader +
                                          "# comment\n"
                                          "anchor A -> x1*d2\n"
                                          "bracket [B, A] = x2*A\n"
                                          "section s = x1*A - B\n"
                                          "form f = (x1 + 1)*w(A)^w(B)\n");
        CHECK(d.bundle_name == "E");
        CHECK(d.algebroid.anchor_of(0) == vf({"0", "x1"}));
        CHECK(d.algebroid.structure(0, 1) == sec(d.algebroid, {"-x2"}));
        CHECK(*d.section("s") == sec(d.algebroid, {"x1", "-1"}));
        CHECK(d.form("f")->component({0, 1}) == P("x1 + 1"));
        CHECK(d.section("missing") == nullptr);
    }

    TEST_CASE("parse errors report position and expectation") {
        const SourcePos p = parse_error_pos(kHeader + "anchor A -> x1*d1 +\n");
        CHECK(p.line >= 3);
        CHECK(parse_error_pos(kHeader + "section s = A $ 2\n").line == 3);
        try {
            parse_document(kHeader + "bogus x\n");
            FAIL("accepted");
        } catch (const ParseError& e) {
            CHECK(e.pos().line == 3);
            CHECK(e.pos().column == 1);
            CHECK_FALSE(e.expected().empty());
            CHECK(e.found().find("bogus") != std::string::npos);
        }
    }

    TEST_CASE("semantic errors") {
        CHECK(semantic_error_pos("bundle E rank 1 gens (A)\n").line == 1);
        CHECK(semantic_error_pos(kHeader + "anchor A -> x1^2*d3\n").line == 3);
        CHECK(semantic_error_pos(kHeader + "bracket [A, A] = B\n").line == 3);
        CHECK(semantic_error_pos(kHeader + "bracket [A, C] = A\n").line == 3);
        CHECK(semantic_error_pos("base 2 (x1, x2)\nbundle E rank 3 gens (A, B)\n").line == 2);
        CHECK(semantic_error_pos(kHeader + "section s = A\nsection s = B\n").line == 4);
        CHECK(semantic_error_pos(kHeader + "section w = A\n").line == 3);
        CHECK(semantic_error_pos(kHeader + "section d1 = A\n").line == 3);
        CHECK(semantic_error_pos(kHeader + "form f = w(A) + x1\n").line == 3);
        CHECK(semantic_error_pos(kHeader + "bracket [A, B] = A\nbracket [B, A] = B\n").line == 4);
        CHECK_THROWS_AS(parse_document(kHeader + "anchor A -> d1\nkernel A\n"), SemanticError);
        CHECK_THROWS_AS(parse_document(kHeader + "kernel Q\n"), SemanticError);
        const Document k = parse_document(kHeader + "anchor A -> d1\nanchor B -> x2*d1\nsection s = x2*A - B\nkernel s\n");
        CHECK(k.kernel_sections().size() == 1);
    }

    TEST_CASE("builtins survive a round trip") {
        for (const auto& name : builtin_names()) {
            CAPTURE(name);
            const Document d = builtin(name);
            const std::string text = serialize(d);
            const Document back = parse_document(text);
            CHECK(back == d);
            CHECK(serialize(back) == text);
        }
    }

    TEST_CASE("random documents survive a round trip") {
        Rng rng(14);
        for (int n = 0; n < 40; ++n) {
            const Document d = random_document(rng);
            const std::string text = serialize(d);
            CAPTURE(text);
            CHECK(parse_document(text) == d);
        }
    }

    TEST_CASE("text helpers") {
        const Algebroid& a = builtin("E0").algebroid;
        CHECK(section_to_string(sec(a, {"x1", "0", "-1"}), a.gen_names(), plane()) == "x1*X11 - X12");
        CHECK(section_to_string(a.zero_section(), a.gen_names(), plane()) == "0");
        CHECK(field_to_string(vf({"x1^2", "1"}), plane()) == "x1^2*d1 + d2");
    }
}
