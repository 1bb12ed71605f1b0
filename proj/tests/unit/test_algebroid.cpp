#include <doctest.h>

#include "support.hpp"

using namespace algforge;
using namespace algforge::test;

namespace {

const Document& e0() {
    static const Document d = builtin("E0");
    return d;
}

const Algebroid& E() { return e0().algebroid; }

Section K1() { return *e0().section("K1"); }
Section K2() { return *e0().section("K2"); }

}  // namespace

TEST_SUITE("algebroid") {
    TEST_CASE("E0 frame, anchor and brackets") {
        CHECK(E().gen_names() == std::vector<std::string>{"X11", "X21", "X12", "X22"});
        CHECK(anchor_apply(E(), E().unit(1)) == vf({"0", "x1^2"}));
        CHECK(anchor_apply(E(), E().unit(2)) == vf({"x2^2", "0"}));
        CHECK(anchor_apply(E(), K1()).is_zero());
        CHECK(anchor_apply(E(), K2()).is_zero());
        CHECK(E().structure(0, 1) == sec(E(), {"0", "2*x1"}));
        CHECK(E().structure(1, 0) == sec(E(), {"0", "-2*x1"}));
        CHECK(E().structure(1, 2) == sec(E(), {"2*x2", "0", "0", "-2*x1"}));
        CHECK(E().structure(0, 3).is_zero());
        CHECK(E().structure(2, 2).is_zero());
        CHECK(E().upper_table().size() == 5);
        CHECK(check_axioms(E()).ok());
        CHECK(check_axioms(E()).pairs.size() == 6);
    }

    TEST_CASE("Leibniz example") {
        CHECK(bracket(E(), E().unit(0), P("x1") * E().unit(3)) == sec(E(), {"0", "0", "0", "x1^2"}));
    }

    TEST_CASE("Jacobiator table") {
        const LieReport r = check_lie(E());
        CHECK(r.axioms_ok);
        CHECK_FALSE(r.lie());
        REQUIRE(r.triples.size() == 4);
        REQUIRE(r.nonzero().size() == 2);
        CHECK(r.triples[0].value == Scalar(2) * K2());
        CHECK(r.triples[1].value.is_zero());
        CHECK(r.triples[2].value.is_zero());
        CHECK(r.triples[3].value == Scalar(2) * K1());
    }

    TEST_CASE("kernel bracket table") {
        auto br = [](const Section& k, std::size_t g) { return bracket(E(), k, E().unit(g)); };
        CHECK(br(K1(), 0).is_zero());
        CHECK(br(K1(), 2).is_zero());
        CHECK(br(K2(), 1).is_zero());
        CHECK(br(K2(), 3).is_zero());
        CHECK(br(K1(), 3) == P("-2*x2") * K1());
        CHECK(br(K1(), 1) == P("2*x1") * K2());
        CHECK(br(K2(), 0) == P("-2*x1") * K2());
        CHECK(br(K2(), 2) == P("2*x2") * K1());
        CHECK(bracket(E(), K1(), K2()) == P("2*x1^2*x2") * K1() + P("2*x1*x2^2") * K2());
    }

    TEST_CASE("the itemized variant breaks anchor compatibility") {
        const AxiomReport r = check_axioms(e0_itemized_variant());
        CHECK_FALSE(r.ok());
        CHECK(r.pairs[0].defect == vf({"0", "2*x1^3 - 2*x1^2*x2"}));
    }

    TEST_CASE("anchor rank") {
        const std::vector<Scalar> origin{0, 0}, generic{1, 2}, axis{0, 3};
        CHECK(anchor_rank_at(E(), origin) == 0);
        CHECK(anchor_rank_at(E(), generic) == 2);
        CHECK(anchor_rank_at(E(), axis) == 2);
    }

    TEST_CASE("bracket is skew, Leibniz and the Jacobiator is tensorial") {
        Rng rng(5);
        for (int n = 0; n < 25; ++n) {
            const Section x = random_section(rng, E(), 2), y = random_section(rng, E(), 2),
                          z = random_section(rng, E(), 1);
            const Poly f = random_poly(rng, 2, 2);
            CHECK(bracket(E(), x, y) == -bracket(E(), y, x));
            CHECK(bracket(E(), x, f * y) == f * bracket(E(), x, y) + apply(anchor_apply(E(), x), f) * y);
            CHECK(jacobiator(E(), f * x, y, z) == f * jacobiator(E(), x, y, z));
            CHECK(anchor_apply(E(), bracket(E(), x, y)) ==
                  vf_bracket(anchor_apply(E(), x), anchor_apply(E(), y)));
        }
    }

    TEST_CASE("kernel-valued modification") {
        BracketModifier b;
        b.values[{1, 2}] = K2();
        const Algebroid m = modify_bracket(E(), b);
        CHECK(check_axioms(m).ok());
        CHECK(m.structure(1, 2) == E().structure(1, 2) + K2());
        CHECK_FALSE(check_lie(m).lie());
        BracketModifier bad;
        bad.values[{0, 1}] = E().unit(0);
        CHECK_THROWS_AS(modify_bracket(E(), bad), Error);
    }

    TEST_CASE("Lie examples") {
        CHECK(check_lie(builtin("E0prime_lie").algebroid).lie());
        CHECK(check_lie(builtin("E01").algebroid).lie());
        CHECK(check_lie(builtin("E02").algebroid).lie());
        CHECK(check_lie(tangent_algebroid(3)).lie());
        CHECK_FALSE(check_lie(builtin("E0prime").algebroid).lie());
    }

    TEST_CASE("morphism onto E0") {
        CHECK(check_morphism(e0_morphism_f0(), builtin("E0prime").algebroid, E()).ok());
        const BundleMap id = identity_map(4, 2);
        CHECK(check_morphism(id, E(), E()).ok());
        CHECK(compose(id, id) == id);
    }

    TEST_CASE("restriction to a subbundle") {
        const auto r = subalgebroid_restrict(E(), {E().unit(0), E().unit(1)}, {"A", "B"}, 2);
        CHECK(r.closed);
        REQUIRE(r.algebroid);
        CHECK(r.algebroid->rank() == 2);
        CHECK(r.algebroid->structure(0, 1) == Section(2, {P("0"), P("2*x1")}));
        const auto open = subalgebroid_restrict(E(), {E().unit(1), E().unit(2)}, {"A", "B"}, 2);
        CHECK_FALSE(open.closed);
    }

    TEST_CASE("Nijenhuis tensor of the displayed complex structure") {
        const Endomorphism& j = *e0().endo("J");
        CHECK(is_almost_complex(j));
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) CHECK(nijenhuis(E(), j, E().unit(a), E().unit(b)).is_zero());
        CHECK_FALSE(is_almost_complex(identity_map(4, 2)));
        CHECK_THROWS_AS(nijenhuis(E(), identity_map(4, 2), E().unit(0), E().unit(1)), Error);
    }

    TEST_CASE("Courant defect") {
        const CoMetric& id = *e0().cometric("identity");
        const PolyMatrix d = courant_defect(E(), id);
        CHECK(d[0][0] == P("x1^4 + x2^4"));
        CHECK(d[0][1].is_zero());
        CHECK(d[1][1] == P("x1^4 + x2^4"));
        const Poly one = P("1"), zero = P("0"), neg = P("-1");
        const CoMetric anti({{zero, zero, zero, neg}, {zero, zero, one, zero}, {zero, one, zero, zero},
                             {neg, zero, zero, zero}});
        for (const auto& row : courant_defect(E(), anti))
            for (const auto& p : row) CHECK(p.is_zero());
        CHECK(poly_determinant(anti.matrix()) == one);
        CHECK_THROWS_AS(CoMetric({{zero, one}, {zero, zero}}), Error);
    }

    TEST_CASE("Courant defect is additive") {
        Rng rng(6);
        for (int n = 0; n < 15; ++n) {
            PolyMatrix a(4, std::vector<Poly>(4, Poly(2))), b = a, s = a;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i; j < 4; ++j) {
                    a[i][j] = a[j][i] = random_poly(rng, 2, 2);
                    b[i][j] = b[j][i] = random_poly(rng, 2, 2);
                    s[i][j] = s[j][i] = a[i][j] + b[i][j];
                }
            const PolyMatrix da = courant_defect(E(), CoMetric(a)), db = courant_defect(E(), CoMetric(b)),
                             ds = courant_defect(E(), CoMetric(s));
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) CHECK(ds[i][j] == da[i][j] + db[i][j]);
        }
    }

    TEST_CASE("Courant solution space has a nondegenerate constant element") {
        const auto sym = courant_solution_space(E(), 0, {1, 2});
        CHECK(sym.nondegenerate.has_value());
        const auto block = courant_solution_space(E(), 0, {1, 2}, CometricAnsatz::block_symmetric);
        CHECK_FALSE(block.nondegenerate.has_value());
    }

    TEST_CASE("constructor rejects malformed tables") {
        const BaseSpace base{{"x"}};
        const std::vector<VectorField> anchor(2, VectorField(1, 1));
        StructureTable diag;
        diag[{0, 0}] = Section::unit(2, 1, 1);
        CHECK_THROWS_AS(Algebroid(base, {"A", "B"}, anchor, diag), Error);
        StructureTable both;
        both[{0, 1}] = Section::unit(2, 1, 0);
        both[{1, 0}] = Section::unit(2, 1, 0);
        CHECK_THROWS_AS(Algebroid(base, {"A", "B"}, anchor, both), Error);
        CHECK_THROWS_AS(Algebroid(base, {"A", "A"}, anchor, {}), Error);
        CHECK_THROWS_AS(Algebroid(base, {"A"}, anchor, {}), Error);
    }
}
