#include <doctest.h>

#include "algforge/ideal.hpp"
#include "support.hpp"

using namespace algforge;
using namespace algforge::test;

namespace {

Poly recombine(const CoeffIdeal& ideal, const IdealMembership& m) {
    Poly sum(ideal.nvars());
    for (std::size_t i = 0; i < m.cofactors.size(); ++i) sum += m.cofactors[i] * ideal.generators()[i];
    return sum;
}

}  // namespace

TEST_SUITE("ideal") {
    const CoeffIdeal squares(2, {P("x1^2"), P("x2^2")});

    TEST_CASE("monomial ideal decisions are exact") {
        CHECK(squares.monomial());
        const auto yes = ideal_member(P("3*x1^2*x2 - x2^5"), squares, 0);
        CHECK(yes.verdict == Verdict::yes);
        CHECK(recombine(squares, yes) == P("3*x1^2*x2 - x2^5"));
        CHECK(ideal_member(P("x1*x2"), squares, 0).verdict == Verdict::no);
        CHECK(ideal_member(P("x1^2 + x1*x2"), squares, 0).verdict == Verdict::no);
        CHECK(ideal_member(Poly(2), squares, 0).verdict == Verdict::yes);
    }

    TEST_CASE("general ideals use a bounded search") {
        const CoeffIdeal line(2, {P("x1 + x2")});
        CHECK_FALSE(line.monomial());
        const auto m = ideal_member(P("x1^2 - x2^2"), line, 2);
        CHECK(m.verdict == Verdict::yes);
        CHECK(recombine(line, m) == P("x1^2 - x2^2"));
        CHECK(ideal_member(P("x1"), line, 3).verdict == Verdict::no_witness_within_bound);
        CHECK(to_string(Verdict::no_witness_within_bound) != to_string(Verdict::no));
    }

    TEST_CASE("random members are recognised with valid cofactors") {
        Rng rng(4);
        const CoeffIdeal mixed(2, {P("x1^2 + x2"), P("x1*x2")});
        for (int n = 0; n < 20; ++n) {
            const Poly p = random_poly(rng, 2, 2) * mixed.generators()[0] + random_poly(rng, 2, 2) * mixed.generators()[1];
            const auto m = ideal_member(p, mixed, 2);
            REQUIRE(m.verdict == Verdict::yes);
            CHECK(recombine(mixed, m) == p);
            const Poly q = random_poly(rng, 2, 3) * P("x1^2") + random_poly(rng, 2, 3) * P("x2^2");
            CHECK(ideal_member(q, squares, 0).verdict == Verdict::yes);
        }
    }
}
