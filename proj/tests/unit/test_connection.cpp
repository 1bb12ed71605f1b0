#include <doctest.h>

#include "algforge/connection.hpp"
#include "support.hpp"

using namespace algforge;
using namespace algforge::test;

namespace {

const Document& e0() {
    static const Document d = builtin("E0");
    return d;
}

const Algebroid& E() { return e0().algebroid; }
const EConnection& tf() { return *e0().connection("torsion_free"); }

}  // namespace

TEST_SUITE("connection") {
    TEST_CASE("the displayed connection is torsion free") {
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) CHECK(torsion(tf(), E().unit(a), E().unit(b)).is_zero());
        CHECK_FALSE(torsion(EConnection::flat(E()), E().unit(0), E().unit(1)).is_zero());
    }

    TEST_CASE("curvature table") {
        const Section k1 = *e0().section("K1"), k2 = *e0().section("K2");
        std::size_t nonzero = 0;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                for (std::size_t c = 0; c < 4; ++c)
                    if (!curvature(tf(), E().unit(a), E().unit(b), E().unit(c)).is_zero()) ++nonzero;
        CHECK(nonzero == 4);
        CHECK(curvature(tf(), E().unit(0), E().unit(2), E().unit(0)) == Scalar(-2) * k1);
        CHECK(curvature(tf(), E().unit(0), E().unit(2), E().unit(1)) == Scalar(-2) * k2);
        CHECK(curvature(tf(), E().unit(1), E().unit(3), E().unit(2)) == Scalar(-2) * k1);
        CHECK(curvature(tf(), E().unit(1), E().unit(3), E().unit(3)) == Scalar(-2) * k2);
        const ConnectionReport r = connection_report(tf());
        CHECK(r.curvature_in_kernel);
        CHECK(r.torsion.size() == 6);
        CHECK(r.bianchi.size() == 4);
    }

    TEST_CASE("covariant derivative rules on random data") {
        Rng rng(7);
        for (int n = 0; n < 20; ++n) {
            const EConnection c = random_connection(rng, E(), 1);
            const Section x = random_section(rng, E(), 1), s = random_section(rng, E(), 2);
            const Poly f = random_poly(rng, 2, 2);
            CHECK(covariant_derivative(c, x, f * s) ==
                  f * covariant_derivative(c, x, s) + apply(anchor_apply(E(), x), f) * s);
            CHECK(covariant_derivative(c, f * x, s) == f * covariant_derivative(c, x, s));
            const Section y = random_section(rng, E(), 1);
            CHECK(curvature(c, x, y, s) == -curvature(c, y, x, s));
            CHECK(curvature(c, f * x, y, s) == f * curvature(c, x, y, s));
            CHECK(curvature(c, x, y, f * s) == f * curvature(c, x, y, s));
            CHECK(bianchi_defect(c, x, y, E().unit(n % 4)).is_zero());
        }
    }

    TEST_CASE("connections on other bundles") {
        const EConnection flat2 = EConnection::flat(E(), {"A", "B"});
        CHECK_FALSE(flat2.on_self());
        CHECK(connection_report(flat2).torsion.empty());
        const EConnection induced = induced_connection(E(), EConnection::flat(tangent_algebroid(2)));
        CHECK(induced.target_rank() == 2);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                CHECK(curvature(induced, E().unit(a), E().unit(b), induced.target_unit(0)).is_zero());
    }

    TEST_CASE("derived bundle") {
        const DerivedBundle d = derive_bundle(tf());
        REQUIRE(d.derived.rank() == 10);
        CHECK(d.derived.gen_names()[4] == "X11_w_X21");
        CHECK(d.wedge_index(0, 1) == 4);
        CHECK(check_lie(d.derived).lie());
        const std::vector<std::string> names = d.derived.gen_names();
        Section e01(10, 2);
        e01[1] = P("2*x1");
        e01[4] = P("1");
        CHECK(d.derived.structure(0, 1) == e01);
        Section w02(10, 2);
        w02[d.wedge_index(0, 2)] = P("1");
        Section expected(10, 2);
        expected[1] = P("-2*x2^2");
        expected[3] = P("2*x1^2");
        CHECK(bracket(d.derived, w02, d.derived.unit(1)) == expected);
        CHECK_THROWS_AS(derive_bundle(EConnection::flat(E())), Error);
    }

    TEST_CASE("derived identities") {
        const auto items = check_derived_identities(derive_bundle(tf()));
        REQUIRE(items.size() == 5);
        for (const auto& it : items) {
            CHECK(it.checked > 0);
            CHECK_MESSAGE(it.failed == 0, it.first_failure);
        }
    }
}
