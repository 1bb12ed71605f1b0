#include <doctest.h>

#include "algforge/linalg.hpp"
#include "support.hpp"

using namespace algforge;
using namespace algforge::test;

TEST_SUITE("linalg") {
    TEST_CASE("solves a small system") {
        Echelon e(2);
        CHECK(e.add({{0, 1}, {1, 1}}, 3));
        CHECK(e.add({{0, 1}, {1, -1}}, 1));
        const auto x = e.solve();
        REQUIRE(x);
        CHECK((*x)[0] == 2);
        CHECK((*x)[1] == 1);
        CHECK(e.nullspace().empty());
    }

    TEST_CASE("detects inconsistency") {
        Echelon e(2);
        e.add({{0, 1}, {1, 1}}, 1);
        CHECK_FALSE(e.add({{0, 2}, {1, 2}}, 3));
        CHECK_FALSE(e.consistent());
        CHECK_FALSE(e.solve());
    }

    TEST_CASE("rank and determinant") {
        CHECK(determinant({{2, 1}, {1, 3}}) == 5);
        CHECK(determinant({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}) == 2);
        CHECK(determinant({{1, 2}, {2, 4}}) == 0);
        CHECK(matrix_rank({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
        CHECK(matrix_rank({}) == 0);
    }

    TEST_CASE("polynomial combinations") {
        const PolyVector a{{0, P("x1")}, {1, P("x2")}}, b{{0, P("x2")}};
        const PolyVector target{{0, P("2*x1 - x2")}, {1, P("2*x2")}};
        const auto c = solve_combination({a, b}, target);
        REQUIRE(c);
        CHECK((*c)[0] == 2);
        CHECK((*c)[1] == -1);
        CHECK_FALSE(solve_combination({a}, PolyVector{{0, P("x2")}}));
        CHECK(combination_nullspace({a, a, b}).size() == 1);
    }

    TEST_CASE("nullspace vectors solve random homogeneous systems") {
        Rng rng(3);
        for (int n = 0; n < 30; ++n) {
            const std::size_t rows = 1 + rng.below(4), cols = 2 + rng.below(5);
            std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
            Echelon e(cols);
            for (auto& row : m) {
                SparseRow sr;
                for (std::size_t j = 0; j < cols; ++j) {
                    row[j] = rng.between(-3, 3);
                    if (row[j] != 0) sr[j] = row[j];
                }
                e.add(sr);
            }
            const auto basis = e.nullspace();
            CHECK(basis.size() + matrix_rank(m) == cols);
            for (const auto& v : basis)
                for (const auto& row : m) {
                    Scalar dot = 0;
                    for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
                    CHECK(dot == 0);
                }
        }
    }
}
