#include "csitdof/exact_lp.hpp"
#include "csitdof/linalg.hpp"
#include "csitdof/rational.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace csitdof;
using testing::q;

TEST_CASE("parse and render rationals") {
    CHECK(parse_rational("2/6") == q(1, 3));
    CHECK(parse_rational("-3/4") == q(-3, 4));
    CHECK(parse_rational("5") == 5);
    CHECK(to_string(q(8, 5)) == "8/5");
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(to_decimal(q(8, 5), 6) == "1.600000");
    CHECK(to_decimal(q(2, 3), 6) == "0.666667");
    CHECK(to_decimal(q(-2, 3), 2) == "-0.67");
    CHECK(to_decimal(q(1, 2), 0) == "1");
    CHECK(to_decimal(q(5, 3), 3) == "1.667");
}

TEST_CASE("harmonic sums") {
    CHECK(harmonic_sum(1, 3) == q(11, 6));
    CHECK(harmonic_sum(2, 3) == q(5, 6));
    CHECK(harmonic_sum(4, 3) == 0);
}

TEST_CASE("rank, solve and null space") {
    CHECK(rank({}) == 0);
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}}) == 2);
    const auto x = solve_square({{2, 1}, {1, 3}}, {3, 5});
    REQUIRE(x);
    CHECK(*x == RationalVector{q(4, 5), q(7, 5)});
    CHECK_FALSE(solve_square({{1, 2}, {2, 4}}, {1, 2}));

    const RationalMatrix a{{1, 2, 3}, {0, 1, 1}};
    const RationalMatrix ns = null_space(a, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : a) {
        CHECK(dot(row, ns[0]) == 0);
    }
    CHECK(null_space({}, 2).size() == 2);
}

TEST_CASE("nonnegative feasibility") {
    const auto x = find_nonnegative_solution({{1, 1}, {1, -1}}, {2, 0});
    REQUIRE(x);
    CHECK(*x == RationalVector{1, 1});
    CHECK_FALSE(find_nonnegative_solution({{1, 1}}, {-1}));
    CHECK_FALSE(find_nonnegative_solution({{1, -1}, {1, -1}}, {1, 2}));
}

TEST_CASE("random feasibility systems agree with a planted solution") {
    testing::Gen gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 4));
        const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 5));
        RationalVector planted(cols);
        for (auto& v : planted) {
            v = gen.rational(0, 3, 4);
        }
        RationalMatrix a(rows, RationalVector(cols));
        RationalVector b(rows, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                a[r][c] = gen.rational(-2, 2, 3);
            }
            b[r] = dot(a[r], planted);
        }
        const auto x = find_nonnegative_solution(a, b);
        REQUIRE(x);
        for (std::size_t r = 0; r < rows; ++r) {
            CHECK(dot(a[r], *x) == b[r]);
        }
        for (const auto& v : *x) {
            CHECK(v >= 0);
        }
    }
}
