#include "doctest.h"

#include <limits>

#include "magicsq/fixtures.hpp"
#include "magicsq/int_square.hpp"

#include "support/oracles.hpp"

using namespace magicsq;

TEST_CASE("ones matrix") {
    CHECK(ones_matrix(1) == IntSquare::from_rows({{1}}));
    CHECK(ones_matrix(2) == IntSquare::from_rows({{1, 1}, {1, 1}}));
    const IntSquare e3 = ones_matrix(3);
    for (std::int64_t v : e3.entries()) CHECK(v == 1);
}

TEST_CASE("flip matrix") {
    CHECK(flip_matrix(1) == IntSquare::from_rows({{1}}));
    CHECK(flip_matrix(2) == IntSquare::from_rows({{0, 1}, {1, 0}}));
    CHECK(multiply(flip_matrix(3), flip_matrix(3)) == identity_matrix(3));
}

TEST_CASE("kron reproduces the order-9 compound") {
    CHECK(kron(ones_matrix(3), fixtures::m3_lo_shu()) == fixtures::a9());
    CHECK(kron(fixtures::m3_lo_shu(), ones_matrix(3)) == fixtures::b9());
}

TEST_CASE("kron identities") {
    const IntSquare x = fixtures::m4_regular();
    CHECK(kron(identity_matrix(1), x) == x);
    CHECK(kron(x, identity_matrix(1)) == x);
    CHECK(kron(flip_matrix(3), flip_matrix(3)) == flip_matrix(9));
}

TEST_CASE("kron mixed-product rule on random matrices") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const IntSquare a = testing::random_square(2, -9, 9, 100 + seed);
        const IntSquare b = testing::random_square(3, -9, 9, 200 + seed);
        const IntSquare c = testing::random_square(2, -9, 9, 300 + seed);
        const IntSquare d = testing::random_square(3, -9, 9, 400 + seed);
        CHECK(multiply(kron(a, b), kron(c, d)) == kron(multiply(a, c), multiply(b, d)));
    }
}

TEST_CASE("ones and flip identities for n in 1..12") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            CHECK(kron(ones_matrix(m), ones_matrix(n)) == ones_matrix(m * n));
            CHECK(kron(flip_matrix(m), flip_matrix(n)) == flip_matrix(m * n));
        }
    for (int n = 1; n <= 12; ++n) {
        const IntSquare e = ones_matrix(n);
        const IntSquare r = flip_matrix(n);
        CHECK(multiply(e, e) == scale(n, e));
        CHECK(multiply(r, r) == identity_matrix(n));
        CHECK(multiply(r, e) == e);
        CHECK(multiply(e, r) == e);
        CHECK(trace(e) == n);
    }
}

TEST_CASE("basic matrix operations") {
    const IntSquare e3 = ones_matrix(3);
    CHECK(multiply(e3, e3) == scale(3, e3));
    CHECK(trace(e3) == 3);

    const IntSquare m3 = fixtures::m3_lo_shu();
    CHECK(transpose(transpose(m3)) == m3);
    CHECK(frobenius_norm(e3) == doctest::Approx(3.0));

    CHECK(add(m3, scale(-1, m3)) == IntSquare(3));
    CHECK(subtract(m3, m3) == IntSquare(3));
}

TEST_CASE("shape mismatches are reported") {
    CHECK_THROWS_AS(multiply(ones_matrix(2), ones_matrix(3)), ShapeError);
    CHECK_THROWS_AS(add(ones_matrix(2), ones_matrix(3)), ShapeError);
    CHECK_THROWS_AS(IntSquare(3, std::vector<std::int64_t>(8, 0)), ShapeError);
}

TEST_CASE("overflow is an error, never silent wraparound") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    const IntSquare huge = IntSquare::from_rows({{big, big}, {big, big}});
    CHECK_THROWS_AS(add(huge, huge), OverflowError);
    CHECK_THROWS_AS(multiply(huge, huge), OverflowError);
    CHECK_THROWS_AS(scale(4, huge), OverflowError);
    CHECK_THROWS_AS(kron(huge, huge), OverflowError);
    CHECK_THROWS_AS(frobenius_norm(huge), OverflowError);
}

TEST_CASE("order must be positive") {
    CHECK_THROWS_AS(IntSquare(0), PreconditionError);
    CHECK_THROWS_AS(ones_matrix(0), PreconditionError);
}
