#include "doctest.h"

#include "magicsq/fixtures.hpp"
#include "magicsq/square_io.hpp"

using namespace magicsq;

TEST_CASE("render and parse round-trip byte-identically on every fixture") {
    for (std::string_view name : fixtures::square_names()) {
        CAPTURE(name);
        const IntSquare m = fixtures::square(name);
        const std::string text = render_square(m);
        const IntSquare parsed = parse_square(text);
        CHECK(parsed == m);
        CHECK(render_square(parsed) == text);
    }
}

TEST_CASE("rendering format") {
    CHECK(render_square(IntSquare::from_rows({{3, 8, 1}, {2, 4, 6}, {7, 0, 5}})) ==
          "3\n3 8 1\n2 4 6\n7 0 5\n");
    CHECK(render_square(IntSquare::from_rows({{0, 1}, {2, 3}}), 1) == "2\n1 2\n3 4\n");
}

TEST_CASE("parsing tolerates arbitrary whitespace") {
    CHECK(parse_square("  3\n\n 3 8 1\n2\t4 6\n7 0 5  \n") == fixtures::m3_lo_shu());
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(parse_square(""), ParseError);
    CHECK_THROWS_AS(parse_square("x"), ParseError);
    CHECK_THROWS_AS(parse_square("0"), ParseError);
    CHECK_THROWS_AS(parse_square("-2\n"), ParseError);
    CHECK_THROWS_AS(parse_square("2\n1 2 3"), ParseError);           // missing entry
    CHECK_THROWS_AS(parse_square("2\n1 2 3 banana"), ParseError);    // bad token
    CHECK_THROWS_AS(read_square_file("/no/such/file.txt"), ParseError);
}

TEST_CASE("claim grammar accepts the documented token forms") {
    const auto factors = parse_claim("L^4(L-360)(L^2+216)(L^2+17496)");
    REQUIRE(factors.size() == 4);
    CHECK(factors[0] == BigPoly::monomial(4));
    CHECK(factors[1] == BigPoly::from_coeffs({-360, 1}));
    CHECK(factors[2] == BigPoly::from_coeffs({216, 0, 1}));
    CHECK(factors[3] == BigPoly::from_coeffs({17496, 0, 1}));

    CHECK(parse_claim("L") == std::vector<BigPoly>{BigPoly::monomial(1)});
    CHECK(parse_claim(" L^2  (L+5) ") ==
          std::vector<BigPoly>{BigPoly::monomial(2), BigPoly::from_coeffs({5, 1})});
    CHECK(parse_claim("(L^2-1920)") == std::vector<BigPoly>{BigPoly::from_coeffs({-1920, 0, 1})});
}

TEST_CASE("claim grammar rejects malformed input") {
    CHECK_THROWS_AS(parse_claim(""), ParseError);
    CHECK_THROWS_AS(parse_claim("(L^3+1)"), ParseError); // only degree 2 inside parens
    CHECK_THROWS_AS(parse_claim("(L-360"), ParseError);
    CHECK_THROWS_AS(parse_claim("(X-1)"), ParseError);
    CHECK_THROWS_AS(parse_claim("L^"), ParseError);
    CHECK_THROWS_AS(parse_claim("(L*2)"), ParseError);
    CHECK_THROWS_AS(parse_claim("42"), ParseError);
}
