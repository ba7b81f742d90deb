#include <doctest.h>

#include "dvfactor/cli/parser.hpp"
#include "dvfactor/errors.hpp"
#include "dvfactor/families.hpp"
#include "dvfactor/format.hpp"

using namespace dvfactor;
using dvfactor::cli::parse_bi_poly;
using dvfactor::cli::parse_int_poly;

TEST_CASE("parse examples") {
    CHECK(parse_int_poly("x^5 + 32*x^2 + 4*x + 8") == family_X(2, 5));
    CHECK(parse_int_poly("(1 + 4*x^3)*16 + 4*x^2 + x^6") == family_Y(2, 6));
    CHECK(parse_int_poly("-x^2") == IntPoly{0, 0, -1});
    CHECK(parse_int_poly("(x-1)^2") == IntPoly{1, -2, 1});
    CHECK(parse_int_poly("x − 3") == IntPoly{-3, 1});
    CHECK(parse_int_poly("x^0") == IntPoly{1});
    CHECK(parse_int_poly("2^10") == IntPoly{1024});
    CHECK(parse_int_poly("x - x") == IntPoly{});
    CHECK(parse_int_poly("123456789012345678901234567890").leading() == BigInt("123456789012345678901234567890"));
    CHECK(parse_bi_poly("(x^2+1) + (x^2+x+1)*y + y^5") == family_Z(IntPoly{1, 0, 1}, IntPoly{1, 1, 1}, 5));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_int_poly("x^^2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 3);
        CHECK(e.token() == "^");
    }
    try {
        parse_int_poly("x +\n  z");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_int_poly("x^x"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x^-1"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("(x + 1"), ParseError);
    CHECK_THROWS_AS(parse_int_poly(""), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x y"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x + y"), ParseError);
    CHECK_THROWS_AS(parse_bi_poly("x^2 + 1"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x^99999"), ParseError);
}

TEST_CASE("print then parse is the identity") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const IntPoly f = random_valued_poly(seed, 8, 1000, 3);
        CHECK(parse_int_poly(to_string(f)) == f);
        CHECK(parse_int_poly(to_string(f * IntPoly{-1})) == f * IntPoly{-1});
    }
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto [a0, a1] = stock_irreducible_pair(d);
        const BiPoly z = family_Z(a0, a1, 4 * d + 1);
        CHECK(parse_bi_poly(to_string(z)) == z);
    }
    const BiPoly mixed({IntPoly{0, 0, -2}, IntPoly{3, -1}, IntPoly{}, IntPoly{0, 0, 0, 5}, IntPoly{1}});
    CHECK(parse_bi_poly(to_string(mixed)) == mixed);
}
