#include <doctest.h>

#include "balcov/rational.hpp"
#include "balcov/types.hpp"

using namespace balcov;

TEST_CASE("parse accepts fractions, integers, and finite decimals") {
    CHECK(parse_rational("2/5") == Rational(2, 5));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(parse_rational("0.4") == Rational(2, 5));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parse rejects malformed input") {
    for (const char* bad :
         {"", "1/0", "2//3", "a", "1e5", "1.2.3", "/3", "3/", "1 2", "0x10", "1."}) {
        CHECK_THROWS_AS(parse_rational(bad), Error);
        try {
            parse_rational(bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
        }
    }
}

TEST_CASE("format is canonical and round trips") {
    CHECK(format_rational(Rational(2, 5)) == "2/5");
    CHECK(format_rational(Rational(-2, 4)) == "-1/2");
    CHECK(format_rational(Rational(6, 3)) == "2");
    CHECK(format_rational(Rational(0)) == "0");
    for (const char* text : {"2/5", "-7/3", "0", "41", "123456789/123456790"}) {
        CHECK(format_rational(parse_rational(text)) == text);
    }
}

TEST_CASE("decimal parsing is exact, not floating point") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("0.333") == Rational(333, 1000));
    CHECK(parse_rational("123.456") == Rational(123456, 1000));
}

TEST_CASE("lcm on multiprecision integers") {
    CHECK(int_lcm(4, 6) == 12);
    CHECK(int_lcm(1, 7) == 7);
    CHECK(int_lcm(Int(1) << 40, Int(3) << 40) == Int(3) << 40);
}

TEST_CASE("helpers") {
    CHECK(num(Rational(-2, 4)) == -1);
    CHECK(den(Rational(-2, 4)) == 2);
    CHECK(rational_abs(Rational(-3, 7)) == Rational(3, 7));
    CHECK(to_double(Rational(1, 2)) == 0.5);
}
