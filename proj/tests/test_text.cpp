#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicx/errors.hpp"
#include "bicx/text.hpp"
#include "support.hpp"

using namespace bicx;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_element(text);
    } catch (const ParseError& e) {
        return e.position;
    }
    FAIL("no parse error for " << text);
    return 0;
}

// A literal with random spacing, term order and optional '*' / unit coefficients.
std::string random_cartesian_literal() {
    static const char* units[] = {"", "i", "j", "k"};
    std::string out;
    const long terms = testing::rand_int(1, 5);
    for (long n = 0; n < terms; ++n) {
        const long u = testing::rand_int(0, 3);
        const Rational c = testing::rand_rational(9, 4);
        const bool neg = c < 0;
        out += neg ? (testing::rand_int(0, 1) ? " - " : "-") : (n == 0 ? "" : (testing::rand_int(0, 1) ? " + " : "+"));
        const Rational mag = abs(c);
        if (u == 0 || mag != 1 || testing::rand_int(0, 1)) {
            out += mag.get_str();
            if (u != 0) out += testing::rand_int(0, 1) ? "*" : "";
        }
        out += units[u];
    }
    return out;
}

std::string random_component(bool allow_sqrt) {
    const Rational a = testing::rand_rational(9, 4), b = testing::rand_rational(9, 4);
    std::string unit = "i";
    if (allow_sqrt && testing::rand_int(0, 2) == 0) unit = testing::rand_int(0, 1) ? "sqrt(2)" : "i*sqrt(3)";
    return to_string(a) + (b < 0 ? "-" : "+") + to_string(Rational(abs(b))) + "*" + unit;
}

}  // namespace

TEST_CASE("element literal examples") {
    CHECK(parse_element("1+i+j-k") == from_cartesian(1, 1, 1, -1));
    CHECK(parse_element("[2, 2*i]") == from_cartesian(1, 1, 1, -1));
    CHECK(parse_element("3/2 - 5/7*j") == from_cartesian(Rational(3, 2), 0, Rational(-5, 7), 0));
    CHECK(parse_element("  -k ") == from_cartesian(0, 0, 0, -1));
    CHECK(parse_element("2i + 3 j") == from_cartesian(0, 2, 3, 0));
    CHECK(parse_element("j + j") == from_cartesian(0, 0, 2, 0));
    CHECK(parse_element("0") == from_cartesian(0, 0, 0, 0));
    CHECK(parse_element("[1+sqrt(2), -i*sqrt(3)]") ==
          BicomplexElement(QuadRational(2, 1, 1), QuadRational(-3, 0, -1)));
    CHECK(parse_element("[1/2, -i]") == BicomplexElement(GaussianRational(Rational(1, 2)), GaussianRational(0, -1)));
}

TEST_CASE("element literal errors carry positions") {
    CHECK(error_position("1+") == 2);
    CHECK(error_position("1 $ i") == 2);
    CHECK(error_position("2*") == 2);
    CHECK(error_position("[1, 2") == 5);
    CHECK(error_position("[1, 2] + j") == 7);
    CHECK(error_position("[1+j, 2]") == 3);
    CHECK(error_position("1 + [2, 3]") == 4);
    CHECK(error_position("1/0") == 2);
    CHECK(error_position("") == 0);
    CHECK(error_position("sqrt(2)") == 0);
    CHECK_THROWS_AS(parse_element("[sqrt(4), 1]"), ParseError);
    CHECK_THROWS_AS(parse_element("[sqrt(2)+sqrt(3), 1]"), ParseError);
    CHECK_THROWS_AS(parse_element("ij"), ParseError);
}

TEST_CASE("print then parse is the identity on canonical forms") {
    for (int n = 0; n < 1000; ++n) {
        const BicomplexElement w = testing::rand_element();
        CHECK(parse_element(format_element(w)) == w);
        CHECK(parse_element(to_idempotent_string(w)) == w);
    }
    const BicomplexElement q(QuadRational(5, Rational(-1, 3), 2), GaussianRational(4, -1));
    CHECK(parse_element(format_element(q)) == q);
}

TEST_CASE("parse, print, parse agrees with parse on generated literals") {
    for (int n = 0; n < 1000; ++n) {
        const std::string lit = n % 2 ? random_cartesian_literal()
                                      : "[" + random_component(true) + ", " + random_component(n % 4 == 0) + "]";
        const BicomplexElement w = parse_element(lit);
        CHECK_MESSAGE(parse_element(format_element(w)) == w, lit);
    }
}
