#include "doctest.h"
#include "exls/errors.hpp"
#include "exls/vfalgebras.hpp"

using namespace exls;

TEST_CASE("epsilon on quadruples") {
    CHECK(eps_quintuple(1, 2, 3, 4) == std::pair{1, 5});
    CHECK(eps_quintuple(2, 1, 3, 4) == std::pair{-1, 5});
    CHECK(eps_quintuple(1, 1, 3, 4).first == 0);
    CHECK(eps_quintuple(2, 3, 4, 5) == std::pair{1, 1});
    CHECK(eps_quintuple(1, 3, 4, 5) == std::pair{-1, 2});
}

TEST_CASE("E(5,10) brackets") {
    CHECK(bracket_e510(parse_e510("d12"), parse_e510("d34")).str() == "D5");
    CHECK(bracket_e510(parse_e510("x1*d12"), parse_e510("d12")).is_zero());
    for (int r = 0; r <= 4; ++r) {
        std::string vr = "x2^" + std::to_string(r) + "*D1";
        std::string expect = "-" + std::to_string(r + 1) + "*x2^" + std::to_string(r) + "*d23";
        E510Elt lhs = bracket_e510(parse_e510("x1*d23 + x2*d13"), parse_e510(vr));
        CHECK(lhs.agrees_with(parse_e510(expect)));
    }
    // odd-odd is symmetric, even-odd antisymmetric
    auto a = parse_e510("x1*d23 - x3*d12 + x4^2*d45");
    auto b = parse_e510("x4*d15 + x5*d14");
    CHECK(bracket_e510(a, b).agrees_with(bracket_e510(b, a)));
    auto x = parse_e510("x3*D2 - x4*D5");
    CHECK(bracket_e510(x, a).agrees_with(Scalar(-1) * bracket_e510(a, x)));
}

TEST_CASE("E(5,10) invariants are enforced") {
    CHECK_THROWS_AS(parse_e510("x1*D1"), InvariantError);
    CHECK_THROWS_AS(parse_e510("x1*d23"), InvariantError);
    CHECK_THROWS_AS(parse_e510("dx1"), ParseError);
}

TEST_CASE("E(5,10) degrees") {
    GradingType510 g01111({0, 1, 1, 1, 1}), g22222({2, 2, 2, 2, 2}), g21111({2, 1, 1, 1, 1});
    CHECK(degree_510(parse_e510("d12"), g01111) == -1);
    CHECK(degree_510(parse_e510("d23"), g22222) == -1);
    CHECK(degree_510(parse_e510("D1"), g21111) == -2);
    CHECK(degree_510(parse_e510("D1 + x2*D3"), g22222) == std::nullopt);
    CHECK_THROWS_AS(GradingType510({1, 0, 0, 0, 0}), InvariantError);
}

TEST_CASE("E(4,4) brackets") {
    CHECK(bracket_e44(parse_e44("dx1"), parse_e44("dx1")).is_zero());
    CHECK(bracket_e44(parse_e44("x2*dx1"), parse_e44("dx1")).is_zero());
    for (int n = 0; n <= 3; ++n) {
        std::string p = "x1^" + std::to_string(n) + "*x2";
        E44Elt x = parse_e44(p + "*(x2*D2 + x3*D3 + x4*D4)");
        E44Elt w = parse_e44("-r2*dx1");
        CHECK(bracket_e44(x, w).agrees_with(parse_e44("2*r2*" + p + "*dx1")));
    }
    auto a = parse_e44("x2*dx3 + x1*dx1"), b = parse_e44("x4^2*dx2");
    CHECK(bracket_e44(a, b).agrees_with(bracket_e44(b, a)));
}

TEST_CASE("E(4,4) principal degree") {
    CHECK(degree_e44_principal(parse_e44("D1")) == -1);
    CHECK(degree_e44_principal(parse_e44("dx1")) == -1);
    CHECK(degree_e44_principal(parse_e44("x2*dx3")) == 0);
}
