#include <doctest.h>

#include "exls/errors.hpp"
#include "exls/repn.hpp"

using namespace exls;

namespace {

E510Elt F(const std::string &s) { return parse_e510(s); }

}  // namespace

TEST_CASE("slice enumeration") {
    GrSlice low = enumerate_slice(0, -2);
    REQUIRE(low.basis.size() == 1);
    CHECK(low.basis[0].str() == "D1");
    CHECK(enumerate_slice(0, -1).basis.size() == 6);
    CHECK(enumerate_slice(-1, -2).basis.size() == 4);
    CHECK(enumerate_slice(-1, 3).basis.size() == 4);
    CHECK(enumerate_slice(1, 1).basis.size() == 20);
    CHECK(enumerate_slice(2, 3).basis.size() == 45);
    for (int k = -2; k <= 3; ++k)
        for (const E510Elt &b : enumerate_slice(-1, k).basis) {
            CHECK(degree_510(b, GradingType510({0, 1, 1, 1, 1})) == -1);
            CHECK(degree_510(b, GradingType510({2, 2, 2, 2, 2})) == k);
        }
    CHECK_THROWS_AS(enumerate_slice(1, -1), InvariantError);
    CHECK_THROWS_AS(enumerate_slice(1, 40), InvariantError);
    CHECK_THROWS_AS(enumerate_slice(-2, 0), InvariantError);
}

TEST_CASE("weights of highest weight vectors") {
    CHECK(weight_of(F("D5")) == WeightVec{0, 0, 1, Scalar::rational(1, 2)});
    CHECK(weight_of(F("D1")) == WeightVec{0, 0, 0, Scalar(-2)});
    for (int r = 1; r <= 3; ++r) CHECK(weight_of(v_r(r)) == WeightVec{r, 0, 0, Scalar::rational(-r - 4, 2)});
    CHECK(weight_of(v_r(2)).str() == "(2,0,0; -3)");
    CHECK_THROWS_WITH_AS(weight_of(F("x2*D3 + x3*D2")), doctest::Contains("x2*D2 - x3*D3"), InvariantError);
    CHECK_THROWS_AS(weight_of(E510Elt()), InvariantError);
}

TEST_CASE("annihilation by the negative part") {
    CHECK(negative_part().size() == 7);
    for (int r = -1; r <= 3; ++r) CHECK(annihilated_by_negative(v_r(r)));
    CHECK_FALSE(annihilated_by_negative(F("x3*D1 + x1*x2*D2 - x1*x3*D3")));
    CHECK(annihilated_by_negative(E510Elt()));
}

TEST_CASE("ad computations on v_r") {
    CHECK(bracket_e510(F("x1^2*x3*D4"), v_r(2)).str() == "-2*x1*x2^2*x3*D4");
    CHECK(bracket_e510(F("x1*x3*D2"), v_r(1)).str() == "x1*x3*D1 - x2*x3*D2");
    CHECK(bracket_e510(F("x1*d23 + x2*d13"), v_r(3)).str() == "-4*x2^3*d23");
    CHECK(generation_examples(3).ok());
}

TEST_CASE("generation and singular vectors") {
    CHECK(generation_check(-1, 1).ok());
    CHECK(generation_check(0, 1).ok());
    CHECK(generation_check(1, 1).ok());
    CHECK(singular_absence(1).ok());
    CHECK(singular_absence(2).ok());
    CHECK(closed_form_dimension_check(1).ok());
    CHECK(grading_additivity_check(1).ok());
}
