#include <doctest.h>

#include <stdexcept>

#include "exls/sampling.hpp"

using namespace exls;

TEST_CASE("algebra names") {
    for (const char *n : {"e510", "e44", "e16", "k16"}) CHECK(algebra_name(parse_algebra(n)) == n);
    CHECK_THROWS_AS(parse_algebra("e55"), std::invalid_argument);
}

TEST_CASE("random jacobi is reproducible") {
    for (Algebra a : {Algebra::E510, Algebra::E44, Algebra::E16, Algebra::K16}) {
        VerifyReport r1 = jacobi_check(a, 60, 11);
        VerifyReport r2 = jacobi_check(a, 60, 11);
        CHECK(r1.ok());
        CHECK(r1.attempted == 120);
        CHECK(r1.note == r2.note);
        CHECK(r1.note.rfind("0 ", 0) != 0);
    }
}
