#include <random>

#include "doctest.h"
#include "exls/errors.hpp"
#include "exls/series.hpp"

using namespace exls;

namespace {

PolySeries random_series(std::mt19937 &rng, Vars v, int trunc) {
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3), count(0, 5);
    PolySeries p(v, trunc);
    int n = count(rng);
    for (int k = 0; k < n; ++k) {
        EvenMono m;
        for (int i = 0; i < nvars(v); ++i) m.e[i] = static_cast<std::uint8_t>(e(rng));
        p.add_term(m, Scalar(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("truncated products") {
    auto p = parse_series("1 + t + O(t^2)", Vars::T);
    CHECK(ps_mul(p, p).str() == "1 + 2*t + O(t^2)");
    CHECK(ps_mul(parse_series("x2", Vars::X2to5), parse_series("x3", Vars::X2to5)).str() == "x2*x3");
    auto geo = parse_series("1 + t + t^2 + t^3 + O(t^4)", Vars::T);
    // convolution: coefficient of t^n in the square is n + 1
    PolySeries expect(Vars::T, 4);
    for (int n = 0; n < 4; ++n) expect.add_term(EvenMono::var(0, n), Scalar(n + 1));
    CHECK(ps_mul(geo, geo) == expect);
    CHECK_THROWS_AS(ps_mul(parse_series("t", Vars::T), parse_series("x2", Vars::X2to5)), MismatchError);
}

TEST_CASE("derivatives and integration") {
    CHECK(ps_partial(parse_series("t^3", Vars::T), 0).str() == "3*t^2");
    CHECK(ps_partial(parse_series("x2^2*x3", Vars::X2to5), 0).str() == "2*x2*x3");
    CHECK(ps_partial(parse_series("x1 + O(x1^4)", Vars::X1to5), 0).trunc() == 3);
    CHECK(ps_int_t(parse_series("1", Vars::T)).str() == "t");
    CHECK(ps_int_t(parse_series("t^2", Vars::T)).str() == "1/3*t^3");
    std::mt19937 rng(3);
    for (int n = 0; n < 100; ++n) {
        PolySeries p = random_series(rng, Vars::T, 6);
        CHECK(ps_partial(ps_int_t(p), 0).agrees_with(p));
    }
    for (int n = 1; n < 8; ++n) {
        PolySeries tn = PolySeries::variable(Vars::T, 0, n);
        CHECK(ps_int_t(ps_partial(tn, 0)) == tn);
    }
}

TEST_CASE("Leibniz rule on random series") {
    std::mt19937 rng(17);
    for (int n = 0; n < 200; ++n) {
        Vars v = n % 2 ? Vars::X1to5 : Vars::T;
        PolySeries p = random_series(rng, v, 1 + n % 6), q = random_series(rng, v, 1 + (n / 2) % 6);
        for (int i = 0; i < nvars(v); ++i) {
            PolySeries lhs = ps_partial(ps_mul(p, q), i);
            PolySeries rhs = ps_mul(ps_partial(p, i), q) + ps_mul(p, ps_partial(q, i));
            CHECK(lhs.agrees_with(rhs));
        }
    }
}

TEST_CASE("printing order and parsing") {
    auto p = parse_series("x3 + x1^2 + x1 + x1*x3 + 1", Vars::X1to5);
    CHECK(p.str() == "1 + x1 + x3 + x1^2 + x1*x3");
    CHECK(parse_series("x2^0", Vars::X2to5).str() == "1");
    CHECK_THROWS_AS(parse_series("x1", Vars::X2to5), ParseError);
    CHECK_THROWS_AS(parse_series("x2 + ", Vars::X2to5), ParseError);
    CHECK(parse_series("t^5 + t + O(t^3)", Vars::T).str() == "t + O(t^3)");
}
