#include <random>

#include "doctest.h"
#include "exls/errors.hpp"
#include "exls/formcalc.hpp"

using namespace exls;

namespace {

DiffForm F5(const char *s) { return parse_form(s, Vars::X1to5); }
VectorField V5(const char *s) { return parse_vf(s, Vars::X1to5); }

PolySeries random_poly(std::mt19937 &rng, Vars v, int max_deg) {
    std::uniform_int_distribution<int> e(0, max_deg), c(-3, 3), count(1, 3);
    PolySeries p(v);
    int n = count(rng);
    for (int k = 0; k < n; ++k) {
        EvenMono m;
        for (int i = 0; i < nvars(v); ++i) m.e[i] = static_cast<std::uint8_t>(e(rng) / 2);
        p.add_term(m, Scalar(c(rng)));
    }
    return p;
}

DiffForm random_form(std::mt19937 &rng, Vars v, int k) {
    DiffForm w(v, k);
    int n = nvars(v);
    for (int r = 0; r < 3; ++r) {
        VarMask s = 0;
        while (__builtin_popcount(s) < k) s = static_cast<VarMask>(s | (1u << (rng() % n)));
        w.add(s, random_poly(rng, v, 3));
    }
    return w;
}

VectorField random_vf(std::mt19937 &rng, Vars v) {
    VectorField x(v);
    for (int j = 0; j < nvars(v); ++j)
        if (rng() % 2) x.add(j, random_poly(rng, v, 3));
    return x;
}

// Homogeneous (k, m) piece of ω.
DiffForm piece(const DiffForm &w, int m) {
    DiffForm r(w.vars(), w.degree());
    for (const auto &[s, c] : w.terms())
        for (const auto &[mono, v] : c.terms())
            if (mono.total() == m) r.add(s, PolySeries::monomial(w.vars(), mono, v));
    return r;
}

}  // namespace

TEST_CASE("exterior derivative") {
    CHECK(form_d(F5("x1*dx2")).str() == "d12");
    CHECK(form_d(F5("d12")).is_zero());
    // d(f(x1) x_i x_j d_1) with f = x1^2, (i,j) = (2,3)
    CHECK(form_d(F5("x1^2*x2*x3*dx1")) == F5("-x1^2*(x2*d13 + x3*d12)"));
    std::mt19937 rng(1);
    for (Vars v : {Vars::X1to4, Vars::X1to5})
        for (int k = 0; k <= nvars(v); ++k)
            for (int n = 0; n < 10; ++n) CHECK(form_d(form_d(random_form(rng, v, k))).is_zero());
}

TEST_CASE("wedge product") {
    CHECK(form_wedge(F5("dx2"), F5("dx3")).str() == "d23");
    CHECK(form_wedge(F5("d23"), F5("d45")).str() == "d2345");
    CHECK(form_wedge(F5("d23"), F5("d24")).is_zero());
    CHECK(form_wedge(F5("d123"), F5("d345")).is_zero());
    CHECK(form_wedge(F5("dx3"), F5("dx2")).str() == "-d23");
}

TEST_CASE("contraction") {
    CHECK(form_contract(V5("D2"), F5("d23")).str() == "dx3");
    CHECK(form_contract(V5("x2*D3"), F5("d23")).str() == "-x2*dx2");
    CHECK_THROWS_AS(form_contract(V5("D2"), F5("x2")), InvariantError);
    // i_{x_k D_h}(Σ_i ∂_i f d_ij) with f = x2^2*x3, j = 5, (k, h) = (4, 2)
    DiffForm w = F5("2*x2*x3*d25 + x2^2*d35");
    CHECK(form_contract(V5("x4*D2"), w) == F5("2*x2*x3*x4*dx5"));
    std::mt19937 rng(7);
    for (int n = 0; n < 30; ++n) {
        auto x = random_vf(rng, Vars::X1to5), y = random_vf(rng, Vars::X1to5);
        auto w2 = random_form(rng, Vars::X1to5, 3);
        CHECK(form_contract(x, form_contract(y, w2)) == -form_contract(y, form_contract(x, w2)));
    }
}

TEST_CASE("Lie derivative") {
    CHECK(form_lie(V5("D1"), F5("x1*d23")).str() == "d23");
    CHECK(form_lie(V5("x2*D3"), F5("dx2")).is_zero());
    VectorField e = euler_field(Vars::X1to5);
    CHECK(form_lie(e, F5("x1*x2*d34 + x3^2*d15")) == Scalar(4) * F5("x1*x2*d34 + x3^2*d15"));
    std::mt19937 rng(8);
    for (int n = 0; n < 30; ++n) {
        auto x = random_vf(rng, Vars::X1to4), y = random_vf(rng, Vars::X1to4);
        auto a = random_form(rng, Vars::X1to4, 1), b = random_form(rng, Vars::X1to4, 2);
        CHECK(form_lie(x, form_wedge(a, b)) == form_wedge(form_lie(x, a), b) + form_wedge(a, form_lie(x, b)));
        CHECK(form_lie(x, form_contract(y, b)) - form_contract(y, form_lie(x, b)) == form_contract(vf_bracket(x, y), b));
    }
}

TEST_CASE("divergence and twisted action") {
    CHECK(vf_div(V5("D1")).is_zero());
    CHECK(vf_div(V5("x2*D2")).str() == "1");
    CHECK(vf_div(V5("x2*D2 - x3*D3")).is_zero());
    VectorField f = parse_vf("t^2*Dt", Vars::T);
    DiffForm g = parse_form("t^3*dt", Vars::T);
    CHECK(lambda_action(f, g, Scalar(0)) == form_lie(f, g));
    CHECK(lambda_action(f, g, Scalar::rational(-1, 2)) == parse_form("4*t^4*dt", Vars::T));
    CHECK(lambda_action(f, g, Scalar::rational(-3, 2)) == parse_form("2*t^4*dt", Vars::T));
}

TEST_CASE("homotopy operator") {
    auto x = [](const char *s) { return parse_form(s, Vars::X2to5); };
    CHECK(int_op(x("dx2")).str() == "x2");
    CHECK(int_op(x("x2*dx3")) == x("1/2*x2*x3"));
    CHECK_THROWS_WITH(int_op(x("3")), "Euler weight zero");
    CHECK(int_op(x("x2")).is_zero());
    std::mt19937 rng(12);
    for (Vars v : {Vars::X1to4, Vars::X1to5})
        for (int k = 1; k < nvars(v); ++k)
            for (int n = 0; n < 10; ++n) {
                DiffForm w = random_form(rng, v, k);
                CHECK(int_op(int_op(w)).is_zero());
                CHECK(form_d(int_op(w)) + int_op(form_d(w)) == w);
            }
}

TEST_CASE("fields from forms") {
    auto x = [](const char *s) { return parse_form(s, Vars::X2to5); };
    CHECK(vf_from_form(x("d345")).str() == "D2");
    // ε(1,2,3,4,5) = 1 with (i,j,h,k) = (2,3,4,5)
    DiffForm w = form_wedge(x("x5*dx4 + x4*dx5"), x("d23"));
    CHECK(vf_from_form(w) == parse_vf("-x5*D5 + x4*D4", Vars::X2to5));
    CHECK(vf_from_form(parse_form("d2345", Vars::TX2to5)).str() == "Dt");
    CHECK_THROWS_AS(vf_from_form(x("d23")), InvariantError);
    std::mt19937 rng(21);
    for (Vars v : {Vars::X1to4, Vars::X1to5, Vars::X2to5})
        for (int n = 0; n < 20; ++n) {
            VectorField y = random_vf(rng, v);
            CHECK(vf_from_form(form_from_vf(y)) == y);
        }
}

TEST_CASE("form parsing and printing") {
    CHECK(F5("dx3*dx1").str() == "-d13");
    CHECK(F5("x2*d32 + x2*d23").is_zero());
    CHECK(parse_form("x1^2*d12 + O(x1^3)", Vars::X1to5).str() == "x1^2*d12 + O(x1^3)");
    CHECK(parse_form("dt*d23", Vars::TX2to5).str() == "dt*d23");
    CHECK_THROWS_AS(F5("dx1 + d12"), ParseError);
    CHECK_THROWS_AS(parse_form("dx1", Vars::X2to5), ParseError);
    CHECK(V5("-1/2*x3*D3 + x1*D2").str() == "x1*D2 - 1/2*x3*D3");
}

TEST_CASE("truncation bookkeeping") {
    auto w = parse_form("x1^2*d23 + O(x1^4)", Vars::X1to5);
    CHECK(form_d(w).trunc() == 3);
    auto v = parse_vf("x1*D2 + O(x1^3)", Vars::X1to5);
    CHECK(form_lie(v, w).trunc() == 2);
    CHECK(int_op(w).trunc() == 4);
}
