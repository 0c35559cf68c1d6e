#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "exls/errors.hpp"
#include "exls/grassmann.hpp"

using namespace exls;

namespace {

// Naive oracle: concatenate generator lists and bubble-sort, flipping the
// sign on every adjacent swap; a repeated generator kills the product.
std::pair<int, GrassMask> naive_product(GrassMask a, GrassMask b) {
    std::vector<int> seq;
    for (int g = 0; g < 6; ++g)
        if (a & (1 << g)) seq.push_back(g);
    for (int g = 0; g < 6; ++g)
        if (b & (1 << g)) seq.push_back(g);
    int sign = 1;
    for (std::size_t pass = 0; pass < seq.size(); ++pass)
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            if (seq[k] == seq[k + 1]) return {0, 0};
            if (seq[k] > seq[k + 1]) {
                std::swap(seq[k], seq[k + 1]);
                sign = -sign;
            }
        }
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (seq[k] == seq[k + 1]) return {0, 0};
    return {sign, static_cast<GrassMask>(a | b)};
}

GrassElt mono(Coord c, GrassMask m) { return GrassElt::monomial(c, m); }

GrassElt random_elt(std::mt19937 &rng, Coord c) {
    std::uniform_int_distribution<int> m(0, 63), k(-2, 2), n(0, 4);
    GrassElt e(c);
    int count = n(rng);
    for (int j = 0; j < count; ++j) e.add(static_cast<GrassMask>(m(rng)), Scalar(k(rng)));
    return e;
}

}  // namespace

TEST_CASE("wedge signs match the reordering oracle") {
    for (int a = 0; a < 64; ++a)
        for (int b = 0; b < 64; ++b) {
            auto [s, m] = naive_product(a, b);
            CHECK(wedge_sign(a, b) == s);
            if (s) CHECK(gr_wedge(mono(Coord::Rho, a), mono(Coord::Rho, b)).coeff(m) == Scalar(s));
        }
}

TEST_CASE("wedge examples") {
    CHECK(parse_grass("rho2*rho1").str() == "-rho1*rho2");
    CHECK(parse_grass("xi2*xi2").is_zero());
    CHECK(gr_wedge(parse_grass("rho1*rho3"), parse_grass("rho2")).str() == "-rho1*rho2*rho3");
    CHECK_THROWS_AS(gr_wedge(parse_grass("rho1"), parse_grass("xi2")), MismatchError);
}

TEST_CASE("odd derivative") {
    auto r12 = parse_grass("rho1*rho2");
    CHECK(gr_partial(r12, 0).str() == "rho2");
    CHECK(gr_partial(r12, 1).str() == "-rho1");
    CHECK(gr_partial(r12, 2).is_zero());
    std::mt19937 rng(2);
    for (int n = 0; n < 300; ++n) {
        GrassMask a = static_cast<GrassMask>(rng() % 64), b = static_cast<GrassMask>(rng() % 64);
        int g = static_cast<int>(rng() % 6);
        GrassElt lhs = gr_partial(gr_wedge(mono(Coord::XiEta, a), mono(Coord::XiEta, b)), g);
        GrassElt rhs = gr_wedge(gr_partial(mono(Coord::XiEta, a), g), mono(Coord::XiEta, b));
        GrassElt tail = gr_wedge(mono(Coord::XiEta, a), gr_partial(mono(Coord::XiEta, b), g));
        rhs += Scalar((popcount(a) & 1) ? -1 : 1) * tail;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("super-commutativity and associativity") {
    for (int a = 0; a < 64; ++a)
        for (int b = 0; b < 64; ++b) {
            int s = (popcount(a) * popcount(b)) % 2 ? -1 : 1;
            CHECK(gr_wedge(mono(Coord::Rho, a), mono(Coord::Rho, b)) ==
                  Scalar(s) * gr_wedge(mono(Coord::Rho, b), mono(Coord::Rho, a)));
        }
    std::mt19937 rng(9);
    for (int n = 0; n < 100; ++n) {
        auto a = random_elt(rng, Coord::XiEta), b = random_elt(rng, Coord::XiEta), c = random_elt(rng, Coord::XiEta);
        CHECK(gr_wedge(gr_wedge(a, b), c) == gr_wedge(a, gr_wedge(b, c)));
    }
}

TEST_CASE("star") {
    CHECK(gr_star(parse_grass("1", Coord::Rho)).str() == "rho1*rho2*rho3*rho4*rho5*rho6");
    CHECK(gr_star(parse_grass("rho1*rho2*rho3*rho4*rho5*rho6")).str() == "1");
    for (int m = 0; m < 64; ++m) {
        GrassElt x = mono(Coord::Rho, m);
        CHECK(gr_star(gr_star(x)) == Scalar(popcount(m) % 2 ? -1 : 1) * x);
        CHECK(gr_wedge(x, gr_star(x)) == mono(Coord::Rho, kFullMask));
    }
}

TEST_CASE("sharp") {
    // I = (2, bar 4): xi2 followed by eta4
    CHECK(gr_sharp(parse_grass("xi2*eta4")).str() == "-xi2*xi3*eta3*eta4");
    CHECK(gr_sharp(parse_grass("1", Coord::XiEta)).str() == "xi2*xi3*xi4*eta2*eta3*eta4");
    // the two volume normalizations differ by a sign under xi4 = eta1, eta4 = xi1
    CHECK(parse_grass("xi2*xi3*xi4*eta2*eta3*eta4") == Scalar(-1) * parse_grass("xi1*xi2*xi3*eta1*eta2*eta3"));
    for (int m = 0; m < 64; ++m) {
        GrassElt x = mono(Coord::XiEta, m);
        GrassElt barred(Coord::XiEta);
        std::vector<int> seq;
        for (int b = 0; b < 6; ++b)
            if (m & (1 << b)) seq.push_back(b < 3 ? b + 3 : b - 3);
        barred = GrassElt::product(Coord::XiEta, seq);
        CHECK(gr_wedge(barred, gr_sharp(x)) == mono(Coord::XiEta, kFullMask));
    }
}

TEST_CASE("coordinate change") {
    for (const char *pair : {"rho1*rho4 | i*xi1*eta1", "rho2*rho5 | i*xi2*eta2", "rho3*rho6 | i*xi3*eta3"}) {
        std::string s(pair);
        auto bar_at = s.find('|');
        GrassElt lhs = parse_grass(s.substr(0, bar_at));
        GrassElt rhs = parse_grass(s.substr(bar_at + 1));
        CHECK(gr_change_coords(lhs, Coord::XiEta) == rhs);
    }
    CHECK(gr_change_coords(parse_grass("xi1"), Coord::Rho) == parse_grass("1/2*r2*rho1 + 1/2*r2*i*rho4"));
    CHECK(gr_change_coords(parse_grass("eta2"), Coord::Rho) == parse_grass("1/2*r2*rho2 - 1/2*r2*i*rho5"));
    for (int m = 0; m < 64; ++m) {
        CHECK(gr_change_coords(gr_change_coords(mono(Coord::Rho, m), Coord::XiEta), Coord::Rho) == mono(Coord::Rho, m));
        CHECK(gr_change_coords(gr_change_coords(mono(Coord::XiEta, m), Coord::Rho), Coord::XiEta) ==
              mono(Coord::XiEta, m));
    }
    std::mt19937 rng(4);
    for (int n = 0; n < 100; ++n) {
        auto a = random_elt(rng, Coord::XiEta), b = random_elt(rng, Coord::XiEta);
        CHECK(gr_change_coords(gr_wedge(a, b), Coord::Rho) ==
              gr_wedge(gr_change_coords(a, Coord::Rho), gr_change_coords(b, Coord::Rho)));
    }
}

TEST_CASE("star equals i times sharp on all monomials") {
    for (int m = 0; m < 64; ++m) {
        GrassElt x = mono(Coord::Rho, m);
        CHECK(gr_star(x) == Scalar::imag() * gr_sharp(x));
    }
}

TEST_CASE("renamed printing") {
    CHECK(parse_grass("xi1*eta1").str(Naming::Xi123) == "-eta1*xi1");
    CHECK(parse_grass("eta4*xi4").str() == "-xi4*eta4");
    CHECK_THROWS_AS(parse_grass("xi2*rho1"), ParseError);
}
