#include <doctest.h>

#include "exls/embeddings.hpp"
#include "exls/errors.hpp"

using namespace exls;

namespace {

E16Elt E(const std::string &s) { return parse_e16(s); }
E510Elt F(const std::string &s) { return parse_e510(s); }
E44Elt G(const std::string &s) { return parse_e44(s); }
K16Elt K(const std::string &s) { return parse_k16(s, Coord::XiEta); }

}  // namespace

TEST_CASE("psi on summands") {
    CHECK(psi(E("Dt")).agrees_with(F("D1")));
    CHECK(psi(E("t^2*Dt")).agrees_with(F("x1^2*D1 - 1/2*x1*x2*D2 - 1/2*x1*x3*D3 - 1/2*x1*x4*D4 - 1/2*x1*x5*D5")));
    CHECK(psi(E("t*x2*D3")).agrees_with(F("x1*x2*D3")));
    CHECK(psi(E("x2*x3*dt")).agrees_with(F("x3*d12 + x2*d13")));
    CHECK(psi(E("t*x2*x3*dt")).agrees_with(F("x1*x3*d12 + x1*x2*d13")));
    CHECK(psi(E("d23*dt")).agrees_with(F("d23")));
    auto parts = psi_parts(E("Dt + x2*D3 + d45*dt"));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].source == "W1");
    CHECK(parts[1].source == "sl4");
    CHECK(parts[2].source == "Lambda2");
}

TEST_CASE("psi inverse") {
    CHECK(psi_inverse(F("D1")).agrees_with(E("Dt")));
    CHECK(psi_inverse(F("x2*d13 + x3*d12")).agrees_with(E("x2*x3*dt")));
    CHECK(psi_inverse(F("x1*x2*D3")).agrees_with(E("t*x2*D3")));
    CHECK(psi_inverse(F("d23")).agrees_with(E("d23*dt")));
    for (const E16Elt &a : e16_basis(2)) CHECK(psi_inverse(psi(a)).agrees_with(a));
    CHECK_THROWS_AS(psi_inverse(F("x2*D1")), InvariantError);
    CHECK_THROWS_AS(psi_inverse(F("x1*d23")), InvariantError);
}

TEST_CASE("e16 basis size") {
    CHECK(e16_basis(0).size() == 32);
    CHECK(e16_basis(3).size() == 128);
}

TEST_CASE("Psi on generators") {
    PsiMap Psi(3);
    CHECK(Psi(op_iota(K("1"))).agrees_with(G("D1")));
    CHECK(Psi(op_iota(K("eta2"))).agrees_with(G("1/2*r2*dx2")));
    CHECK(Psi(op_iota(K("xi2*xi3"))).agrees_with(G("x4*x2*D2 + x4*x3*D3 + x4*x4*D4")));
    CHECK(Psi(op_iota(K("xi2*eta3"))).agrees_with(G("x3*D2")));
    CHECK(Psi(op_iota(K("xi3*eta2"))).agrees_with(G("x2*D3")));
    CHECK(Psi(op_iota(K("t"))).agrees_with(Scalar(2) * G("x1*D1")));
    CHECK_THROWS_AS(Psi(K("xi2*xi3*xi4")), InvariantError);
}

TEST_CASE("Psi table rows") {
    int ext = 0;
    for (const auto &row : psi_rows()) ext += row.extension;
    CHECK(ext == 3);
    for (const auto &row : iota_rows()) CHECK(row.iota == row.expected);
    CHECK(x1_times(2, G("D2 + dx3")).agrees_with(G("x1^2*D2 + x1^2*dx3")));
}

TEST_CASE("iota principal dimensions") {
    std::vector<std::size_t> want = {1, 6, 16, 16};
    CHECK(iota_principal_dimensions() == want);
    CHECK(corollary_v0().size() == 16);
    CHECK(corollary_v1().size() == 16);
}

TEST_CASE("embedding reports") {
    CHECK(grading_element_check(2).ok());
    CHECK(verify_psi(2).ok());
    CHECK(psi_injectivity_check(2).ok());
    IotaBasis basis(2);
    CHECK(basis.kernel_check().ok());
    CHECK(basis.rank() > 0);
    CHECK(PsiMap(2).well_defined().ok());
    CHECK(verify_Psi(0, 0).ok());
    CHECK(Psi_grading_check(1).ok());
    CHECK(corollary_subalgebra_check(2).ok());
}
