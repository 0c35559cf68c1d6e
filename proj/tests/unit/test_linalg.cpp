#include <doctest.h>

#include "exls/linalg.hpp"

using namespace exls;

namespace {

SparseVec v(std::initializer_list<std::pair<const std::int64_t, Scalar>> xs) { return SparseVec(xs); }

Scalar q(long a, long b = 1) { return Scalar::rational(a, b); }

SparseVec combine(const SparseVec &c, const std::vector<SparseVec> &inputs) {
    SparseVec out;
    for (const auto &[id, s] : c) axpy(out, s, inputs[static_cast<std::size_t>(id)]);
    return out;
}

}  // namespace

TEST_CASE("axpy cancels to empty") {
    SparseVec y = v({{0, q(1)}, {3, q(2)}});
    axpy(y, q(-1), v({{0, q(1)}, {3, q(2)}}));
    CHECK(y.empty());
}

TEST_CASE("echelon basis relations and decomposition") {
    std::vector<SparseVec> in = {v({{0, q(1)}, {1, q(2)}}), v({{1, q(1)}, {5, q(1)}}),
                                 v({{0, q(1)}, {1, q(4)}, {5, q(2)}}), v({{7, Scalar::sqrt2()}})};
    EchelonBasis b;
    for (const auto &x : in) b.insert(x);
    CHECK(b.size() == 4);
    CHECK(b.rank() == 3);
    REQUIRE(b.relations().size() == 1);
    CHECK(combine(b.relations()[0], in).empty());
    CHECK(b.independent_ids() == std::vector<int>{0, 1, 3});

    SparseVec target = v({{0, q(3)}, {1, q(4)}, {5, q(-2)}, {7, q(1)}});
    auto red = b.reduce(target);
    REQUIRE(red.in_span());
    CHECK(combine(red.combo, in) == target);
    CHECK_FALSE(b.in_span(v({{2, q(1)}})));
}

TEST_CASE("rank and kernel helpers") {
    std::vector<SparseVec> vs = {v({{0, q(1)}}), v({{1, Scalar::imag()}}), v({{0, q(2)}, {1, Scalar::imag()}})};
    CHECK(rank_of(vs) == 2);
    auto ker = kernel_of(vs);
    REQUIRE(ker.size() == 1);
    CHECK(combine(ker[0], vs).empty());
    CHECK(rank_of({}) == 0);
}
