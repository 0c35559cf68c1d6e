#include "exls/vectorize.hpp"

namespace exls {

namespace {

std::int64_t key(int part, int idx, const EvenMono &m, int extra = 0) {
    std::int64_t k = part;
    k = k * 64 + idx;
    for (int i = 0; i < 5; ++i) k = k * 64 + m.e[i];
    return k * 64 + extra;
}

void put(SparseVec &v, std::int64_t k, const Scalar &c) {
    auto [it, fresh] = v.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void merge(SparseVec &into, const SparseVec &from) {
    for (const auto &[k, c] : from) put(into, k, c);
}

}  // namespace

SparseVec to_vec(const VectorField &x, int part) {
    SparseVec v;
    for (const auto &[j, c] : x.components())
        for (const auto &[m, s] : c.terms()) put(v, key(part, j, m), s);
    return v;
}

SparseVec to_vec(const DiffForm &w, int part) {
    SparseVec v;
    for (const auto &[s, c] : w.terms())
        for (const auto &[m, a] : c.terms()) put(v, key(part, s, m), a);
    return v;
}

SparseVec to_vec(const E510Elt &e) {
    SparseVec v = to_vec(e.even, 0);
    merge(v, to_vec(e.odd, 1));
    return v;
}

SparseVec to_vec(const E44Elt &e) {
    SparseVec v = to_vec(e.even, 0);
    merge(v, to_vec(e.odd, 1));
    return v;
}

SparseVec to_vec(const K16Elt &f) {
    SparseVec v;
    K16Elt g = k16_change_coords(f, Coord::XiEta);
    for (const auto &[k, c] : g.terms()) put(v, key(0, k.second, EvenMono{}, k.first), c);
    return v;
}

SparseVec to_vec(const E16Elt &e) {
    SparseVec v;
    for (const auto &[m, c] : e.w1.terms()) put(v, key(0, 0, EvenMono{}, m.e[0]), c);
    for (const auto &[n, x] : e.sl4)
        for (const auto &[j, c] : x.components())
            for (const auto &[m, s] : c.terms()) put(v, key(1, j, m, n), s);
    for (const auto &[n, p] : e.s2)
        for (const auto &[m, s] : p.terms()) put(v, key(2, 0, m, n), s);
    for (const auto &[n, w] : e.lam2)
        for (const auto &[s, c] : w.terms()) put(v, key(3, s, EvenMono{}, n), c.coeff(EvenMono{}));
    return v;
}

}  // namespace exls
