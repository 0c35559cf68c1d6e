#include "exls/linalg.hpp"

namespace exls {

void axpy(SparseVec &y, const Scalar &a, const SparseVec &x) {
    if (a.is_zero()) return;
    for (const auto &[k, v] : x) {
        auto [it, fresh] = y.try_emplace(k, a * v);
        if (!fresh) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVec &v) const {
    Reduction r;
    SparseVec work = v;
    while (!work.empty()) {
        auto [k, c] = *work.begin();
        auto row = rows_.find(k);
        if (row == rows_.end()) {
            r.residual.emplace(k, c);
            work.erase(work.begin());
            continue;
        }
        Scalar factor = c;
        axpy(work, -factor, row->second.v);
        axpy(r.combo, factor, row->second.combo);
    }
    return r;
}

int EchelonBasis::insert(const SparseVec &v) {
    int id = next_id_++;
    Reduction r = reduce(v);
    // residual = v - Σ combo: as a combination of inputs, v itself is e_id
    SparseVec combo = {{id, Scalar(1)}};
    axpy(combo, Scalar(-1), r.combo);
    if (r.residual.empty()) {
        relations_.push_back(combo);
        return id;
    }
    Scalar inv = r.residual.begin()->second.inverse();
    for (auto &[k, c] : r.residual) c *= inv;
    for (auto &[k, c] : combo) c *= inv;
    std::int64_t pivot = r.residual.begin()->first;
    rows_.emplace(pivot, Row{std::move(r.residual), std::move(combo)});
    independent_.push_back(id);
    return id;
}

std::size_t rank_of(const std::vector<SparseVec> &vs) {
    EchelonBasis b;
    for (const auto &v : vs) b.insert(v);
    return b.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec> &vs) {
    EchelonBasis b;
    for (const auto &v : vs) b.insert(v);
    return b.relations();
}

}  // namespace exls
