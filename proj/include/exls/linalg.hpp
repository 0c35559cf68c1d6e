#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "exls/scalar.hpp"

namespace exls {

using SparseVec = std::map<std::int64_t, Scalar>;

void axpy(SparseVec &y, const Scalar &a, const SparseVec &x);

/// Incremental semi-echelon basis over Q(i, r2). Every inserted vector gets
/// an id (0, 1, ...); each stored row remembers the combination of input
/// ids it equals, so dependent inputs yield kernel relations and spanned
/// vectors can be decomposed over the inputs.
class EchelonBasis {
public:
    struct Reduction {
        SparseVec residual;  // v - Σ combo[id] * input[id]
        SparseVec combo;     // over input ids
        bool in_span() const { return residual.empty(); }
    };

    /// Inserts v; returns its id. Dependent inputs add a kernel relation.
    int insert(const SparseVec &v);
    Reduction reduce(const SparseVec &v) const;
    bool in_span(const SparseVec &v) const { return reduce(v).in_span(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t size() const { return static_cast<std::size_t>(next_id_); }
    /// Each relation r satisfies Σ r[id] * input[id] = 0.
    const std::vector<SparseVec> &relations() const { return relations_; }
    /// Ids of the inputs that were independent when inserted.
    const std::vector<int> &independent_ids() const { return independent_; }

private:
    struct Row {
        SparseVec v;      // leading coefficient 1 at its pivot
        SparseVec combo;
    };
    std::map<std::int64_t, Row> rows_;  // pivot -> row
    std::vector<SparseVec> relations_;
    std::vector<int> independent_;
    int next_id_ = 0;
};

/// Rank of a list of sparse vectors.
std::size_t rank_of(const std::vector<SparseVec> &vs);
/// Basis of {c : Σ c_i vs[i] = 0}.
std::vector<SparseVec> kernel_of(const std::vector<SparseVec> &vs);

}  // namespace exls
