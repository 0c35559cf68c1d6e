#pragma once

#include "exls/e16k16.hpp"
#include "exls/linalg.hpp"
#include "exls/vfalgebras.hpp"

namespace exls {

/// Coordinates of algebra elements on their monomial bases, for rank and
/// span computations. Keys are injective per element type.
SparseVec to_vec(const VectorField &x, int part = 0);
SparseVec to_vec(const DiffForm &w, int part = 1);
SparseVec to_vec(const E510Elt &e);
SparseVec to_vec(const E44Elt &e);
SparseVec to_vec(const K16Elt &f);
SparseVec to_vec(const E16Elt &e);

}  // namespace exls
