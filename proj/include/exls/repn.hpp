#pragma once

#include <string>
#include <vector>

#include "exls/report.hpp"
#include "exls/vfalgebras.hpp"

namespace exls {

/// Largest fine degree enumerate_slice accepts.
inline constexpr int kSliceWindow = 24;

/// g_{r,k}: degree r under (0,1,1,1,1) and k under (2,2,2,2,2).
struct GrSlice {
    int r = 0;
    int k = 0;
    std::vector<E510Elt> basis;
};

/// Kernel of the divergence / d conditions on the monomial span. Throws
/// InvariantError when r < -1, k < 2r-2 or k > kmax.
GrSlice enumerate_slice(int r, int k, int kmax = kSliceWindow);

/// Eigenvalues under x2D2-x3D3, x3D3-x4D4, x4D4-x5D5 and z.
struct WeightVec {
    int a = 0, b = 0, c = 0;
    Scalar d;
    bool operator==(const WeightVec &) const = default;
    std::string str() const;
};

/// The grading element z = ψ(2t∂t).
E510Elt grading_element_z();
/// ∂1 and d_ij, 2 <= i < j <= 5.
std::vector<E510Elt> negative_part();
/// v_{-1} = ∂5, v_r = x2^r ∂1.
E510Elt v_r(int r);

/// Throws InvariantError naming the Cartan element v is not an eigenvector of.
WeightVec weight_of(const E510Elt &v);
bool annihilated_by_negative(const E510Elt &v);

/// Span of ad(g_0)-iterates of v_r within fine degree 2r + 2*x1max + 1,
/// compared slice by slice with enumerate_slice. Inconclusive when the
/// breadth-first closure has not stabilised after 50 rounds.
VerifyReport generation_check(int r, int x1max = 3);
/// The three ad-computations from the generation argument, compared as
/// printed text for r, k in 0..max.
VerifyReport generation_examples(int max = 3);
/// generation_check for r = -1..2 plus the three ad computations.
VerifyReport prop_generated(int x1max = 3);

/// No nonzero vector of g_{r,2r-1} is killed by the negative part.
VerifyReport singular_absence(int r);
/// dim g_{r,2r-1} against rank of d on 1-forms of coefficient degree r+1 in
/// x2..x5, and against the closed-form count.
VerifyReport closed_form_dimension_check(int r);
/// ad of ψ-images with t-degree <= 1 maps g_{r,k} into g_{r,k+deg}.
VerifyReport grading_additivity_check(int rmax = 3);
/// Weights, annihilation, singular absence, dimension and grading checks.
VerifyReport theorem_linear_check(int rmax = 3);

}  // namespace exls
