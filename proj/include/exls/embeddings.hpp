#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exls/e16k16.hpp"
#include "exls/linalg.hpp"
#include "exls/report.hpp"
#include "exls/vfalgebras.hpp"

namespace exls {

// --------------------------------------------------------------- ψ into E(5,10)

struct PsiImage {
    E510Elt value;
    std::string source;  // "W1", "sl4", "S2", "Lambda2"
};

/// Images of the four summands of a, in that order (zero summands skipped).
std::vector<PsiImage> psi_parts(const E16Elt &a);
E510Elt psi(const E16Elt &a);
/// Inverse on g_0; throws InvariantError naming the leftover part when b is
/// not in the image.
E16Elt psi_inverse(const E510Elt &b);

/// Monomial basis of E(1,6) with t-exponents 0..max_n: t^n∂t, sl4 ⊗ t^n
/// (x_i∂_j, x_i∂_i - x_{i+1}∂_{i+1}), x_ix_j ⊗ t^n dt, d_ij ⊗ t^n dt.
std::vector<E16Elt> e16_basis(int max_n);

/// ψ(2t∂t) is the grading element and its eigenvalues on ψ-images
/// are the principal degrees; negative part is ⟨∂1, d_ij⟩.
VerifyReport grading_element_check(int max_n = 3);
/// [ψa, ψb] = ψ[a,b] over all basis pairs with t-exponents ≤ max_n, plus
/// the hand-computed summand brackets as named cases.
VerifyReport verify_psi(int max_n = 5);
/// Injectivity on the window and g_0 membership of images.
VerifyReport psi_injectivity_check(int max_n = 4);

// ----------------------------------------------------------- ι image and Ψ

/// ι(t^n ξ_I), |I| ≤ 3, n ≤ window, reduced to a basis.
class IotaBasis {
public:
    struct Label {
        int n;
        GrassMask mask;  // xi/eta coordinates
    };

    explicit IotaBasis(int window);

    int window() const { return window_; }
    const std::vector<Label> &labels() const { return labels_; }
    const std::vector<K16Elt> &spanning() const { return spanning_; }
    std::size_t rank() const { return basis_.rank(); }
    const std::vector<SparseVec> &relations() const { return basis_.relations(); }
    const EchelonBasis &echelon() const { return basis_; }
    /// Index of ι(t^n ξ_mask) in the spanning list, -1 if absent.
    int index_of(int n, GrassMask mask) const;

    /// Relations ι(x) = ι(Ax) and the vanishing families lie in the kernel.
    VerifyReport kernel_check() const;

private:
    int window_;
    std::vector<Label> labels_;
    std::vector<K16Elt> spanning_;
    EchelonBasis basis_;
};

/// One line of the Ψ definition table: ι(f) ↦ value.
struct PsiRow {
    std::string family;  // e.g. "xi_i*xi_j"
    std::array<int, 3> ijk;
    GrassElt f;
    E44Elt value;
    bool extension = false;  // ξ_jη_i counterpart of the ξ_iη_j row
};
const std::vector<PsiRow> &psi_rows();
/// The |I| = 3 ι families for one cyclic (i,j,k): monomial f and ι(f).
struct IotaRow {
    std::string family;
    std::array<int, 3> ijk;
    K16Elt f, iota;
    K16Elt expected;  // closed form from the family rule
};
std::vector<IotaRow> iota_rows();

/// Ψ on the ι-image, decomposed over the defining elements times t^n.
class PsiMap {
public:
    explicit PsiMap(int window);
    int window() const { return window_; }
    /// Throws InvariantError when F is outside the span.
    E44Elt operator()(const K16Elt &F) const;
    /// Relations among the defining elements map to zero.
    VerifyReport well_defined() const;

private:
    int window_;
    EchelonBasis basis_;
    std::vector<E44Elt> values_;
};

/// Multiplies every coefficient by x1^n.
E44Elt x1_times(int n, const E44Elt &e);

/// The Ψ homomorphism identity over f = t^n ξ_I (n in [n_lo, n_hi], |I| ≤ 3)
/// and g = η_J, the two exceptional cases for n ≤ 3, and the two
/// reductions in n at small n.
VerifyReport verify_Psi(int n_lo = 0, int n_hi = 1);
/// The same identity on random sums of ι(t^n ξ_I), n <= 1, |I| <= 3.
VerifyReport verify_Psi_random(long trials = 500, std::uint64_t seed = 1);
/// Ψ against the (1|0,1,1,1,0,0) degree and E(4,4) principal degree.
VerifyReport Psi_grading_check(int window = 2);

/// C[[x1]](V0 + V1) is closed under the bracket up to x1-degree window, Ψ
/// of every ι basis element lands in it, and the embedded principal grading
/// has dimensions 1, 6, 16, 16 in degrees -2..1.
VerifyReport corollary_subalgebra_check(int window = 4);
std::vector<E44Elt> corollary_v0();
std::vector<E44Elt> corollary_v1();

/// Ranks of the ι image in principal degrees -2..1.
std::vector<std::size_t> iota_principal_dimensions();

}  // namespace exls
