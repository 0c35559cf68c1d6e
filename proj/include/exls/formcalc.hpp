#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "exls/series.hpp"

namespace exls {

/// Bit set over the local variable indices of a Vars set.
using VarMask = std::uint8_t;

/// Formal vector field Σ X_j ∂_j with PolySeries coefficients.
class VectorField {
public:
    explicit VectorField(Vars v = Vars::X1to5, int trunc = kExact) : vars_(v), trunc_(series_index(v) < 0 ? kExact : trunc) {}
    /// c * ∂_j
    static VectorField partial(Vars v, int j, const PolySeries &c);

    Vars vars() const { return vars_; }
    int trunc() const { return trunc_; }
    const std::map<int, PolySeries> &components() const { return comp_; }
    PolySeries component(int j) const;
    bool is_zero() const { return comp_.empty(); }

    void add(int j, const PolySeries &c);
    void truncate(int trunc);

    VectorField &operator+=(const VectorField &o);
    VectorField &operator-=(const VectorField &o);
    VectorField &operator*=(const Scalar &s);
    VectorField operator-() const;
    friend VectorField operator+(VectorField a, const VectorField &b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField &b) { return a -= b; }
    friend VectorField operator*(const Scalar &s, VectorField a) { return a *= s; }
    bool operator==(const VectorField &o) const;
    bool agrees_with(const VectorField &o) const;

    std::string str() const;

private:
    Vars vars_;
    int trunc_;
    std::map<int, PolySeries> comp_;
};

/// Homogeneous differential k-form Σ f_S dx_S, S an ascending k-subset.
class DiffForm {
public:
    explicit DiffForm(Vars v = Vars::X1to5, int degree = 0, int trunc = kExact)
        : vars_(v), degree_(degree), trunc_(series_index(v) < 0 ? kExact : trunc) {}
    /// c * dx_S
    static DiffForm monomial(Vars v, VarMask s, const PolySeries &c);
    static DiffForm function(const PolySeries &f) { return monomial(f.vars(), 0, f); }

    Vars vars() const { return vars_; }
    int degree() const { return degree_; }
    int trunc() const { return trunc_; }
    const std::map<VarMask, PolySeries> &terms() const { return terms_; }
    PolySeries coeff(VarMask s) const;
    bool is_zero() const { return terms_.empty(); }

    void add(VarMask s, const PolySeries &c);
    void truncate(int trunc);

    DiffForm &operator+=(const DiffForm &o);
    DiffForm &operator-=(const DiffForm &o);
    DiffForm &operator*=(const Scalar &s);
    DiffForm operator-() const;
    friend DiffForm operator+(DiffForm a, const DiffForm &b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm &b) { return a -= b; }
    friend DiffForm operator*(const Scalar &s, DiffForm a) { return a *= s; }
    bool operator==(const DiffForm &o) const;
    bool agrees_with(const DiffForm &o) const;

    std::string str() const;

private:
    Vars vars_;
    int degree_;
    int trunc_;
    std::map<VarMask, PolySeries> terms_;
};

/// Sign of dx_a ∧ dx_b relative to dx_{a|b}; 0 if they overlap.
int mask_wedge_sign(VarMask a, VarMask b);
/// "d23", "dx1", "dt*d23" style name of dx_S.
std::string form_token(Vars v, VarMask s);

PolySeries vf_apply(const VectorField &x, const PolySeries &f);
VectorField vf_bracket(const VectorField &x, const VectorField &y);
PolySeries vf_div(const VectorField &x);
VectorField vf_mul(const PolySeries &f, const VectorField &x);
/// Σ x_j ∂_j over all variables of v.
VectorField euler_field(Vars v);

DiffForm form_mul(const PolySeries &f, const DiffForm &w);
DiffForm form_d(const DiffForm &w);
DiffForm form_wedge(const DiffForm &a, const DiffForm &b);
/// Interior product; throws InvariantError on a 0-form.
DiffForm form_contract(const VectorField &x, const DiffForm &w);
/// L_X = d i_X + i_X d.
DiffForm form_lie(const VectorField &x, const DiffForm &w);
/// L_X ω + λ div(X) ω.
DiffForm lambda_action(const VectorField &x, const DiffForm &w, const Scalar &lambda);
/// (1/(k+m)) i_E on each (k,m)-homogeneous piece; throws on a nonzero
/// constant 0-form ("Euler weight zero").
DiffForm int_op(const DiffForm &w);

/// Ascending volume form dx_all.
DiffForm volume_form(Vars v);
/// i_X(vol).
DiffForm form_from_vf(const VectorField &x);
/// The unique X with i_X(vol) = ω; ω must have degree n-1.
VectorField vf_from_form(const DiffForm &w);

struct SymTerm;
/// Adds one parsed `c*x^m*Dj` term; throws ParseError.
void add_parsed_term(VectorField &x, const SymTerm &t);
/// Adds one parsed `c*x^m*dxi*dxj` term (a zero form adopts its degree).
void add_parsed_term(DiffForm &w, const SymTerm &t);

/// Parses `x2*D3 - x1^2*D1`.
VectorField parse_vf(const std::string &text, Vars v);
/// Parses `x1*d23 + dx4*dx5`; all terms must share one degree.
DiffForm parse_form(const std::string &text, Vars v);

}  // namespace exls
