#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "exls/formcalc.hpp"
#include "exls/grassmann.hpp"

namespace exls {

// ------------------------------------------------------------------- K(1,6)

/// Element of C[[t]] ⊗ Λ(6 odd generators), in one coordinate system.
class K16Elt {
public:
    using Key = std::pair<int, GrassMask>;  // (t-exponent, monomial)

    explicit K16Elt(Coord c = Coord::XiEta, int trunc = kExact) : coord_(c), trunc_(trunc) {}
    static K16Elt monomial(Coord c, int n, GrassMask m, const Scalar &s = Scalar(1), int trunc = kExact);
    /// t^n times a Grassmann element.
    static K16Elt from_grass(int n, const GrassElt &g, int trunc = kExact);

    Coord coord() const { return coord_; }
    int trunc() const { return trunc_; }
    const LinComb<Key>::Map &terms() const { return terms_.map(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(int n, GrassMask m) const { return terms_.coeff({n, m}); }
    /// Drops terms at or beyond the truncation order.
    void add(int n, GrassMask m, const Scalar &s);
    void truncate(int trunc);

    K16Elt &operator+=(const K16Elt &o);
    K16Elt &operator-=(const K16Elt &o);
    K16Elt &operator*=(const Scalar &s);
    friend K16Elt operator+(K16Elt a, const K16Elt &b) { return a += b; }
    friend K16Elt operator-(K16Elt a, const K16Elt &b) { return a -= b; }
    friend K16Elt operator*(const Scalar &s, K16Elt a) { return a *= s; }
    bool operator==(const K16Elt &o) const;
    bool agrees_with(const K16Elt &o) const;

    std::string str(Naming naming = Naming::Xi234) const;

private:
    Coord coord_;
    int trunc_;
    LinComb<Key> terms_;
};

K16Elt k16_change_coords(const K16Elt &f, Coord to);
/// Contact bracket, computed natively in `coords` (inputs converted if needed).
K16Elt bracket_k16(const K16Elt &f, const K16Elt &g, Coord coords);
inline K16Elt bracket_k16(const K16Elt &f, const K16Elt &g) { return bracket_k16(f, g, f.coord()); }

/// n + |I| common to all terms; nullopt when mixed or zero.
std::optional<int> filtration_level(const K16Elt &f);
/// Principal grading (2|1,1,1,1,1,1): 2n + |I| - 2.
std::optional<int> degree_k16_principal(const K16Elt &f);
/// Grading of type (1|0,1,1,1,0,0) in xi2..xi4/eta2..eta4 naming: n + #xi - 1.
std::optional<int> degree_k16_type1(const K16Elt &f);

/// A(t^n ξ_I) = (-1)^{|I|(|I|+1)/2} ∂_t^{3-|I|} t^n ξ_I^#, natively in the
/// element's coordinates. Truncated inputs of order N give order N-3;
/// HeadroomError if that leaves no room or would drop a produced term.
K16Elt op_A(const K16Elt &f);
K16Elt op_iota(const K16Elt &f);

/// Exceptional pair test on monomials t^n ρ_I, t^m ρ_J.
bool is_exceptional_pair(int n, GrassMask i, int m, GrassMask j);

struct IotaBracket {
    K16Elt bracket;     // [ι(f), ι(g)] computed directly
    K16Elt h;           // with ι(h) = bracket
    bool first_branch;  // h = [f,g] + [Af,Ag] (true) or [Af,g] + [f,Ag]
};
/// [ι(f), ι(g)] for exact monomials f, g, exhibited as ι(h); throws
/// InvariantError("closure violation") if neither candidate works.
IotaBracket bracket_iota_image(const K16Elt &f, const K16Elt &g);

K16Elt parse_k16(const std::string &text, std::optional<Coord> coord = std::nullopt);

// ------------------------------------------------------------------- E(1,6)

/// W1 ⊕ sl4⊗C[[t]] ⊕ S²⊗C[[t]]dt ⊕ Λ²⊗C[[t]]dt, summands kept apart.
/// sl4 is realised as divergence-free linear fields in x2..x5, S² as
/// quadratic forms, Λ² as constant 2-forms. Keys are t-exponents.
struct E16Elt {
    int trunc = kExact;
    PolySeries w1{Vars::T};
    std::map<int, VectorField> sl4;
    std::map<int, PolySeries> s2;
    std::map<int, DiffForm> lam2;

    void add_w1(const PolySeries &f);
    void add_sl4(int n, const VectorField &x);
    void add_s2(int n, const PolySeries &p);
    void add_lam2(int n, const DiffForm &w);
    void truncate(int t);
    /// Throws InvariantError when a summand leaves its space.
    void validate() const;

    bool is_zero() const { return w1.is_zero() && sl4.empty() && s2.empty() && lam2.empty(); }
    bool is_even() const { return s2.empty() && lam2.empty(); }
    bool is_odd() const { return w1.is_zero() && sl4.empty(); }
    E16Elt even_part() const;
    E16Elt odd_part() const;

    E16Elt &operator+=(const E16Elt &o);
    E16Elt &operator*=(const Scalar &s);
    friend E16Elt operator+(E16Elt a, const E16Elt &b) { return a += b; }
    friend E16Elt operator-(E16Elt a, const E16Elt &b) { return a += Scalar(-1) * b; }
    friend E16Elt operator*(const Scalar &s, E16Elt a) { return a *= s; }
    bool agrees_with(const E16Elt &o) const;

    std::string str() const;
};

E16Elt bracket_e16(const E16Elt &a, const E16Elt &b);
/// ad(2t∂t) eigenvalue common to all summand monomials; nullopt if mixed/zero.
std::optional<int> degree_e16_principal(const E16Elt &a);

/// `t^2*Dt + t*x2*D3 - t*x3*D2 + x2*x3*dt + t*d23*dt`
E16Elt parse_e16(const std::string &text);

}  // namespace exls
