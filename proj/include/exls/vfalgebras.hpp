#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "exls/formcalc.hpp"

namespace exls {

/// E(5,10): divergence-free vector fields plus closed 2-forms in x1..x5.
struct E510Elt {
    VectorField even{Vars::X1to5};
    DiffForm odd{Vars::X1to5, 2};

    /// Validates div(even) = 0 and d(odd) = 0; throws InvariantError.
    static E510Elt make(const VectorField &even, const DiffForm &odd);
    static E510Elt from_even(const VectorField &x) { return make(x, DiffForm(Vars::X1to5, 2, x.trunc())); }
    static E510Elt from_odd(const DiffForm &w) { return make(VectorField(Vars::X1to5, w.trunc()), w); }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
    int trunc() const { return trunc_min(even.trunc(), odd.trunc()); }
    E510Elt &operator+=(const E510Elt &o);
    E510Elt &operator*=(const Scalar &s);
    friend E510Elt operator+(E510Elt a, const E510Elt &b) { return a += b; }
    friend E510Elt operator-(E510Elt a, const E510Elt &b) { return a += Scalar(-1) * b; }
    friend E510Elt operator*(const Scalar &s, E510Elt a) { return a *= s; }
    bool agrees_with(const E510Elt &o) const { return even.agrees_with(o.even) && odd.agrees_with(o.odd); }
    std::string str() const;
};

/// E(4,4): vector fields in x1..x4 plus 1-forms with the λ = -1/2 twist.
struct E44Elt {
    VectorField even{Vars::X1to4};
    DiffForm odd{Vars::X1to4, 1};

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
    int trunc() const { return trunc_min(even.trunc(), odd.trunc()); }
    E44Elt &operator+=(const E44Elt &o);
    E44Elt &operator*=(const Scalar &s);
    friend E44Elt operator+(E44Elt a, const E44Elt &b) { return a += b; }
    friend E44Elt operator-(E44Elt a, const E44Elt &b) { return a += Scalar(-1) * b; }
    friend E44Elt operator*(const Scalar &s, E44Elt a) { return a *= s; }
    bool agrees_with(const E44Elt &o) const { return even.agrees_with(o.even) && odd.agrees_with(o.odd); }
    std::string str() const;
};

/// Type (a1..a5) with even sum.
struct GradingType510 {
    std::array<int, 5> a{};
    GradingType510() = default;
    explicit GradingType510(std::array<int, 5> v);
};

/// Sign of (i,j,k,l,[ijkl]) and the missing index; sign 0 if indices repeat.
/// Indices are 1-based.
std::pair<int, int> eps_quintuple(int i, int j, int k, int l);

E510Elt bracket_e510(const E510Elt &a, const E510Elt &b);
E44Elt bracket_e44(const E44Elt &a, const E44Elt &b);

/// Common degree of all monomials; nullopt when inhomogeneous or zero.
std::optional<int> degree_510(const E510Elt &e, const GradingType510 &g);
std::optional<int> degree_e44_principal(const E44Elt &e);

/// Parses mixed field/form text (`x2*D1 + d23`) into an algebra element.
E510Elt parse_e510(const std::string &text);
E44Elt parse_e44(const std::string &text);

}  // namespace exls
