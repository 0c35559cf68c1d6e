#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exls/scalar.hpp"
#include "exls/series.hpp"

namespace exls {

/// Coordinates on the six odd generators.
///  XiEta: bit 0..5 = xi2, xi3, xi4, eta2, eta3, eta4  (xi1 = eta4, eta1 = xi4)
///  Rho:   bit 0..5 = rho1 .. rho6
enum class Coord : std::uint8_t { XiEta, Rho };

/// How xi/eta generators are printed: xi2..xi4/eta2..eta4, or the
/// xi1..xi3/eta1..eta3 labels obtained by renaming eta4 -> xi1, xi4 -> eta1.
enum class Naming : std::uint8_t { Xi234, Xi123 };

using GrassMask = std::uint8_t;
inline constexpr GrassMask kFullMask = 0x3f;

/// Sign of ξ_a ξ_b relative to ξ_{a|b} in canonical order; 0 if a & b != 0.
int wedge_sign(GrassMask a, GrassMask b);
/// Sign of the odd left derivative ∂_g(ξ_m) relative to ξ_{m\g}; 0 if g ∉ m.
int partial_sign(GrassMask m, int g);
/// Sign of the permutation sorting `seq` (distinct generator indices).
int sequence_sign(const std::vector<int> &seq);
/// ξ_k <-> η_k (bits 0..2 <-> 3..5).
GrassMask bar(GrassMask m);
inline int popcount(GrassMask m) { return __builtin_popcount(m); }

std::string generator_name(Coord c, int bit, Naming naming = Naming::Xi234);
std::string grass_mono_str(Coord c, GrassMask m, Naming naming = Naming::Xi234);

/// Element of the 64-dimensional exterior algebra in one coordinate system.
class GrassElt {
public:
    using Terms = LinComb<GrassMask>;

    explicit GrassElt(Coord c = Coord::XiEta) : coord_(c) {}
    static GrassElt monomial(Coord c, GrassMask m, const Scalar &s = Scalar(1));
    /// Ordered product of generators, sign absorbed: gens {1, 0} -> -g0 g1.
    static GrassElt product(Coord c, const std::vector<int> &gens, const Scalar &s = Scalar(1));

    Coord coord() const { return coord_; }
    const Terms::Map &terms() const { return terms_.map(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(GrassMask m) const { return terms_.coeff(m); }
    void add(GrassMask m, const Scalar &s) { terms_.add(m, s); }

    GrassElt &operator+=(const GrassElt &o);
    GrassElt &operator-=(const GrassElt &o);
    GrassElt &operator*=(const Scalar &s);
    friend GrassElt operator+(GrassElt a, const GrassElt &b) { return a += b; }
    friend GrassElt operator-(GrassElt a, const GrassElt &b) { return a -= b; }
    friend GrassElt operator*(const Scalar &s, GrassElt a) { return a *= s; }
    bool operator==(const GrassElt &o) const { return coord_ == o.coord_ && terms_ == o.terms_; }

    std::string str(Naming naming = Naming::Xi234) const;

private:
    Coord coord_;
    Terms terms_;
};

GrassElt gr_wedge(const GrassElt &a, const GrassElt &b);
/// Odd left derivative with respect to generator bit `g` (in a's coordinates).
GrassElt gr_partial(const GrassElt &a, int g);
/// ρ_I ρ_I^* = ρ1⋯ρ6, extended linearly. Non-ρ inputs are converted and back.
GrassElt gr_star(const GrassElt &a);
/// ξ_{Ī} ξ_I^# = ξ2ξ3ξ4η2η3η4, extended linearly. Non-ξη inputs are converted and back.
GrassElt gr_sharp(const GrassElt &a);
/// ρ_j = (ξ_j+η_j)/√2, ρ_{j+3} = (ξ_j−η_j)/√−2 and inverse; algebra isomorphism.
GrassElt gr_change_coords(const GrassElt &a, Coord to);

/// Monomial-level tables.
Scalar star_sign(GrassMask m);   // ρ_m^* = star_sign(m) ρ_{~m}
Scalar sharp_sign(GrassMask m);  // ξ_m^# = sharp_sign(m) ξ_{~bar(m)}

/// Parses `xi2*eta3 - 2*rho1*rho4` tokens; `xi1`/`eta1` accepted as renamings.
GrassElt parse_grass(const std::string &text, std::optional<Coord> coord = std::nullopt);

/// Maps a parsed odd token to (coord, bit); std::nullopt if not a Grassmann token.
std::optional<std::pair<Coord, int>> grass_token(const std::string &tok);

}  // namespace exls
