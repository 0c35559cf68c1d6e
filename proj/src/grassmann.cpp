#include "exls/grassmann.hpp"

#include <array>
#include <mutex>

#include "exls/errors.hpp"
#include "exls/parse.hpp"
#include "format.hpp"

namespace exls {

int wedge_sign(GrassMask a, GrassMask b) {
    if (a & b) return 0;
    // count pairs (i in a, j in b) with i > j
    int inv = 0;
    for (int j = 0; j < 6; ++j)
        if (b & (1u << j)) inv += popcount(static_cast<GrassMask>(a >> (j + 1)));
    return (inv & 1) ? -1 : 1;
}

int partial_sign(GrassMask m, int g) {
    if (!(m & (1u << g))) return 0;
    return (popcount(static_cast<GrassMask>(m & ((1u << g) - 1))) & 1) ? -1 : 1;
}

int sequence_sign(const std::vector<int> &seq) {
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b];
    return (inv & 1) ? -1 : 1;
}

GrassMask bar(GrassMask m) { return static_cast<GrassMask>(((m & 7u) << 3) | ((m >> 3) & 7u)); }

std::string generator_name(Coord c, int bit, Naming naming) {
    if (c == Coord::Rho) return "rho" + std::to_string(bit + 1);
    if (naming == Naming::Xi123) {
        if (bit == 2) return "eta1";
        if (bit == 5) return "xi1";
    }
    return (bit < 3 ? "xi" : "eta") + std::to_string(bit % 3 + 2);
}

std::string grass_mono_str(Coord c, GrassMask m, Naming naming) {
    std::string s;
    for (int b = 0; b < 6; ++b) {
        if (!(m & (1u << b))) continue;
        if (!s.empty()) s += '*';
        s += generator_name(c, b, naming);
    }
    return s;
}

GrassElt GrassElt::monomial(Coord c, GrassMask m, const Scalar &s) {
    GrassElt e(c);
    e.add(m, s);
    return e;
}

GrassElt GrassElt::product(Coord c, const std::vector<int> &gens, const Scalar &s) {
    GrassMask m = 0;
    for (int g : gens) {
        if (m & (1u << g)) return GrassElt(c);
        m |= static_cast<GrassMask>(1u << g);
    }
    return monomial(c, m, s * Scalar(sequence_sign(gens)));
}

GrassElt &GrassElt::operator+=(const GrassElt &o) {
    if (coord_ != o.coord_) throw MismatchError("coordinate mismatch");
    terms_.add(o.terms_);
    return *this;
}

GrassElt &GrassElt::operator-=(const GrassElt &o) {
    if (coord_ != o.coord_) throw MismatchError("coordinate mismatch");
    terms_.add(o.terms_, Scalar(-1));
    return *this;
}

GrassElt &GrassElt::operator*=(const Scalar &s) {
    terms_.scale(s);
    return *this;
}

std::string GrassElt::str(Naming naming) const {
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto &[m, c] : terms()) parts.emplace_back(c, grass_mono_str(coord_, m, naming));
    return detail::format_sum(parts);
}

GrassElt gr_wedge(const GrassElt &a, const GrassElt &b) {
    if (a.coord() != b.coord()) throw MismatchError("coordinate mismatch in wedge");
    GrassElt r(a.coord());
    for (const auto &[ma, ca] : a.terms())
        for (const auto &[mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s) r.add(ma | mb, ca * cb * Scalar(s));
        }
    return r;
}

GrassElt gr_partial(const GrassElt &a, int g) {
    GrassElt r(a.coord());
    for (const auto &[m, c] : a.terms()) {
        int s = partial_sign(m, g);
        if (s) r.add(static_cast<GrassMask>(m & ~(1u << g)), c * Scalar(s));
    }
    return r;
}

Scalar star_sign(GrassMask m) { return Scalar(wedge_sign(m, static_cast<GrassMask>(~m & kFullMask))); }

Scalar sharp_sign(GrassMask m) {
    std::vector<int> barred;
    for (int b = 0; b < 6; ++b)
        if (m & (1u << b)) barred.push_back(b < 3 ? b + 3 : b - 3);
    GrassMask bm = bar(m);
    GrassMask comp = static_cast<GrassMask>(~bm & kFullMask);
    return Scalar(sequence_sign(barred) * wedge_sign(bm, comp));
}

namespace {

// Images of single generators under the coordinate change.
GrassElt generator_image(Coord from, int bit) {
    const Scalar h = Scalar(mpq_class(0), mpq_class(1, 2), 0, 0);  // √2/2
    const Scalar i = Scalar::imag();
    // pairs (ξ_j, η_j) <-> (ρ_j, ρ_{j+3}) with j = 1,2,3 stored at
    //   ξ1 = η4 (bit 5), η1 = ξ4 (bit 2); ξ2 (0), η2 (3); ξ3 (1), η3 (4)
    static const int xi_bit[3] = {5, 0, 1};
    static const int eta_bit[3] = {2, 3, 4};
    if (from == Coord::XiEta) {
        for (int j = 0; j < 3; ++j) {
            // ξ_j = (ρ_j + i ρ_{j+3}) √2/2, η_j = (ρ_j − i ρ_{j+3}) √2/2
            if (bit == xi_bit[j] || bit == eta_bit[j]) {
                Scalar sgn = bit == xi_bit[j] ? Scalar(1) : Scalar(-1);
                GrassElt r(Coord::Rho);
                r.add(static_cast<GrassMask>(1u << j), h);
                r.add(static_cast<GrassMask>(1u << (j + 3)), sgn * i * h);
                return r;
            }
        }
    } else {
        int j = bit % 3;
        GrassElt r(Coord::XiEta);
        if (bit < 3) {
            // ρ_j = (ξ_j + η_j)/√2
            r.add(static_cast<GrassMask>(1u << xi_bit[j]), h);
            r.add(static_cast<GrassMask>(1u << eta_bit[j]), h);
        } else {
            // ρ_{j+3} = (ξ_j − η_j)/√−2 = −i√2/2 (ξ_j − η_j)
            Scalar k = -(i * h);
            r.add(static_cast<GrassMask>(1u << xi_bit[j]), k);
            r.add(static_cast<GrassMask>(1u << eta_bit[j]), -k);
        }
        return r;
    }
    throw std::logic_error("bad generator");
}

struct ChangeTables {
    std::array<GrassElt, 64> to_rho;
    std::array<GrassElt, 64> to_xieta;
};

const ChangeTables &change_tables() {
    static const ChangeTables tables = [] {
        ChangeTables t;
        for (int m = 0; m < 64; ++m) {
            GrassElt a = GrassElt::monomial(Coord::Rho, 0);
            GrassElt b = GrassElt::monomial(Coord::XiEta, 0);
            for (int bit = 0; bit < 6; ++bit) {
                if (!(m & (1 << bit))) continue;
                a = gr_wedge(a, generator_image(Coord::XiEta, bit));
                b = gr_wedge(b, generator_image(Coord::Rho, bit));
            }
            t.to_rho[m] = a;
            t.to_xieta[m] = b;
        }
        return t;
    }();
    return tables;
}

}  // namespace

GrassElt gr_change_coords(const GrassElt &a, Coord to) {
    if (a.coord() == to) return a;
    const auto &table = to == Coord::Rho ? change_tables().to_rho : change_tables().to_xieta;
    GrassElt r(to);
    for (const auto &[m, c] : a.terms()) {
        GrassElt img = table[m];
        img *= c;
        r += img;
    }
    return r;
}

GrassElt gr_star(const GrassElt &a) {
    if (a.coord() != Coord::Rho) return gr_change_coords(gr_star(gr_change_coords(a, Coord::Rho)), a.coord());
    GrassElt r(Coord::Rho);
    for (const auto &[m, c] : a.terms()) r.add(static_cast<GrassMask>(~m & kFullMask), c * star_sign(m));
    return r;
}

GrassElt gr_sharp(const GrassElt &a) {
    if (a.coord() != Coord::XiEta) return gr_change_coords(gr_sharp(gr_change_coords(a, Coord::XiEta)), a.coord());
    GrassElt r(Coord::XiEta);
    for (const auto &[m, c] : a.terms())
        r.add(static_cast<GrassMask>(~bar(m) & kFullMask), c * sharp_sign(m));
    return r;
}

std::optional<std::pair<Coord, int>> grass_token(const std::string &tok) {
    auto idx = [&](std::size_t prefix) { return tok[prefix] - '0'; };
    if (tok.rfind("rho", 0) == 0) return std::pair{Coord::Rho, idx(3) - 1};
    if (tok.rfind("xi", 0) == 0) {
        int k = idx(2);
        return std::pair{Coord::XiEta, k == 1 ? 5 : k - 2};
    }
    if (tok.rfind("eta", 0) == 0) {
        int k = idx(3);
        return std::pair{Coord::XiEta, k == 1 ? 2 : k + 1};
    }
    return std::nullopt;
}

GrassElt parse_grass(const std::string &text, std::optional<Coord> coord) {
    Expression e = parse_expression(text);
    std::optional<Coord> c = coord;
    for (const auto &t : e.terms)
        for (const auto &tok : t.odd) {
            auto g = grass_token(tok);
            if (!g) throw ParseError("not a Grassmann generator: " + tok, t.position);
            if (c && *c != g->first) throw ParseError("mixed xi/eta and rho coordinates", t.position);
            c = g->first;
        }
    GrassElt r(c.value_or(Coord::XiEta));
    for (const auto &t : e.terms) {
        if (!t.even.empty() || !t.derivation.empty()) throw ParseError("unexpected even symbol", t.position);
        std::vector<int> gens;
        for (const auto &tok : t.odd) gens.push_back(grass_token(tok)->second);
        r += GrassElt::product(r.coord(), gens, t.coeff);
    }
    return r;
}

}  // namespace exls
