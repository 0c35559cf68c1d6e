#include "exls/e16k16.hpp"

#include <algorithm>
#include <vector>

#include "exls/errors.hpp"
#include "exls/parse.hpp"
#include "format.hpp"

namespace exls {

namespace {

int lowered(int t) { return trunc_shift(t, -1); }

std::string t_power(int n) {
    if (n == 0) return "";
    if (n == 1) return "t";
    return "t^" + std::to_string(n);
}

std::string join_mono(std::initializer_list<std::string> parts) {
    std::string r;
    for (const auto &p : parts) {
        if (p.empty()) continue;
        if (!r.empty()) r += '*';
        r += p;
    }
    return r;
}

// ∂_t^k t^n = factor * t^{n-k}; negative k integrates from 0.
Scalar t_power_factor(int n, int k) {
    if (k >= 0) {
        if (n < k) return Scalar(0);
        long f = 1;
        for (int j = 0; j < k; ++j) f *= n - j;
        return Scalar(f);
    }
    long den = 1;
    for (int j = 1; j <= -k; ++j) den *= n + j;
    return Scalar::rational(1, den);
}

int sign_of(bool negative) { return negative ? -1 : 1; }

}  // namespace

// ------------------------------------------------------------------- K16Elt

K16Elt K16Elt::monomial(Coord c, int n, GrassMask m, const Scalar &s, int trunc) {
    K16Elt f(c, trunc);
    f.add(n, m, s);
    return f;
}

K16Elt K16Elt::from_grass(int n, const GrassElt &g, int trunc) {
    K16Elt f(g.coord(), trunc);
    for (const auto &[m, c] : g.terms()) f.add(n, m, c);
    return f;
}

void K16Elt::add(int n, GrassMask m, const Scalar &s) {
    if (n >= trunc_) return;
    terms_.add({n, m}, s);
}

void K16Elt::truncate(int trunc) {
    if (trunc >= trunc_) return;
    trunc_ = trunc;
    terms_.erase_if([&](const Key &k) { return k.first >= trunc; });
}

K16Elt &K16Elt::operator+=(const K16Elt &o) {
    if (coord_ != o.coord_) throw MismatchError("coordinate mismatch");
    truncate(o.trunc_);
    for (const auto &[k, c] : o.terms()) add(k.first, k.second, c);
    return *this;
}

K16Elt &K16Elt::operator-=(const K16Elt &o) { return *this += Scalar(-1) * o; }

K16Elt &K16Elt::operator*=(const Scalar &s) {
    terms_.scale(s);
    return *this;
}

bool K16Elt::operator==(const K16Elt &o) const {
    return coord_ == o.coord_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

bool K16Elt::agrees_with(const K16Elt &o) const {
    K16Elt a = *this, b = k16_change_coords(o, coord_);
    int t = trunc_min(trunc_, o.trunc_);
    a.truncate(t);
    b.truncate(t);
    return a.terms_ == b.terms_;
}

std::string K16Elt::str(Naming naming) const {
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto &[k, c] : terms()) parts.emplace_back(c, join_mono({t_power(k.first), grass_mono_str(coord_, k.second, naming)}));
    return detail::format_sum(parts) + detail::format_trunc("t", trunc_);
}

K16Elt k16_change_coords(const K16Elt &f, Coord to) {
    if (f.coord() == to) return f;
    K16Elt r(to, f.trunc());
    for (const auto &[k, c] : f.terms())
        r += K16Elt::from_grass(k.first, gr_change_coords(GrassElt::monomial(f.coord(), k.second, c), to), f.trunc());
    return r;
}

K16Elt bracket_k16(const K16Elt &f0, const K16Elt &g0, Coord coords) {
    K16Elt f = k16_change_coords(f0, coords), g = k16_change_coords(g0, coords);
    K16Elt r(coords, lowered(trunc_min(f.trunc(), g.trunc())));
    static const int rho_pairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}};
    static const int xe_pairs[6][2] = {{0, 3}, {1, 4}, {2, 5}, {3, 0}, {4, 1}, {5, 2}};
    const auto &pairs = coords == Coord::Rho ? rho_pairs : xe_pairs;
    for (const auto &[kf, cf] : f.terms())
        for (const auto &[kg, cg] : g.terms()) {
            auto [n, a] = kf;
            auto [m, b] = kg;
            Scalar c = cf * cg;
            int ws = wedge_sign(a, b);
            if (ws && n + m >= 1) {
                long w = (2L - popcount(a)) * m - (2L - popcount(b)) * n;
                r.add(n + m - 1, a | b, c * Scalar(w * ws));
            }
            Scalar odd_sign(sign_of(popcount(a) & 1));
            for (const auto &pq : pairs) {
                int p = pq[0], q = pq[1];
                int sa = partial_sign(a, p), sb = partial_sign(b, q);
                if (!sa || !sb) continue;
                GrassMask a2 = static_cast<GrassMask>(a & ~(1u << p));
                GrassMask b2 = static_cast<GrassMask>(b & ~(1u << q));
                int s = wedge_sign(a2, b2);
                if (s) r.add(n + m, a2 | b2, c * odd_sign * Scalar(sa * sb * s));
            }
        }
    return r;
}

namespace {

struct LevelAcc {
    std::optional<int> v;
    bool mixed = false;
    void add(int d) {
        if (v && *v != d) mixed = true;
        v = d;
    }
    std::optional<int> get() const { return mixed ? std::nullopt : v; }
};

}  // namespace

std::optional<int> filtration_level(const K16Elt &f) {
    LevelAcc acc;
    for (const auto &[k, c] : f.terms()) acc.add(k.first + popcount(k.second));
    return acc.get();
}

std::optional<int> degree_k16_principal(const K16Elt &f) {
    LevelAcc acc;
    for (const auto &[k, c] : f.terms()) acc.add(2 * k.first + popcount(k.second) - 2);
    return acc.get();
}

std::optional<int> degree_k16_type1(const K16Elt &f0) {
    K16Elt f = k16_change_coords(f0, Coord::XiEta);
    LevelAcc acc;
    for (const auto &[k, c] : f.terms()) acc.add(k.first + popcount(static_cast<GrassMask>(k.second & 7u)) - 1);
    return acc.get();
}

K16Elt op_A(const K16Elt &f) {
    int t = f.trunc();
    if (t != kExact) {
        if (t - 3 <= 0) throw HeadroomError("A needs truncation order at least 4, got " + std::to_string(t), 4);
        t -= 3;
    }
    K16Elt r(f.coord(), t);
    for (const auto &[k, c] : f.terms()) {
        auto [n, mask] = k;
        int size = popcount(mask);
        int order = 3 - size;
        Scalar factor = t_power_factor(n, order);
        if (factor.is_zero()) continue;
        int e = n - order;
        if (e >= t) {
            int need = e + 4;
            throw HeadroomError("A(t^" + std::to_string(n) + "*" + grass_mono_str(f.coord(), mask) +
                                    ") needs truncation order " + std::to_string(need),
                                need);
        }
        Scalar sign(sign_of((size * (size + 1) / 2) & 1));
        if (f.coord() == Coord::XiEta) {
            r.add(e, static_cast<GrassMask>(~bar(mask) & kFullMask), c * sign * factor * sharp_sign(mask));
        } else {
            Scalar mi = -Scalar::imag();
            r.add(e, static_cast<GrassMask>(~mask & kFullMask), c * mi * sign * factor * star_sign(mask));
        }
    }
    return r;
}

K16Elt op_iota(const K16Elt &f) { return f + op_A(f); }

bool is_exceptional_pair(int n, GrassMask i, int m, GrassMask j) {
    int a = popcount(i), b = popcount(j);
    return n == 0 && m == 0 && a + b >= 4 && (a <= 1 || b <= 1) && (i & j) == 0;
}

IotaBracket bracket_iota_image(const K16Elt &f, const K16Elt &g) {
    K16Elt af = op_A(f), ag = op_A(g);
    K16Elt direct = bracket_k16(op_iota(f), op_iota(g));
    K16Elt first = bracket_k16(f, g) + bracket_k16(af, ag);
    if (!first.is_zero()) {
        if (op_iota(first).agrees_with(direct)) return {direct, first, true};
    } else {
        K16Elt second = bracket_k16(af, g) + bracket_k16(f, ag);
        if (op_iota(second).agrees_with(direct)) return {direct, second, false};
    }
    throw InvariantError("closure violation: [iota(" + f.str() + "), iota(" + g.str() + ")] = " + direct.str());
}

K16Elt parse_k16(const std::string &text, std::optional<Coord> coord) {
    Expression e = parse_expression(text);
    int trunc = expression_trunc(e, Vars::T);
    std::optional<Coord> c = coord;
    for (const auto &t : e.terms)
        for (const auto &tok : t.odd) {
            auto gtok = grass_token(tok);
            if (!gtok) throw ParseError("not a K(1,6) generator: " + tok, t.position);
            if (c && *c != gtok->first) throw ParseError("mixed xi/eta and rho coordinates", t.position);
            c = gtok->first;
        }
    K16Elt r(c.value_or(Coord::XiEta), trunc);
    for (const auto &t : e.terms) {
        if (!t.derivation.empty()) throw ParseError("unexpected derivation in K(1,6) element", t.position);
        EvenMono m = term_mono(t, Vars::T);
        std::vector<int> gens;
        for (const auto &tok : t.odd) gens.push_back(grass_token(tok)->second);
        r += K16Elt::from_grass(m.e[0], GrassElt::product(r.coord(), gens, t.coeff), trunc);
    }
    return r;
}

// ------------------------------------------------------------------- E16Elt

namespace {

template <typename T>
void add_into(std::map<int, T> &m, int n, const T &v) {
    auto it = m.find(n);
    if (it == m.end()) {
        if (!v.is_zero()) m.emplace(n, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
}

template <typename T>
void scale_map(std::map<int, T> &m, const Scalar &s) {
    for (auto it = m.begin(); it != m.end();) {
        it->second *= s;
        if (it->second.is_zero()) it = m.erase(it);
        else ++it;
    }
}

template <typename T>
bool maps_agree(const std::map<int, T> &a, const std::map<int, T> &b, int t) {
    auto clip = [t](const std::map<int, T> &m) {
        std::vector<std::pair<int, const T *>> r;
        for (const auto &[n, v] : m)
            if (n < t) r.emplace_back(n, &v);
        return r;
    };
    auto ca = clip(a), cb = clip(b);
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k)
        if (ca[k].first != cb[k].first || !(*ca[k].second == *cb[k].second)) return false;
    return true;
}

PolySeries t_mono(int n, const Scalar &c = Scalar(1)) { return PolySeries::monomial(Vars::T, EvenMono::var(0, n), c); }

// Coefficient of d2345 in a constant 4-form.
Scalar top_coefficient(const DiffForm &w) {
    if (w.is_zero()) return Scalar(0);
    return w.coeff(0x0f).coeff(EvenMono{});
}

}  // namespace

void E16Elt::add_w1(const PolySeries &f) {
    if (f.vars() != Vars::T) throw MismatchError("W1 coefficients live in t");
    truncate(f.trunc());
    w1.truncate(trunc);
    for (const auto &[m, c] : f.terms()) w1.add_term(m, c);
}

void E16Elt::add_sl4(int n, const VectorField &x) {
    if (n < trunc) add_into(sl4, n, x);
}

void E16Elt::add_s2(int n, const PolySeries &p) {
    if (n < trunc) add_into(s2, n, p);
}

void E16Elt::add_lam2(int n, const DiffForm &w) {
    if (n < trunc) add_into(lam2, n, w);
}

void E16Elt::truncate(int t) {
    if (t >= trunc) return;
    trunc = t;
    w1.truncate(t);
    std::erase_if(sl4, [t](const auto &kv) { return kv.first >= t; });
    std::erase_if(s2, [t](const auto &kv) { return kv.first >= t; });
    std::erase_if(lam2, [t](const auto &kv) { return kv.first >= t; });
}

void E16Elt::validate() const {
    for (const auto &[n, x] : sl4) {
        if (x.vars() != Vars::X2to5) throw MismatchError("sl4 fields live in x2..x5");
        if (!vf_div(x).is_zero()) throw InvariantError("sl4 part must be traceless: " + x.str());
        for (const auto &[j, c] : x.components())
            for (const auto &[m, v] : c.terms())
                if (m.total() != 1) throw InvariantError("sl4 part must be linear: " + x.str());
    }
    for (const auto &[n, p] : s2) {
        if (p.vars() != Vars::X2to5) throw MismatchError("quadratic forms live in x2..x5");
        for (const auto &[m, v] : p.terms())
            if (m.total() != 2) throw InvariantError("S2 part must be quadratic: " + p.str());
    }
    for (const auto &[n, w] : lam2) {
        if (w.vars() != Vars::X2to5) throw MismatchError("2-forms live in x2..x5");
        if (w.degree() != 2) throw InvariantError("Lambda2 part must be a 2-form");
        for (const auto &[s, c] : w.terms())
            for (const auto &[m, v] : c.terms())
                if (m.total() != 0) throw InvariantError("Lambda2 part must be constant: " + w.str());
    }
}

E16Elt E16Elt::even_part() const {
    E16Elt r;
    r.trunc = trunc;
    r.w1 = w1;
    r.sl4 = sl4;
    return r;
}

E16Elt E16Elt::odd_part() const {
    E16Elt r;
    r.trunc = trunc;
    r.w1 = PolySeries(Vars::T, trunc);
    r.s2 = s2;
    r.lam2 = lam2;
    return r;
}

E16Elt &E16Elt::operator+=(const E16Elt &o) {
    truncate(o.trunc);
    add_w1(o.w1);
    for (const auto &[n, x] : o.sl4) add_sl4(n, x);
    for (const auto &[n, p] : o.s2) add_s2(n, p);
    for (const auto &[n, w] : o.lam2) add_lam2(n, w);
    return *this;
}

E16Elt &E16Elt::operator*=(const Scalar &s) {
    w1 *= s;
    scale_map(sl4, s);
    scale_map(s2, s);
    scale_map(lam2, s);
    return *this;
}

bool E16Elt::agrees_with(const E16Elt &o) const {
    int t = trunc_min(trunc, o.trunc);
    return w1.agrees_with(o.w1) && maps_agree(sl4, o.sl4, t) && maps_agree(s2, o.s2, t) && maps_agree(lam2, o.lam2, t);
}

std::string E16Elt::str() const {
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto &[m, c] : w1.terms()) parts.emplace_back(c, join_mono({t_power(m.e[0]), "Dt"}));
    for (const auto &[n, x] : sl4) {
        std::vector<std::tuple<EvenMono, int, Scalar>> rows;
        for (const auto &[j, c] : x.components())
            for (const auto &[m, v] : c.terms()) rows.emplace_back(m, j, v);
        std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
            if (std::get<0>(a) != std::get<0>(b)) return print_before(std::get<0>(a), std::get<0>(b));
            return std::get<1>(a) < std::get<1>(b);
        });
        for (const auto &[m, j, v] : rows)
            parts.emplace_back(v, join_mono({t_power(n), mono_str(Vars::X2to5, m), "D" + std::to_string(j + 2)}));
    }
    for (const auto &[n, p] : s2) {
        std::vector<std::pair<EvenMono, Scalar>> rows(p.terms().begin(), p.terms().end());
        std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return print_before(a.first, b.first); });
        for (const auto &[m, v] : rows) parts.emplace_back(v, join_mono({t_power(n), mono_str(Vars::X2to5, m), "dt"}));
    }
    for (const auto &[n, w] : lam2)
        for (const auto &[s, c] : w.terms())
            parts.emplace_back(c.coeff(EvenMono{}), join_mono({t_power(n), form_token(Vars::X2to5, s), "dt"}));
    return detail::format_sum(parts) + detail::format_trunc("t", trunc);
}

E16Elt bracket_e16(const E16Elt &a, const E16Elt &b) {
    const Scalar half = Scalar::rational(1, 2);
    E16Elt r;
    r.trunc = lowered(trunc_min(a.trunc, b.trunc));
    r.w1 = PolySeries(Vars::T, r.trunc);

    // [f∂t, g∂t] = (fg' - f'g)∂t
    r.add_w1(ps_mul(a.w1, ps_partial(b.w1, 0)) - ps_mul(ps_partial(a.w1, 0), b.w1));

    // W1 acting on the t-factor of the other summands; sgn = +1 for [W_x, y], -1 for [y, W_x]
    auto w1_action = [&](const PolySeries &f, const E16Elt &y, const Scalar &sgn) {
        for (const auto &[m, c] : f.terms()) {
            int e = m.e[0];
            Scalar cs = c * sgn;
            for (const auto &[n, x] : y.sl4)
                if (n + e >= 1) r.add_sl4(n + e - 1, Scalar(n) * cs * x);
            for (const auto &[n, p] : y.s2)
                if (n + e >= 1) r.add_s2(n + e - 1, (Scalar(n) + half * Scalar(e)) * cs * p);
            for (const auto &[n, w] : y.lam2)
                if (n + e >= 1) r.add_lam2(n + e - 1, (Scalar(n) - half * Scalar(e)) * cs * w);
        }
    };
    w1_action(a.w1, b, Scalar(1));
    w1_action(b.w1, a, Scalar(-1));

    // [X⊗t^n, Y⊗t^m] = [X,Y]⊗t^{n+m}
    for (const auto &[n, x] : a.sl4)
        for (const auto &[m, y] : b.sl4) r.add_sl4(n + m, vf_bracket(x, y));

    // sl4 on the odd summands
    auto sl4_action = [&](const E16Elt &xs, const E16Elt &y, const Scalar &sgn) {
        for (const auto &[n, x] : xs.sl4) {
            for (const auto &[m, p] : y.s2) r.add_s2(n + m, sgn * PolySeries(vf_apply(x, p)));
            for (const auto &[m, w] : y.lam2) {
                // ∫(i_X ω)⊗f'g dt + L_X ω⊗fg dt
                if (n >= 1) r.add_s2(n + m - 1, sgn * Scalar(n) * int_op(form_contract(x, w)).coeff(0));
                r.add_lam2(n + m, sgn * form_lie(x, w));
            }
        }
    };
    sl4_action(a, b, Scalar(1));
    sl4_action(b, a, Scalar(-1));

    // odd-odd; [p, q] = 0
    auto p_omega = [&](const E16Elt &ps, const E16Elt &ws) {
        for (const auto &[n, p] : ps.s2)
            for (const auto &[m, w] : ws.lam2) {
                DiffForm dp = form_d(DiffForm::function(p));
                r.add_sl4(n + m, Scalar(-1) * vf_from_form(form_wedge(dp, w)));
            }
    };
    p_omega(a, b);
    p_omega(b, a);
    for (const auto &[n, s] : a.lam2)
        for (const auto &[m, w] : b.lam2) {
            Scalar c = top_coefficient(form_wedge(s, w));
            if (!c.is_zero()) r.add_w1(t_mono(n + m, c));
            if (m != n && n + m >= 1) {
                DiffForm u = form_wedge(int_op(s), w) - form_wedge(s, int_op(w));
                if (!u.is_zero()) r.add_sl4(n + m - 1, half * Scalar(m - n) * vf_from_form(u));
            }
        }
    return r;
}

std::optional<int> degree_e16_principal(const E16Elt &a) {
    LevelAcc acc;
    for (const auto &[m, c] : a.w1.terms()) acc.add(2 * m.e[0] - 2);
    for (const auto &[n, x] : a.sl4) acc.add(2 * n);
    for (const auto &[n, p] : a.s2) acc.add(2 * n + 1);
    for (const auto &[n, w] : a.lam2) acc.add(2 * n - 1);
    return acc.get();
}

E16Elt parse_e16(const std::string &text) {
    Expression e = parse_expression(text);
    E16Elt r;
    r.trunc = expression_trunc(e, Vars::T);
    r.w1 = PolySeries(Vars::T, r.trunc);
    for (const auto &t0 : e.terms) {
        if (t0.coeff.is_zero()) continue;
        SymTerm t = t0;
        int n = 0;
        if (auto it = t.even.find("t"); it != t.even.end()) {
            n = it->second;
            t.even.erase(it);
        }
        auto dt = std::find(t.odd.begin(), t.odd.end(), "dt");
        bool has_dt = dt != t.odd.end();
        if (has_dt) t.odd.erase(dt);
        if (t.derivation == "Dt") {
            if (has_dt || !t.odd.empty() || !t.even.empty()) throw ParseError("malformed W1 term", t.position);
            r.add_w1(t_mono(n, t.coeff));
        } else if (!t.derivation.empty()) {
            if (has_dt || !t.odd.empty()) throw ParseError("malformed sl4 term", t.position);
            VectorField x(Vars::X2to5);
            add_parsed_term(x, t);
            r.add_sl4(n, x);
        } else if (has_dt && t.odd.empty()) {
            PolySeries p(Vars::X2to5);
            p.add_term(term_mono(t, Vars::X2to5), t.coeff);
            r.add_s2(n, p);
        } else if (has_dt) {
            DiffForm w(Vars::X2to5, 2);
            add_parsed_term(w, t);
            r.add_lam2(n, w);
        } else {
            throw ParseError("term belongs to no E(1,6) summand (missing Dt, Dk or dt)", t.position);
        }
    }
    r.validate();
    return r;
}

}  // namespace exls
