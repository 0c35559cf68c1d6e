#include "exls/suites.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "exls/e16k16.hpp"
#include "exls/embeddings.hpp"
#include "exls/errors.hpp"
#include "exls/formcalc.hpp"
#include "exls/grassmann.hpp"
#include "exls/repn.hpp"
#include "exls/sampling.hpp"
#include "exls/vectorize.hpp"

namespace exls {

namespace {

/// All exponent vectors of total degree m over n variables.
std::vector<EvenMono> monos(int n, int m) {
    std::vector<EvenMono> out;
    EvenMono e;
    auto rec = [&](auto &self, int var, int left) -> void {
        if (var == n - 1) {
            e.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(left);
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(a);
            self(self, var + 1, left - a);
        }
    };
    rec(rec, 0, m);
    return out;
}

std::vector<DiffForm> form_basis(Vars v, int k, int m) {
    int n = nvars(v);
    std::vector<DiffForm> out;
    for (VarMask s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != k) continue;
        for (const EvenMono &e : monos(n, m)) out.push_back(DiffForm::monomial(v, s, PolySeries::monomial(v, e)));
    }
    return out;
}

DiffForm combine(const SparseVec &c, const std::vector<DiffForm> &basis) {
    DiffForm w(basis.front().vars(), basis.front().degree());
    for (const auto &[id, s] : c) w += s * basis[static_cast<std::size_t>(id)];
    return w;
}

std::string level_str(Vars v, int k, int m) {
    return "(Omega^" + std::to_string(k) + "(" + std::to_string(nvars(v)) + "))_" + std::to_string(m);
}

K16Elt rho(int n, GrassMask m) { return K16Elt::monomial(Coord::Rho, n, m); }

std::string mono_label(int n, GrassMask m) { return rho(n, m).str(); }

}  // namespace

VerifyReport dint_check(int mmax) {
    VerifyReport rep("dint");
    ReportTimer timer(rep);
    rep.param("n", "4,5");
    rep.param("mmax", mmax);
    for (Vars v : {Vars::X1to4, Vars::X1to5}) {
        int n = nvars(v);
        for (int k = 1; k < n; ++k)
            for (int m = 1; m <= mmax; ++m) {
                std::vector<DiffForm> basis = form_basis(v, k, m);
                std::vector<SparseVec> d_img, i_img;
                for (const DiffForm &w : basis) {
                    DiffForm dw = form_d(w), iw = int_op(w);
                    std::string in = w.str() + " in " + level_str(v, k, m);
                    rep.record(form_d(dw).is_zero(), "d(d(" + in + "))", "0", form_d(dw).str());
                    rep.record(int_op(iw).is_zero(), "int(int(" + in + "))", "0", int_op(iw).str());
                    DiffForm h = form_d(iw) + int_op(dw);
                    rep.record(h == w, "(d int + int d)(" + in + ")", w.str(), h.str());
                    d_img.push_back(to_vec(dw));
                    i_img.push_back(to_vec(iw));
                }
                std::vector<SparseVec> ker_d = kernel_of(d_img), ker_i = kernel_of(i_img);
                for (const SparseVec &c : ker_d) {
                    DiffForm w = combine(c, basis);
                    DiffForm back = form_d(int_op(w));
                    rep.record(back == w, "dw = 0 implies d int w = w for " + w.str(), w.str(), back.str());
                }
                for (const SparseVec &c : ker_i) {
                    DiffForm w = combine(c, basis);
                    DiffForm back = int_op(form_d(w));
                    rep.record(back == w, "int w = 0 implies int d w = w for " + w.str(), w.str(), back.str());
                }
                // ker d = d(Ω^{k-1}_{m+1}), ker ∫ = ∫(Ω^{k+1}_{m-1})
                std::vector<SparseVec> from_below, from_above;
                for (const DiffForm &u : form_basis(v, k - 1, m + 1)) from_below.push_back(to_vec(form_d(u)));
                if (k + 1 <= n)
                    for (const DiffForm &u : form_basis(v, k + 1, m - 1)) from_above.push_back(to_vec(int_op(u)));
                std::size_t rk_below = rank_of(from_below), rk_above = rank_of(from_above);
                rep.record(rk_below == ker_d.size(), "dim ker d = rank d on " + level_str(v, k, m),
                           std::to_string(ker_d.size()), std::to_string(rk_below));
                rep.record(rk_above == ker_i.size(), "dim ker int = rank int on " + level_str(v, k, m),
                           std::to_string(ker_i.size()), std::to_string(rk_above));
            }
    }
    return rep;
}

VerifyReport diesis_check() {
    VerifyReport rep("diesis");
    ReportTimer timer(rep);
    for (Coord c : {Coord::Rho, Coord::XiEta}) {
        rep.param(c == Coord::Rho ? "rho" : "xieta", 64);
        for (GrassMask m = 0; m < 64; ++m) {
            GrassElt x = GrassElt::monomial(c, m);
            GrassElt lhs = gr_change_coords(gr_star(x), c);
            GrassElt rhs = gr_change_coords(Scalar::imag() * gr_sharp(x), c);
            rep.record(lhs == rhs, "X = " + x.str(), rhs.str(), lhs.str());
        }
    }
    return rep;
}

VerifyReport propertiesofA_check(int nmax) {
    VerifyReport rep("propertiesofA");
    ReportTimer timer(rep);
    rep.param("nmax", nmax);
    long exceptional = 0;
    std::vector<std::pair<K16Elt, K16Elt>> mon;  // (f, A f)
    for (int n = 0; n <= nmax; ++n)
        for (GrassMask m = 0; m < 64; ++m) {
            K16Elt f = rho(n, m);
            mon.emplace_back(f, op_A(f));
        }
    for (const auto &[f, af] : mon)
        for (const auto &[g, ag] : mon) {
            const auto &[fk, fv] = *f.terms().begin();
            const auto &[gk, gv] = *g.terms().begin();
            std::string in = "f=" + f.str() + ", g=" + g.str();
            K16Elt x = bracket_k16(f, g) + bracket_k16(af, ag);
            K16Elt y = bracket_k16(af, g) + bracket_k16(f, ag);
            if (is_exceptional_pair(fk.first, fk.second, gk.first, gk.second)) {
                ++exceptional;
                rep.record(x.is_zero(), "exceptional: [f,g] + [Af,Ag] = 0 for " + in, "0", x.str());
                K16Elt ay = op_A(y);
                rep.record(ay.is_zero(), "exceptional: A([Af,g] + [f,Ag]) = 0 for " + in, "0", ay.str());
            } else {
                K16Elt ax = op_A(x);
                rep.record(ax == y, "A([f,g] + [Af,Ag]) = [Af,g] + [f,Ag] for " + in, y.str(), ax.str());
            }
        }
    rep.param("exceptional_pairs", exceptional);
    for (const auto &[f, af] : mon) {
        const auto &[key, v] = *f.terms().begin();
        int level = key.first + popcount(key.second);
        if (level <= 2) rep.record(af.is_zero(), "A vanishes on " + f.str(), "0", af.str());
        if (!af.is_zero()) {
            K16Elt back = op_A(af);
            rep.record(back == f, "A(A(" + f.str() + "))", f.str(), back.str());
        }
    }
    // injectivity on each level L_k, k >= 3, inside the window
    for (int level = 3; level <= nmax + 6; ++level) {
        std::vector<SparseVec> img;
        for (int n = 0; n <= nmax; ++n)
            for (GrassMask m = 0; m < 64; ++m)
                if (n + popcount(m) == level) img.push_back(to_vec(op_A(rho(n, m))));
        std::size_t rk = rank_of(img);
        rep.record(rk == img.size(), "A injective on L_" + std::to_string(level), std::to_string(img.size()), std::to_string(rk));
    }
    return rep;
}

VerifyReport commutator_check(int nmax) {
    VerifyReport rep("commutator");
    ReportTimer timer(rep);
    rep.param("nmax", nmax);
    long second = 0;
    std::vector<std::pair<K16Elt, K16Elt>> mon;
    for (int n = 0; n <= nmax; ++n)
        for (GrassMask m = 0; m < 64; ++m) {
            K16Elt f = rho(n, m);
            mon.emplace_back(f, op_A(f));
        }
    for (const auto &[f, af] : mon)
        for (const auto &[g, ag] : mon) {
            std::string in = "f=" + f.str() + ", g=" + g.str();
            K16Elt direct = bracket_k16(f + af, g + ag);
            K16Elt x = bracket_k16(f, g) + bracket_k16(af, ag);
            K16Elt h = x;
            if (x.is_zero()) {
                ++second;
                h = bracket_k16(af, g) + bracket_k16(f, ag);
            }
            K16Elt want = op_iota(h);
            rep.record(direct == want, "[iota(f), iota(g)] for " + in, want.str(), direct.str());
            const auto &[gk, gv] = *g.terms().begin();
            if (gk.first >= 1) {
                // g = t g' with g' a monomial
                rep.record(direct == op_iota(x), "[iota(f), iota(t g')] = iota([f,tg'] + [Af,A(tg')]) for " + in,
                           op_iota(x).str(), direct.str());
            }
        }
    rep.param("second_case", second);
    return rep;
}

VerifyReport closure_check(int nmax) {
    VerifyReport rep("thm-4-6");
    ReportTimer timer(rep);
    rep.param("nmax", nmax);
    long violations = 0;
    for (int n = 0; n <= nmax; ++n)
        for (GrassMask a = 0; a < 64; ++a)
            for (int m = 0; m <= nmax; ++m)
                for (GrassMask b = 0; b < 64; ++b) {
                    K16Elt f = rho(n, a), g = rho(m, b);
                    std::string in = "f=" + mono_label(n, a) + ", g=" + mono_label(m, b);
                    try {
                        IotaBracket r = bracket_iota_image(f, g);
                        rep.record(op_iota(r.h) == r.bracket, "closure for " + in, r.bracket.str(), op_iota(r.h).str());
                    } catch (const InvariantError &e) {
                        ++violations;
                        rep.record(false, "closure for " + in, "iota(h)", e.what());
                    }
                }
    rep.param("closure_violations", violations);
    for (int n = 0; n <= nmax; ++n)
        for (GrassMask a = 0; a < 64; ++a) {
            K16Elt f = rho(n, a);
            K16Elt i = op_iota(f);
            if (i.is_zero()) continue;
            auto d = degree_k16_principal(i);
            rep.record(d == degree_k16_principal(f), "iota preserves principal degree of " + f.str());
        }
    // t^m ρ_I = ± [t^{m-1} ρ_i ρ_I, t ρ_i], with the full-mask exception
    for (int m = 1; m <= nmax; ++m)
        for (GrassMask mask = 0; mask < 64; ++mask) {
            K16Elt want = rho(m, mask);
            K16Elt got;
            if (mask == kFullMask) {
                got = Scalar::rational(-1, m + 3) * bracket_k16(rho(m, 0x1f), rho(1, 0x20));
            } else {
                int i = 0;
                while (mask & (1u << i)) ++i;
                auto bit = static_cast<GrassMask>(1u << i);
                GrassElt lead = gr_wedge(GrassElt::monomial(Coord::Rho, bit), GrassElt::monomial(Coord::Rho, mask));
                Scalar s(popcount(mask) % 2 ? 1 : -1);
                got = s * bracket_k16(K16Elt::from_grass(m - 1, lead), rho(1, bit));
            }
            rep.record(got == want, "degree-one generation of " + want.str(), want.str(), got.str());
        }
    std::vector<std::size_t> dims = iota_principal_dimensions(), want = {1, 6, 16, 16};
    auto fmt = [](const std::vector<std::size_t> &v) {
        std::string s;
        for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    rep.record(dims == want, "dimensions of iota image in principal degrees -2..1", fmt(want), fmt(dims));
    return rep;
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {
        "dint",        "diesis",          "propertiesofA",  "commutator",  "thm-4-6",
        "thm-g00",     "thm-4-7",         "corollary",      "prop-generated", "thm-3-5-linear",
        "jacobi-e510", "jacobi-e44",      "jacobi-e16",     "jacobi-k16"};
    return names;
}

namespace {

int window(const SuiteOptions &o, int full, int quick, int lo, int hi, const std::string &what) {
    int w = o.twindow.value_or(o.quick ? quick : full);
    if (w < lo || w > hi)
        throw std::out_of_range(what + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                                std::to_string(w));
    return w;
}

std::pair<int, int> n_range(const SuiteOptions &o, std::pair<int, int> full, std::pair<int, int> quick, int hi) {
    auto r = o.n.value_or(o.quick ? quick : full);
    if (r.first < 0 || r.first > r.second || r.second > hi)
        throw std::out_of_range("--n must satisfy 0 <= a <= b <= " + std::to_string(hi));
    return r;
}

/// --n a..b for the monomial sweeps: only the upper end matters.
int n_max(const SuiteOptions &o, int full, int quick, int hi) {
    if (o.n) return n_range(o, {0, full}, {0, quick}, hi).second;
    return o.quick ? quick : full;
}

VerifyReport combine(const std::string &id, const std::vector<VerifyReport> &parts) {
    VerifyReport rep(id);
    for (const VerifyReport &p : parts) {
        rep.absorb(p);
        rep.seconds += p.seconds;
        rep.param(p.check, std::to_string(p.passed) + "/" + std::to_string(p.attempted));
        if (p.inconclusive && rep.note.empty()) rep.note = p.note;
    }
    return rep;
}

}  // namespace

VerifyReport run_suite(const std::string &name, const SuiteOptions &o) {
    if (o.trials < 1) throw std::out_of_range("--trials must be positive");
    if (name == "dint") return dint_check(window(o, 4, 3, 1, 6, "--twindow (form degree)"));
    if (name == "diesis") return diesis_check();
    if (name == "propertiesofA") return propertiesofA_check(n_max(o, 3, 2, 6));
    if (name == "commutator") return commutator_check(n_max(o, 3, 2, 6));
    if (name == "thm-4-6") return closure_check(n_max(o, 3, 2, 6));
    if (name == "thm-g00") {
        int w = window(o, 5, 3, 0, 8, "--twindow (t-degree)");
        VerifyReport rep = combine("thm-g00", {verify_psi(w), grading_element_check(std::min(w, 3)),
                                               psi_injectivity_check(std::min(w, 4))});
        rep.params.insert(rep.params.begin(), {"twindow", std::to_string(w)});
        return rep;
    }
    if (name == "thm-4-7") {
        auto [lo, hi] = n_range(o, {0, 2}, {0, 1}, 4);
        int w = o.quick ? 2 : 4;
        IotaBasis basis(w);
        VerifyReport rep = combine("thm-4-7", {verify_Psi(lo, hi), basis.kernel_check(), PsiMap(w).well_defined(),
                                               Psi_grading_check(2), verify_Psi_random(o.trials, o.seed)});
        rep.params.insert(rep.params.begin(), {"n", std::to_string(lo) + ".." + std::to_string(hi)});
        return rep;
    }
    if (name == "corollary") return corollary_subalgebra_check(window(o, 4, 3, 1, 6, "--twindow (x1-degree)"));
    if (name == "prop-generated") return prop_generated(window(o, 3, 2, 0, 5, "--twindow (x1-degree)"));
    if (name == "thm-3-5-linear") return theorem_linear_check(n_max(o, 3, 2, 5));
    if (name.rfind("jacobi-", 0) == 0) {
        Algebra a = parse_algebra(name.substr(7));
        return jacobi_check(a, o.trials, o.seed, window(o, 2, 2, 0, 4, "--twindow (polynomial degree)"));
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<VerifyReport> run_all(const SuiteOptions &opt) {
    SuiteOptions o = opt;
    o.twindow.reset();
    o.n.reset();
    std::vector<VerifyReport> out;
    for (const std::string &s : suite_names()) out.push_back(run_suite(s, o));
    return out;
}

}  // namespace exls
