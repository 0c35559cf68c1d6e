#include "exls/embeddings.hpp"

#include <random>
#include <stdexcept>

#include "exls/errors.hpp"
#include "exls/vectorize.hpp"

namespace exls {

namespace {

const Scalar kQuarter = Scalar::rational(1, 4);
const Scalar kHalf = Scalar::rational(1, 2);

// x2..x5 objects into x1..x5, times x1^n.
EvenMono lift_mono(const EvenMono &m, int n) {
    EvenMono r;
    r.e[0] = static_cast<std::uint8_t>(n);
    for (int k = 0; k < 4; ++k) r.e[k + 1] = m.e[k];
    return r;
}

PolySeries lift(const PolySeries &p, int n) {
    PolySeries r(Vars::X1to5);
    for (const auto &[m, c] : p.terms()) r.add_term(lift_mono(m, n), c);
    return r;
}

VectorField lift(const VectorField &x, int n) {
    VectorField r(Vars::X1to5);
    for (const auto &[j, c] : x.components()) r.add(j + 1, lift(c, n));
    return r;
}

DiffForm lift(const DiffForm &w, int n) {
    DiffForm r(Vars::X1to5, w.degree());
    for (const auto &[s, c] : w.terms()) r.add(static_cast<VarMask>(s << 1), lift(c, n));
    return r;
}

PolySeries x1_pow(Vars v, int n, const Scalar &c = Scalar(1)) { return PolySeries::monomial(v, EvenMono::var(0, n), c); }

// Σ_{k=2}^5 x_k ∂_k in x1..x5.
VectorField transverse_euler() {
    VectorField e(Vars::X1to5);
    for (int k = 1; k <= 4; ++k) e.add(k, PolySeries::variable(Vars::X1to5, k));
    return e;
}

int lowered(int t) { return trunc_shift(t, -1); }

E510Elt truncated(E510Elt e, int t) {
    e.even.truncate(t);
    e.odd.truncate(t);
    return e;
}

// Degree of a monomial in x2..x5 (or in x2..x4 for E(4,4)).
int transverse_degree(const EvenMono &m) { return m.total() - m.e[0]; }

}  // namespace

// ------------------------------------------------------------------------ ψ

std::vector<PsiImage> psi_parts(const E16Elt &a) {
    std::vector<PsiImage> out;
    int t = lowered(a.trunc);
    if (!a.w1.is_zero()) {
        VectorField x(Vars::X1to5);
        VectorField e = transverse_euler();
        for (const auto &[m, c] : a.w1.terms()) {
            int n = m.e[0];
            x.add(0, x1_pow(Vars::X1to5, n, c));
            if (n >= 1) x -= vf_mul(x1_pow(Vars::X1to5, n - 1, kQuarter * Scalar(n) * c), e);
        }
        out.push_back({truncated(E510Elt::from_even(x), t), "W1"});
    }
    if (!a.sl4.empty()) {
        VectorField x(Vars::X1to5);
        for (const auto &[n, y] : a.sl4) x += lift(y, n);
        out.push_back({truncated(E510Elt::from_even(x), t), "sl4"});
    }
    if (!a.s2.empty()) {
        DiffForm w(Vars::X1to5, 2);
        for (const auto &[n, p] : a.s2) w -= form_d(DiffForm::monomial(Vars::X1to5, 0x01, lift(p, n)));
        out.push_back({truncated(E510Elt::from_odd(w), t), "S2"});
    }
    if (!a.lam2.empty()) {
        DiffForm w(Vars::X1to5, 2);
        VectorField e = transverse_euler();
        for (const auto &[n, s] : a.lam2)
            w += kHalf * form_d(form_mul(x1_pow(Vars::X1to5, n), form_contract(e, lift(s, 0))));
        out.push_back({truncated(E510Elt::from_odd(w), t), "Lambda2"});
    }
    return out;
}

E510Elt psi(const E16Elt &a) {
    E510Elt r;
    for (const auto &p : psi_parts(a)) r += p.value;
    return truncated(r, lowered(a.trunc));
}

E16Elt psi_inverse(const E510Elt &b) {
    E16Elt a;
    a.trunc = b.trunc() == kExact ? kExact : b.trunc() + 1;
    a.w1 = PolySeries(Vars::T, a.trunc);

    PolySeries f1 = b.even.component(0);
    for (const auto &[m, c] : f1.terms())
        if (transverse_degree(m) == 0) a.add_w1(PolySeries::monomial(Vars::T, EvenMono::var(0, m.e[0]), c));
    E510Elt rest = b - psi(a);
    for (const auto &[j, comp] : rest.even.components()) {
        if (j == 0) continue;
        for (const auto &[m, c] : comp.terms()) {
            if (transverse_degree(m) != 1) continue;
            EvenMono y;
            for (int k = 0; k < 4; ++k) y.e[k] = m.e[k + 1];
            a.add_sl4(m.e[0], VectorField::partial(Vars::X2to5, j - 1, PolySeries::monomial(Vars::X2to5, y, c)));
        }
    }
    for (const auto &[s, comp] : b.odd.terms()) {
        if (s & 0x01) continue;
        for (const auto &[m, c] : comp.terms())
            if (transverse_degree(m) == 0)
                a.add_lam2(m.e[0], DiffForm::monomial(Vars::X2to5, static_cast<VarMask>(s >> 1), PolySeries::constant(Vars::X2to5, c)));
    }
    rest = b - psi(a);
    // Σ_j q_j d_{1j} with q_j = ∂_j p, p quadratic: p = ½ Σ x_j q_j
    for (const auto &[s, comp] : rest.odd.terms()) {
        if (!(s & 0x01) || popcount(s) != 2) continue;
        int j = __builtin_ctz(s & ~1u) - 1;
        for (const auto &[m, c] : comp.terms()) {
            if (transverse_degree(m) != 1) continue;
            EvenMono y;
            for (int k = 0; k < 4; ++k) y.e[k] = m.e[k + 1];
            y.e[j] += 1;
            a.add_s2(m.e[0], PolySeries::monomial(Vars::X2to5, y, kHalf * c));
        }
    }
    try {
        a.validate();
    } catch (const InvariantError &e) {
        throw InvariantError(std::string("not in g_0: ") + e.what());
    }
    E510Elt residual = b - psi(a);
    if (!residual.is_zero()) throw InvariantError("not in g_0: leftover " + residual.str());
    return a;
}

std::vector<E16Elt> e16_basis(int max_n) {
    std::vector<E16Elt> out;
    auto blank = [] { return E16Elt{}; };
    for (int n = 0; n <= max_n; ++n) {
        E16Elt w = blank();
        w.add_w1(PolySeries::monomial(Vars::T, EvenMono::var(0, n)));
        out.push_back(w);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j) continue;
                E16Elt e = blank();
                e.add_sl4(n, VectorField::partial(Vars::X2to5, j, PolySeries::variable(Vars::X2to5, i)));
                out.push_back(e);
            }
        for (int i = 0; i < 3; ++i) {
            E16Elt e = blank();
            VectorField h = VectorField::partial(Vars::X2to5, i, PolySeries::variable(Vars::X2to5, i)) -
                            VectorField::partial(Vars::X2to5, i + 1, PolySeries::variable(Vars::X2to5, i + 1));
            e.add_sl4(n, h);
            out.push_back(e);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                E16Elt e = blank();
                EvenMono m = EvenMono::var(i) * EvenMono::var(j);
                e.add_s2(n, PolySeries::monomial(Vars::X2to5, m));
                out.push_back(e);
            }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                E16Elt e = blank();
                e.add_lam2(n, DiffForm::monomial(Vars::X2to5, static_cast<VarMask>((1u << i) | (1u << j)),
                                                 PolySeries::constant(Vars::X2to5, Scalar(1))));
                out.push_back(e);
            }
    }
    return out;
}

VerifyReport grading_element_check(int max_n) {
    VerifyReport rep("grading-element");
    ReportTimer timer(rep);
    rep.param("max_n", max_n);
    E16Elt z = parse_e16("2*t*Dt");
    E510Elt pz = psi(z);
    E510Elt want = parse_e510("2*x1*D1 - 1/2*x2*D2 - 1/2*x3*D3 - 1/2*x4*D4 - 1/2*x5*D5");
    rep.record(pz.agrees_with(want), "psi(2t*Dt)", want.str(), pz.str());

    EchelonBasis negative;
    std::size_t negative_count = 0;
    for (const auto &b : e16_basis(max_n)) {
        auto d = degree_e16_principal(b);
        if (!d) {
            rep.record(false, b.str(), "homogeneous", "mixed");
            continue;
        }
        E16Elt lhs16 = bracket_e16(z, b);
        rep.record(lhs16.agrees_with(Scalar(*d) * b), "[z, " + b.str() + "]", (Scalar(*d) * b).str(), lhs16.str());
        E510Elt pb = psi(b);
        E510Elt lhs = bracket_e510(pz, pb);
        rep.record(lhs.agrees_with(Scalar(*d) * pb), "[psi(z), psi(" + b.str() + ")]", (Scalar(*d) * pb).str(), lhs.str());
        if (*d < 0) {
            negative.insert(to_vec(pb));
            ++negative_count;
        }
    }
    std::vector<E510Elt> l_neg = {parse_e510("D1")};
    for (int i = 2; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) l_neg.push_back(parse_e510("d" + std::to_string(i) + std::to_string(j)));
    bool spans = negative.rank() == l_neg.size() && negative_count == l_neg.size();
    for (const auto &v : l_neg) spans = spans && negative.in_span(to_vec(v));
    rep.record(spans, "negative part of psi(E(1,6)) = <D1, d_ij>", std::to_string(l_neg.size()), std::to_string(negative.rank()));
    return rep;
}

namespace {

E16Elt t_poly_w1(const PolySeries &f) {
    E16Elt e;
    e.add_w1(f);
    return e;
}

// X ⊗ f for X in x2..x5 and f a t-polynomial.
E16Elt tensor_sl4(const VectorField &x, const PolySeries &f) {
    E16Elt e;
    for (const auto &[m, c] : f.terms()) e.add_sl4(m.e[0], c * x);
    return e;
}

E16Elt tensor_s2(const PolySeries &p, const PolySeries &f) {
    E16Elt e;
    for (const auto &[m, c] : f.terms()) e.add_s2(m.e[0], c * p);
    return e;
}

E16Elt tensor_lam2(const DiffForm &w, const PolySeries &f) {
    E16Elt e;
    for (const auto &[m, c] : f.terms()) e.add_lam2(m.e[0], c * w);
    return e;
}

PolySeries t_to_x1(const PolySeries &f) {
    PolySeries r(Vars::X1to5);
    for (const auto &[m, c] : f.terms()) r.add_term(EvenMono::var(0, m.e[0]), c);
    return r;
}

PolySeries tpoly(const std::string &s) { return parse_series(s, Vars::T); }
PolySeries quad(const std::string &s) { return parse_series(s, Vars::X2to5); }
VectorField field4(const std::string &s) { return parse_vf(s, Vars::X2to5); }
DiffForm form4(const std::string &s) { return parse_form(s, Vars::X2to5); }

void check_e16(VerifyReport &rep, const std::string &name, const E16Elt &got, const E16Elt &want) {
    rep.record(got.agrees_with(want), name, want.str(), got.str());
}

void check_e510(VerifyReport &rep, const std::string &name, const E510Elt &got, const E510Elt &want) {
    rep.record(got.agrees_with(want), name, want.str(), got.str());
}

// Summand-pair brackets computed by hand, with f, g fixed
// non-monomial polynomials.
void psi_regression_cases(VerifyReport &rep) {
    const PolySeries f = tpoly("1 + 2*t + t^3"), g = tpoly("t - 3*t^2");
    const PolySeries fp = ps_partial(f, 0), gp = ps_partial(g, 0);
    const PolySeries fg = ps_mul(f, g);

    // W1 on S2
    {
        E16Elt a = t_poly_w1(f), b = tensor_s2(quad("x2*x3"), g);
        E16Elt want = tensor_s2(quad("x2*x3"), ps_partial(fg, 0) - kHalf * ps_mul(fp, g));
        check_e16(rep, "case W1.S2 (E(1,6) side)", bracket_e16(a, b), want);
        check_e510(rep, "case W1.S2", bracket_e510(psi(a), psi(b)), psi(want));
    }
    // W1 on Lambda2
    {
        E16Elt a = t_poly_w1(f), b = tensor_lam2(form4("d23"), g);
        E16Elt want = tensor_lam2(form4("d23"), ps_mul(f, gp) - kHalf * ps_mul(fp, g));
        check_e16(rep, "case W1.Lambda2 (E(1,6) side)", bracket_e16(a, b), want);
        check_e510(rep, "case W1.Lambda2", bracket_e510(psi(a), psi(b)), psi(want));
    }
    // x_h∂_k ⊗ f on x_ix_j ⊗ g dt, h=2, k=i=3, j=4
    {
        E16Elt a = tensor_sl4(field4("x2*D3"), f), b = tensor_s2(quad("x3*x4"), g);
        E16Elt want = tensor_s2(quad("x2*x4"), fg);
        check_e16(rep, "case sl4.S2 (E(1,6) side)", bracket_e16(a, b), want);
        check_e510(rep, "case sl4.S2", bracket_e510(psi(a), psi(b)), psi(want));
    }
    // x_h∂_k ⊗ f on d_ij ⊗ g dt, h=2, k=i=3, j=4
    {
        E16Elt a = tensor_sl4(field4("x2*D3"), f), b = tensor_lam2(form4("d34"), g);
        E16Elt want = tensor_lam2(form4("d24"), fg) + kHalf * tensor_s2(quad("x2*x4"), ps_mul(fp, g));
        check_e16(rep, "case sl4.Lambda2 (E(1,6) side)", bracket_e16(a, b), want);
        check_e510(rep, "case sl4.Lambda2", bracket_e510(psi(a), psi(b)), psi(want));
    }
    // x_hx_k ⊗ f dt on d_ij ⊗ g dt, (i,j,h,k) = (2,3,4,5)
    {
        E16Elt a = tensor_s2(quad("x4*x5"), f), b = tensor_lam2(form4("d23"), g);
        E510Elt pfg = E510Elt::from_even(vf_mul(t_to_x1(fg), parse_vf("-x4*D4 + x5*D5", Vars::X1to5)));
        check_e510(rep, "case S2.Lambda2", bracket_e510(psi(a), psi(b)), pfg);
        check_e510(rep, "case S2.Lambda2 (psi of bracket)", psi(bracket_e16(a, b)), pfg);
    }
    // d_ij ⊗ f dt on d_hk ⊗ g dt, (i,j,h,k) = (2,3,4,5)
    {
        E16Elt a = tensor_lam2(form4("d23"), f), b = tensor_lam2(form4("d45"), g);
        E16Elt want = t_poly_w1(fg) + kQuarter * tensor_sl4(field4("x2*D2 + x3*D3 - x4*D4 - x5*D5"), ps_mul(f, gp) - ps_mul(fp, g));
        check_e16(rep, "case Lambda2.Lambda2 (E(1,6) side)", bracket_e16(a, b), want);
        check_e510(rep, "case Lambda2.Lambda2", bracket_e510(psi(a), psi(b)), psi(want));
    }
}

}  // namespace

VerifyReport verify_psi(int max_n) {
    VerifyReport rep("thm-g00");
    ReportTimer timer(rep);
    rep.param("max_n", max_n);
    auto basis = e16_basis(max_n);
    std::vector<E510Elt> images;
    images.reserve(basis.size());
    for (const auto &b : basis) images.push_back(psi(b));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            E510Elt lhs = bracket_e510(images[a], images[b]);
            E510Elt rhs = psi(bracket_e16(basis[a], basis[b]));
            bool ok = lhs.agrees_with(rhs);
            if (ok) {
                rep.record(true, "");
            } else {
                rep.record(false, "[psi(" + basis[a].str() + "), psi(" + basis[b].str() + ")]", rhs.str(), lhs.str());
            }
        }
    psi_regression_cases(rep);
    return rep;
}

VerifyReport psi_injectivity_check(int max_n) {
    VerifyReport rep("psi-injective");
    ReportTimer timer(rep);
    rep.param("max_n", max_n);
    auto basis = e16_basis(max_n);
    EchelonBasis span;
    GradingType510 g0({0, 1, 1, 1, 1});
    for (const auto &b : basis) {
        E510Elt p = psi(b);
        span.insert(to_vec(p));
        bool member = degree_510(p, g0) == 0;
        try {
            E510Elt::make(p.even, p.odd);
        } catch (const InvariantError &) {
            member = false;
        }
        rep.record(member, "psi(" + b.str() + ") in g_0", "degree 0, div 0, closed", p.str());
        try {
            E16Elt back = psi_inverse(p);
            rep.record(back.agrees_with(b), "psi_inverse(psi(" + b.str() + "))", b.str(), back.str());
        } catch (const std::exception &e) {
            rep.record(false, "psi_inverse(psi(" + b.str() + "))", b.str(), e.what());
        }
    }
    rep.record(span.rank() == basis.size(), "rank of psi on window", std::to_string(basis.size()), std::to_string(span.rank()));
    return rep;
}

// ------------------------------------------------------------- ι and Ψ

namespace {

std::string xi(int i) { return "xi" + std::to_string(i); }
std::string eta(int i) { return "eta" + std::to_string(i); }
std::string x(int i) { return "x" + std::to_string(i); }

const int kCyclic[3][3] = {{2, 3, 4}, {3, 4, 2}, {4, 2, 3}};

GrassElt grass(const std::string &s) { return parse_grass(s, Coord::XiEta); }

K16Elt t_times(int n, const K16Elt &f) {
    K16Elt r(f.coord(), trunc_shift(f.trunc(), n));
    for (const auto &[k, c] : f.terms()) r.add(k.first + n, k.second, c);
    return r;
}

K16Elt iota_of(int n, GrassMask mask) { return op_iota(K16Elt::monomial(Coord::XiEta, n, mask)); }

std::string label_str(int n, GrassMask mask) {
    std::string g = grass_mono_str(Coord::XiEta, mask);
    if (n == 0) return g;
    std::string t = n == 1 ? "t" : "t^" + std::to_string(n);
    return g == "1" ? t : t + "*" + g;
}

}  // namespace

IotaBasis::IotaBasis(int window) : window_(window) {
    for (int n = 0; n <= window; ++n)
        for (int mask = 0; mask < 64; ++mask) {
            if (popcount(static_cast<GrassMask>(mask)) > 3) continue;
            labels_.push_back({n, static_cast<GrassMask>(mask)});
            spanning_.push_back(iota_of(n, static_cast<GrassMask>(mask)));
            basis_.insert(to_vec(spanning_.back()));
        }
}

int IotaBasis::index_of(int n, GrassMask mask) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k].n == n && labels_[k].mask == mask) return static_cast<int>(k);
    return -1;
}

VerifyReport IotaBasis::kernel_check() const {
    VerifyReport rep("iota-basis-kernel");
    ReportTimer timer(rep);
    rep.param("window", window_);
    EchelonBasis kernel;
    for (const auto &r : relations()) kernel.insert(r);
    for (std::size_t a = 0; a < labels_.size(); ++a) {
        auto [n, mask] = labels_[a];
        if (popcount(mask) != 3) continue;
        K16Elt af = op_A(K16Elt::monomial(Coord::XiEta, n, mask));
        if (af.terms().size() != 1) {
            rep.record(false, "A(" + label_str(n, mask) + ") is a monomial", "one term", af.str());
            continue;
        }
        auto [key, c] = *af.terms().begin();
        int b = index_of(key.first, key.second);
        SparseVec rel = {{static_cast<std::int64_t>(a), Scalar(1)}};
        axpy(rel, -c, SparseVec{{static_cast<std::int64_t>(b), Scalar(1)}});
        rep.record(kernel.in_span(rel), "iota(" + label_str(n, mask) + ") = iota(A(" + label_str(n, mask) + "))");
    }
    const char *vanishing[4] = {"xi2*xi3*xi4", "xi3*eta2*eta4", "xi2*eta3*eta4", "xi4*eta2*eta3"};
    for (int n = 0; n <= window_; ++n)
        for (const char *v : vanishing) {
            GrassMask m = grass(v).terms().begin()->first;
            int a = index_of(n, m);
            rep.record(kernel.in_span(SparseVec{{a, Scalar(1)}}), "iota(" + label_str(n, m) + ") = 0");
        }
    // per-n rank of the |I| = 3 block: 1 + 3 + 3 + 3 = 10
    for (int n = 0; n <= window_; ++n) {
        std::vector<SparseVec> block;
        for (std::size_t a = 0; a < labels_.size(); ++a)
            if (labels_[a].n == n && popcount(labels_[a].mask) == 3) block.push_back(to_vec(spanning_[a]));
        std::size_t r = rank_of(block);
        rep.record(r == 10, "rank of |I|=3 block at n=" + std::to_string(n), "10", std::to_string(r));
    }
    return rep;
}

const std::vector<PsiRow> &psi_rows() {
    static const std::vector<PsiRow> rows = [] {
        std::vector<PsiRow> r;
        r.push_back({"1", {2, 3, 4}, GrassElt::monomial(Coord::XiEta, 0), parse_e44("D1")});
        for (const auto &c : kCyclic) {
            int i = c[0], j = c[1], k = c[2];
            std::array<int, 3> ijk = {i, j, k};
            auto D = [](int a) { return "D" + std::to_string(a); };
            auto dx = [](int a) { return "dx" + std::to_string(a); };
            r.push_back({"eta_i*eta_j", ijk, grass(eta(i) + "*" + eta(j)), parse_e44(D(k))});
            r.push_back({"eta_i", ijk, grass(eta(i)), parse_e44("1/2*r2*" + dx(i))});
            if (i == 2) r.push_back({"eta_i*eta_j*eta_k", ijk, grass(eta(i) + "*" + eta(j) + "*" + eta(k)), parse_e44("-r2*dx1")});
            r.push_back({"xi_i*eta_j", ijk, grass(xi(i) + "*" + eta(j)), parse_e44(x(j) + "*" + D(i))});
            r.push_back({"xi_i*eta_i", ijk, grass(xi(i) + "*" + eta(i)), parse_e44("-" + x(j) + "*" + D(j) + " - " + x(k) + "*" + D(k))});
            r.push_back({"xi_i", ijk, grass(xi(i)), parse_e44("-1/2*r2*" + x(j) + "*" + dx(k) + " + 1/2*r2*" + x(k) + "*" + dx(j))});
            r.push_back({"xi_j*eta_j*eta_i", ijk, grass(xi(j) + "*" + eta(j) + "*" + eta(i)), parse_e44("r2*" + x(i) + "*dx1")});
            r.push_back({"xi_i*xi_j", ijk, grass(xi(i) + "*" + xi(j)),
                         parse_e44(x(k) + "*x2*D2 + " + x(k) + "*x3*D3 + " + x(k) + "*x4*D4")});
            r.push_back({"xi_j*xi_i*eta_i", ijk, grass(xi(j) + "*" + xi(i) + "*" + eta(i)), parse_e44("r2*" + x(i) + "*" + x(k) + "*dx1")});
            r.push_back({"xi_i*xi_j*eta_k", ijk, grass(xi(i) + "*" + xi(j) + "*" + eta(k)), parse_e44("-r2*" + x(k) + "^2*dx1")});
        }
        // the ξ_iη_j rule read for both orders of i ≠ j
        for (const auto &c : kCyclic) {
            int i = c[0], j = c[1], k = c[2];
            PsiRow row{"xi_i*eta_j", {j, i, k}, grass(xi(j) + "*" + eta(i)), parse_e44(x(i) + "*D" + std::to_string(j))};
            row.extension = true;
            r.push_back(row);
        }
        return r;
    }();
    return rows;
}

std::vector<IotaRow> iota_rows() {
    std::vector<IotaRow> out;
    auto K = [](const std::string &s) { return parse_k16(s, Coord::XiEta); };
    for (const auto &c : kCyclic) {
        int i = c[0], j = c[1], k = c[2];
        std::array<int, 3> ijk = {i, j, k};
        auto add = [&](const std::string &family, const std::string &f, const std::string &expected) {
            K16Elt fk = K(f);
            out.push_back({family, ijk, fk, op_iota(fk), K(expected)});
        };
        std::string eee = eta(i) + "*" + eta(j) + "*" + eta(k);
        add("eta_i*eta_j*eta_k", eee, "2*" + eee);
        std::string xee = xi(j) + "*" + eta(j) + "*" + eta(i);
        add("xi_j*eta_j*eta_i", xee, xee + " + " + xi(k) + "*" + eta(k) + "*" + eta(i));
        add("xi_i*eta_j*eta_k", xi(i) + "*" + eta(j) + "*" + eta(k), "0");
        std::string xxe = xi(j) + "*" + xi(i) + "*" + eta(i);
        add("xi_j*xi_i*eta_i", xxe, xxe + " - " + xi(j) + "*" + xi(k) + "*" + eta(k));
        std::string xxe2 = xi(i) + "*" + xi(j) + "*" + eta(k);
        add("xi_i*xi_j*eta_k", xxe2, "2*" + xxe2);
        add("xi_i*xi_j*xi_k", xi(i) + "*" + xi(j) + "*" + xi(k), "0");
    }
    return out;
}

E44Elt x1_times(int n, const E44Elt &e) {
    if (n == 0) return e;
    PolySeries m = x1_pow(Vars::X1to4, n);
    E44Elt r;
    r.even = vf_mul(m, e.even);
    r.odd = form_mul(m, e.odd);
    if (r.odd.is_zero()) r.odd = DiffForm(Vars::X1to4, 1);
    return r;
}

PsiMap::PsiMap(int window) : window_(window) {
    for (int n = 0; n <= window; ++n) {
        Scalar pow2(1L << n);
        for (const auto &row : psi_rows()) {
            basis_.insert(to_vec(op_iota(K16Elt::from_grass(n, row.f))));
            values_.push_back(pow2 * x1_times(n, row.value));
        }
    }
}

E44Elt PsiMap::operator()(const K16Elt &F) const {
    auto red = basis_.reduce(to_vec(F));
    if (!red.in_span()) throw InvariantError("not in the span of the iota image (window " + std::to_string(window_) + "): " + F.str());
    E44Elt r;
    for (const auto &[id, c] : red.combo) r += c * values_[static_cast<std::size_t>(id)];
    return r;
}

VerifyReport PsiMap::well_defined() const {
    VerifyReport rep("Psi-well-defined");
    ReportTimer timer(rep);
    rep.param("window", window_);
    for (const auto &rel : basis_.relations()) {
        E44Elt s;
        for (const auto &[id, c] : rel) s += c * values_[static_cast<std::size_t>(id)];
        rep.record(s.is_zero(), "relation among defining elements", "0", s.str());
    }
    IotaBasis ib(window_);
    for (std::size_t a = 0; a < ib.spanning().size(); ++a) {
        auto [n, mask] = ib.labels()[a];
        std::string name = "Psi(iota(" + label_str(n, mask) + "))";
        try {
            E44Elt v = (*this)(ib.spanning()[a]);
            if (n == 0) {
                rep.record(true, name);
                continue;
            }
            E44Elt base = (*this)(iota_of(0, mask));
            E44Elt want = Scalar(1L << n) * x1_times(n, base);
            rep.record(v.agrees_with(want), name + " = 2^n x1^n Psi(iota(xi_I))", want.str(), v.str());
        } catch (const InvariantError &e) {
            rep.record(false, name, "defined", e.what());
        }
    }
    return rep;
}

namespace {

void check_e44(VerifyReport &rep, const std::string &name, const E44Elt &got, const E44Elt &want) {
    rep.record(got.agrees_with(want), name, want.str(), got.str());
}

bool involves_x1(const E44Elt &e) {
    for (const auto &[j, c] : e.even.components())
        for (const auto &[m, v] : c.terms())
            if (m.e[0]) return true;
    for (const auto &[s, c] : e.odd.terms())
        for (const auto &[m, v] : c.terms())
            if (m.e[0]) return true;
    return false;
}

}  // namespace

VerifyReport verify_Psi(int n_lo, int n_hi) {
    VerifyReport rep("thm-4-7");
    ReportTimer timer(rep);
    rep.param("n", std::to_string(n_lo) + ".." + std::to_string(n_hi));
    const int kCaseN = 3;
    PsiMap P(std::max(n_hi, kCaseN) + 1);
    auto safe = [&](const K16Elt &F, E44Elt &out, std::string &err) {
        try {
            out = P(F);
            return true;
        } catch (const InvariantError &e) {
            err = e.what();
            return false;
        }
    };

    // base sweep: f = t^n ξ_I, g = η_J
    for (int n = n_lo; n <= n_hi; ++n)
        for (int mask = 0; mask < 64; ++mask) {
            if (popcount(static_cast<GrassMask>(mask)) > 3) continue;
            K16Elt F = iota_of(n, static_cast<GrassMask>(mask));
            for (int jm = 0; jm < 8; ++jm) {
                GrassMask J = static_cast<GrassMask>(jm << 3);
                K16Elt G = iota_of(0, J);
                std::string name = "[Psi(iota(" + label_str(n, static_cast<GrassMask>(mask)) + ")), Psi(iota(" + label_str(0, J) + "))]";
                E44Elt pf, pg, pb;
                std::string err;
                if (!safe(F, pf, err) || !safe(G, pg, err) || !safe(bracket_k16(F, G), pb, err)) {
                    rep.record(false, name, "defined", err);
                    continue;
                }
                check_e44(rep, name, bracket_e44(pf, pg), pb);
            }
        }

    // the two exceptional cases
    K16Elt g234 = op_iota(parse_k16("eta2*eta3*eta4"));
    for (int n = 0; n <= kCaseN; ++n) {
        std::string tn = n == 0 ? "" : (n == 1 ? "t*" : "t^" + std::to_string(n) + "*");
        K16Elt f1 = op_iota(t_times(n, parse_k16("xi3*xi4")));
        K16Elt br = bracket_k16(f1, g234);
        K16Elt want = Scalar(-2) * op_iota(t_times(n, parse_k16("xi4*eta2*eta4")));
        rep.record(br == want, "[iota(" + tn + "xi3*xi4), iota(eta2*eta3*eta4)]", want.str(), br.str());
        E44Elt target = parse_e44("2*r2*x2*dx1");
        target = Scalar(1L << n) * x1_times(n, target);
        check_e44(rep, "Psi([iota(" + tn + "xi3*xi4), iota(eta2*eta3*eta4)])", P(br), target);
        check_e44(rep, "[Psi(iota(" + tn + "xi3*xi4)), Psi(iota(eta2*eta3*eta4))]", bracket_e44(P(f1), P(g234)), target);

        K16Elt f2 = op_iota(t_times(n, parse_k16("xi2*xi3*eta3")));
        K16Elt br2 = bracket_k16(f2, g234);
        rep.record(br2.is_zero(), "[iota(" + tn + "xi2*xi3*eta3), iota(eta2*eta3*eta4)]", "0", br2.str());
        E44Elt lhs2 = bracket_e44(P(f2), P(g234));
        rep.record(lhs2.is_zero(), "[Psi(iota(" + tn + "xi2*xi3*eta3)), Psi(iota(eta2*eta3*eta4))]", "0", lhs2.str());
    }

    // coefficients of Ψ(ι(ξ_I)) are free of x1, and the x1^n bracket rule
    std::vector<std::pair<GrassMask, E44Elt>> base;
    for (int mask = 0; mask < 64; ++mask) {
        if (popcount(static_cast<GrassMask>(mask)) > 3) continue;
        K16Elt F = iota_of(0, static_cast<GrassMask>(mask));
        if (F.is_zero()) continue;
        E44Elt v = P(F);
        rep.record(!involves_x1(v), "Psi(iota(" + label_str(0, static_cast<GrassMask>(mask)) + ")) free of x1", "", v.str());
        base.emplace_back(static_cast<GrassMask>(mask), v);
    }
    for (int n = 0; n <= kCaseN; ++n)
        for (const auto &[mi, u] : base)
            for (const auto &[mj, v] : base) {
                E44Elt lhs = bracket_e44(x1_times(n, u), v);
                E44Elt rhs = Scalar(1 - n) * x1_times(n, bracket_e44(u, v));
                if (n >= 1) rhs += Scalar(n) * x1_times(n - 1, bracket_e44(x1_times(1, u), v));
                check_e44(rep, "x1^" + std::to_string(n) + " rule for (" + label_str(0, mi) + ", " + label_str(0, mj) + ")", lhs, rhs);
            }

    // [t^n ξ_I, ξ_J] reduction, and its ι form when [A(t^n ξ_I), A(ξ_J)] = 0
    for (int n = 1; n <= kCaseN; ++n)
        for (int mi = 0; mi < 64; ++mi) {
            if (popcount(static_cast<GrassMask>(mi)) > 3) continue;
            K16Elt f = K16Elt::monomial(Coord::XiEta, n, static_cast<GrassMask>(mi));
            K16Elt f0 = K16Elt::monomial(Coord::XiEta, 0, static_cast<GrassMask>(mi));
            K16Elt f1 = K16Elt::monomial(Coord::XiEta, 1, static_cast<GrassMask>(mi));
            for (int mj = 0; mj < 64; ++mj) {
                if (popcount(static_cast<GrassMask>(mj)) > 3) continue;
                K16Elt g = K16Elt::monomial(Coord::XiEta, 0, static_cast<GrassMask>(mj));
                K16Elt reduced = Scalar(1 - n) * t_times(n, bracket_k16(f0, g)) + Scalar(n) * t_times(n - 1, bracket_k16(f1, g));
                std::string name = "(" + label_str(n, static_cast<GrassMask>(mi)) + ", " + label_str(0, static_cast<GrassMask>(mj)) + ")";
                K16Elt direct = bracket_k16(f, g);
                rep.record(direct == reduced, "t^n reduction " + name, reduced.str(), direct.str());
                if (!bracket_k16(op_A(f), op_A(g)).is_zero()) continue;
                K16Elt lhs = bracket_k16(op_iota(f), op_iota(g));
                rep.record(lhs == op_iota(reduced), "iota t^n reduction " + name, op_iota(reduced).str(), lhs.str());
            }
        }
    return rep;
}

VerifyReport verify_Psi_random(long trials, std::uint64_t seed) {
    VerifyReport rep("Psi-random");
    ReportTimer timer(rep);
    rep.param("trials", trials);
    rep.param("seed", std::to_string(seed));
    PsiMap P(2);
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto sample = [&] {
        K16Elt F(Coord::XiEta);
        int terms = pick(1, 3);
        for (int i = 0; i < terms; ++i) {
            GrassMask m;
            do m = static_cast<GrassMask>(pick(0, 63));
            while (popcount(m) > 3);
            F += Scalar(pick(-3, 3)) * iota_of(pick(0, 1), m);
        }
        return F;
    };
    long nontrivial = 0;
    for (long t = 0; t < trials; ++t) {
        K16Elt F = sample(), G = sample();
        K16Elt B = bracket_k16(F, G);
        nontrivial += !B.is_zero();
        std::string name = "[Psi(" + F.str() + "), Psi(" + G.str() + ")]";
        try {
            check_e44(rep, name, bracket_e44(P(F), P(G)), P(B));
        } catch (const InvariantError &e) {
            rep.record(false, name, "defined", e.what());
        }
    }
    rep.note = std::to_string(nontrivial) + " pairs with nonzero bracket";
    return rep;
}

VerifyReport Psi_grading_check(int window) {
    VerifyReport rep("Psi-grading");
    ReportTimer timer(rep);
    rep.param("window", window);
    PsiMap P(window);
    IotaBasis ib(window);
    for (std::size_t a = 0; a < ib.spanning().size(); ++a) {
        const K16Elt &F = ib.spanning()[a];
        if (F.is_zero()) continue;
        auto d = degree_k16_type1(F);
        E44Elt v = P(F);
        auto e = degree_e44_principal(v);
        rep.record(d && e && *d == *e, "degree of Psi(iota(" + label_str(ib.labels()[a].n, ib.labels()[a].mask) + "))",
                   d ? std::to_string(*d) : "mixed", e ? std::to_string(*e) : "mixed");
    }
    return rep;
}

std::vector<E44Elt> corollary_v0() {
    std::vector<E44Elt> v;
    for (int i = 1; i <= 4; ++i) v.push_back(parse_e44("D" + std::to_string(i)));
    for (int i = 2; i <= 4; ++i)
        for (int j = 2; j <= 4; ++j) v.push_back(parse_e44(x(i) + "*D" + std::to_string(j)));
    for (int i = 2; i <= 4; ++i) v.push_back(parse_e44(x(i) + "*x2*D2 + " + x(i) + "*x3*D3 + " + x(i) + "*x4*D4"));
    return v;
}

std::vector<E44Elt> corollary_v1() {
    std::vector<E44Elt> v;
    for (int i = 1; i <= 4; ++i) v.push_back(parse_e44("dx" + std::to_string(i)));
    for (int i = 2; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            v.push_back(parse_e44(x(i) + "*dx" + std::to_string(j) + " - " + x(j) + "*dx" + std::to_string(i)));
    for (int i = 2; i <= 4; ++i) v.push_back(parse_e44(x(i) + "*dx1"));
    for (int i = 2; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) v.push_back(parse_e44(x(i) + "*" + x(j) + "*dx1"));
    return v;
}

std::vector<std::size_t> iota_principal_dimensions() {
    IotaBasis ib(1);
    std::vector<std::vector<SparseVec>> by_degree(4);
    for (std::size_t a = 0; a < ib.labels().size(); ++a) {
        int d = 2 * ib.labels()[a].n + popcount(ib.labels()[a].mask) - 2;
        if (d >= -2 && d <= 1) by_degree[static_cast<std::size_t>(d + 2)].push_back(to_vec(ib.spanning()[a]));
    }
    std::vector<std::size_t> dims;
    for (const auto &vs : by_degree) dims.push_back(rank_of(vs));
    return dims;
}

VerifyReport corollary_subalgebra_check(int window) {
    VerifyReport rep("corollary");
    ReportTimer timer(rep);
    rep.param("window", window);
    std::vector<E44Elt> gens = corollary_v0();
    for (const auto &v : corollary_v1()) gens.push_back(v);

    EchelonBasis span;
    for (int c = 0; c <= window; ++c)
        for (const auto &v : gens) span.insert(to_vec(x1_times(c, v)));
    rep.record(span.rank() == gens.size() * static_cast<std::size_t>(window + 1), "V0 + V1 basis independent",
               std::to_string(gens.size() * static_cast<std::size_t>(window + 1)), std::to_string(span.rank()));

    for (int a = 0; a <= window; ++a)
        for (int b = 0; a + b <= window; ++b)
            for (const auto &u : gens)
                for (const auto &v : gens) {
                    E44Elt br = bracket_e44(x1_times(a, u), x1_times(b, v));
                    bool ok = span.in_span(to_vec(br));
                    if (ok) {
                        rep.record(true, "");
                    } else {
                        rep.record(false, "[x1^" + std::to_string(a) + "*(" + u.str() + "), x1^" + std::to_string(b) + "*(" + v.str() + ")]",
                                   "in C[x1](V0+V1)", br.str());
                    }
                }

    PsiMap P(window);
    IotaBasis ib(window);
    for (std::size_t k = 0; k < ib.spanning().size(); ++k) {
        const K16Elt &F = ib.spanning()[k];
        if (F.is_zero()) continue;
        E44Elt v = P(F);
        rep.record(span.in_span(to_vec(v)), "Psi(iota(" + label_str(ib.labels()[k].n, ib.labels()[k].mask) + ")) in C[x1](V0+V1)", "",
                   v.str());
    }

    auto dims = iota_principal_dimensions();
    const std::vector<std::size_t> want = {1, 6, 16, 16};
    auto render = [](const std::vector<std::size_t> &d) {
        std::string s;
        for (auto x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    rep.record(dims == want, "principal dimensions of the iota image in degrees -2..1", render(want), render(dims));

    // Ψ is injective on each of those slices
    PsiMap P1(1);
    IotaBasis ib1(1);
    std::vector<std::vector<SparseVec>> images(4);
    for (std::size_t a = 0; a < ib1.labels().size(); ++a) {
        int d = 2 * ib1.labels()[a].n + popcount(ib1.labels()[a].mask) - 2;
        if (d < -2 || d > 1) continue;
        images[static_cast<std::size_t>(d + 2)].push_back(to_vec(P1(ib1.spanning()[a])));
    }
    std::vector<std::size_t> image_dims;
    for (const auto &vs : images) image_dims.push_back(rank_of(vs));
    rep.record(image_dims == want, "principal dimensions of the Psi image in degrees -2..1", render(want), render(image_dims));
    return rep;
}

}  // namespace exls
