#include "exls/formcalc.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "exls/errors.hpp"
#include "exls/parse.hpp"
#include "format.hpp"

namespace exls {

namespace {

int normalize_trunc(Vars v, int t) { return series_index(v) < 0 ? kExact : t; }

// Truncation after one derivative in the series variable.
int lowered(Vars v, int t) { return series_index(v) < 0 ? kExact : trunc_shift(t, -1); }

void check_vars(Vars a, Vars b) {
    if (a != b) throw MismatchError("variable-set mismatch: " + vars_name(a) + " vs " + vars_name(b));
}

int below(VarMask s, int j) { return __builtin_popcount(static_cast<unsigned>(s) & ((1u << j) - 1)); }

// i_{∂_j} dx_S = contract_sign * dx_{S\j}
int contract_sign(VarMask s, int j) {
    if (!(s & (1u << j))) return 0;
    return (below(s, j) & 1) ? -1 : 1;
}

std::string var_digit(Vars v, int j) {
    std::string n = var_name(v, j);
    return n == "t" ? n : n.substr(1);
}

std::string join_term(const std::string &mono, const std::string &tok) {
    if (mono.empty()) return tok;
    if (tok.empty()) return mono;
    return mono + "*" + tok;
}

}  // namespace

int mask_wedge_sign(VarMask a, VarMask b) {
    if (a & b) return 0;
    int inv = 0;
    for (int j = 0; j < 8; ++j)
        if (b & (1u << j)) inv += __builtin_popcount(static_cast<unsigned>(a) >> (j + 1));
    return (inv & 1) ? -1 : 1;
}

std::string form_token(Vars v, VarMask s) {
    std::vector<int> idx;
    for (int j = 0; j < nvars(v); ++j)
        if (s & (1u << j)) idx.push_back(j);
    if (idx.empty()) return "";
    std::string head;
    if (var_name(v, idx.front()) == "t") {
        head = "dt";
        idx.erase(idx.begin());
        if (idx.empty()) return head;
        head += "*";
    }
    if (idx.size() == 1) return head + "dx" + var_digit(v, idx[0]);
    std::string r = head + "d";
    for (int j : idx) r += var_digit(v, j);
    return r;
}

// ---------------------------------------------------------------- VectorField

VectorField VectorField::partial(Vars v, int j, const PolySeries &c) {
    VectorField x(v, c.trunc());
    x.add(j, c);
    return x;
}

PolySeries VectorField::component(int j) const {
    auto it = comp_.find(j);
    return it == comp_.end() ? PolySeries(vars_, trunc_) : it->second;
}

void VectorField::add(int j, const PolySeries &c) {
    check_vars(vars_, c.vars());
    if (j < 0 || j >= nvars(vars_)) throw MismatchError("no such variable index");
    truncate(c.trunc());
    PolySeries cur = component(j);
    cur += c;
    cur.truncate(trunc_);
    if (cur.is_zero()) comp_.erase(j);
    else comp_.insert_or_assign(j, cur);
}

void VectorField::truncate(int trunc) {
    trunc = normalize_trunc(vars_, trunc);
    if (trunc >= trunc_) return;
    trunc_ = trunc;
    for (auto it = comp_.begin(); it != comp_.end();) {
        it->second.truncate(trunc);
        if (it->second.is_zero()) it = comp_.erase(it);
        else ++it;
    }
}

VectorField &VectorField::operator+=(const VectorField &o) {
    check_vars(vars_, o.vars_);
    truncate(o.trunc_);
    for (const auto &[j, c] : o.comp_) add(j, c);
    return *this;
}

VectorField &VectorField::operator-=(const VectorField &o) { return *this += -o; }

VectorField &VectorField::operator*=(const Scalar &s) {
    for (auto it = comp_.begin(); it != comp_.end();) {
        it->second *= s;
        if (it->second.is_zero()) it = comp_.erase(it);
        else ++it;
    }
    return *this;
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    return r *= Scalar(-1);
}

bool VectorField::operator==(const VectorField &o) const {
    return vars_ == o.vars_ && trunc_ == o.trunc_ && comp_ == o.comp_;
}

bool VectorField::agrees_with(const VectorField &o) const {
    if (vars_ != o.vars_) return false;
    VectorField a = *this, b = o;
    int t = trunc_min(trunc_, o.trunc_);
    a.truncate(t);
    b.truncate(t);
    return a.comp_ == b.comp_;
}

std::string VectorField::str() const {
    std::vector<std::tuple<EvenMono, int, Scalar>> rows;
    for (const auto &[j, c] : comp_)
        for (const auto &[m, s] : c.terms()) rows.emplace_back(m, j, s);
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        if (std::get<0>(a) != std::get<0>(b)) return print_before(std::get<0>(a), std::get<0>(b));
        return std::get<1>(a) < std::get<1>(b);
    });
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto &[m, j, s] : rows) parts.emplace_back(s, join_term(mono_str(vars_, m), "D" + var_digit(vars_, j)));
    std::string out = detail::format_sum(parts);
    int si = series_index(vars_);
    if (si >= 0) out += detail::format_trunc(var_name(vars_, si), trunc_);
    return out;
}

// ------------------------------------------------------------------- DiffForm

DiffForm DiffForm::monomial(Vars v, VarMask s, const PolySeries &c) {
    DiffForm w(v, __builtin_popcount(s), c.trunc());
    w.add(s, c);
    return w;
}

PolySeries DiffForm::coeff(VarMask s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? PolySeries(vars_, trunc_) : it->second;
}

void DiffForm::add(VarMask s, const PolySeries &c) {
    check_vars(vars_, c.vars());
    if (__builtin_popcount(s) != degree_) throw InvariantError("form degree mismatch");
    truncate(c.trunc());
    PolySeries cur = coeff(s);
    cur += c;
    cur.truncate(trunc_);
    if (cur.is_zero()) terms_.erase(s);
    else terms_.insert_or_assign(s, cur);
}

void DiffForm::truncate(int trunc) {
    trunc = normalize_trunc(vars_, trunc);
    if (trunc >= trunc_) return;
    trunc_ = trunc;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second.truncate(trunc);
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

DiffForm &DiffForm::operator+=(const DiffForm &o) {
    check_vars(vars_, o.vars_);
    if (o.degree_ != degree_) {
        if (o.is_zero()) {
            truncate(o.trunc_);
            return *this;
        }
        if (!is_zero()) throw InvariantError("adding forms of different degree");
        degree_ = o.degree_;
    }
    truncate(o.trunc_);
    for (const auto &[s, c] : o.terms_) add(s, c);
    return *this;
}

DiffForm &DiffForm::operator-=(const DiffForm &o) { return *this += -o; }

DiffForm &DiffForm::operator*=(const Scalar &s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= s;
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
    return *this;
}

DiffForm DiffForm::operator-() const {
    DiffForm r = *this;
    return r *= Scalar(-1);
}

bool DiffForm::operator==(const DiffForm &o) const {
    if (vars_ != o.vars_ || trunc_ != o.trunc_ || terms_ != o.terms_) return false;
    return degree_ == o.degree_ || terms_.empty();
}

bool DiffForm::agrees_with(const DiffForm &o) const {
    if (vars_ != o.vars_) return false;
    DiffForm a = *this, b = o;
    int t = trunc_min(trunc_, o.trunc_);
    a.truncate(t);
    b.truncate(t);
    return a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.terms_.empty());
}

std::string DiffForm::str() const {
    std::vector<std::tuple<EvenMono, VarMask, Scalar>> rows;
    for (const auto &[s, c] : terms_)
        for (const auto &[m, v] : c.terms()) rows.emplace_back(m, s, v);
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        if (std::get<0>(a) != std::get<0>(b)) return print_before(std::get<0>(a), std::get<0>(b));
        return std::get<1>(a) < std::get<1>(b);
    });
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto &[m, s, v] : rows) parts.emplace_back(v, join_term(mono_str(vars_, m), form_token(vars_, s)));
    std::string out = detail::format_sum(parts);
    int si = series_index(vars_);
    if (si >= 0) out += detail::format_trunc(var_name(vars_, si), trunc_);
    return out;
}

// ------------------------------------------------------------ vector calculus

PolySeries vf_apply(const VectorField &x, const PolySeries &f) {
    check_vars(x.vars(), f.vars());
    PolySeries r(f.vars(), lowered(f.vars(), trunc_min(x.trunc(), f.trunc())));
    for (const auto &[j, c] : x.components()) r += ps_mul(c, ps_partial(f, j));
    return r;
}

VectorField vf_bracket(const VectorField &x, const VectorField &y) {
    check_vars(x.vars(), y.vars());
    VectorField r(x.vars(), lowered(x.vars(), trunc_min(x.trunc(), y.trunc())));
    for (int j = 0; j < nvars(x.vars()); ++j) {
        PolySeries c = vf_apply(x, y.component(j)) - vf_apply(y, x.component(j));
        r.add(j, c);
    }
    return r;
}

PolySeries vf_div(const VectorField &x) {
    PolySeries r(x.vars(), lowered(x.vars(), x.trunc()));
    for (const auto &[j, c] : x.components()) r += ps_partial(c, j);
    return r;
}

VectorField vf_mul(const PolySeries &f, const VectorField &x) {
    check_vars(f.vars(), x.vars());
    VectorField r(x.vars(), trunc_min(f.trunc(), x.trunc()));
    for (const auto &[j, c] : x.components()) r.add(j, ps_mul(f, c));
    return r;
}

VectorField euler_field(Vars v) {
    VectorField e(v);
    for (int j = 0; j < nvars(v); ++j) e.add(j, PolySeries::variable(v, j));
    return e;
}

// --------------------------------------------------------------- form calculus

DiffForm form_mul(const PolySeries &f, const DiffForm &w) {
    check_vars(f.vars(), w.vars());
    DiffForm r(w.vars(), w.degree(), trunc_min(f.trunc(), w.trunc()));
    for (const auto &[s, c] : w.terms()) r.add(s, ps_mul(f, c));
    return r;
}

DiffForm form_d(const DiffForm &w) {
    Vars v = w.vars();
    DiffForm r(v, w.degree() + 1, lowered(v, w.trunc()));
    for (const auto &[s, c] : w.terms())
        for (int j = 0; j < nvars(v); ++j) {
            int sign = mask_wedge_sign(static_cast<VarMask>(1u << j), s);
            if (!sign) continue;
            r.add(static_cast<VarMask>(s | (1u << j)), ps_partial(c, j) * Scalar(sign));
        }
    return r;
}

DiffForm form_wedge(const DiffForm &a, const DiffForm &b) {
    check_vars(a.vars(), b.vars());
    DiffForm r(a.vars(), a.degree() + b.degree(), trunc_min(a.trunc(), b.trunc()));
    if (r.degree() > nvars(a.vars())) return r;
    for (const auto &[sa, ca] : a.terms())
        for (const auto &[sb, cb] : b.terms()) {
            int sign = mask_wedge_sign(sa, sb);
            if (sign) r.add(static_cast<VarMask>(sa | sb), ps_mul(ca, cb) * Scalar(sign));
        }
    return r;
}

DiffForm form_contract(const VectorField &x, const DiffForm &w) {
    check_vars(x.vars(), w.vars());
    if (w.degree() == 0) throw InvariantError("contraction of a 0-form");
    DiffForm r(w.vars(), w.degree() - 1, trunc_min(x.trunc(), w.trunc()));
    for (const auto &[s, c] : w.terms())
        for (const auto &[j, xj] : x.components()) {
            int sign = contract_sign(s, j);
            if (sign) r.add(static_cast<VarMask>(s & ~(1u << j)), ps_mul(xj, c) * Scalar(sign));
        }
    return r;
}

DiffForm form_lie(const VectorField &x, const DiffForm &w) {
    check_vars(x.vars(), w.vars());
    int t = lowered(w.vars(), trunc_min(x.trunc(), w.trunc()));
    if (w.degree() == 0) return DiffForm::function(vf_apply(x, w.coeff(0)));
    DiffForm r(w.vars(), w.degree(), t);
    r += form_d(form_contract(x, w));
    if (w.degree() < nvars(w.vars())) r += form_contract(x, form_d(w));
    return r;
}

DiffForm lambda_action(const VectorField &x, const DiffForm &w, const Scalar &lambda) {
    DiffForm r = form_lie(x, w);
    if (!lambda.is_zero()) r += lambda * form_mul(vf_div(x), w);
    return r;
}

DiffForm int_op(const DiffForm &w) {
    Vars v = w.vars();
    int k = w.degree();
    if (k == 0) {
        for (const auto &[s, c] : w.terms())
            for (const auto &[m, val] : c.terms())
                if (m.total() == 0) throw InvariantError("Euler weight zero");
        return DiffForm(v, 0, w.trunc());
    }
    DiffForm r(v, k - 1, w.trunc());
    for (const auto &[s, c] : w.terms())
        for (const auto &[m, val] : c.terms()) {
            Scalar scale = val * Scalar::rational(1, k + m.total());
            for (int j = 0; j < nvars(v); ++j) {
                int sign = contract_sign(s, j);
                if (!sign) continue;
                PolySeries coef(v, w.trunc());
                coef.add_term(m * EvenMono::var(j), scale * Scalar(sign));
                r.add(static_cast<VarMask>(s & ~(1u << j)), coef);
            }
        }
    return r;
}

DiffForm volume_form(Vars v) {
    return DiffForm::monomial(v, static_cast<VarMask>((1u << nvars(v)) - 1), PolySeries::constant(v, 1));
}

DiffForm form_from_vf(const VectorField &x) { return form_contract(x, volume_form(x.vars())); }

VectorField vf_from_form(const DiffForm &w) {
    Vars v = w.vars();
    int n = nvars(v);
    if (w.degree() != n - 1 && !w.is_zero())
        throw InvariantError("vf_from_form needs a form of degree " + std::to_string(n - 1));
    VarMask all = static_cast<VarMask>((1u << n) - 1);
    VectorField x(v, w.trunc());
    for (const auto &[s, c] : w.terms()) {
        int j = __builtin_ctz(static_cast<unsigned>(all & ~s));
        x.add(j, c * Scalar((j & 1) ? -1 : 1));
    }
    return x;
}

// -------------------------------------------------------------------- parsing

namespace {

int token_var(Vars v, const std::string &tok, std::size_t pos) {
    std::string name;
    if (tok == "dt" || tok == "Dt") name = "t";
    else if (tok.rfind("dx", 0) == 0) name = "x" + tok.substr(2);
    else if (tok.size() == 2 && tok[0] == 'D') name = "x" + tok.substr(1);
    else throw ParseError("unexpected symbol " + tok, pos);
    int j = var_index(v, name);
    if (j < 0) throw ParseError("variable " + name + " not in " + vars_name(v), pos);
    return j;
}

}  // namespace

void add_parsed_term(VectorField &x, const SymTerm &t) {
    if (!t.odd.empty()) throw ParseError("unexpected odd symbol in vector field", t.position);
    if (t.coeff.is_zero()) return;
    if (t.derivation.empty()) throw ParseError("term without a derivation", t.position);
    PolySeries c(x.vars(), x.trunc());
    c.add_term(term_mono(t, x.vars()), t.coeff);
    x.add(token_var(x.vars(), t.derivation, t.position), c);
}

void add_parsed_term(DiffForm &w, const SymTerm &t) {
    if (!t.derivation.empty()) throw ParseError("unexpected derivation in a form", t.position);
    if (t.coeff.is_zero()) return;
    Vars v = w.vars();
    std::vector<int> seq;
    VarMask s = 0;
    bool repeated = false;
    for (const auto &tok : t.odd) {
        int j = token_var(v, tok, t.position);
        seq.push_back(j);
        repeated = repeated || (s & (1u << j));
        s = static_cast<VarMask>(s | (1u << j));
    }
    int k = static_cast<int>(seq.size());
    if (k != w.degree()) {
        if (!w.is_zero()) throw ParseError("terms of different form degree", t.position);
        w = DiffForm(v, k, w.trunc());
    }
    if (repeated) return;
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b];
    PolySeries c(v, w.trunc());
    c.add_term(term_mono(t, v), (inv & 1) ? -t.coeff : t.coeff);
    w.add(s, c);
}

VectorField parse_vf(const std::string &text, Vars v) {
    Expression e = parse_expression(text);
    VectorField x(v, expression_trunc(e, v));
    for (const auto &t : e.terms) add_parsed_term(x, t);
    return x;
}

DiffForm parse_form(const std::string &text, Vars v) {
    Expression e = parse_expression(text);
    DiffForm w(v, 0, expression_trunc(e, v));
    for (const auto &t : e.terms) add_parsed_term(w, t);
    return w;
}

}  // namespace exls
