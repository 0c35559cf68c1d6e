#include "exls/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "exls/errors.hpp"
#include "exls/parse.hpp"
#include "format.hpp"

namespace exls {

int nvars(Vars v) {
    switch (v) {
        case Vars::T: return 1;
        case Vars::X1to4: return 4;
        case Vars::X1to5: return 5;
        case Vars::X2to5: return 4;
        case Vars::TX2to5: return 5;
    }
    return 0;
}

int series_index(Vars v) { return v == Vars::X2to5 ? -1 : 0; }

std::string var_name(Vars v, int i) {
    switch (v) {
        case Vars::T: return "t";
        case Vars::X1to4:
        case Vars::X1to5: return "x" + std::to_string(i + 1);
        case Vars::X2to5: return "x" + std::to_string(i + 2);
        case Vars::TX2to5: return i == 0 ? "t" : "x" + std::to_string(i + 1);
    }
    return "?";
}

int var_index(Vars v, const std::string &name) {
    for (int i = 0; i < nvars(v); ++i)
        if (var_name(v, i) == name) return i;
    return -1;
}

std::string vars_name(Vars v) {
    switch (v) {
        case Vars::T: return "{t}";
        case Vars::X1to4: return "{x1..x4}";
        case Vars::X1to5: return "{x1..x5}";
        case Vars::X2to5: return "{x2..x5}";
        case Vars::TX2to5: return "{t,x2..x5}";
    }
    return "?";
}

std::string mono_str(Vars v, const EvenMono &m) {
    std::string s;
    for (int i = 0; i < nvars(v); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += var_name(v, i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

bool print_before(const EvenMono &a, const EvenMono &b) {
    int da = a.total(), db = b.total();
    if (da != db) return da < db;
    return a.e > b.e;
}

PolySeries::PolySeries(Vars v, int trunc) : vars_(v), trunc_(series_index(v) < 0 ? kExact : trunc) {}

PolySeries PolySeries::constant(Vars v, const Scalar &c, int trunc) {
    return monomial(v, EvenMono{}, c, trunc);
}

PolySeries PolySeries::monomial(Vars v, const EvenMono &m, const Scalar &c, int trunc) {
    PolySeries p(v, trunc);
    p.add_term(m, c);
    return p;
}

PolySeries PolySeries::variable(Vars v, int i, int power) { return monomial(v, EvenMono::var(i, power)); }

bool PolySeries::beyond(const EvenMono &m) const {
    int s = series_index(vars_);
    return s >= 0 && trunc_ != kExact && m.e[s] >= trunc_;
}

void PolySeries::add_term(const EvenMono &m, const Scalar &c) {
    if (!beyond(m)) terms_.add(m, c);
}

void PolySeries::truncate(int trunc) {
    if (series_index(vars_) < 0 || trunc >= trunc_) return;
    trunc_ = trunc;
    terms_.erase_if([&](const EvenMono &m) { return beyond(m); });
}

PolySeries &PolySeries::operator+=(const PolySeries &o) {
    if (vars_ != o.vars_) throw MismatchError("variable-set mismatch: " + vars_name(vars_) + " vs " + vars_name(o.vars_));
    truncate(o.trunc_);
    for (const auto &[m, c] : o.terms()) add_term(m, c);
    return *this;
}

PolySeries &PolySeries::operator-=(const PolySeries &o) { return *this += -o; }

PolySeries &PolySeries::operator*=(const Scalar &c) {
    terms_.scale(c);
    return *this;
}

PolySeries PolySeries::operator-() const {
    PolySeries r = *this;
    r.terms_.scale(Scalar(-1));
    return r;
}

bool PolySeries::operator==(const PolySeries &o) const {
    return vars_ == o.vars_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

bool PolySeries::agrees_with(const PolySeries &o) const {
    if (vars_ != o.vars_) return false;
    PolySeries a = *this, b = o;
    int t = trunc_min(trunc_, o.trunc_);
    a.truncate(t);
    b.truncate(t);
    return a.terms_ == b.terms_;
}

int PolySeries::series_degree() const {
    int s = series_index(vars_);
    if (s < 0) return -1;
    int d = -1;
    for (const auto &[m, c] : terms()) d = std::max<int>(d, m.e[s]);
    return d;
}

std::string PolySeries::str() const {
    std::vector<std::pair<EvenMono, Scalar>> sorted(terms().begin(), terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return print_before(a.first, b.first); });
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto &[m, c] : sorted) parts.emplace_back(c, mono_str(vars_, m));
    std::string s = detail::format_sum(parts);
    int si = series_index(vars_);
    if (si >= 0) s += detail::format_trunc(var_name(vars_, si), trunc_);
    return s;
}

PolySeries ps_mul(const PolySeries &p, const PolySeries &q) {
    if (p.vars() != q.vars())
        throw MismatchError("variable-set mismatch: " + vars_name(p.vars()) + " vs " + vars_name(q.vars()));
    PolySeries r(p.vars(), trunc_min(p.trunc(), q.trunc()));
    for (const auto &[a, ca] : p.terms())
        for (const auto &[b, cb] : q.terms()) r.add_term(a * b, ca * cb);
    return r;
}

PolySeries ps_partial(const PolySeries &p, int i) {
    if (i < 0 || i >= nvars(p.vars())) throw MismatchError("variable not in " + vars_name(p.vars()));
    int t = p.trunc();
    if (i == series_index(p.vars())) t = trunc_shift(t, -1);
    PolySeries r(p.vars(), t);
    for (const auto &[m, c] : p.terms()) {
        if (m.e[i] == 0) continue;
        EvenMono d = m;
        --d.e[i];
        r.add_term(d, c * Scalar(static_cast<long>(m.e[i])));
    }
    return r;
}

PolySeries ps_int_t(const PolySeries &p, int max_trunc) {
    int s = series_index(p.vars());
    if (s < 0) throw MismatchError("integration needs a series variable");
    PolySeries r(p.vars(), trunc_min(trunc_shift(p.trunc(), 1), max_trunc));
    for (const auto &[m, c] : p.terms()) {
        EvenMono u = m;
        ++u.e[s];
        r.add_term(u, c * Scalar::rational(1, u.e[s]));
    }
    return r;
}

EvenMono term_mono(const SymTerm &t, Vars v) {
    EvenMono m;
    for (const auto &[name, exp] : t.even) {
        int i = var_index(v, name);
        if (i < 0) throw ParseError("variable " + name + " not in " + vars_name(v), t.position);
        m.e[i] = static_cast<std::uint8_t>(m.e[i] + exp);
    }
    return m;
}

int expression_trunc(const Expression &e, Vars v) {
    if (!e.trunc_var) return kExact;
    int s = series_index(v);
    if (s < 0 || var_name(v, s) != e.trunc_var->var) throw ParseError("truncation variable is not the series variable", 0);
    return e.trunc_var->order;
}

PolySeries parse_series(const std::string &text, Vars v) {
    Expression e = parse_expression(text);
    PolySeries p(v, expression_trunc(e, v));
    for (const auto &t : e.terms) {
        if (!t.odd.empty() || !t.derivation.empty()) throw ParseError("unexpected form or field symbol", t.position);
        p.add_term(term_mono(t, v), t.coeff);
    }
    return p;
}

}  // namespace exls
