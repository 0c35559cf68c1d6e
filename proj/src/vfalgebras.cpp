#include "exls/vfalgebras.hpp"

#include <set>
#include <vector>

#include "exls/errors.hpp"
#include "exls/parse.hpp"
#include "format.hpp"

namespace exls {

namespace {

std::string join_parts(const std::string &a, const std::string &b) {
    if (a == "0") return b;
    if (b == "0") return a;
    if (b[0] == '-') return a + " - " + b.substr(1);
    return a + " + " + b;
}

// Strip " + O(x1^N)" from a rendering; appended once for the whole element.
std::string strip_trunc(const std::string &s) {
    auto p = s.find(" + O(");
    return p == std::string::npos ? s : s.substr(0, p);
}

std::string render(const VectorField &x, const DiffForm &w, const std::string &series_var, int trunc) {
    std::string s = join_parts(strip_trunc(x.str()), strip_trunc(w.str()));
    return s + detail::format_trunc(series_var, trunc);
}

}  // namespace

E510Elt E510Elt::make(const VectorField &even, const DiffForm &odd) {
    if (even.vars() != Vars::X1to5 || odd.vars() != Vars::X1to5) throw MismatchError("E(5,10) lives in x1..x5");
    if (!odd.is_zero() && odd.degree() != 2) throw InvariantError("E(5,10) odd part must be a 2-form");
    if (!vf_div(even).is_zero()) throw InvariantError("E(5,10) even part must be divergence free: " + even.str());
    if (!form_d(odd).is_zero()) throw InvariantError("E(5,10) odd part must be closed: " + odd.str());
    E510Elt e;
    e.even = even;
    e.odd = odd.is_zero() ? DiffForm(Vars::X1to5, 2, odd.trunc()) : odd;
    return e;
}

E510Elt &E510Elt::operator+=(const E510Elt &o) {
    even += o.even;
    odd += o.odd;
    return *this;
}

E510Elt &E510Elt::operator*=(const Scalar &s) {
    even *= s;
    odd *= s;
    return *this;
}

std::string E510Elt::str() const { return render(even, odd, "x1", trunc()); }

E44Elt &E44Elt::operator+=(const E44Elt &o) {
    even += o.even;
    odd += o.odd;
    return *this;
}

E44Elt &E44Elt::operator*=(const Scalar &s) {
    even *= s;
    odd *= s;
    return *this;
}

std::string E44Elt::str() const { return render(even, odd, "x1", trunc()); }

GradingType510::GradingType510(std::array<int, 5> v) : a(v) {
    int sum = 0;
    for (int x : a) sum += x;
    if (sum % 2 != 0) throw InvariantError("grading type must have even sum");
}

std::pair<int, int> eps_quintuple(int i, int j, int k, int l) {
    std::vector<int> seq = {i, j, k, l};
    std::set<int> seen(seq.begin(), seq.end());
    if (seen.size() < 4) return {0, 0};
    int hole = 15 - i - j - k - l;
    seq.push_back(hole);
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b];
    return {(inv & 1) ? -1 : 1, hole};
}

namespace {

// [f d_S, g d_T] summed over monomial terms.
VectorField odd_odd_510(const DiffForm &a, const DiffForm &b) {
    VectorField r(Vars::X1to5, trunc_min(a.trunc(), b.trunc()));
    for (const auto &[sa, fa] : a.terms())
        for (const auto &[sb, gb] : b.terms()) {
            if (sa & sb) continue;
            int i = __builtin_ctz(sa), j = 31 - __builtin_clz(sa);
            int h = __builtin_ctz(sb), k = 31 - __builtin_clz(sb);
            auto [sign, hole] = eps_quintuple(i + 1, j + 1, h + 1, k + 1);
            if (sign) r.add(hole - 1, ps_mul(fa, gb) * Scalar(sign));
        }
    return r;
}

}  // namespace

E510Elt bracket_e510(const E510Elt &a, const E510Elt &b) {
    E510Elt r;
    r.even = vf_bracket(a.even, b.even) + odd_odd_510(a.odd, b.odd);
    r.odd = form_lie(a.even, b.odd) - form_lie(b.even, a.odd);
    return r;
}

E44Elt bracket_e44(const E44Elt &a, const E44Elt &b) {
    const Scalar half(mpq_class(-1, 2));
    E44Elt r;
    r.even = vf_bracket(a.even, b.even);
    if (!a.odd.is_zero() && !b.odd.is_zero()) {
        DiffForm w = form_wedge(form_d(a.odd), b.odd) + form_wedge(a.odd, form_d(b.odd));
        r.even += vf_from_form(w);
    }
    r.odd = lambda_action(a.even, b.odd, half) - lambda_action(b.even, a.odd, half);
    return r;
}

namespace {

struct DegreeAcc {
    std::optional<int> value;
    bool mixed = false;
    void add(int d) {
        if (value && *value != d) mixed = true;
        value = d;
    }
    std::optional<int> result() const { return mixed ? std::nullopt : value; }
};

int mono_weight(const EvenMono &m, const int *w, int n) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += m.e[i] * w[i];
    return s;
}

}  // namespace

std::optional<int> degree_510(const E510Elt &e, const GradingType510 &g) {
    const int *a = g.a.data();
    int sum = 0;
    for (int x : g.a) sum += x;
    int two_deg_d = -sum / 2;
    DegreeAcc acc;
    for (const auto &[j, c] : e.even.components())
        for (const auto &[m, v] : c.terms()) acc.add(mono_weight(m, a, 5) - a[j]);
    for (const auto &[s, c] : e.odd.terms()) {
        int ds = two_deg_d;
        for (int j = 0; j < 5; ++j)
            if (s & (1u << j)) ds += a[j];
        for (const auto &[m, v] : c.terms()) acc.add(mono_weight(m, a, 5) + ds);
    }
    return acc.result();
}

std::optional<int> degree_e44_principal(const E44Elt &e) {
    DegreeAcc acc;
    for (const auto &[j, c] : e.even.components())
        for (const auto &[m, v] : c.terms()) acc.add(m.total() - 1);
    for (const auto &[s, c] : e.odd.terms())
        for (const auto &[m, v] : c.terms()) acc.add(m.total() - 1);
    return acc.result();
}

namespace {

void split_terms(const std::string &text, Vars v, VectorField &x, DiffForm &w, int form_degree) {
    Expression e = parse_expression(text);
    int trunc = expression_trunc(e, v);
    x = VectorField(v, trunc);
    w = DiffForm(v, form_degree, trunc);
    for (const auto &t : e.terms) {
        if (t.coeff.is_zero()) continue;
        if (!t.derivation.empty()) {
            add_parsed_term(x, t);
        } else if (!t.odd.empty()) {
            if (static_cast<int>(t.odd.size()) != form_degree)
                throw ParseError("expected a " + std::to_string(form_degree) + "-form term", t.position);
            add_parsed_term(w, t);
        } else {
            throw ParseError("term is neither a vector field nor a form", t.position);
        }
    }
}

}  // namespace

E510Elt parse_e510(const std::string &text) {
    VectorField x(Vars::X1to5);
    DiffForm w(Vars::X1to5, 2);
    split_terms(text, Vars::X1to5, x, w, 2);
    return E510Elt::make(x, w);
}

E44Elt parse_e44(const std::string &text) {
    E44Elt e;
    split_terms(text, Vars::X1to4, e.even, e.odd, 1);
    return e;
}

}  // namespace exls
