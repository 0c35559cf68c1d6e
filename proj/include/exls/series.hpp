#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exls/scalar.hpp"

namespace exls {

/// Truncation order meaning "exact polynomial".
inline constexpr int kExact = std::numeric_limits<int>::max();

inline int trunc_min(int a, int b) { return a < b ? a : b; }
inline int trunc_shift(int t, int by) { return t == kExact ? kExact : t + by; }

/// The active even-variable sets. The series variable (t or x1), when there is
/// one, is the variable whose truncation order is tracked.
enum class Vars : std::uint8_t { T, X1to4, X1to5, X2to5, TX2to5 };

int nvars(Vars v);
/// -1 when the set has no series variable (x2..x5).
int series_index(Vars v);
/// "t", "x1", ... for local index i.
std::string var_name(Vars v, int i);
/// Local index of a variable name, or -1.
int var_index(Vars v, const std::string &name);
std::string vars_name(Vars v);

/// Exponent vector over the (at most five) variables of a Vars set.
struct EvenMono {
    std::array<std::uint8_t, 5> e{};

    int total() const {
        int s = 0;
        for (auto x : e) s += x;
        return s;
    }
    EvenMono operator*(const EvenMono &o) const {
        EvenMono r;
        for (int k = 0; k < 5; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] + o.e[k]);
        return r;
    }
    static EvenMono var(int i, int power = 1) {
        EvenMono m;
        m.e[i] = static_cast<std::uint8_t>(power);
        return m;
    }
    auto operator<=>(const EvenMono &) const = default;
};

std::string mono_str(Vars v, const EvenMono &m);

/// Printing order: total degree ascending, then lexicographic in variable
/// index with the lower-indexed variable carrying more weight first.
bool print_before(const EvenMono &a, const EvenMono &b);

/// Finitely supported Scalar-valued map with zero coefficients pruned.
template <typename Key>
class LinComb {
public:
    using Map = std::map<Key, Scalar>;

    void add(const Key &k, const Scalar &c) {
        if (c.is_zero()) return;
        auto [it, fresh] = m_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }
    void add(const LinComb &o, const Scalar &c = Scalar(1)) {
        for (const auto &[k, v] : o.m_) add(k, v * c);
    }
    void scale(const Scalar &c) {
        if (c.is_zero()) {
            m_.clear();
            return;
        }
        for (auto &[k, v] : m_) v *= c;
    }
    template <typename Pred>
    void erase_if(Pred p) {
        std::erase_if(m_, [&](const auto &kv) { return p(kv.first); });
    }
    const Map &map() const { return m_; }
    bool empty() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }
    Scalar coeff(const Key &k) const {
        auto it = m_.find(k);
        return it == m_.end() ? Scalar() : it->second;
    }
    bool operator==(const LinComb &o) const = default;

private:
    Map m_;
};

/// Sparse polynomial in the variables of `vars`, known modulo
/// (series variable)^trunc.
class PolySeries {
public:
    using Terms = LinComb<EvenMono>;

    explicit PolySeries(Vars v = Vars::T, int trunc = kExact);
    static PolySeries constant(Vars v, const Scalar &c, int trunc = kExact);
    static PolySeries monomial(Vars v, const EvenMono &m, const Scalar &c = Scalar(1), int trunc = kExact);
    static PolySeries variable(Vars v, int i, int power = 1);

    Vars vars() const { return vars_; }
    int trunc() const { return trunc_; }
    const Terms::Map &terms() const { return terms_.map(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const EvenMono &m) const { return terms_.coeff(m); }

    /// Adds c*m, dropping it when beyond the truncation order.
    void add_term(const EvenMono &m, const Scalar &c);
    /// Lowers (never raises) the truncation order, discarding invalid terms.
    void truncate(int trunc);
    /// Raises the truncation order without touching terms (used for exact lifts).
    void set_trunc_unchecked(int trunc) { trunc_ = trunc; }

    PolySeries &operator+=(const PolySeries &o);
    PolySeries &operator-=(const PolySeries &o);
    PolySeries &operator*=(const Scalar &c);
    PolySeries operator-() const;
    friend PolySeries operator+(PolySeries a, const PolySeries &b) { return a += b; }
    friend PolySeries operator-(PolySeries a, const PolySeries &b) { return a -= b; }
    friend PolySeries operator*(PolySeries a, const Scalar &c) { return a *= c; }
    friend PolySeries operator*(const Scalar &c, PolySeries a) { return a *= c; }

    /// Structural equality: same variables, truncation and terms.
    bool operator==(const PolySeries &o) const;
    /// Equality after truncating both sides to the tighter order.
    bool agrees_with(const PolySeries &o) const;

    /// Highest exponent of the series variable present (-1 if none / zero).
    int series_degree() const;

    std::string str() const;

private:
    bool beyond(const EvenMono &m) const;

    Vars vars_;
    int trunc_;
    Terms terms_;
};

/// Product; result truncation is the minimum of the inputs'.
PolySeries ps_mul(const PolySeries &p, const PolySeries &q);
/// Formal partial derivative in local variable index `i`; the truncation
/// order drops by one when `i` is the series variable.
PolySeries ps_partial(const PolySeries &p, int i);
/// t^n -> t^(n+1)/(n+1); truncation order rises by one, capped at `max_trunc`.
PolySeries ps_int_t(const PolySeries &p, int max_trunc = kExact);

struct SymTerm;
struct Expression;
/// Even part of a parsed term as a monomial in v; throws ParseError.
EvenMono term_mono(const SymTerm &t, Vars v);
/// Truncation order declared by an `O(..)` marker, kExact if none.
int expression_trunc(const Expression &e, Vars v);

/// Parses `x1^2*x3 - 1/2*t^3 + O(t^5)` style text in the given variable set.
PolySeries parse_series(const std::string &text, Vars v);

}  // namespace exls
