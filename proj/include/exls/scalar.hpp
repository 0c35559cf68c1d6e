#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace exls {

/// Exact element of Q(i, sqrt2), stored as a0 + a1*r2 + a2*i + a3*i*r2
/// with r2 = sqrt(2).
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) { c_[0] = v; }  // NOLINT: implicit from integers
    Scalar(const mpq_class &q) { c_[0] = q; c_[0].canonicalize(); }
    Scalar(mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3);

    static Scalar rational(long num, long den);
    static Scalar sqrt2() { return {0, 1, 0, 0}; }
    static Scalar imag() { return {0, 0, 1, 0}; }

    const mpq_class &operator[](int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Exactly one nonzero component.
    bool is_monomial() const;
    /// For a monomial scalar: sign of its single nonzero component.
    int leading_sign() const;

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b);
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    /// Throws std::domain_error("division by zero") on zero.
    Scalar inverse() const;

    /// i -> -i
    Scalar conj_i() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }
    /// r2 -> -r2
    Scalar conj_r2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

    std::string str() const;

private:
    std::array<mpq_class, 4> c_{};
};

Scalar pow(const Scalar &s, unsigned e);

/// Parses the scalar text form (`1/2*r2 - 3*i`). Throws ParseError.
Scalar parse_scalar(const std::string &text);

}  // namespace exls
