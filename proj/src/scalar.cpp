#include "exls/scalar.hpp"

#include <sstream>
#include <stdexcept>

#include "exls/errors.hpp"
#include "exls/parse.hpp"

namespace exls {

Scalar::Scalar(mpq_class a0, mpq_class a1, mpq_class a2, mpq_class a3)
    : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {
    for (auto &c : c_) c.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

bool Scalar::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_one() const {
    return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_monomial() const {
    int n = 0;
    for (const auto &c : c_) n += sgn(c) != 0;
    return n == 1;
}

int Scalar::leading_sign() const {
    for (const auto &c : c_)
        if (sgn(c) != 0) return sgn(c);
    return 0;
}

Scalar Scalar::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Scalar &Scalar::operator+=(const Scalar &o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    if (o.is_rational()) {
        if (o.c_[0] == 1) return *this;
        for (auto &c : c_) c *= o.c_[0];
        return *this;
    }
    const auto &a = c_;
    const auto &b = o.c_;
    // r2^2 = 2, i^2 = -1, (i r2)^2 = -2
    mpq_class r0 = a[0] * b[0] + 2 * a[1] * b[1] - a[2] * b[2] - 2 * a[3] * b[3];
    mpq_class r1 = a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2];
    mpq_class r2 = a[0] * b[2] + a[2] * b[0] + 2 * a[1] * b[3] + 2 * a[3] * b[1];
    mpq_class r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
    return *this;
}

bool operator==(const Scalar &a, const Scalar &b) {
    for (int k = 0; k < 4; ++k)
        if (a.c_[k] != b.c_[k]) return false;
    return true;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Scalar(mpq_class(1) / c_[0]);
    // a = u + v i with u, v in Q(r2); 1/a = (u - v i) / (u^2 + v^2)
    mpq_class p = c_[0] * c_[0] + 2 * c_[1] * c_[1] + c_[2] * c_[2] + 2 * c_[3] * c_[3];
    mpq_class q = 2 * c_[0] * c_[1] + 2 * c_[2] * c_[3];
    mpq_class den = p * p - 2 * q * q;
    Scalar norm_inv(p / den, -q / den, 0, 0);
    return conj_i() * norm_inv;
}

Scalar pow(const Scalar &s, unsigned e) {
    Scalar r(1);
    for (unsigned k = 0; k < e; ++k) r *= s;
    return r;
}

namespace {

void append_component(std::ostringstream &os, bool first, const mpq_class &c, const char *unit) {
    mpq_class mag = abs(c);
    if (first) {
        if (sgn(c) < 0) os << '-';
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (*unit == '\0') {
        os << mag.get_str();
    } else if (mag == 1) {
        os << unit;
    } else {
        os << mag.get_str() << '*' << unit;
    }
}

}  // namespace

std::string Scalar::str() const {
    static const char *units[4] = {"", "r2", "i", "i*r2"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (sgn(c_[k]) == 0) continue;
        append_component(os, first, c_[k], units[k]);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

Scalar parse_scalar(const std::string &text) {
    Expression e = parse_expression(text);
    Scalar out;
    for (const auto &t : e.terms) {
        if (!t.even.empty() || !t.odd.empty() || !t.derivation.empty())
            throw ParseError("unexpected symbol in scalar", t.position);
        out += t.coeff;
    }
    if (e.trunc_var) throw ParseError("truncation marker in scalar", 0);
    return out;
}

}  // namespace exls
