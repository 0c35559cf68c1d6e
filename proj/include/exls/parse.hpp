#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exls/scalar.hpp"

namespace exls {

/// One product term of a parsed expression, before it is given meaning by
/// a particular algebra. Odd factors (dx_k, dt, xi/eta/rho) keep their order;
/// `d23` is expanded to dx2, dx3.
struct SymTerm {
    Scalar coeff{1};
    std::map<std::string, int> even;  // "t", "x1".."x5" -> exponent
    std::vector<std::string> odd;     // "dx2", "dt", "xi3", "eta4", "rho1", ...
    std::string derivation;           // "", "D1".."D5", "Dt"
    std::size_t position = 0;
};

struct Truncation {
    std::string var;
    int order = 0;
};

struct Expression {
    std::vector<SymTerm> terms;
    std::optional<Truncation> trunc_var;  // from an `O(t^5)` marker
};

/// Parses sums of `*`-products of numbers (`3`, `1/2`), `r2`, `i`, even
/// variables with optional `^n`, odd tokens, one derivation token, and
/// parenthesised subexpressions. Throws ParseError with a byte position.
Expression parse_expression(const std::string &text);

}  // namespace exls
