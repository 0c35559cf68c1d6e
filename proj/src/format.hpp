#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exls/scalar.hpp"

namespace exls::detail {

/// Renders sum of coefficient*monomial pairs as `c1*m1 + c2*m2 - m3`.
/// An empty monomial string means a pure scalar term.
std::string format_sum(const std::vector<std::pair<Scalar, std::string>> &terms);

/// `" + O(x1^5)"`, or empty for exact values.
std::string format_trunc(const std::string &var, int trunc);

}  // namespace exls::detail
