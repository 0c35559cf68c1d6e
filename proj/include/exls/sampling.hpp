#pragma once

#include <cstdint>
#include <string>

#include "exls/report.hpp"

namespace exls {

enum class Algebra { E510, E44, E16, K16 };

/// "e510", "e44", "e16", "k16"; throws std::invalid_argument.
Algebra parse_algebra(const std::string &name);
std::string algebra_name(Algebra a);

/// Super Jacobi on `trials` random parity-homogeneous triples and super
/// anticommutativity on as many pairs. Elements are short sums of basis
/// monomials of polynomial degree at most `window`; same seed, same run.
VerifyReport jacobi_check(Algebra alg, long trials = 500, std::uint64_t seed = 1, int window = 2);

}  // namespace exls
