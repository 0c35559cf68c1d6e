#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exls/report.hpp"

namespace exls {

/// d² = 0, ∫² = 0, d∫ + ∫d = id and the two implications on every monomial
/// of (Ω^k(n))_m, n in {4,5}, 0 < k < n, 1 <= m <= mmax; plus im d = ker d
/// and im ∫ = ker ∫ by rank.
VerifyReport dint_check(int mmax = 4);
/// X* = i X^# on all 64 monomials in both coordinate systems.
VerifyReport diesis_check();
/// The A-compatibility identities on monomial pairs t^nρ_I, t^mρ_J with
/// n, m <= nmax, split by exceptional pairs; A² = id where A ≠ 0, A = 0 on
/// levels 0..2, A injective on levels 3..nmax+6.
VerifyReport propertiesofA_check(int nmax = 3);
/// Both cases of the ι-commutator formula and the [ι(f), ι(tg)] identity.
VerifyReport commutator_check(int nmax = 3);
/// Closure of the ι-image under the bracket (no closure violation), ι
/// preserves the principal degree, degree-one generation identities and
/// the 1, 6, 16, 16 profile.
VerifyReport closure_check(int nmax = 3);

/// Flags shared by all suites; unset windows fall back to each suite's
/// default (or its quick default).
struct SuiteOptions {
    std::uint64_t seed = 1;
    long trials = 500;
    std::optional<int> twindow;
    std::optional<std::pair<int, int>> n;
    bool quick = false;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string> &suite_names();
/// Throws std::invalid_argument on an unknown suite and std::out_of_range
/// when a window is outside what the suite supports.
VerifyReport run_suite(const std::string &name, const SuiteOptions &opt = {});
/// Every suite in order at default windows (twindow and n are ignored).
std::vector<VerifyReport> run_all(const SuiteOptions &opt = {});

}  // namespace exls
