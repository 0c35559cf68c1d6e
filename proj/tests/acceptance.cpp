#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "exls/embeddings.hpp"
#include "exls/repn.hpp"
#include "exls/sampling.hpp"
#include "exls/suites.hpp"
#include "exls/tables.hpp"

using namespace exls;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome from(const VerifyReport &r) {
    std::string d = std::to_string(r.passed) + "/" + std::to_string(r.attempted);
    if (r.inconclusive) d += " inconclusive";
    if (!r.failures.empty()) d += "; first failure: " + r.failures.front().inputs;
    return {r.ok(), d};
}

Outcome all_of(const std::vector<VerifyReport> &reps) {
    VerifyReport sum;
    for (const auto &r : reps) sum.absorb(r);
    return from(sum);
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double limit;  // seconds, 0 = none
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "iota table, 6 families x 3 cyclic orders", 1,
         [] {
             TextTable t = make_table("iota");
             int ok = 0;
             for (const auto &row : t.rows) ok += row.back() == "ok";
             return Outcome{t.rows.size() == 18 && ok == 18, std::to_string(ok) + "/18 rows"};
         }},
        {2, "Psi homomorphism on xi_I, t*xi_I against eta_J, exceptional cases n<=3", 30, [] { return from(verify_Psi(0, 1)); }},
        {3, "psi homomorphism, t-degree <= 5 with hand-computed cases", 60, [] { return from(verify_psi(5)); }},
        {4, "d and homotopy operator identities, n in {4,5}, m <= 4", 10, [] { return from(dint_check(4)); }},
        {5, "star = i * sharp on all Grassmann monomials", 0, [] { return from(diesis_check()); }},
        {6, "A-compatibility, commutator cases, closure of the iota image", 0,
         [] { return all_of({propertiesofA_check(3), commutator_check(3), closure_check(3)}); }},
        {7, "super Jacobi and anticommutativity, 500 seeded trials per algebra", 0,
         [] {
             std::vector<VerifyReport> reps;
             bool same = true;
             for (Algebra a : {Algebra::E510, Algebra::E44, Algebra::E16, Algebra::K16}) {
                 VerifyReport r = jacobi_check(a, 500, 20241018);
                 VerifyReport again = jacobi_check(a, 500, 20241018);
                 same = same && r.passed == again.passed && r.note == again.note;
                 reps.push_back(r);
             }
             Outcome o = all_of(reps);
             o.ok = o.ok && same;
             if (!same) o.detail += "; not reproducible";
             return o;
         }},
        {8, "generation by v_r for r = -1..2 at x1-window 3, ad computations", 0,
         [] { return from(prop_generated(3)); }},
        {9, "weights, annihilation and singular-vector absence for r <= 3", 0, [] { return from(theorem_linear_check(3)); }},
        {10, "C[[x1]](V0+V1) subalgebra at window 4, profile 1,6,16,16", 0,
         [] {
             Outcome o = from(corollary_subalgebra_check(4));
             bool dims = iota_principal_dimensions() == std::vector<std::size_t>{1, 6, 16, 16};
             return Outcome{o.ok && dims, o.detail + (dims ? "" : "; dimension profile differs")};
         }},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit == 0 || secs < c.limit;
        bool pass = o.ok && in_time;
        failed += !pass;
        std::string limit = c.limit == 0 ? "" : " < " + std::to_string(static_cast<int>(c.limit)) + "s";
        std::printf("%s criterion %d: %s: %s (%.2fs%s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    limit.c_str(), in_time ? "" : ", too slow");
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
