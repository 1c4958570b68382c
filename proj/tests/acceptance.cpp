// Acceptance gate: eight criteria, one line each, exit 0 iff all pass.
#include <cmath>
#include <cstdio>

#include "hopfzeta/mzv.hpp"
#include "hopfzeta/verify.hpp"

using namespace hz;

namespace {

int failures = 0;

void report(const char* name, bool pass, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", pass ? "PASS" : "FAIL", name,
                (!pass && !detail.empty()) ? "  " : "",
                (!pass && !detail.empty()) ? detail.c_str() : "");
    std::fflush(stdout);
    if (!pass) ++failures;
}

bool all_pass(const std::vector<Check>& checks, std::string& detail) {
    for (const auto& c : checks)
        if (!c.pass) {
            detail = c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
            return false;
        }
    return true;
}

}  // namespace

int main() {
    std::string d;
    const long N = 1000000;

    report("1. oracle equivalence (quasi-shuffle vs series, weight <= 5)",
           all_pass(verify_oracle(5, 8, 10), d), d);

    {
        std::vector<Check> checks;
        auto append = [&](std::vector<Check> v) {
            checks.insert(checks.end(), v.begin(), v.end());
        };
        append(verify_hopf_qsym(6));
        append(verify_hopf_nsym(5));
        append(verify_hopf_hk(6));
        append(verify_hopf_hf(6));
        append(verify_hopf_t(6));
        report("2. Hopf axiom suites (QSym<=6, NSym<=5, H_K/H_F/T<=6 vertices)",
               all_pass(checks, d), d);
    }

    {
        std::vector<Check> checks = verify_duality_qsym_nsym(5);
        auto more = verify_duality_t_hk(5);
        checks.insert(checks.end(), more.begin(), more.end());
        report("3. duality adjointness (QSym/NSym weight <= 5, T/H_K <= 5 vertices)",
               all_pass(checks, d), d);
    }

    report("4. numeric zeta values at N = 10^6 (pi^2/6, Euler, double shuffle)",
           all_pass(verify_mzv_numeric(N), d), d);

    report("5. Ohno identities (admissible words of weight <= 5, i <= 2)",
           all_pass(verify_ohno(5, 2, N, 1e-3), d), d);

    report("6. tree identities (kappa<=5, corolla<=5, phi*<=4, diagram<=5)",
           all_pass(verify_tree_identities(5, 5, 4, 5), d), d);

    report("7. multiplicity formula and positivity (degree <= 6)",
           all_pass(verify_multiplicity(6), d), d);

    {
        VerifyConfig cfg;
        cfg.max_degree = 3;
        cfg.truncation_N = N;
        std::string r1 = render_report(verify_all(cfg));
        std::string r2 = render_report(verify_all(cfg));
        report("8. determinism (identical reports on repeated runs)", r1 == r2 && !r1.empty());
    }

    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
