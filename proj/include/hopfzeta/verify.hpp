#ifndef HOPFZETA_VERIFY_HPP
#define HOPFZETA_VERIFY_HPP

#include <string>
#include <vector>

namespace hz {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing, diagnostic otherwise
};

struct VerifyConfig {
    int max_degree = 5;
    long truncation_N = 1000000;
    double tolerance = 1e-4;
};

// Identity suites. Each returns one Check per identity family, all caps
// flowing from the arguments.
std::vector<Check> verify_oracle(int max_total_weight, int num_vars, int max_deg);
std::vector<Check> verify_hopf_qsym(int max_weight);
std::vector<Check> verify_hopf_nsym(int max_weight);
std::vector<Check> verify_hopf_hk(int max_vertices);
std::vector<Check> verify_hopf_hf(int max_vertices);
std::vector<Check> verify_hopf_t(int max_vertices);
std::vector<Check> verify_duality_qsym_nsym(int max_total_weight);
std::vector<Check> verify_duality_t_hk(int max_vertices);
std::vector<Check> verify_mzv_numeric(long N);
std::vector<Check> verify_ohno(int max_weight, int max_i, long N, double tol);
std::vector<Check> verify_tree_identities(int kappa_max, int corolla_max, int phi_star_max,
                                          int diagram_max);
std::vector<Check> verify_multiplicity(int max_total);
std::vector<Check> verify_lyndon(int max_weight);
std::vector<Check> verify_sym_maps(int max_weight);

// Everything above with caps derived from cfg; deterministic order.
std::vector<Check> verify_all(const VerifyConfig& cfg);

// Fixed-format pass/fail table; byte-identical across runs for equal input.
std::string render_report(const std::vector<Check>& checks);

}  // namespace hz

#endif
