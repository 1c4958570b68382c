#include "hopfzeta/mzv.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hz {

namespace {

struct TwoLevel {
    double at_n = 0.0;
    double at_half = 0.0;
};

// One dynamic-programming sweep. Level j keeps the running prefix sum of
// 1/m^{p_j} times the previous level's prefix at m-1; the top level's prefix
// at N/2 is exactly the truncation at N/2, since i1 bounds all inner indices.
TwoLevel zeta_sweep(const std::vector<int>& parts, long N) {
    const size_t k = parts.size();
    if (k == 0) return {1.0, 1.0};
    std::vector<double> prefix(k, 0.0);  // prefix[j] = P_{j+1}(m) as m advances
    const long half = N / 2;
    double at_half = 0.0;
    for (long m = 1; m <= N; ++m) {
        const double inv = 1.0 / static_cast<double>(m);
        // update from the top down so prefix[j-1] still holds P_j(m-1)
        for (size_t j = k; j-- > 0;) {
            double pw = 1.0;
            for (int q = 0; q < parts[j]; ++q) pw *= inv;
            double below = (j == 0) ? 1.0 : prefix[j - 1];
            prefix[j] += pw * below;
        }
        if (m == half) at_half = prefix[k - 1];
    }
    return {prefix[k - 1], at_half};
}

const TwoLevel& zeta_cached(const Composition& I, long N) {
    static std::map<std::pair<Composition, long>, TwoLevel> cache;
    auto key = std::make_pair(I, N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, zeta_sweep(I.parts, N)).first->second;
}

}  // namespace

ZetaValue zeta_truncated(const Composition& I, long N) {
    if (N < 2) throw std::invalid_argument("zeta_truncated: need N >= 2");
    if (!is_admissible(I))
        throw std::domain_error("zeta_truncated: divergent series, composition " + to_string(I) +
                                " is not admissible");
    TwoLevel t = zeta_cached(I, N);
    return {t.at_n, std::fabs(t.at_n - t.at_half), N};
}

ZetaValue zeta_of_lincomb(const LinComb<Composition>& a, long N) {
    if (N < 2) throw std::invalid_argument("zeta_of_lincomb: need N >= 2");
    for (const auto& [I, c] : a.terms())
        if (!is_admissible(I))
            throw std::domain_error("zeta_of_lincomb: divergent term M(" + to_string(I) + ")");
    double value = 0.0, err = 0.0;
    for (const auto& [I, c] : a.terms()) {
        double cd = static_cast<double>(numerator(c)) / static_cast<double>(denominator(c));
        ZetaValue z = zeta_truncated(I, N);
        value += cd * z.value;
        err += std::fabs(cd) * z.error_estimate;
    }
    return {value, err, N};
}

ZetaValue zeta_of_lincomb(const WordSum& a, long N) {
    LinComb<Composition> comps;
    for (const auto& [w, c] : a.terms()) {
        if (!w.is_admissible())
            throw std::domain_error("zeta_of_lincomb: divergent term W(" + w.letters + ")");
        comps.add_term(word_to_comp(w), c);
    }
    return zeta_of_lincomb(comps, N);
}

namespace {

VerifyReport make_report(const ZetaValue& z, double tol) {
    VerifyReport r;
    r.value = z.value;
    r.error_estimate = z.error_estimate;
    r.truncation_N = z.truncation_N;
    r.pass = std::fabs(z.value) <= std::max(tol, 3.0 * z.error_estimate);
    return r;
}

}  // namespace

VerifyReport verify_relation(const LinComb<Composition>& a, long N, double tol) {
    return make_report(zeta_of_lincomb(a, N), tol);
}

VerifyReport verify_relation(const WordSum& a, long N, double tol) {
    return make_report(zeta_of_lincomb(a, N), tol);
}

}  // namespace hz
