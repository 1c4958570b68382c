#ifndef HOPFZETA_MZV_HPP
#define HOPFZETA_MZV_HPP

#include "hopfzeta/composition.hpp"
#include "hopfzeta/lincomb.hpp"
#include "hopfzeta/words.hpp"

namespace hz {

struct ZetaValue {
    double value = 0.0;
    double error_estimate = 0.0;  // |value(N) - value(N/2)|
    long truncation_N = 2;
};

struct VerifyReport {
    bool pass = false;
    double value = 0.0;
    double error_estimate = 0.0;
    long truncation_N = 2;
};

// Truncated nested sum over N >= i1 > ... > ik >= 1; i1 carries the last
// part of I, so zeta of M_{p1...pk} is zeta(p_k,...,p_1). Requires an
// admissible composition; the empty composition gives 1.
ZetaValue zeta_truncated(const Composition& I, long N);

// Linear extension; throws on any non-admissible term, naming it.
ZetaValue zeta_of_lincomb(const LinComb<Composition>& a, long N);
ZetaValue zeta_of_lincomb(const WordSum& a, long N);

// pass iff |value| <= max(tol, 3 * error_estimate).
VerifyReport verify_relation(const LinComb<Composition>& a, long N, double tol);
VerifyReport verify_relation(const WordSum& a, long N, double tol);

}  // namespace hz

#endif
