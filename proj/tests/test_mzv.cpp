#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopfzeta/mzv.hpp"
#include "hopfzeta/qsym.hpp"

using namespace hz;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr long kN = 100000;
}  // namespace

TEST_CASE("zeta(2) approximates pi^2/6") {
    ZetaValue z = zeta_truncated(Composition({2}), 1000000);
    CHECK(std::fabs(z.value - kPi * kPi / 6.0) < 2e-6);
    CHECK(z.error_estimate < 2e-6);
    CHECK(z.error_estimate >= 0);
}

TEST_CASE("empty composition gives 1") {
    ZetaValue z = zeta_truncated(Composition(), 100);
    CHECK(z.value == 1.0);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(zeta_truncated(Composition({2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(zeta_truncated(Composition({2, 1}), 100), std::domain_error);
}

TEST_CASE("Euler: zeta(2,1) = zeta(3)") {
    ZetaValue a = zeta_truncated(Composition({1, 2}), 1000000);
    ZetaValue b = zeta_truncated(Composition({3}), 1000000);
    CHECK(std::fabs(a.value - b.value) < 1e-4);
}

TEST_CASE("brute-force oracle agrees with the sweep at small N") {
    // direct nested loops for zeta(3,1): composition (1,3)
    const long n = 200;
    double direct = 0;
    for (long i1 = 1; i1 <= n; ++i1)
        for (long i2 = 1; i2 < i1; ++i2)
            direct += 1.0 / (static_cast<double>(i1) * i1 * i1 * i2);
    ZetaValue z = zeta_truncated(Composition({1, 3}), n);
    CHECK(std::fabs(z.value - direct) < 1e-12);
}

TEST_CASE("monotonicity in N for positive series") {
    double prev = 0;
    for (long n : {10L, 100L, 1000L, 10000L}) {
        double v = zeta_truncated(Composition({1, 2}), n).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("linear combinations") {
    LinComb<Composition> euler(Composition({1, 2}));
    euler.add_term(Composition({3}), -1);
    ZetaValue z = zeta_of_lincomb(euler, 1000000);
    CHECK(std::fabs(z.value) < 1e-4);
    CHECK(zeta_of_lincomb(LinComb<Composition>(), kN).value == 0.0);
    LinComb<Composition> bad(Composition({2, 1}));
    CHECK_THROWS_AS(zeta_of_lincomb(bad, kN), std::domain_error);
}

TEST_CASE("word form routes through the same composition path") {
    WordSum ws(Word("xxy"));
    LinComb<Composition> cs(Composition({3}));
    CHECK(zeta_of_lincomb(ws, kN).value == zeta_of_lincomb(cs, kN).value);
}

TEST_CASE("numeric homomorphism property") {
    for (int wa = 2; wa <= 4; ++wa)
        for (const auto& a : compositions_of(wa)) {
            if (!is_admissible(a)) continue;
            for (int wb = 2; wa + wb <= 6 && wb <= 4; ++wb)
                for (const auto& b : compositions_of(wb)) {
                    if (!is_admissible(b)) continue;
                    double prod = zeta_truncated(a, kN).value * zeta_truncated(b, kN).value;
                    double stuffle = zeta_of_lincomb(quasi_shuffle(a, b), kN).value;
                    CHECK(std::fabs(prod - stuffle) < 1e-3);
                }
        }
}

TEST_CASE("verify_relation") {
    LinComb<Composition> euler(Composition({1, 2}));
    euler.add_term(Composition({3}), -1);
    VerifyReport r = verify_relation(euler, 1000000, 1e-4);
    CHECK(r.pass);
    VerifyReport zero = verify_relation(LinComb<Composition>(), kN, 1e-4);
    CHECK(zero.pass);
    CHECK(zero.value == 0.0);
    VerifyReport fail = verify_relation(LinComb<Composition>(Composition({2})), 1000000, 1e-4);
    CHECK_FALSE(fail.pass);
    CHECK(fail.value == doctest::Approx(1.6449).epsilon(1e-3));
}

TEST_CASE("Ohno relation zeta(4) = zeta(3,1) + zeta(2,2)") {
    // h_1 . xxy vs h_1 . tau(xxy), i.e. zeta(4) - zeta(3,1) - zeta(2,2)
    WordSum delta = ohno_action(1, Word("xxy")) - ohno_action(1, tau(Word("xxy")));
    VerifyReport r = verify_relation(delta, 1000000, 1e-4);
    CHECK(r.pass);
}
