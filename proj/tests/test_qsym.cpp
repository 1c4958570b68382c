#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfzeta/qsym.hpp"

using namespace hz;

namespace {
Composition C(std::vector<int> v) { return Composition(std::move(v)); }
}  // namespace

TEST_CASE("series expansion of monomial quasi-symmetric functions") {
    // M_(1) in 2 vars at degree 1: t1 + t2
    TruncatedPoly p = expand_truncated(C({1}), 2, 1);
    CHECK(p.terms().size() == 2);
    CHECK(p.coefficient({1, 0}) == 1);
    CHECK(p.coefficient({0, 1}) == 1);
    // M_(1,2) in 2 vars at degree 3: t1*t2^2 only
    TruncatedPoly q = expand_truncated(C({1, 2}), 2, 3);
    CHECK(q.terms().size() == 1);
    CHECK(q.coefficient({1, 2}) == 1);
    // M_(2) in 3 vars: t1^2+t2^2+t3^2
    TruncatedPoly r = expand_truncated(C({2}), 3, 2);
    CHECK(r.terms().size() == 3);
    CHECK(r.coefficient({0, 2, 0}) == 1);
}

TEST_CASE("quasi-symmetry test on expansions") {
    CHECK(is_quasi_symmetric(expand_truncated(C({1, 2}), 3, 3)));
    // t1*t2^2 alone is not quasi-symmetric in 3 variables
    TruncatedPoly p(3, 3);
    p.add_term({1, 2, 0}, 1);
    CHECK_FALSE(is_quasi_symmetric(p));
    QSymElement sym(C({1, 2}));
    sym.add_term(C({2, 1}), 1);
    CHECK(is_quasi_symmetric(expand_truncated(sym, 3, 3)));
    CHECK(is_symmetric(sym));
}

TEST_CASE("quasi-shuffle product") {
    // M1 * M1 = 2 M11 + M2
    QSymElement p = quasi_shuffle(C({1}), C({1}));
    CHECK(p.coefficient(C({1, 1})) == 2);
    CHECK(p.coefficient(C({2})) == 1);
    CHECK(p.size() == 2);
    // M2 * M2 = 2 M22 + M4
    QSymElement q = quasi_shuffle(C({2}), C({2}));
    CHECK(q.coefficient(C({2, 2})) == 2);
    CHECK(q.coefficient(C({4})) == 1);
    // unit
    CHECK(quasi_shuffle(C({}), C({3, 1})) == QSymElement(C({3, 1})));
}

TEST_CASE("product matches the series oracle") {
    for (int wa = 1; wa <= 3; ++wa)
        for (const auto& a : compositions_of(wa))
            for (int wb = 1; wb + wa <= 5; ++wb)
                for (const auto& b : compositions_of(wb)) {
                    TruncatedPoly lhs = expand_truncated(quasi_shuffle(a, b), 8, 10);
                    TruncatedPoly rhs =
                        expand_truncated(a, 8, 10) * expand_truncated(b, 8, 10);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("deconcatenation coproduct") {
    auto d = qsym_coproduct(C({2, 1}));
    CHECK(d.size() == 3);
    CHECK(d.coefficient({C({}), C({2, 1})}) == 1);
    CHECK(d.coefficient({C({2}), C({1})}) == 1);
    CHECK(d.coefficient({C({2, 1}), C({})}) == 1);
    // power sums primitive
    auto d3 = qsym_coproduct(C({3}));
    CHECK(d3.size() == 2);
    // divided powers
    auto d11 = qsym_coproduct(C({1, 1}));
    CHECK(d11.coefficient({C({1}), C({1})}) == 1);
}

TEST_CASE("antipode") {
    CHECK(qsym_antipode(QSymElement(C({}))) == QSymElement(C({})));
    CHECK(qsym_antipode(QSymElement(C({1}))) == QSymElement(C({1})) * Rational(-1));
    // convolution identity pins S(M_11) = M_11 + M_2
    QSymElement s11 = qsym_antipode(QSymElement(C({1, 1})));
    CHECK(s11.coefficient(C({1, 1})) == 1);
    CHECK(s11.coefficient(C({2})) == 1);
    // (S * id)(M_I) = 0 for all I of weight <= 5
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : compositions_of(n)) {
            QSymElement conv;
            for (const auto& [pq, c] : qsym_coproduct(I))
                conv += c * qsym_mul(qsym_antipode(QSymElement(pq.first)), QSymElement(pq.second));
            CHECK(conv.is_zero());
        }
}

TEST_CASE("sym_to_qsym") {
    CHECK(sym_to_qsym(sym_m(Partition({1, 1}))) == QSymElement(C({1, 1})));
    QSymElement m21 = sym_to_qsym(sym_m(Partition({2, 1})));
    CHECK(m21.coefficient(C({2, 1})) == 1);
    CHECK(m21.coefficient(C({1, 2})) == 1);
    CHECK(m21.size() == 2);
    QSymElement h2 = sym_to_qsym(sym_h(2));
    CHECK(h2.coefficient(C({2})) == 1);
    CHECK(h2.coefficient(C({1, 1})) == 1);
    CHECK(sym_to_qsym(sym_p(3)) == QSymElement(C({3})));
    QSymElement e3 = sym_to_qsym(sym_e(3));
    CHECK(e3 == QSymElement(C({1, 1, 1})));
    CHECK_FALSE(is_symmetric(QSymElement(C({1, 2}))));
    CHECK(is_symmetric(QSymElement(C({}))));
}

TEST_CASE("nsym concatenation product and divided-powers coproduct") {
    NSymElement s2(C({2})), s1(C({1}));
    CHECK(nsym_mul(s2, s1) == NSymElement(C({2, 1})));
    CHECK(nsym_mul(s1, s2) == NSymElement(C({1, 2})));
    CHECK_FALSE(nsym_mul(s2, s1) == nsym_mul(s1, s2));
    // Delta(e_2) = e_0 (x) e_2 + e_1 (x) e_1 + e_2 (x) e_0
    auto de2 = nsym_coproduct(nsym_e(2));
    LinComb<CompPair> expect;
    for (int i = 0; i <= 2; ++i) {
        NSymElement l = (i == 0) ? NSymElement(C({})) : nsym_e(i);
        NSymElement r = (i == 2) ? NSymElement(C({})) : nsym_e(2 - i);
        expect += tensor(l, r);
    }
    CHECK(de2 == expect);
    // e_1 e_1 = S_11
    CHECK(nsym_mul(nsym_e(1), nsym_e(1)) == NSymElement(C({1, 1})));
}

TEST_CASE("duality pairing") {
    CHECK(pair_qsym_nsym(QSymElement(C({2, 1})), NSymElement(C({2, 1}))) == 1);
    CHECK(pair_qsym_nsym(QSymElement(C({2, 1})), NSymElement(C({1, 2}))) == 0);
    // <M1 M1, S11> = 2 = <M1 (x) M1, Delta S11>
    Rational lhs = pair_qsym_nsym(qsym_mul(QSymElement(C({1})), QSymElement(C({1}))),
                                  NSymElement(C({1, 1})));
    CHECK(lhs == 2);
    Rational rhs = 0;
    for (const auto& [pq, c] : nsym_coproduct(NSymElement(C({1, 1}))))
        if (pq.first == C({1}) && pq.second == C({1})) rhs += c;
    CHECK(rhs == 2);
}

TEST_CASE("abelianization") {
    // e_2 e_1 and e_1 e_2 both go to e_(2,1)
    SymElement a = abelianize(nsym_mul(nsym_e(2), nsym_e(1)));
    SymElement b = abelianize(nsym_mul(nsym_e(1), nsym_e(2)));
    CHECK(a == b);
    CHECK(a.basis == SymBasis::e);
    CHECK(a.value.coefficient(Partition({2, 1})) == 1);
    CHECK(a.value.size() == 1);
    // S_2 -> e_11 - e_2 (= h_2 in the e basis)
    SymElement s2 = abelianize(NSymElement(C({2})));
    CHECK(s2.value.coefficient(Partition({1, 1})) == 1);
    CHECK(s2.value.coefficient(Partition({2})) == -1);
}

TEST_CASE("sym basis conversion") {
    SymElement h2e = sym_basis_convert(sym_h(2), SymBasis::e);
    CHECK(h2e.value.coefficient(Partition({1, 1})) == 1);
    CHECK(h2e.value.coefficient(Partition({2})) == -1);
    SymElement p2e = sym_basis_convert(sym_p(2), SymBasis::e);
    CHECK(p2e.value.coefficient(Partition({1, 1})) == 1);
    CHECK(p2e.value.coefficient(Partition({2})) == -2);
    // degree 1 all coincide
    for (SymBasis b : {SymBasis::e, SymBasis::h, SymBasis::p}) {
        SymElement one = sym_basis_convert(sym_m(Partition({1})), b);
        CHECK(one.value.coefficient(Partition({1})) == 1);
        CHECK(one.value.size() == 1);
    }
    // round trips up to weight 5
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (SymBasis from : {SymBasis::m, SymBasis::e, SymBasis::h, SymBasis::p})
                for (SymBasis to : {SymBasis::m, SymBasis::e, SymBasis::h, SymBasis::p}) {
                    SymElement s{LinComb<Partition>(lam), from};
                    CHECK(sym_basis_convert(sym_basis_convert(s, to), from) == s);
                }
}
