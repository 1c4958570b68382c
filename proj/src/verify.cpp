#include "hopfzeta/verify.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

#include "hopfzeta/element.hpp"
#include "hopfzeta/hopf_trees.hpp"
#include "hopfzeta/linalg.hpp"
#include "hopfzeta/mzv.hpp"
#include "hopfzeta/qsym.hpp"
#include "hopfzeta/trees.hpp"
#include "hopfzeta/words.hpp"

namespace hz {

namespace {

// Coassociativity, counit and antipode-convolution checks for one graded
// connected Hopf algebra, given its structure maps and a basis sample.
template <typename B, typename Cop, typename Mul, typename Anti>
std::vector<Check> hopf_checks(const std::string& tag, const std::vector<B>& basis, const B& unit,
                               Cop&& cop, Mul&& mul, Anti&& anti) {
    using Triple = LinComb<std::tuple<B, B, B>>;
    Check coassoc{tag + ": coassociativity", true, ""};
    Check counit{tag + ": counit", true, ""};
    Check antipode{tag + ": antipode convolution", true, ""};
    for (const auto& b : basis) {
        auto d = cop(b);
        Triple lhs, rhs;
        for (const auto& [pq, c] : d.terms()) {
            for (const auto& [rs, c2] : cop(pq.first))
                lhs.add_term({rs.first, rs.second, pq.second}, c * c2);
            for (const auto& [rs, c2] : cop(pq.second))
                rhs.add_term({pq.first, rs.first, rs.second}, c * c2);
        }
        if (!(lhs == rhs) && coassoc.pass) {
            coassoc.pass = false;
            coassoc.detail = "fails on a basis element of grade-size " + std::to_string(basis.size());
        }
        // (eps (x) id) Delta = id
        LinComb<B> left;
        for (const auto& [pq, c] : d.terms())
            if (pq.first == unit) left.add_term(pq.second, c);
        if (!(left == LinComb<B>(b)) && counit.pass) {
            counit.pass = false;
            counit.detail = "counit law fails";
        }
        // sum S(b') b'' = eps(b) * unit
        LinComb<B> conv;
        for (const auto& [pq, c] : d.terms())
            conv += c * mul(anti(LinComb<B>(pq.first)), LinComb<B>(pq.second));
        LinComb<B> expect;
        if (b == unit) expect.add_term(unit, 1);
        if (!(conv == expect) && antipode.pass) {
            antipode.pass = false;
            antipode.detail = "S * id != unit . counit";
        }
    }
    return {coassoc, counit, antipode};
}

double rat_to_double(const Rational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace

std::vector<Check> verify_lyndon(int max_weight) {
    Check counts{"lyndon: enumeration matches rotation oracle", true, ""};
    for (int n = 1; n <= max_weight; ++n) {
        size_t oracle = 0;
        for (const auto& c : compositions_of(n)) {
            // brute-force: strictly smaller than every nontrivial rotation
            bool lyn = !c.empty();
            for (int r = 1; r < c.length() && lyn; ++r) {
                std::vector<int> rot(c.parts.begin() + r, c.parts.end());
                rot.insert(rot.end(), c.parts.begin(), c.parts.begin() + r);
                if (!std::lexicographical_compare(c.parts.begin(), c.parts.end(), rot.begin(),
                                                  rot.end()))
                    lyn = false;
            }
            if (lyn) ++oracle;
        }
        size_t got = 0;
        for (const auto& c : lyndon_words(max_weight))
            if (c.weight() == n) ++got;
        if (got != oracle) {
            counts.pass = false;
            counts.detail = "weight " + std::to_string(n) + ": " + std::to_string(got) + " vs " +
                            std::to_string(oracle);
            break;
        }
    }

    Check freeness{"lyndon: products of Lyndon monomials are independent", true, ""};
    {
        // all multisets of Lyndon compositions with total weight <= 4
        auto lw = lyndon_words(4);
        std::vector<QSymElement> products;
        std::vector<int> weights;
        std::vector<size_t> stack;
        auto rec = [&](auto&& self, size_t start, int rem, const QSymElement& acc) -> void {
            products.push_back(acc);
            weights.push_back(4 - rem);
            for (size_t i = start; i < lw.size(); ++i) {
                if (lw[i].weight() > rem) continue;
                self(self, i, rem - lw[i].weight(), qsym_mul(acc, QSymElement(lw[i])));
            }
        };
        rec(rec, 0, 4, QSymElement(Composition()));
        for (int w = 0; w <= 4; ++w) {
            std::vector<Composition> comps = compositions_of(w);
            Matrix mat;
            for (size_t i = 0; i < products.size(); ++i) {
                if (weights[i] != w) continue;
                std::vector<Rational> row;
                for (const auto& c : comps) row.push_back(products[i].coefficient(c));
                mat.push_back(std::move(row));
            }
            if (!mat.empty() && rank(mat) != mat.size()) {
                freeness.pass = false;
                freeness.detail = "rank deficiency at weight " + std::to_string(w);
            }
        }
    }
    return {counts, freeness};
}

std::vector<Check> verify_oracle(int max_total_weight, int num_vars, int max_deg) {
    Check c{"qsym: quasi-shuffle matches series product", true, ""};
    for (int wa = 0; wa <= max_total_weight && c.pass; ++wa)
        for (const auto& a : compositions_of(wa)) {
            for (int wb = 0; wb + wa <= max_total_weight && c.pass; ++wb)
                for (const auto& b : compositions_of(wb)) {
                    TruncatedPoly lhs =
                        expand_truncated(quasi_shuffle(a, b), num_vars, max_deg);
                    TruncatedPoly rhs = expand_truncated(a, num_vars, max_deg) *
                                        expand_truncated(b, num_vars, max_deg);
                    if (!(lhs == rhs)) {
                        c.pass = false;
                        c.detail = "M(" + to_string(a) + ") * M(" + to_string(b) + ")";
                        break;
                    }
                }
            if (!c.pass) break;
        }
    return {c};
}

std::vector<Check> verify_hopf_qsym(int max_weight) {
    std::vector<Composition> basis;
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& c : compositions_of(n)) basis.push_back(c);
    return hopf_checks(
        "qsym", basis, Composition(),
        [](const Composition& I) { return qsym_coproduct(I); },
        [](const QSymElement& a, const QSymElement& b) { return qsym_mul(a, b); },
        [](const QSymElement& a) { return qsym_antipode(a); });
}

std::vector<Check> verify_hopf_nsym(int max_weight) {
    std::vector<Composition> basis;
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& c : compositions_of(n)) basis.push_back(c);
    return hopf_checks(
        "nsym", basis, Composition(),
        [](const Composition& I) { return nsym_coproduct(NSymElement(I)); },
        [](const NSymElement& a, const NSymElement& b) { return nsym_mul(a, b); },
        [](const NSymElement& a) { return nsym_antipode(a); });
}

std::vector<Check> verify_hopf_hk(int max_vertices) {
    std::vector<Forest> basis;
    for (int n = 0; n <= max_vertices; ++n)
        for (const auto& f : enumerate_forests(n)) basis.push_back(f);
    return hopf_checks(
        "hk", basis, Forest(),
        [](const Forest& f) { return hk_coproduct(f); },
        [](const HKElement& a, const HKElement& b) { return hk_mul(a, b); },
        [](const HKElement& a) { return hk_antipode(a); });
}

std::vector<Check> verify_hopf_hf(int max_vertices) {
    std::vector<PlanarForest> basis;
    for (int n = 0; n <= max_vertices; ++n)
        for (const auto& f : enumerate_planar_forests(n)) basis.push_back(f);
    return hopf_checks(
        "hf", basis, PlanarForest(),
        [](const PlanarForest& f) { return hf_coproduct(f); },
        [](const HFElement& a, const HFElement& b) { return hf_mul(a, b); },
        [](const HFElement& a) { return hf_antipode(a); });
}

std::vector<Check> verify_hopf_t(int max_vertices) {
    std::vector<RootedTree> basis;
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& t : enumerate_trees(n)) basis.push_back(t);
    auto checks = hopf_checks(
        "t", basis, RootedTree(),
        [](const RootedTree& t) { return gl_coproduct(t); },
        [](const TElement& a, const TElement& b) { return gl_mul(a, b); },
        [](const TElement& a) { return gl_antipode(a); });
    Check assoc{"t: Grossman-Larson associativity and unit", true, ""};
    for (const auto& a : basis) {
        if (a.degree() > 2) continue;
        for (const auto& b : basis) {
            if (a.degree() + b.degree() > 4) continue;
            for (const auto& c : basis) {
                if (a.degree() + b.degree() + c.degree() > 4) continue;
                TElement lhs = gl_mul(gl_product(a, b), TElement(c));
                TElement rhs = gl_mul(TElement(a), gl_product(b, c));
                if (!(lhs == rhs)) {
                    assoc.pass = false;
                    assoc.detail = a.encoding() + " o " + b.encoding() + " o " + c.encoding();
                }
            }
        }
        TElement unit{RootedTree()};
        if (!(gl_mul(unit, TElement(a)) == TElement(a)) ||
            !(gl_mul(TElement(a), unit) == TElement(a))) {
            assoc.pass = false;
            assoc.detail = "unit law fails on " + a.encoding();
        }
    }
    checks.push_back(assoc);
    return checks;
}

std::vector<Check> verify_duality_qsym_nsym(int max_total_weight) {
    Check mul_adj{"duality: <ab,c> = <a(x)b, Delta c>", true, ""};
    Check cop_adj{"duality: <Delta a, b(x)c> = <a, bc>", true, ""};
    std::vector<Composition> all;
    for (int n = 0; n <= max_total_weight; ++n)
        for (const auto& c : compositions_of(n)) all.push_back(c);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.weight() + b.weight() > max_total_weight) continue;
            for (const auto& c : all) {
                if (c.weight() != a.weight() + b.weight()) continue;
                // <M_a M_b, S_c> vs sum over Delta(S_c)
                Rational lhs = qsym_mul(QSymElement(a), QSymElement(b)).coefficient(c);
                Rational rhs = 0;
                for (const auto& [pq, cc] : nsym_coproduct(NSymElement(c)))
                    if (pq.first == a && pq.second == b) rhs += cc;
                if (lhs != rhs) {
                    mul_adj.pass = false;
                    mul_adj.detail = to_string(a) + "," + to_string(b) + "," + to_string(c);
                }
                // <Delta M_c, S_a (x) S_b> vs <M_c, S_a S_b>
                Rational l2 = 0;
                for (const auto& [pq, cc] : qsym_coproduct(c))
                    if (pq.first == a && pq.second == b) l2 += cc;
                Rational r2 = nsym_mul(NSymElement(a), NSymElement(b)).coefficient(c);
                if (l2 != r2) {
                    cop_adj.pass = false;
                    cop_adj.detail = to_string(a) + "," + to_string(b) + "," + to_string(c);
                }
            }
        }
    return {mul_adj, cop_adj};
}

std::vector<Check> verify_duality_t_hk(int max_vertices) {
    Check mul_adj{"t-hk: <t1 o t2, f> = <t1 (x) t2, Delta_K f>", true, ""};
    Check cop_adj{"t-hk: <Delta_T t, f1 (x) f2> = <t, f1 f2>", true, ""};
    std::vector<RootedTree> trees;
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& t : enumerate_trees(n)) trees.push_back(t);
    for (const auto& t1 : trees)
        for (const auto& t2 : trees) {
            int deg = t1.degree() + t2.degree();
            if (deg > max_vertices) continue;
            for (const auto& f : enumerate_forests(deg)) {
                Rational lhs = pair_T_HK(gl_product(t1, t2), HKElement(f));
                Rational rhs = 0;
                for (const auto& [pq, c] : hk_coproduct(f))
                    rhs += c * pair_T_HK(t1, pq.first) * pair_T_HK(t2, pq.second);
                if (lhs != rhs) {
                    mul_adj.pass = false;
                    mul_adj.detail = t1.encoding() + " o " + t2.encoding() + " vs " + to_string(f);
                }
            }
        }
    for (const auto& t : trees) {
        if (t.degree() > max_vertices) continue;
        for (int n1 = 0; n1 <= t.degree(); ++n1)
            for (const auto& f1 : enumerate_forests(n1))
                for (const auto& f2 : enumerate_forests(t.degree() - n1)) {
                    Rational lhs = 0;
                    for (const auto& [pq, c] : gl_coproduct(t))
                        lhs += c * pair_T_HK(pq.first, f1) * pair_T_HK(pq.second, f2);
                    std::vector<RootedTree> merged = f1.trees();
                    merged.insert(merged.end(), f2.trees().begin(), f2.trees().end());
                    Rational rhs = pair_T_HK(t, Forest(merged));
                    if (lhs != rhs) {
                        cop_adj.pass = false;
                        cop_adj.detail = t.encoding() + " vs " + to_string(f1) + " | " +
                                         to_string(f2);
                    }
                }
    }
    return {mul_adj, cop_adj};
}

std::vector<Check> verify_mzv_numeric(long N) {
    std::vector<Check> out;
    const double pi = 3.14159265358979323846;
    ZetaValue z2 = zeta_truncated(Composition({2}), N);
    out.push_back({"mzv: zeta(2) = pi^2/6",
                   std::fabs(z2.value - pi * pi / 6.0) < 2e-6,
                   "defect " + std::to_string(std::fabs(z2.value - pi * pi / 6.0))});
    ZetaValue z21 = zeta_truncated(Composition({1, 2}), N);
    ZetaValue z3 = zeta_truncated(Composition({3}), N);
    out.push_back({"mzv: Euler zeta(2,1) = zeta(3)",
                   std::fabs(z21.value - z3.value) < 1e-4,
                   "defect " + std::to_string(std::fabs(z21.value - z3.value))});
    // zeta(2)^2 via stuffle and via shuffle
    LinComb<Composition> stuffle = quasi_shuffle(Composition({2}), Composition({2}));
    WordSum shuf = shuffle(comp_to_word(Composition({2})), comp_to_word(Composition({2})));
    double a = zeta_of_lincomb(stuffle, N).value;
    double b = zeta_of_lincomb(shuf, N).value;
    out.push_back({"mzv: double shuffle for zeta(2)^2",
                   std::fabs(a - b) < 1e-4, "defect " + std::to_string(std::fabs(a - b))});
    for (auto& c : out)
        if (c.pass) c.detail.clear();
    return out;
}

std::vector<Check> verify_ohno(int max_weight, int max_i, long N, double tol) {
    Check c{"ohno: zeta(h_i . w) = zeta(h_i . tau(w))", true, ""};
    for (int w = 2; w <= max_weight; ++w)
        for (const auto& I : compositions_of(w)) {
            if (!is_admissible(I)) continue;
            Word word = comp_to_word(I);
            for (int i = 0; i <= max_i; ++i) {
                WordSum delta = ohno_action(i, word) - ohno_action(i, tau(word));
                VerifyReport r = verify_relation(delta, N, tol);
                if (!r.pass) {
                    c.pass = false;
                    c.detail = "w=" + word.letters + " i=" + std::to_string(i) +
                               " defect=" + std::to_string(r.value);
                }
            }
        }
    return {c};
}

std::vector<Check> verify_tree_identities(int kappa_max, int corolla_max, int phi_star_max,
                                          int diagram_max) {
    std::vector<Check> out;
    {
        Check c{"trees: ladders are divided powers in H_K", true, ""};
        for (int n = 1; n <= kappa_max + 1; ++n) {
            LinComb<ForestPair> expect;
            for (int i = 0; i <= n; ++i) {
                Forest l = (i == 0) ? Forest() : Forest({ladder(i)});
                Forest r = (i == n) ? Forest() : Forest({ladder(n - i)});
                expect.add_term({l, r}, 1);
            }
            if (!(hk_coproduct(Forest({ladder(n)})) == expect)) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n);
            }
        }
        out.push_back(c);
    }
    {
        Check c{"trees: kappa_n are divided powers in T", true, ""};
        for (int n = 1; n <= kappa_max; ++n) {
            LinComb<TreePair> expect;
            for (int i = 0; i <= n; ++i) {
                TElement l = (i == 0) ? TElement(RootedTree()) : kappa(i);
                TElement r = (i == n) ? TElement(RootedTree()) : kappa(n - i);
                expect += tensor(l, r);
            }
            if (!(gl_coproduct(kappa(n)) == expect)) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n);
            }
        }
        out.push_back(c);
    }
    {
        Check c{"trees: n! epsilon_n is the n-corolla", true, ""};
        for (int n = 1; n <= corolla_max; ++n) {
            TElement lhs = epsilon(n) * Rational(factorial(static_cast<unsigned>(n)));
            RootedTree corolla(std::vector<RootedTree>(n, RootedTree()));
            if (!(lhs == TElement(corolla))) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n);
            }
        }
        out.push_back(c);
    }
    {
        Check c{"trees: phi*(kappa_n) = h_n", true, ""};
        for (int n = 1; n <= phi_star_max; ++n) {
            SymElement lhs = phi_star(kappa(n));
            SymElement rhs = sym_basis_convert(sym_h(n), SymBasis::e);
            if (!(lhs == rhs)) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n);
            }
        }
        out.push_back(c);
    }
    {
        Check c{"trees: diagram NSym->H_F->H_K = NSym->Sym->H_K", true, ""};
        for (int w = 1; w <= diagram_max && c.pass; ++w)
            for (const auto& I : compositions_of(w)) {
                NSymElement a = nsym_e_word(I.parts);
                HKElement via_f = pi(Phi(a));
                HKElement via_sym = phi(abelianize(a));
                if (!(via_f == via_sym)) {
                    c.pass = false;
                    c.detail = "e-word " + to_string(I);
                    break;
                }
            }
        out.push_back(c);
    }
    {
        Check c{"trees: phi and Phi are coalgebra maps on generators", true, ""};
        for (int n = 1; n <= diagram_max && c.pass; ++n) {
            // Delta_K(phi(e_n)) = (phi (x) phi) Delta(e_n), e_n divided powers
            LinComb<ForestPair> lhs = hk_coproduct(phi(sym_e(n)));
            LinComb<ForestPair> expect;
            for (int i = 0; i <= n; ++i) {
                HKElement l = (i == 0) ? HKElement(Forest()) : phi(sym_e(i));
                HKElement r = (i == n) ? HKElement(Forest()) : phi(sym_e(n - i));
                expect += tensor(l, r);
            }
            if (!(lhs == expect)) {
                c.pass = false;
                c.detail = "phi, n=" + std::to_string(n);
            }
            LinComb<PlanarForestPair> lhs2 = hf_coproduct(Phi(nsym_e(n)));
            LinComb<PlanarForestPair> expect2;
            for (int i = 0; i <= n; ++i) {
                HFElement l = (i == 0) ? HFElement(PlanarForest()) : Phi(nsym_e(i));
                HFElement r = (i == n) ? HFElement(PlanarForest()) : Phi(nsym_e(n - i));
                expect2 += tensor(l, r);
            }
            if (!(lhs2 == expect2)) {
                c.pass = false;
                c.detail = "Phi, n=" + std::to_string(n);
            }
        }
        out.push_back(c);
    }
    return out;
}

std::vector<Check> verify_multiplicity(int max_total) {
    Check closed{"multiplicity: N-operator matches the closed formula", true, ""};
    // all multisets (n1..nk), sum <= max_total
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (!cur.empty()) multisets.push_back(cur);
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_total, max_total);
    for (const auto& ns : multisets) {
        std::vector<RootedTree> ladders;
        for (int n : ns) ladders.push_back(ladder(n));
        RootedTree t = b_plus(Forest(std::move(ladders)));
        Rational brute(tree_multiplicity(t));
        Rational formula = multiplicity_formula(ns);
        if (brute != formula) {
            closed.pass = false;
            closed.detail = "ladders " + t.encoding() + ": " + to_string(brute) + " vs " +
                            to_string(formula);
        }
    }
    Check positive{"multiplicity: n(.;t) >= 1 for every tree", true, ""};
    for (int n = 0; n <= max_total; ++n) {
        TElement grown = n_operator(RootedTree(), n);
        for (const auto& t : enumerate_trees(n + 1)) {
            Rational c = grown.coefficient(t);
            if (!(c >= 1)) {
                positive.pass = false;
                positive.detail = t.encoding();
            }
        }
    }
    return {closed, positive};
}

std::vector<Check> verify_sym_maps(int max_weight) {
    Check algmap{"sym: sym_to_qsym is an algebra map on e-generators", true, ""};
    for (int i = 1; i <= max_weight; ++i)
        for (int j = 1; i + j <= max_weight; ++j) {
            QSymElement lhs = sym_to_qsym(sym_mul(sym_e(i), sym_e(j)));
            QSymElement rhs = qsym_mul(sym_to_qsym(sym_e(i)), sym_to_qsym(sym_e(j)));
            if (!(lhs == rhs)) {
                algmap.pass = false;
                algmap.detail = "e_" + std::to_string(i) + " e_" + std::to_string(j);
            }
        }
    Check round{"sym: basis conversions round-trip", true, ""};
    const SymBasis tags[] = {SymBasis::m, SymBasis::e, SymBasis::h, SymBasis::p};
    for (int n = 1; n <= max_weight; ++n)
        for (const auto& lam : partitions_of(n))
            for (SymBasis from : tags)
                for (SymBasis to : tags) {
                    SymElement s{LinComb<Partition>(lam), from};
                    SymElement back = sym_basis_convert(sym_basis_convert(s, to), from);
                    if (!(back == s)) {
                        round.pass = false;
                        round.detail = basis_letter(from) + "(" + to_string(lam) + ")->" +
                                       basis_letter(to);
                    }
                }
    Check symm{"sym: images in QSym are symmetric", true, ""};
    for (int n = 1; n <= max_weight; ++n)
        for (const auto& lam : partitions_of(n)) {
            QSymElement q = sym_to_qsym(sym_m(lam));
            if (!is_symmetric(q)) {
                symm.pass = false;
                symm.detail = "m(" + to_string(lam) + ")";
            }
        }
    return {algmap, round, symm};
}

std::vector<Check> verify_all(const VerifyConfig& cfg) {
    const int md = cfg.max_degree;
    std::vector<Check> out;
    auto append = [&](std::vector<Check> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    append(verify_lyndon(md));
    append(verify_oracle(md, md + 3, 2 * md));
    append(verify_hopf_qsym(md + 1));
    append(verify_hopf_nsym(md));
    append(verify_hopf_hk(md + 1));
    append(verify_hopf_hf(md + 1));
    append(verify_hopf_t(md + 1));
    append(verify_duality_qsym_nsym(md));
    append(verify_duality_t_hk(md));
    append(verify_sym_maps(md));
    append(verify_tree_identities(md, md, md - 1, md));
    append(verify_multiplicity(md + 1));
    append(verify_mzv_numeric(cfg.truncation_N));
    append(verify_ohno(md, 2, cfg.truncation_N, std::max(cfg.tolerance, 1e-3)));
    return out;
}

std::string render_report(const std::vector<Check>& checks) {
    std::ostringstream os;
    size_t passed = 0;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace hz
