#include "hopfzeta/hopf_trees.hpp"

#include <map>

namespace hz {

// --- H_K ---

namespace {

Forest forest_union(const Forest& a, const Forest& b) {
    std::vector<RootedTree> ts = a.trees();
    ts.insert(ts.end(), b.trees().begin(), b.trees().end());
    return Forest(std::move(ts));
}

}  // namespace

HKElement hk_mul(const HKElement& a, const HKElement& b) {
    return bilinear(a, b, [](const Forest& x, const Forest& y) {
        return HKElement(forest_union(x, y));
    });
}

LinComb<ForestPair> hk_coproduct(const Forest& f) {
    // Delta(B_+(g)) = B_+(g) (x) 1  +  (id (x) B_+) Delta(g), multiplicative on g.
    LinComb<ForestPair> acc;
    acc.add_term({Forest(), Forest()}, 1);
    for (const auto& t : f.trees()) {
        LinComb<ForestPair> dt;
        dt.add_term({Forest({t}), Forest()}, 1);
        for (const auto& [pr, c] : hk_coproduct(Forest(t.children()))) {
            Forest trunk({b_plus(pr.second)});
            dt.add_term({pr.first, trunk}, c);
        }
        LinComb<ForestPair> next;
        for (const auto& [ab, ca] : acc.terms())
            for (const auto& [cd, cb] : dt.terms())
                next.add_term({forest_union(ab.first, cd.first),
                               forest_union(ab.second, cd.second)},
                              ca * cb);
        acc = std::move(next);
    }
    return acc;
}

LinComb<ForestPair> hk_coproduct(const HKElement& a) {
    return linear<LinComb<ForestPair>>(a, [](const Forest& f) { return hk_coproduct(f); });
}

namespace {

const HKElement& hk_antipode_basis(const Forest& f) {
    static std::map<Forest, HKElement> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    HKElement s;
    if (f.empty()) {
        s = HKElement(Forest());
    } else {
        s = HKElement(f) * Rational(-1);
        for (const auto& [pr, c] : hk_coproduct(f)) {
            if (pr.first.vertex_count() == 0 || pr.second.vertex_count() == 0) continue;
            s -= c * hk_mul(hk_antipode_basis(pr.first), HKElement(pr.second));
        }
    }
    return cache.emplace(f, std::move(s)).first->second;
}

}  // namespace

HKElement hk_antipode(const HKElement& a) {
    return linear<HKElement>(a, [](const Forest& f) { return hk_antipode_basis(f); });
}

// --- H_F ---

namespace {

PlanarForest pf_concat(const PlanarForest& a, const PlanarForest& b) {
    std::vector<PlanarTree> ts = a.trees();
    ts.insert(ts.end(), b.trees().begin(), b.trees().end());
    return PlanarForest(std::move(ts));
}

}  // namespace

HFElement hf_mul(const HFElement& a, const HFElement& b) {
    return bilinear(a, b, [](const PlanarForest& x, const PlanarForest& y) {
        return HFElement(pf_concat(x, y));
    });
}

LinComb<PlanarForestPair> hf_coproduct(const PlanarForest& f) {
    LinComb<PlanarForestPair> acc;
    acc.add_term({PlanarForest(), PlanarForest()}, 1);
    for (const auto& t : f.trees()) {
        LinComb<PlanarForestPair> dt;
        dt.add_term({PlanarForest({t}), PlanarForest()}, 1);
        for (const auto& [pr, c] : hf_coproduct(PlanarForest(t.children()))) {
            PlanarForest trunk({b_plus(pr.second)});
            dt.add_term({pr.first, trunk}, c);
        }
        LinComb<PlanarForestPair> next;
        for (const auto& [ab, ca] : acc.terms())
            for (const auto& [cd, cb] : dt.terms())
                next.add_term({pf_concat(ab.first, cd.first), pf_concat(ab.second, cd.second)},
                              ca * cb);
        acc = std::move(next);
    }
    return acc;
}

LinComb<PlanarForestPair> hf_coproduct(const HFElement& a) {
    return linear<LinComb<PlanarForestPair>>(a,
                                             [](const PlanarForest& f) { return hf_coproduct(f); });
}

namespace {

const HFElement& hf_antipode_basis(const PlanarForest& f) {
    static std::map<PlanarForest, HFElement> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    HFElement s;
    if (f.empty()) {
        s = HFElement(PlanarForest());
    } else {
        s = HFElement(f) * Rational(-1);
        for (const auto& [pr, c] : hf_coproduct(f)) {
            if (pr.first.vertex_count() == 0 || pr.second.vertex_count() == 0) continue;
            s -= c * hf_mul(hf_antipode_basis(pr.first), HFElement(pr.second));
        }
    }
    return cache.emplace(f, std::move(s)).first->second;
}

}  // namespace

HFElement hf_antipode(const HFElement& a) {
    return linear<HFElement>(a, [](const PlanarForest& f) { return hf_antipode_basis(f); });
}

// --- T ---

namespace {

// Graft the collected branches below their target vertices in one pass, so
// indices always refer to t2's own preorder numbering.
RootedTree attach_all(const RootedTree& t, const std::map<int, std::vector<RootedTree>>& extra,
                      int& cursor) {
    int my_index = cursor++;
    std::vector<RootedTree> kids;
    for (const auto& c : t.children()) kids.push_back(attach_all(c, extra, cursor));
    auto it = extra.find(my_index);
    if (it != extra.end())
        for (const auto& s : it->second) kids.push_back(s);
    return RootedTree(std::move(kids));
}

}  // namespace

TElement gl_product(const RootedTree& t1, const RootedTree& t2) {
    const auto& branches = t1.children();
    const int m = static_cast<int>(branches.size());
    const int v = t2.vertex_count();
    TElement out;
    std::vector<int> target(m, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            std::map<int, std::vector<RootedTree>> extra;
            for (int j = 0; j < m; ++j) extra[target[j]].push_back(branches[j]);
            int cursor = 0;
            out.add_term(attach_all(t2, extra, cursor), 1);
            return;
        }
        for (int u = 0; u < v; ++u) {
            target[pos] = u;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

TElement gl_mul(const TElement& a, const TElement& b) {
    return bilinear(a, b, [](const RootedTree& x, const RootedTree& y) {
        return gl_product(x, y);
    });
}

LinComb<TreePair> gl_coproduct(const RootedTree& t) {
    // group equal branches with multiplicities
    std::vector<std::pair<RootedTree, int>> groups;
    for (const auto& c : t.children()) {
        if (!groups.empty() && groups.back().first == c)
            ++groups.back().second;
        else
            groups.emplace_back(c, 1);
    }
    LinComb<TreePair> out;
    const size_t g = groups.size();
    std::vector<int> take(g, 0);
    auto rec = [&](auto&& self, size_t pos, Integer mult) -> void {
        if (pos == g) {
            std::vector<RootedTree> left, right;
            for (size_t i = 0; i < g; ++i) {
                for (int j = 0; j < take[i]; ++j) left.push_back(groups[i].first);
                for (int j = take[i]; j < groups[i].second; ++j) right.push_back(groups[i].first);
            }
            out.add_term({RootedTree(std::move(left)), RootedTree(std::move(right))},
                         Rational(mult));
            return;
        }
        for (int j = 0; j <= groups[pos].second; ++j) {
            take[pos] = j;
            self(self, pos + 1,
                 mult * binomial(static_cast<unsigned>(groups[pos].second),
                                 static_cast<unsigned>(j)));
        }
    };
    rec(rec, 0, 1);
    return out;
}

LinComb<TreePair> gl_coproduct(const TElement& a) {
    return linear<LinComb<TreePair>>(a, [](const RootedTree& t) { return gl_coproduct(t); });
}

namespace {

const TElement& gl_antipode_basis(const RootedTree& t) {
    static std::map<RootedTree, TElement> cache;
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    TElement s;
    if (t.degree() == 0) {
        s = TElement(RootedTree());
    } else {
        s = TElement(t) * Rational(-1);
        for (const auto& [pr, c] : gl_coproduct(t)) {
            if (pr.first.degree() == 0 || pr.second.degree() == 0) continue;
            s -= c * gl_mul(gl_antipode_basis(pr.first), TElement(pr.second));
        }
    }
    return cache.emplace(t, std::move(s)).first->second;
}

}  // namespace

TElement gl_antipode(const TElement& a) {
    return linear<TElement>(a, [](const RootedTree& t) { return gl_antipode_basis(t); });
}

TElement kappa(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("kappa: need 1 <= n <= 8");
    TElement out;
    for (const auto& t : enumerate_trees(n + 1))
        out.add_term(t, Rational(1, symm_order(t)));
    return out;
}

TElement epsilon(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("epsilon: need 1 <= n <= 8");
    TElement s = gl_antipode(kappa(n));
    if (n % 2 != 0) s *= Rational(-1);
    return s;
}

TElement n_operator(const RootedTree& t, int k) {
    if (k < 0) throw std::invalid_argument("n_operator: need k >= 0");
    TElement out(t);
    const RootedTree l2 = ladder(2);
    for (int i = 0; i < k; ++i) out = gl_mul(TElement(l2), out);
    return out;
}

Rational n_coefficient(const RootedTree& t, const RootedTree& tp) {
    if (tp.degree() < t.degree()) return 0;
    return n_operator(t, tp.degree() - t.degree()).coefficient(tp);
}

Integer tree_multiplicity(const RootedTree& t) {
    Rational c = n_coefficient(RootedTree(), t);
    return numerator(c);  // always an integer
}

Rational multiplicity_formula(const std::vector<int>& ns) {
    if (ns.empty()) throw std::invalid_argument("multiplicity_formula: need k >= 1");
    std::map<int, unsigned> mult;
    unsigned total = 0;
    for (int n : ns) {
        if (n < 1) throw std::invalid_argument("multiplicity_formula: parts must be >= 1");
        ++mult[n];
        total += static_cast<unsigned>(n);
    }
    Integer multinom = factorial(total);
    for (int n : ns) multinom /= factorial(static_cast<unsigned>(n));
    Integer rep = 1;
    for (const auto& [n, m] : mult) rep *= factorial(m);
    return Rational(multinom, rep);
}

// --- maps ---

HKElement phi(const SymElement& s) {
    SymElement e = sym_basis_convert(s, SymBasis::e);
    HKElement out;
    for (const auto& [lam, c] : e.value.terms()) {
        std::vector<RootedTree> ts;
        for (int i : lam.parts) ts.push_back(ladder(i));
        out.add_term(Forest(std::move(ts)), c);
    }
    return out;
}

HFElement Phi(const NSymElement& a) {
    // expand each S_I into e-words, then e-words into ordered ladder forests
    HFElement out;
    for (const auto& [I, c] : a.terms()) {
        // S_n = sum_{J |= n} (-1)^{n - len(J)} e_J (noncommutative, ordered)
        LinComb<Composition> ewords(Composition{});
        for (int n : I.parts) {
            LinComb<Composition> next;
            for (const auto& [w, cw] : ewords.terms())
                for (const auto& J : compositions_of(n)) {
                    int sign = ((n - J.length()) % 2 == 0) ? 1 : -1;
                    std::vector<int> cat = w.parts;
                    cat.insert(cat.end(), J.parts.begin(), J.parts.end());
                    next.add_term(Composition(cat), cw * sign);
                }
            ewords = std::move(next);
        }
        for (const auto& [w, cw] : ewords.terms()) {
            std::vector<PlanarTree> ts;
            for (int i : w.parts) ts.push_back(planar_ladder(i));
            out.add_term(PlanarForest(std::move(ts)), c * cw);
        }
    }
    return out;
}

HKElement pi(const HFElement& a) {
    HKElement out;
    for (const auto& [f, c] : a.terms()) out.add_term(planar_to_rooted(f), c);
    return out;
}

Rational pair_T_HK(const RootedTree& t, const Forest& f) {
    if (Forest(t.children()) == f) return Rational(symm_order(f));
    return 0;
}

Rational pair_T_HK(const TElement& a, const HKElement& b) {
    Rational r = 0;
    for (const auto& [t, ct] : a.terms())
        for (const auto& [f, cf] : b.terms()) r += ct * cf * pair_T_HK(t, f);
    return r;
}

SymElement phi_star(const TElement& a) {
    int deg = -1;
    for (const auto& [t, c] : a.terms()) {
        if (deg == -1) deg = t.degree();
        if (t.degree() != deg)
            throw std::invalid_argument("phi_star: input must be homogeneous");
    }
    if (deg == -1) return {LinComb<Partition>(), SymBasis::e};
    LinComb<Partition> out;
    for (const auto& lam : partitions_of(deg)) {
        Rational c = pair_T_HK(a, phi(sym_m(lam)));
        out.add_term(lam, c);
    }
    return {out, SymBasis::e};
}

}  // namespace hz
