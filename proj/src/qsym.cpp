#include "hopfzeta/qsym.hpp"

#include <map>

#include "hopfzeta/linalg.hpp"

namespace hz {

// --- series oracle ---

TruncatedPoly expand_truncated(const Composition& I, int num_vars, int max_deg) {
    if (num_vars < 1 || max_deg < 0)
        throw std::invalid_argument("expand_truncated: need num_vars >= 1, max_deg >= 0");
    TruncatedPoly out(num_vars, max_deg);
    const int k = I.length();
    std::vector<int> vars(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            TruncatedPoly::Monomial m(num_vars, 0);
            for (int j = 0; j < k; ++j) m[vars[j] - 1] = I.parts[j];
            out.add_term(m, 1);
            return;
        }
        for (int v = start; v <= num_vars; ++v) {
            vars[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    if (I.weight() <= max_deg) rec(rec, 0, 1);
    return out;
}

TruncatedPoly expand_truncated(const QSymElement& f, int num_vars, int max_deg) {
    TruncatedPoly out(num_vars, max_deg);
    for (const auto& [I, c] : f.terms()) {
        TruncatedPoly p = expand_truncated(I, num_vars, max_deg);
        p *= c;
        out += p;
    }
    return out;
}

namespace {

// Exponent pattern of a monomial: nonzero exponents read in variable order,
// plus the chosen variable indices.
std::pair<std::vector<int>, std::vector<int>> pattern_of(const TruncatedPoly::Monomial& m) {
    std::vector<int> pat, vars;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) {
            pat.push_back(m[i]);
            vars.push_back(static_cast<int>(i));
        }
    return {pat, vars};
}

}  // namespace

bool is_quasi_symmetric(const TruncatedPoly& p) {
    // For every pattern, the coefficient on any increasing variable choice
    // must match the coefficient on the front-packed variables.
    std::map<std::vector<int>, Rational> packed;
    for (const auto& [m, c] : p.terms()) {
        auto [pat, vars] = pattern_of(m);
        bool front = true;
        for (size_t j = 0; j < vars.size(); ++j)
            if (vars[j] != static_cast<int>(j)) front = false;
        if (front) packed[pat] = c;
    }
    for (const auto& [m, c] : p.terms()) {
        auto [pat, vars] = pattern_of(m);
        auto it = packed.find(pat);
        if (it == packed.end() || it->second != c) return false;
    }
    // Patterns present front-packed must appear on every increasing choice.
    for (const auto& [pat, c] : packed) {
        const int k = static_cast<int>(pat.size());
        std::vector<int> vars(k);
        auto rec = [&](auto&& self, int pos, int start) -> bool {
            if (pos == k) {
                TruncatedPoly::Monomial m(p.num_vars(), 0);
                for (int j = 0; j < k; ++j) m[vars[j]] = pat[j];
                return p.coefficient(m) == c;
            }
            for (int v = start; v < p.num_vars(); ++v) {
                vars[pos] = v;
                if (!self(self, pos + 1, v + 1)) return false;
            }
            return true;
        };
        if (!rec(rec, 0, 0)) return false;
    }
    return true;
}

// --- quasi-shuffle product ---

QSymElement quasi_shuffle(const Composition& a, const Composition& b) {
    if (a.empty()) return QSymElement(b);
    if (b.empty()) return QSymElement(a);
    auto tail = [](const Composition& c) {
        return Composition(std::vector<int>(c.parts.begin() + 1, c.parts.end()));
    };
    auto prepend = [](int head, const QSymElement& rest) {
        QSymElement out;
        for (const auto& [I, c] : rest.terms()) {
            std::vector<int> parts;
            parts.reserve(I.parts.size() + 1);
            parts.push_back(head);
            parts.insert(parts.end(), I.parts.begin(), I.parts.end());
            out.add_term(Composition(parts), c);
        }
        return out;
    };
    QSymElement out = prepend(a.parts[0], quasi_shuffle(tail(a), b));
    out += prepend(b.parts[0], quasi_shuffle(a, tail(b)));
    out += prepend(a.parts[0] + b.parts[0], quasi_shuffle(tail(a), tail(b)));
    return out;
}

QSymElement qsym_mul(const QSymElement& a, const QSymElement& b) {
    return bilinear(a, b, [](const Composition& x, const Composition& y) {
        return quasi_shuffle(x, y);
    });
}

// --- coproduct / antipode ---

LinComb<CompPair> qsym_coproduct(const Composition& I) {
    LinComb<CompPair> out;
    const int k = I.length();
    for (int j = 0; j <= k; ++j) {
        Composition left(std::vector<int>(I.parts.begin(), I.parts.begin() + j));
        Composition right(std::vector<int>(I.parts.begin() + j, I.parts.end()));
        out.add_term({left, right}, 1);
    }
    return out;
}

LinComb<CompPair> qsym_coproduct(const QSymElement& a) {
    return linear<LinComb<CompPair>>(a, [](const Composition& I) { return qsym_coproduct(I); });
}

namespace {

const QSymElement& qsym_antipode_basis(const Composition& I) {
    static std::map<Composition, QSymElement> cache;
    auto it = cache.find(I);
    if (it != cache.end()) return it->second;
    QSymElement s;
    if (I.empty()) {
        s = QSymElement(Composition());
    } else {
        // (S * id)(M_I) = 0 for nonempty I, solved for S(M_I).
        s = QSymElement(I) * Rational(-1);
        const int k = I.length();
        for (int j = 1; j < k; ++j) {
            Composition left(std::vector<int>(I.parts.begin(), I.parts.begin() + j));
            Composition right(std::vector<int>(I.parts.begin() + j, I.parts.end()));
            s -= qsym_mul(qsym_antipode_basis(left), QSymElement(right));
        }
    }
    return cache.emplace(I, std::move(s)).first->second;
}

}  // namespace

QSymElement qsym_antipode(const QSymElement& a) {
    return linear<QSymElement>(a, [](const Composition& I) { return qsym_antipode_basis(I); });
}

bool is_symmetric(const QSymElement& a) {
    for (const auto& [I, c] : a.terms())
        for (const auto& J : rearrangements(sort_to_partition(I)))
            if (a.coefficient(J) != c) return false;
    return true;
}

// --- NSym ---

NSymElement nsym_mul(const NSymElement& a, const NSymElement& b) {
    return bilinear(a, b, [](const Composition& x, const Composition& y) {
        std::vector<int> parts = x.parts;
        parts.insert(parts.end(), y.parts.begin(), y.parts.end());
        return NSymElement(Composition(parts));
    });
}

namespace {

// Delta(S_n) = sum_{i+j=n} S_i (x) S_j with S_0 = 1, extended multiplicatively.
LinComb<CompPair> nsym_coproduct_basis(const Composition& I) {
    LinComb<CompPair> acc;
    acc.add_term({Composition(), Composition()}, 1);
    for (int n : I.parts) {
        LinComb<CompPair> next;
        for (const auto& [ab, c] : acc.terms())
            for (int i = 0; i <= n; ++i) {
                std::vector<int> l = ab.first.parts, r = ab.second.parts;
                if (i > 0) l.push_back(i);
                if (n - i > 0) r.push_back(n - i);
                next.add_term({Composition(l), Composition(r)}, c);
            }
        acc = std::move(next);
    }
    return acc;
}

const NSymElement& nsym_antipode_basis(const Composition& I) {
    static std::map<Composition, NSymElement> cache;
    auto it = cache.find(I);
    if (it != cache.end()) return it->second;
    NSymElement s;
    if (I.empty()) {
        s = NSymElement(Composition());
    } else {
        s = NSymElement(I) * Rational(-1);
        for (const auto& [ab, c] : nsym_coproduct_basis(I)) {
            if (ab.first.empty() || ab.second.empty()) continue;
            s -= c * nsym_mul(nsym_antipode_basis(ab.first), NSymElement(ab.second));
        }
    }
    return cache.emplace(I, std::move(s)).first->second;
}

}  // namespace

LinComb<CompPair> nsym_coproduct(const NSymElement& a) {
    return linear<LinComb<CompPair>>(a, [](const Composition& I) { return nsym_coproduct_basis(I); });
}

NSymElement nsym_antipode(const NSymElement& a) {
    return linear<NSymElement>(a, [](const Composition& I) { return nsym_antipode_basis(I); });
}

NSymElement nsym_e(int n) {
    if (n < 0) throw std::invalid_argument("nsym_e: need n >= 0");
    NSymElement out;
    for (const auto& I : compositions_of(n)) {
        int sign = ((n - I.length()) % 2 == 0) ? 1 : -1;
        out.add_term(I, sign);
    }
    return out;
}

NSymElement nsym_e_word(const std::vector<int>& word) {
    NSymElement out{Composition()};
    for (int i : word) out = nsym_mul(out, nsym_e(i));
    return out;
}

Rational pair_qsym_nsym(const QSymElement& a, const NSymElement& b) {
    Rational r = 0;
    for (const auto& [I, c] : a.terms()) r += c * b.coefficient(I);
    return r;
}

// --- Sym ---

std::string basis_letter(SymBasis b) {
    switch (b) {
        case SymBasis::m: return "m";
        case SymBasis::e: return "e";
        case SymBasis::h: return "h";
        case SymBasis::p: return "p";
    }
    return "?";
}

SymElement sym_e(int n) { return {LinComb<Partition>(Partition({n})), SymBasis::e}; }
SymElement sym_h(int n) { return {LinComb<Partition>(Partition({n})), SymBasis::h}; }
SymElement sym_p(int n) { return {LinComb<Partition>(Partition({n})), SymBasis::p}; }
SymElement sym_m(const Partition& lam) { return {LinComb<Partition>(lam), SymBasis::m}; }

SymElement sym_add(const SymElement& a, const SymElement& b) {
    SymElement bb = sym_basis_convert(b, a.basis);
    return {a.value + bb.value, a.basis};
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
    // e, h, p are multiplicative bases: keys merge. The m basis is not;
    // route through e.
    if (a.basis == SymBasis::m) return sym_mul(sym_basis_convert(a, SymBasis::e), b);
    SymElement bb = sym_basis_convert(b, a.basis);
    LinComb<Partition> out;
    for (const auto& [x, cx] : a.value.terms())
        for (const auto& [y, cy] : bb.value.terms()) {
            std::vector<int> parts = x.parts;
            parts.insert(parts.end(), y.parts.begin(), y.parts.end());
            out.add_term(Partition(parts), cx * cy);
        }
    return {out, a.basis};
}

namespace {

QSymElement qsym_generator(SymBasis basis, int n) {
    QSymElement out;
    switch (basis) {
        case SymBasis::e:
            out.add_term(Composition(std::vector<int>(n, 1)), 1);
            break;
        case SymBasis::h:
            for (const auto& I : compositions_of(n)) out.add_term(I, 1);
            break;
        case SymBasis::p:
            out.add_term(Composition({n}), 1);
            break;
        case SymBasis::m:
            throw std::logic_error("m is not a multiplicative basis");
    }
    return out;
}

}  // namespace

QSymElement sym_to_qsym(const SymElement& s) {
    QSymElement out;
    for (const auto& [lam, c] : s.value.terms()) {
        QSymElement term;
        if (s.basis == SymBasis::m) {
            for (const auto& I : rearrangements(lam)) term.add_term(I, 1);
        } else {
            term = QSymElement(Composition());
            for (int n : lam.parts) term = qsym_mul(term, qsym_generator(s.basis, n));
        }
        out += term * c;
    }
    return out;
}

namespace {

// m-coordinates of a symmetric QSym element: the coefficient of m_lambda is
// the coefficient of M_{lambda read as a weakly decreasing composition}.
LinComb<Partition> qsym_to_m(const QSymElement& q) {
    LinComb<Partition> out;
    for (const auto& [I, c] : q.terms()) {
        bool sorted = std::is_sorted(I.parts.begin(), I.parts.end(), std::greater<int>());
        if (sorted) out.add_term(Partition(I.parts), c);
    }
    return out;
}

// Expansion of each m_lambda (lambda |- n) in the target multiplicative
// basis, solved exactly once per (degree, basis).
const std::map<Partition, LinComb<Partition>>& m_to_basis_table(int n, SymBasis target) {
    static std::map<std::pair<int, SymBasis>, std::map<Partition, LinComb<Partition>>> cache;
    auto key = std::make_pair(n, target);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto lams = partitions_of(n);
    const size_t d = lams.size();
    // column j = target basis element indexed by lams[j], in m-coordinates
    Matrix a(d, std::vector<Rational>(d, 0));
    for (size_t j = 0; j < d; ++j) {
        SymElement gen{LinComb<Partition>(lams[j]), target};
        LinComb<Partition> mc = qsym_to_m(sym_to_qsym(gen));
        for (size_t i = 0; i < d; ++i) a[i][j] = mc.coefficient(lams[i]);
    }
    std::map<Partition, LinComb<Partition>> table;
    for (size_t i = 0; i < d; ++i) {
        std::vector<Rational> b(d, 0);
        b[i] = 1;
        std::vector<Rational> x = solve(a, b);
        LinComb<Partition> expansion;
        for (size_t j = 0; j < d; ++j) expansion.add_term(lams[j], x[j]);
        table[lams[i]] = expansion;
    }
    return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

SymElement sym_basis_convert(const SymElement& s, SymBasis target) {
    if (s.basis == target) return s;
    // to m first
    LinComb<Partition> mc =
        (s.basis == SymBasis::m) ? s.value : qsym_to_m(sym_to_qsym(s));
    if (target == SymBasis::m) return {mc, SymBasis::m};
    LinComb<Partition> out;
    for (const auto& [lam, c] : mc.terms()) {
        if (lam.empty()) {
            out.add_term(lam, c);
            continue;
        }
        const auto& table = m_to_basis_table(lam.weight(), target);
        out += table.at(lam) * c;
    }
    return {out, target};
}

SymElement abelianize(const NSymElement& a) {
    // S_n = sum_{J |= n} (-1)^{n - len(J)} e_J, commutatively.
    auto s_in_e = [](int n) {
        LinComb<Partition> out;
        for (const auto& J : compositions_of(n)) {
            int sign = ((n - J.length()) % 2 == 0) ? 1 : -1;
            out.add_term(Partition(J.parts), sign);
        }
        return out;
    };
    LinComb<Partition> out;
    for (const auto& [I, c] : a.terms()) {
        LinComb<Partition> term(Partition{});
        for (int n : I.parts) {
            LinComb<Partition> next;
            for (const auto& [x, cx] : term.terms())
                for (const auto& [y, cy] : s_in_e(n)) {
                    std::vector<int> parts = x.parts;
                    parts.insert(parts.end(), y.parts.begin(), y.parts.end());
                    next.add_term(Partition(parts), cx * cy);
                }
            term = std::move(next);
        }
        out += term * c;
    }
    return {out, SymBasis::e};
}

}  // namespace hz
