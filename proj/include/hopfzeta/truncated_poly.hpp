#ifndef HOPFZETA_TRUNCATED_POLY_HPP
#define HOPFZETA_TRUNCATED_POLY_HPP

#include <map>
#include <numeric>
#include <vector>

#include "hopfzeta/rational.hpp"

namespace hz {

// Exact polynomial in commuting variables t_1..t_v, truncated at total
// degree d. The grounding oracle: products and symmetry tests of
// quasi-symmetric functions are checked against this representation.
class TruncatedPoly {
  public:
    using Monomial = std::vector<int>;  // exponent per variable, length = num_vars

    TruncatedPoly(int num_vars, int max_deg) : num_vars_(num_vars), max_deg_(max_deg) {}

    int num_vars() const { return num_vars_; }
    int max_deg() const { return max_deg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    static int degree(const Monomial& m) {
        return std::accumulate(m.begin(), m.end(), 0);
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0 || degree(m) > max_deg_) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TruncatedPoly& operator+=(const TruncatedPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TruncatedPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
        TruncatedPoly out(a.num_vars_, a.max_deg_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    bool operator==(const TruncatedPoly& o) const { return terms_ == o.terms_; }

  private:
    int num_vars_;
    int max_deg_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace hz

#endif
