#ifndef HOPFZETA_LINCOMB_HPP
#define HOPFZETA_LINCOMB_HPP

#include <map>
#include <utility>

#include "hopfzeta/rational.hpp"

namespace hz {

// Finite formal sum of basis elements with nonzero rational coefficients.
// Keys must be canonical representatives; canonicalization is the key type's
// job, LinComb never re-normalizes. Term order is the key type's operator<,
// which every basis type defines as (grade, lexicographic).
template <typename B>
class LinComb {
  public:
    using Terms = std::map<B, Rational>;

    LinComb() = default;
    explicit LinComb(B b, Rational c = 1) {
        if (c != 0) terms_[std::move(b)] = std::move(c);
    }

    static LinComb zero() { return LinComb(); }

    const Terms& terms() const { return terms_; }
    // Iterating a LinComb iterates its (basis, coefficient) pairs. Range-for
    // directly over the LinComb is safe even for temporaries.
    typename Terms::const_iterator begin() const { return terms_.begin(); }
    typename Terms::const_iterator end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coefficient(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const B& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    bool operator==(const LinComb&) const = default;

  private:
    Terms terms_;
};

template <typename A, typename B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& x, const LinComb<B>& y) {
    LinComb<std::pair<A, B>> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term({a, b}, ca * cb);
    return out;
}

// Bilinear extension of a product on basis pairs.
template <typename B, typename F>
LinComb<B> bilinear(const LinComb<B>& x, const LinComb<B>& y, F&& basis_product) {
    LinComb<B> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            LinComb<B> p = basis_product(a, b);
            p *= ca * cb;
            out += p;
        }
    return out;
}

// Linear extension of a map on basis elements.
template <typename Out, typename B, typename F>
Out linear(const LinComb<B>& x, F&& basis_map) {
    Out out;
    for (const auto& [b, c] : x.terms()) {
        Out y = basis_map(b);
        y *= c;
        out += y;
    }
    return out;
}

}  // namespace hz

#endif
