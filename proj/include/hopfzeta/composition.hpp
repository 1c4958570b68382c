#ifndef HOPFZETA_COMPOSITION_HPP
#define HOPFZETA_COMPOSITION_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hz {

// Finite sequence of positive integers. Indexes the monomial basis M_I of
// QSym and the complete basis S_I of NSym. The empty composition is the unit.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw std::invalid_argument("composition parts must be >= 1");
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    bool operator==(const Composition&) const = default;

    // Graded order: weight first, then lexicographic. Used everywhere a
    // deterministic term order is needed.
    std::strong_ordering operator<=>(const Composition& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            parts.begin(), parts.end(), o.parts.begin(), o.parts.end());
    }
};

// Weakly decreasing sequence of positive integers; index set for Sym bases.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw std::invalid_argument("partition parts must be >= 1");
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            parts.begin(), parts.end(), o.parts.begin(), o.parts.end());
    }
};

inline Partition sort_to_partition(const Composition& c) {
    return Partition(c.parts);
}

// Basis condition for QSym^0: empty, or last part > 1.
inline bool is_admissible(const Composition& c) {
    return c.empty() || c.parts.back() > 1;
}

// All compositions of n (n >= 0; n = 0 gives only the empty composition).
inline std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(Composition(cur));
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All distinct rearrangements of a partition, as compositions.
inline std::vector<Composition> rearrangements(const Partition& lam) {
    std::vector<int> v = lam.parts;
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.push_back(Composition(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Lyndon test: strictly smaller (plain lexicographic order on integer
// sequences) than every proper cyclic rotation.
inline bool is_lyndon(const Composition& c) {
    const auto& w = c.parts;
    const size_t k = w.size();
    if (k == 0) return false;
    for (size_t r = 1; r < k; ++r) {
        std::vector<int> rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        if (!std::lexicographical_compare(w.begin(), w.end(), rot.begin(), rot.end()))
            return false;
    }
    return true;
}

// All Lyndon compositions of weight <= max_weight, sorted by (weight, lex).
inline std::vector<Composition> lyndon_words(int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("lyndon_words: max_weight must be >= 1");
    std::vector<Composition> out;
    for (int n = 1; n <= max_weight; ++n)
        for (const auto& c : compositions_of(n))
            if (is_lyndon(c)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

// "2,1"; "()" for the empty composition.
inline std::string to_string(const Composition& c) {
    if (c.empty()) return "()";
    std::string s;
    for (size_t i = 0; i < c.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.parts[i]);
    }
    return s;
}

inline std::string to_string(const Partition& p) {
    if (p.empty()) return "()";
    std::string s;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts[i]);
    }
    return s;
}

inline Composition parse_composition(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "()") return Composition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad composition part: '" + tok + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Composition(parts);
}

}  // namespace hz

#endif
