#include "hopfzeta/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hz {

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    size_ = 1;
    enc_ = "[";
    for (const auto& c : children_) {
        size_ += c.size_;
        enc_ += c.enc_;
    }
    enc_ += "]";
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
}

int Forest::vertex_count() const {
    int n = 0;
    for (const auto& t : trees_) n += t.vertex_count();
    return n;
}

PlanarTree::PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {
    size_ = 1;
    enc_ = "[";
    for (const auto& c : children_) {
        size_ += c.size_;
        enc_ += c.enc_;
    }
    enc_ += "]";
}

int PlanarForest::vertex_count() const {
    int n = 0;
    for (const auto& t : trees_) n += t.vertex_count();
    return n;
}

RootedTree b_plus(const Forest& f) { return RootedTree(f.trees()); }
PlanarTree b_plus(const PlanarForest& f) { return PlanarTree(f.trees()); }

RootedTree ladder(int i) {
    if (i < 1) throw std::invalid_argument("ladder: need i >= 1");
    RootedTree t;
    for (int k = 1; k < i; ++k) t = RootedTree(std::vector<RootedTree>{t});
    return t;
}

PlanarTree planar_ladder(int i) {
    if (i < 1) throw std::invalid_argument("planar_ladder: need i >= 1");
    PlanarTree t;
    for (int k = 1; k < i; ++k) t = PlanarTree(std::vector<PlanarTree>{t});
    return t;
}

RootedTree planar_to_rooted(const PlanarTree& p) {
    std::vector<RootedTree> kids;
    kids.reserve(p.children().size());
    for (const auto& c : p.children()) kids.push_back(planar_to_rooted(c));
    return RootedTree(std::move(kids));
}

Forest planar_to_rooted(const PlanarForest& p) {
    std::vector<RootedTree> ts;
    ts.reserve(p.trees().size());
    for (const auto& t : p.trees()) ts.push_back(planar_to_rooted(t));
    return Forest(std::move(ts));
}

namespace {

// Multisets of trees with total size n, drawn from trees of size <= n.
// Chosen non-increasing along the canonical order to avoid duplicates.
void forests_rec(int remaining, const std::vector<std::vector<RootedTree>>& trees_by_size,
                 int max_size, const RootedTree* max_tree, std::vector<RootedTree>& cur,
                 std::vector<Forest>& out) {
    if (remaining == 0) {
        out.push_back(Forest(cur));
        return;
    }
    for (int s = std::min(remaining, max_size); s >= 1; --s) {
        for (const auto& t : trees_by_size[s]) {
            if (max_tree && *max_tree < t) continue;
            cur.push_back(t);
            forests_rec(remaining - s, trees_by_size, s, &t, cur, out);
            cur.pop_back();
        }
    }
}

struct TreeTables {
    std::vector<std::vector<RootedTree>> trees;    // trees[n]: n vertices
    std::vector<std::vector<Forest>> forests;      // forests[n]: n total vertices

    void grow_to(int n) {
        if (static_cast<int>(trees.size()) > n) return;
        if (trees.empty()) {
            trees.resize(1);
            forests.push_back({Forest()});
        }
        for (int m = static_cast<int>(trees.size()); m <= n; ++m) {
            // forests of size m-1 exist once trees up to m-1 do
            std::vector<Forest> fs;
            std::vector<RootedTree> cur;
            forests_rec(m - 1, trees, m - 1, nullptr, cur, fs);
            std::sort(fs.begin(), fs.end());
            std::vector<RootedTree> ts;
            ts.reserve(fs.size());
            for (const auto& f : fs) ts.push_back(b_plus(f));
            std::sort(ts.begin(), ts.end());
            if (m - 1 >= static_cast<int>(forests.size())) forests.push_back(std::move(fs));
            trees.push_back(std::move(ts));
        }
        // forests of size n itself
        if (n >= static_cast<int>(forests.size())) {
            std::vector<Forest> fs;
            std::vector<RootedTree> cur;
            forests_rec(n, trees, n, nullptr, cur, fs);
            std::sort(fs.begin(), fs.end());
            forests.push_back(std::move(fs));
        }
    }
};

TreeTables& tables() {
    static TreeTables t;
    return t;
}

}  // namespace

const std::vector<RootedTree>& enumerate_trees(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("enumerate_trees: need 1 <= n <= 12");
    auto& tab = tables();
    tab.grow_to(n);
    return tab.trees[n];
}

const std::vector<Forest>& enumerate_forests(int n) {
    if (n < 0 || n > 12) throw std::invalid_argument("enumerate_forests: need 0 <= n <= 12");
    auto& tab = tables();
    tab.grow_to(n);
    return tab.forests[n];
}

std::vector<PlanarForest> enumerate_planar_forests(int n) {
    if (n < 0 || n > 12) throw std::invalid_argument("enumerate_planar_forests: need 0 <= n <= 12");
    static std::map<int, std::vector<PlanarForest>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PlanarForest> out;
    if (n == 0) {
        out.push_back(PlanarForest());
    } else {
        // first tree has k vertices = B_+(forest of k-1), rest is a forest of n-k
        for (int k = 1; k <= n; ++k)
            for (const auto& head : enumerate_planar_forests(k - 1))
                for (const auto& tail : enumerate_planar_forests(n - k)) {
                    std::vector<PlanarTree> ts;
                    ts.push_back(b_plus(head));
                    for (const auto& t : tail.trees()) ts.push_back(t);
                    out.push_back(PlanarForest(std::move(ts)));
                }
    }
    std::sort(out.begin(), out.end());
    cache[n] = out;
    return cache[n];
}

Integer symm_order(const RootedTree& t) {
    Integer r = 1;
    size_t i = 0;
    const auto& kids = t.children();
    while (i < kids.size()) {
        size_t j = i;
        while (j < kids.size() && kids[j] == kids[i]) ++j;
        r *= factorial(static_cast<unsigned>(j - i));
        r *= symm_order(kids[i]);
        // identical children contribute the same factor once per copy
        for (size_t k = i + 1; k < j; ++k) r *= symm_order(kids[k]);
        i = j;
    }
    return r;
}

Integer symm_order(const Forest& f) {
    Integer r = 1;
    size_t i = 0;
    const auto& ts = f.trees();
    while (i < ts.size()) {
        size_t j = i;
        while (j < ts.size() && ts[j] == ts[i]) ++j;
        r *= factorial(static_cast<unsigned>(j - i));
        for (size_t k = i; k < j; ++k) r *= symm_order(ts[k]);
        i = j;
    }
    return r;
}

RootedTree attach_at(const RootedTree& t, int preorder_index, const RootedTree& sub) {
    if (preorder_index == 0) {
        std::vector<RootedTree> kids = t.children();
        kids.push_back(sub);
        return RootedTree(std::move(kids));
    }
    int idx = preorder_index - 1;
    std::vector<RootedTree> kids = t.children();
    for (auto& c : kids) {
        if (idx < c.vertex_count()) {
            c = attach_at(c, idx, sub);
            return RootedTree(std::move(kids));
        }
        idx -= c.vertex_count();
    }
    throw std::invalid_argument("attach_at: preorder index out of range");
}

std::string to_string(const Forest& f) {
    if (f.empty()) return "";
    std::string s;
    for (const auto& t : f.trees()) s += t.encoding();
    return s;
}

std::string to_string(const PlanarForest& f) {
    if (f.empty()) return "";
    std::string s;
    for (const auto& t : f.trees()) s += t.encoding();
    return s;
}

namespace {

PlanarTree parse_tree_at(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '[')
        throw std::invalid_argument("tree parse error at position " + std::to_string(pos) +
                                    ": expected '['");
    ++pos;
    std::vector<PlanarTree> kids;
    while (pos < s.size() && s[pos] == '[') kids.push_back(parse_tree_at(s, pos));
    if (pos >= s.size() || s[pos] != ']')
        throw std::invalid_argument("tree parse error at position " + std::to_string(pos) +
                                    ": expected ']'");
    ++pos;
    return PlanarTree(std::move(kids));
}

}  // namespace

PlanarForest parse_planar_forest(const std::string& s) {
    size_t pos = 0;
    std::vector<PlanarTree> ts;
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    while (pos < s.size()) {
        ts.push_back(parse_tree_at(s, pos));
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return PlanarForest(std::move(ts));
}

PlanarTree parse_planar_tree(const std::string& s) {
    PlanarForest f = parse_planar_forest(s);
    if (f.trees().size() != 1)
        throw std::invalid_argument("expected a single tree, got a forest of " +
                                    std::to_string(f.trees().size()));
    return f.trees()[0];
}

Forest parse_forest(const std::string& s) { return planar_to_rooted(parse_planar_forest(s)); }

RootedTree parse_rooted_tree(const std::string& s) { return planar_to_rooted(parse_planar_tree(s)); }

}  // namespace hz
