#ifndef HOPFZETA_TREES_HPP
#define HOPFZETA_TREES_HPP

#include <compare>
#include <string>
#include <vector>

#include "hopfzeta/rational.hpp"

namespace hz {

// Unordered rooted tree in canonical form: children sorted by (vertex count,
// then lexicographic on canonical encodings), recursively. Isomorphic trees
// have identical representations, so operator== is isomorphism.
class RootedTree {
  public:
    // Single vertex.
    RootedTree() : size_(1), enc_("[]") {}
    explicit RootedTree(std::vector<RootedTree> children);

    const std::vector<RootedTree>& children() const { return children_; }
    int vertex_count() const { return size_; }
    // Grading |t|: non-root vertices.
    int degree() const { return size_ - 1; }
    const std::string& encoding() const { return enc_; }

    bool operator==(const RootedTree& o) const { return enc_ == o.enc_; }
    std::strong_ordering operator<=>(const RootedTree& o) const {
        if (auto c = size_ <=> o.size_; c != 0) return c;
        return enc_ <=> o.enc_;
    }

  private:
    std::vector<RootedTree> children_;
    int size_;
    std::string enc_;
};

// Multiset of rooted trees, canonically sorted. Unit of H_K is the empty forest.
class Forest {
  public:
    Forest() = default;
    explicit Forest(std::vector<RootedTree> trees);

    const std::vector<RootedTree>& trees() const { return trees_; }
    int vertex_count() const;
    bool empty() const { return trees_.empty(); }

    bool operator==(const Forest&) const = default;
    std::strong_ordering operator<=>(const Forest& o) const {
        if (auto c = vertex_count() <=> o.vertex_count(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            trees_.begin(), trees_.end(), o.trees_.begin(), o.trees_.end());
    }

  private:
    std::vector<RootedTree> trees_;
};

// Ordered (planar) analogues; children order is significant.
class PlanarTree {
  public:
    PlanarTree() : size_(1), enc_("[]") {}
    explicit PlanarTree(std::vector<PlanarTree> children);

    const std::vector<PlanarTree>& children() const { return children_; }
    int vertex_count() const { return size_; }
    const std::string& encoding() const { return enc_; }

    bool operator==(const PlanarTree& o) const { return enc_ == o.enc_; }
    std::strong_ordering operator<=>(const PlanarTree& o) const {
        if (auto c = size_ <=> o.size_; c != 0) return c;
        return enc_ <=> o.enc_;
    }

  private:
    std::vector<PlanarTree> children_;
    int size_;
    std::string enc_;
};

class PlanarForest {
  public:
    PlanarForest() = default;
    explicit PlanarForest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {}

    const std::vector<PlanarTree>& trees() const { return trees_; }
    int vertex_count() const;
    bool empty() const { return trees_.empty(); }

    bool operator==(const PlanarForest&) const = default;
    std::strong_ordering operator<=>(const PlanarForest& o) const {
        if (auto c = vertex_count() <=> o.vertex_count(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            trees_.begin(), trees_.end(), o.trees_.begin(), o.trees_.end());
    }

  private:
    std::vector<PlanarTree> trees_;
};

// Grafting: new root whose children are the forest's trees. B_+(empty) = •.
RootedTree b_plus(const Forest& f);
PlanarTree b_plus(const PlanarForest& f);

// Unbranched chain with i >= 1 vertices.
RootedTree ladder(int i);
PlanarTree planar_ladder(int i);

// Forget the child order, recursively.
RootedTree planar_to_rooted(const PlanarTree& p);
Forest planar_to_rooted(const PlanarForest& p);

// All canonical rooted trees with exactly n vertices, 1 <= n <= 12.
const std::vector<RootedTree>& enumerate_trees(int n);
// All canonical forests with exactly n total vertices (n = 0: just the empty one).
const std::vector<Forest>& enumerate_forests(int n);
// All planar forests with exactly n total vertices.
std::vector<PlanarForest> enumerate_planar_forests(int n);

// |Symm(t)|: product over vertices of factorials of repeated-child multiplicities.
Integer symm_order(const RootedTree& t);
// Forest symmetry order: repeated-tree multiplicity factorials times tree factors.
Integer symm_order(const Forest& f);

// Replace the subtree rules: attach `sub` as a new child of the vertex with
// the given preorder index (root = 0) and re-canonicalize.
RootedTree attach_at(const RootedTree& t, int preorder_index, const RootedTree& sub);

inline const std::string& to_string(const RootedTree& t) { return t.encoding(); }
inline const std::string& to_string(const PlanarTree& t) { return t.encoding(); }
std::string to_string(const Forest& f);
std::string to_string(const PlanarForest& f);

// Nested-bracket grammar: "[]" is a single vertex, children concatenated
// inside; forests are trees concatenated. Planar parses keep written order,
// unordered parses canonicalize.
PlanarForest parse_planar_forest(const std::string& s);
PlanarTree parse_planar_tree(const std::string& s);
Forest parse_forest(const std::string& s);
RootedTree parse_rooted_tree(const std::string& s);

}  // namespace hz

#endif
