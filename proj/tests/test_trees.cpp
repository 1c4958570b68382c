#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hopfzeta/trees.hpp"

using namespace hz;

namespace {

// Independent count of rooted trees via the classical recurrence
//   (n+1) uses r(k) and the divisor sum; r(1) = 1.
std::vector<long> rooted_tree_counts(int max_n) {
    std::vector<long> r(max_n + 1, 0);
    r[1] = 1;
    for (int n = 1; n < max_n; ++n) {
        long acc = 0;
        for (int k = 1; k <= n; ++k) {
            long dsum = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) dsum += static_cast<long>(d) * r[d];
            acc += dsum * r[n - k + 1];
        }
        r[n + 1] = acc / n;
    }
    return r;
}

// All ordered child arrangements of a tree, as planar trees.
std::vector<PlanarTree> all_orderings(const RootedTree& t) {
    std::vector<std::vector<PlanarTree>> child_opts;
    for (const auto& c : t.children()) child_opts.push_back(all_orderings(c));
    std::vector<PlanarTree> out;
    std::vector<int> idx(child_opts.size(), 0);
    std::vector<int> perm(child_opts.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    do {
        // for each permutation, take every combination of child orderings
        std::vector<size_t> pos(child_opts.size(), 0);
        bool done = false;
        while (!done) {
            std::vector<PlanarTree> kids;
            for (size_t i = 0; i < perm.size(); ++i)
                kids.push_back(child_opts[perm[i]][pos[perm[i]]]);
            out.push_back(PlanarTree(kids));
            done = true;
            for (size_t i = 0; i < pos.size(); ++i) {
                if (++pos[i] < child_opts[i].size()) {
                    done = false;
                    break;
                }
                pos[i] = 0;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Brute-force automorphism count: orderings collapsing to the same encoding.
Integer brute_symm(const RootedTree& t) {
    auto ords = all_orderings(t);
    // |orderings that map to distinct planar trees| * |Aut| = total orderings
    std::set<std::string> distinct;
    for (const auto& p : ords) distinct.insert(p.encoding());
    return Integer(ords.size()) / Integer(distinct.size());
}

}  // namespace

TEST_CASE("ladders") {
    CHECK(ladder(1).encoding() == "[]");
    CHECK(ladder(2).encoding() == "[[]]");
    CHECK(ladder(3).encoding() == "[[[]]]");
    CHECK(ladder(4).vertex_count() == 4);
    CHECK_THROWS_AS(ladder(0), std::invalid_argument);
}

TEST_CASE("b_plus") {
    CHECK(b_plus(Forest()).encoding() == "[]");
    CHECK(b_plus(Forest({RootedTree(), RootedTree()})).encoding() == "[[][]]");
    CHECK(b_plus(Forest({ladder(2)})) == ladder(3));
}

TEST_CASE("canonicalization collapses isomorphic trees") {
    PlanarTree a = parse_planar_tree("[[][[]]]");
    PlanarTree b = parse_planar_tree("[[[]][]]");
    CHECK_FALSE(a == b);
    CHECK(planar_to_rooted(a) == planar_to_rooted(b));
    // forests forget order too
    Forest f1 = parse_forest("[][[]]");
    Forest f2 = parse_forest("[[]][]");
    CHECK(f1 == f2);
    // idempotence: canonical of canonical is itself
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_trees(n)) {
            RootedTree again(t.children());
            CHECK(again == t);
        }
}

TEST_CASE("all orderings of a small tree collapse to one representative") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_trees(n))
            for (const auto& p : all_orderings(t)) CHECK(planar_to_rooted(p) == t);
}

TEST_CASE("enumeration counts match the recurrence oracle") {
    auto oracle = rooted_tree_counts(8);
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(3).size() == 2);
    CHECK(enumerate_trees(4).size() == 4);
    CHECK(enumerate_trees(5).size() == 9);
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_trees(n).size() == static_cast<size_t>(oracle[n]));
    CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(13), std::invalid_argument);
    // no duplicates
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> encs;
        for (const auto& t : enumerate_trees(n)) encs.insert(t.encoding());
        CHECK(encs.size() == enumerate_trees(n).size());
    }
}

TEST_CASE("planar forest enumeration follows Catalan numbers") {
    long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_planar_forests(n).size() == static_cast<size_t>(catalan[n]));
}

TEST_CASE("symmetry group orders") {
    for (int i = 1; i <= 5; ++i) CHECK(symm_order(ladder(i)) == 1);
    for (int n = 1; n <= 4; ++n) {
        RootedTree corolla(std::vector<RootedTree>(n, RootedTree()));
        CHECK(symm_order(corolla) == factorial(static_cast<unsigned>(n)));
    }
    RootedTree mixed = b_plus(Forest({RootedTree(), ladder(2)}));
    CHECK(symm_order(mixed) == 1);
    // forest with repeated trees
    CHECK(symm_order(Forest({RootedTree(), RootedTree()})) == 2);
    // brute-force cross-check on all trees of <= 5 vertices
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) CHECK(symm_order(t) == brute_symm(t));
}

TEST_CASE("parsing and printing") {
    CHECK(parse_rooted_tree("[[][[]]]").encoding() == "[[][[]]]");
    CHECK(to_string(parse_forest("[][[]]")) == "[][[]]");
    CHECK(parse_planar_forest("").trees().empty());
    CHECK_THROWS_AS(parse_planar_tree("[[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_planar_tree("[][]"), std::invalid_argument);
}
