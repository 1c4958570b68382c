#ifndef HOPFZETA_HOPF_TREES_HPP
#define HOPFZETA_HOPF_TREES_HPP

#include "hopfzeta/lincomb.hpp"
#include "hopfzeta/qsym.hpp"
#include "hopfzeta/trees.hpp"

namespace hz {

// H_K: commutative algebra on forests (disjoint union), cut coproduct.
using HKElement = LinComb<Forest>;
using ForestPair = std::pair<Forest, Forest>;

// H_F: noncommutative algebra on planar forests (concatenation), planar cuts.
using HFElement = LinComb<PlanarForest>;
using PlanarForestPair = std::pair<PlanarForest, PlanarForest>;

// T (Grossman-Larson): basis = nonempty rooted trees, unit = single vertex,
// grading |t| = non-root vertices.
using TElement = LinComb<RootedTree>;
using TreePair = std::pair<RootedTree, RootedTree>;

// --- Kreimer H_K ---

HKElement hk_mul(const HKElement& a, const HKElement& b);
// Admissible-cut coproduct, pruned part (x) trunk, multiplicative on forests.
LinComb<ForestPair> hk_coproduct(const Forest& f);
LinComb<ForestPair> hk_coproduct(const HKElement& a);
HKElement hk_antipode(const HKElement& a);

// --- Foissy H_F ---

HFElement hf_mul(const HFElement& a, const HFElement& b);
LinComb<PlanarForestPair> hf_coproduct(const PlanarForest& f);
LinComb<PlanarForestPair> hf_coproduct(const HFElement& a);
HFElement hf_antipode(const HFElement& a);

// --- Grossman-Larson T ---

// t1 = B_+(s1..sm): attach each branch s_j to any vertex of t2, summed over
// all functions from branches to vertices.
TElement gl_product(const RootedTree& t1, const RootedTree& t2);
TElement gl_mul(const TElement& a, const TElement& b);
// Branch splittings of B_+(f) with multiset multiplicities.
LinComb<TreePair> gl_coproduct(const RootedTree& t);
LinComb<TreePair> gl_coproduct(const TElement& a);
TElement gl_antipode(const TElement& a);

// kappa_n = sum over trees with n non-root vertices of t / |Symm(t)|.
TElement kappa(int n);
// epsilon_n = (-1)^n S(kappa_n); n! epsilon_n is the n-corolla.
TElement epsilon(int n);

// N = l_2 o (-), iterated k times.
TElement n_operator(const RootedTree& t, int k);
// Coefficient of tp in N^{|tp|-|t|}(t); zero when |tp| < |t|.
Rational n_coefficient(const RootedTree& t, const RootedTree& tp);
// n(. ; t), a positive integer for every rooted tree.
Integer tree_multiplicity(const RootedTree& t);
// Closed multinomial formula for n(. ; B_+(l_{n1} ... l_{nk})).
Rational multiplicity_formula(const std::vector<int>& ns);

// --- maps between the worlds ---

// phi: Sym -> H_K, e_i -> ladder l_i (algebra map).
HKElement phi(const SymElement& s);
// Phi: NSym -> H_F, e_i -> planar ladder (algebra map).
HFElement Phi(const NSymElement& a);
// pi: H_F -> H_K, forget planar order.
HKElement pi(const HFElement& a);

// <B_+(g), f> = |Symm(f)| if g = f else 0; the T x H_K duality pairing.
Rational pair_T_HK(const RootedTree& t, const Forest& f);
Rational pair_T_HK(const TElement& a, const HKElement& b);

// phi^*: T -> Sym on homogeneous elements, via the pairing against phi(m_lambda).
SymElement phi_star(const TElement& a);

}  // namespace hz

#endif
