#ifndef HOPFZETA_QSYM_HPP
#define HOPFZETA_QSYM_HPP

#include "hopfzeta/composition.hpp"
#include "hopfzeta/lincomb.hpp"
#include "hopfzeta/truncated_poly.hpp"

namespace hz {

// Elements of QSym in the monomial basis {M_I}, of NSym in the complete
// basis {S_I}, and of Sym over partition keys with a basis tag.
using QSymElement = LinComb<Composition>;
using NSymElement = LinComb<Composition>;
using CompPair = std::pair<Composition, Composition>;
using PartPair = std::pair<Partition, Partition>;

enum class SymBasis { m, e, h, p };

struct SymElement {
    LinComb<Partition> value;
    SymBasis basis = SymBasis::m;

    bool operator==(const SymElement&) const = default;
};

// --- QSym ---

// Defining power-series expansion of M_I over t_1..t_num_vars at degree <= max_deg.
TruncatedPoly expand_truncated(const Composition& I, int num_vars, int max_deg);
TruncatedPoly expand_truncated(const QSymElement& f, int num_vars, int max_deg);

bool is_quasi_symmetric(const TruncatedPoly& p);

// Quasi-shuffle of compositions (interleave or merge adjacent parts), the
// QSym product in the M basis.
QSymElement quasi_shuffle(const Composition& a, const Composition& b);
QSymElement qsym_mul(const QSymElement& a, const QSymElement& b);

// Deconcatenation coproduct.
LinComb<CompPair> qsym_coproduct(const Composition& I);
LinComb<CompPair> qsym_coproduct(const QSymElement& a);

QSymElement qsym_antipode(const QSymElement& a);

bool is_symmetric(const QSymElement& a);

// --- NSym (internal basis S, dual to M) ---

NSymElement nsym_mul(const NSymElement& a, const NSymElement& b);
LinComb<CompPair> nsym_coproduct(const NSymElement& a);
NSymElement nsym_antipode(const NSymElement& a);

// e_n expanded in the S basis: e_n = sum_{I |= n} (-1)^{n - len(I)} S_I.
NSymElement nsym_e(int n);
// Product e_{i1} ... e_{ik}.
NSymElement nsym_e_word(const std::vector<int>& word);

// <M_I, S_J> = delta_{I,J}, extended bilinearly.
Rational pair_qsym_nsym(const QSymElement& a, const NSymElement& b);

// e_i -> e_i, partition keys; output in the e basis.
SymElement abelianize(const NSymElement& a);

// --- Sym ---

SymElement sym_e(int n);
SymElement sym_h(int n);
SymElement sym_p(int n);
SymElement sym_m(const Partition& lam);

SymElement sym_add(const SymElement& a, const SymElement& b);
SymElement sym_mul(const SymElement& a, const SymElement& b);

// m_lambda -> sum of M_I over distinct rearrangements; other tags via m.
QSymElement sym_to_qsym(const SymElement& s);

// Exact basis change via the series oracle (transition matrices solved once
// per degree).
SymElement sym_basis_convert(const SymElement& s, SymBasis target);

std::string basis_letter(SymBasis b);

}  // namespace hz

#endif
