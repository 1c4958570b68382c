#ifndef HOPFZETA_ELEMENT_HPP
#define HOPFZETA_ELEMENT_HPP

#include <string>

#include "hopfzeta/hopf_trees.hpp"
#include "hopfzeta/qsym.hpp"
#include "hopfzeta/words.hpp"

namespace hz {

// Heterogeneous element for the text interface. Exactly one payload is
// populated, per kind.
struct Element {
    enum class Kind { QSym, NSym, Sym, Word, T, HK, HF };

    Kind kind = Kind::QSym;
    QSymElement qsym;   // M basis
    NSymElement nsym;   // S basis
    SymElement sym;     // tagged basis
    WordSum word;
    TElement t;
    HKElement hk;
    HFElement hf;

    bool operator==(const Element&) const = default;
};

// Grammar: terms "c*M(2,1)", "1/2*S(1,2)", "e(2,1)", "W(xxy)", "T[[][]]",
// "K[[][[]]]", "F[[][]]" joined by '+'/'-'; whitespace insignificant.
// Throws std::invalid_argument with a position-annotated message.
Element parse_element(const std::string& text);

// Deterministic rendering: terms by (grade, lexicographic key); "0" for zero.
std::string to_string(const Element& e);

std::string to_string(const QSymElement& a, const std::string& token);
std::string to_string(const SymElement& a);
std::string to_string(const WordSum& a);
std::string to_string(const TElement& a);
std::string to_string(const HKElement& a);
std::string to_string(const HFElement& a);
std::string to_string(const LinComb<CompPair>& a, const std::string& token);
std::string to_string(const LinComb<TreePair>& a);
std::string to_string(const LinComb<ForestPair>& a);
std::string to_string(const LinComb<PlanarForestPair>& a);

}  // namespace hz

#endif
