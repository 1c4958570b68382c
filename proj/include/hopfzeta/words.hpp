#ifndef HOPFZETA_WORDS_HPP
#define HOPFZETA_WORDS_HPP

#include <compare>
#include <string>

#include "hopfzeta/composition.hpp"
#include "hopfzeta/lincomb.hpp"

namespace hz {

// Word over the alphabet {x, y}; basis of the noncommutative word algebra.
struct Word {
    std::string letters;  // characters 'x' and 'y' only

    Word() = default;
    explicit Word(std::string s) : letters(std::move(s)) {
        for (char c : letters)
            if (c != 'x' && c != 'y')
                throw std::invalid_argument("word letters must be 'x' or 'y'");
    }

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    // Weight of the corresponding composition = word length.
    bool is_admissible() const {
        return letters.empty() || (letters.front() == 'x' && letters.back() == 'y');
    }

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = letters.size() <=> o.letters.size(); c != 0) return c;
        return letters <=> o.letters;
    }
};

using WordSum = LinComb<Word>;

// M_{p1...pk} <-> x^{pk-1} y x^{p(k-1)-1} y ... x^{p1-1} y. Requires an
// admissible composition (last part > 1) resp. a word in Q1 + x Q<x,y> y.
Word comp_to_word(const Composition& I);
Composition word_to_comp(const Word& w);

// Sum over all interleavings preserving each word's internal order.
WordSum shuffle(const Word& u, const Word& v);
WordSum shuffle(const WordSum& u, const WordSum& v);

// Reverse and exchange x <-> y; involutive antiautomorphism.
Word tau(const Word& w);

// h_i acting on an admissible word x^{a1} y ... x^{ak} y: distribute i extra
// x's over the k slots in all ways. h_0 is the identity.
WordSum ohno_action(int i, const Word& w);

// shuffle(u,v) minus the word image of the quasi-shuffle of the
// corresponding compositions; its zeta image vanishes.
WordSum double_shuffle_delta(const Word& u, const Word& v);

inline const std::string& to_string(const Word& w) { return w.letters; }

}  // namespace hz

#endif
