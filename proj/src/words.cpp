#include "hopfzeta/words.hpp"

#include "hopfzeta/qsym.hpp"

namespace hz {

Word comp_to_word(const Composition& I) {
    if (!is_admissible(I))
        throw std::invalid_argument("comp_to_word: composition " + to_string(I) +
                                    " is not admissible (last part must be > 1)");
    std::string s;
    for (auto it = I.parts.rbegin(); it != I.parts.rend(); ++it) {
        s.append(static_cast<size_t>(*it - 1), 'x');
        s.push_back('y');
    }
    return Word(s);
}

Composition word_to_comp(const Word& w) {
    if (!w.is_admissible())
        throw std::invalid_argument("word_to_comp: word '" + w.letters +
                                    "' is not in Q1 + x Q<x,y> y");
    std::vector<int> rev_parts;  // read x^{a}y blocks left to right
    int run = 0;
    for (char c : w.letters) {
        if (c == 'x') {
            ++run;
        } else {
            rev_parts.push_back(run + 1);
            run = 0;
        }
    }
    std::vector<int> parts(rev_parts.rbegin(), rev_parts.rend());
    return Composition(parts);
}

WordSum shuffle(const Word& u, const Word& v) {
    if (u.empty()) return WordSum(v);
    if (v.empty()) return WordSum(u);
    auto tail = [](const Word& w) { return Word(w.letters.substr(1)); };
    auto prepend = [](char head, const WordSum& rest) {
        WordSum out;
        for (const auto& [w, c] : rest.terms()) out.add_term(Word(head + w.letters), c);
        return out;
    };
    WordSum out = prepend(u.letters[0], shuffle(tail(u), v));
    out += prepend(v.letters[0], shuffle(u, tail(v)));
    return out;
}

WordSum shuffle(const WordSum& u, const WordSum& v) {
    return bilinear(u, v, [](const Word& a, const Word& b) { return shuffle(a, b); });
}

Word tau(const Word& w) {
    std::string s(w.letters.rbegin(), w.letters.rend());
    for (char& c : s) c = (c == 'x') ? 'y' : 'x';
    return Word(s);
}

WordSum ohno_action(int i, const Word& w) {
    if (i < 0) throw std::invalid_argument("ohno_action: need i >= 0");
    if (w.empty()) throw std::invalid_argument("ohno_action: word must be nonempty");
    if (!w.is_admissible())
        throw std::invalid_argument("ohno_action: word '" + w.letters + "' is not admissible");
    // slots a_1..a_k from w = x^{a1} y ... x^{ak} y
    std::vector<int> slots;
    int run = 0;
    for (char c : w.letters) {
        if (c == 'x') {
            ++run;
        } else {
            slots.push_back(run);
            run = 0;
        }
    }
    const int k = static_cast<int>(slots.size());
    WordSum out;
    std::vector<int> extra(k, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k - 1) {
            extra[pos] = rem;
            std::string s;
            for (int j = 0; j < k; ++j) {
                s.append(static_cast<size_t>(slots[j] + extra[j]), 'x');
                s.push_back('y');
            }
            out.add_term(Word(s), 1);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            extra[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, i);
    return out;
}

WordSum double_shuffle_delta(const Word& u, const Word& v) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("double_shuffle_delta: words must be nonempty and admissible");
    Composition cu = word_to_comp(u), cv = word_to_comp(v);
    WordSum out = shuffle(u, v);
    for (const auto& [I, c] : quasi_shuffle(cu, cv))
        out.add_term(comp_to_word(I), -c);
    return out;
}

}  // namespace hz
