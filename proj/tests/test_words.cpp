#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfzeta/words.hpp"

using namespace hz;

namespace {
std::vector<Word> all_words(int len) {
    std::vector<Word> out{Word("")};
    for (int l = 1; l <= len; ++l) {
        std::vector<Word> next;
        for (int m = 0; m < (1 << l); ++m) {
            std::string s;
            for (int j = 0; j < l; ++j) s += (m >> j & 1) ? 'y' : 'x';
            next.push_back(Word(s));
        }
        out.insert(out.end(), next.begin(), next.end());
    }
    return out;
}
}  // namespace

TEST_CASE("composition-word dictionary") {
    CHECK(comp_to_word(Composition({1, 2})) == Word("xyy"));
    CHECK(comp_to_word(Composition({3})) == Word("xxy"));
    CHECK(comp_to_word(Composition()) == Word(""));
    CHECK(word_to_comp(Word("xyy")) == Composition({1, 2}));
    CHECK_THROWS_AS(comp_to_word(Composition({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(word_to_comp(Word("yx")), std::invalid_argument);
    // mutually inverse on admissible words of length <= 8
    for (const auto& w : all_words(8))
        if (w.is_admissible() && !w.empty()) CHECK(comp_to_word(word_to_comp(w)) == w);
}

TEST_CASE("shuffle product") {
    WordSum s = shuffle(Word("xy"), Word("xy"));
    CHECK(s.coefficient(Word("xxyy")) == 4);
    CHECK(s.coefficient(Word("xyxy")) == 2);
    CHECK(shuffle(Word(""), Word("xxy")) == WordSum(Word("xxy")));
    WordSum t = shuffle(Word("x"), Word("y"));
    CHECK(t.coefficient(Word("xy")) == 1);
    CHECK(t.coefficient(Word("yx")) == 1);
}

TEST_CASE("shuffle is commutative and associative") {
    auto words = all_words(2);
    for (const auto& u : words)
        for (const auto& v : words) {
            CHECK(shuffle(u, v) == shuffle(v, u));
            for (const auto& w : words) {
                if (u.length() + v.length() + w.length() > 6) continue;
                CHECK(shuffle(shuffle(u, v), WordSum(w)) == shuffle(WordSum(u), shuffle(v, w)));
            }
        }
}

TEST_CASE("tau is an involutive antiautomorphism") {
    CHECK(tau(Word("xxy")) == Word("xyy"));
    CHECK(tau(Word("xy")) == Word("xy"));
    CHECK(tau(tau(Word("xyxyy"))) == Word("xyxyy"));
    for (const auto& u : all_words(3))
        for (const auto& v : all_words(3)) {
            CHECK(tau(Word(u.letters + v.letters)) == Word(tau(v).letters + tau(u).letters));
        }
    for (const auto& w : all_words(6))
        if (w.is_admissible()) CHECK(tau(w).is_admissible());
}

TEST_CASE("ohno action") {
    CHECK(ohno_action(0, Word("xxy")) == WordSum(Word("xxy")));
    CHECK(ohno_action(1, Word("xxy")) == WordSum(Word("xxxy")));
    WordSum r = ohno_action(1, Word("xyy"));
    CHECK(r.coefficient(Word("xxyy")) == 1);
    CHECK(r.coefficient(Word("xyxy")) == 1);
    CHECK_THROWS_AS(ohno_action(-1, Word("xy")), std::invalid_argument);
    CHECK_THROWS_AS(ohno_action(1, Word("")), std::invalid_argument);
}

TEST_CASE("ohno action term count is C(i+k-1, k-1)") {
    for (const auto& w : all_words(5)) {
        if (!w.is_admissible() || w.empty()) continue;
        int k = 0;
        for (char c : w.letters)
            if (c == 'y') ++k;
        for (int i = 0; i <= 3; ++i) {
            Rational total = 0;
            for (const auto& [word, c] : ohno_action(i, w)) total += c;
            CHECK(total == Rational(binomial(static_cast<unsigned>(i + k - 1),
                                             static_cast<unsigned>(k - 1))));
        }
    }
}

TEST_CASE("double shuffle delta") {
    WordSum d = double_shuffle_delta(Word("xy"), Word("xy"));
    // shuffle: 4 xxyy + 2 xyxy; stuffle image: 2 xyxy + xxxy
    CHECK(d.coefficient(Word("xxyy")) == 4);
    CHECK(d.coefficient(Word("xyxy")) == 0);
    CHECK(d.coefficient(Word("xxxy")) == -1);
    CHECK_THROWS_AS(double_shuffle_delta(Word("xy"), Word("")), std::invalid_argument);
}
