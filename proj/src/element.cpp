#include "hopfzeta/element.hpp"

#include <cctype>
#include <sstream>

namespace hz {

namespace {

struct Term {
    Rational coeff;
    char letter;        // M S e h m p W T K F
    std::string inner;  // text between the delimiters
};

[[noreturn]] void fail(const std::string& text, size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + " in \"" +
                                text + "\": " + what);
}

std::vector<Term> tokenize(const std::string& text) {
    std::vector<Term> terms;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) fail(text, i, "empty input");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (text[i] == '+') {
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else {
                fail(text, i, "expected '+' or '-'");
            }
            skip_ws();
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
            skip_ws();
        } else if (text[i] == '+') {
            ++i;
            skip_ws();
        }
        first = false;
        // optional rational coefficient
        Rational coeff = sign;
        size_t start = i;
        while (i < text.size() && (isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            ++i;
        if (i > start) {
            // digits may also be the start of nothing valid; coefficient must
            // be followed by '*' or end the term only via '*'
            std::string num = text.substr(start, i - start);
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                coeff = coeff * parse_rational(num);
                ++i;
                skip_ws();
            } else {
                fail(text, start, "numeric coefficient must be followed by '*'");
            }
        }
        if (i >= text.size()) fail(text, i, "expected basis token");
        char letter = text[i];
        if (std::string("MSehmpWTKF").find(letter) == std::string::npos)
            fail(text, i, std::string("unknown basis token '") + letter + "'");
        ++i;
        skip_ws();
        char open, close;
        if (letter == 'T' || letter == 'K' || letter == 'F') {
            open = '[';
            close = ']';
        } else {
            open = '(';
            close = ')';
        }
        if (i >= text.size() || text[i] != open)
            fail(text, i, std::string("expected '") + open + "'");
        // find matching close at depth 0
        size_t begin = i + 1;
        int depth = 1;
        size_t j = begin;
        for (; j < text.size() && depth > 0; ++j) {
            if (text[j] == open) ++depth;
            if (text[j] == close) --depth;
        }
        if (depth != 0) fail(text, i, std::string("unbalanced '") + open + "'");
        std::string inner = text.substr(begin, j - 1 - begin);
        i = j;
        terms.push_back({coeff, letter, inner});
        skip_ws();
    }
    return terms;
}

SymBasis sym_tag(char letter) {
    switch (letter) {
        case 'e': return SymBasis::e;
        case 'h': return SymBasis::h;
        case 'm': return SymBasis::m;
        default: return SymBasis::p;
    }
}

}  // namespace

Element parse_element(const std::string& text) {
    auto terms = tokenize(text);
    Element out;
    char first_letter = terms[0].letter;
    auto kind_of = [](char l) {
        switch (l) {
            case 'M': return Element::Kind::QSym;
            case 'S': return Element::Kind::NSym;
            case 'W': return Element::Kind::Word;
            case 'T': return Element::Kind::T;
            case 'K': return Element::Kind::HK;
            case 'F': return Element::Kind::HF;
            default: return Element::Kind::Sym;
        }
    };
    out.kind = kind_of(first_letter);
    if (out.kind == Element::Kind::Sym) out.sym.basis = sym_tag(first_letter);
    for (const auto& t : terms) {
        if (kind_of(t.letter) != out.kind)
            throw std::invalid_argument(std::string("cannot mix basis tokens '") + first_letter +
                                        "' and '" + t.letter + "' in one element");
        switch (out.kind) {
            case Element::Kind::QSym:
                out.qsym.add_term(parse_composition(t.inner), t.coeff);
                break;
            case Element::Kind::NSym:
                out.nsym.add_term(parse_composition(t.inner), t.coeff);
                break;
            case Element::Kind::Sym: {
                SymElement s{LinComb<Partition>(Partition(parse_composition(t.inner).parts)),
                             sym_tag(t.letter)};
                out.sym = sym_add(out.sym, {s.value * t.coeff, s.basis});
                break;
            }
            case Element::Kind::Word:
                out.word.add_term(Word(t.inner), t.coeff);
                break;
            case Element::Kind::T:
                // T's delimiter doubles as the root bracket: T[[]] is the ladder l_2
                out.t.add_term(parse_rooted_tree("[" + t.inner + "]"), t.coeff);
                break;
            case Element::Kind::HK:
                out.hk.add_term(parse_forest(t.inner), t.coeff);
                break;
            case Element::Kind::HF:
                out.hf.add_term(parse_planar_forest(t.inner), t.coeff);
                break;
        }
    }
    return out;
}

namespace {

// Shared renderer: joined "+"/"-" terms in the LinComb's own (grade, lex) order.
template <typename B, typename KeyFmt>
std::string render(const LinComb<B>& a, KeyFmt&& key_fmt) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : a.terms()) {
        Rational abs = c < 0 ? -c : c;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        if (abs != 1) s += to_string(abs) + "*";
        s += key_fmt(b);
        first = false;
    }
    return s;
}

}  // namespace

std::string to_string(const QSymElement& a, const std::string& token) {
    return render(a, [&](const Composition& I) { return token + "(" + to_string(I) + ")"; });
}

std::string to_string(const SymElement& a) {
    std::string tok = basis_letter(a.basis);
    return render(a.value, [&](const Partition& p) { return tok + "(" + to_string(p) + ")"; });
}

std::string to_string(const WordSum& a) {
    return render(a, [](const Word& w) { return "W(" + w.letters + ")"; });
}

std::string to_string(const TElement& a) {
    return render(a, [](const RootedTree& t) { return "T" + t.encoding(); });
}

std::string to_string(const HKElement& a) {
    return render(a, [](const Forest& f) { return "K[" + to_string(f) + "]"; });
}

std::string to_string(const HFElement& a) {
    return render(a, [](const PlanarForest& f) { return "F[" + to_string(f) + "]"; });
}

std::string to_string(const LinComb<CompPair>& a, const std::string& token) {
    return render(a, [&](const CompPair& p) {
        return token + "(" + to_string(p.first) + ") (x) " + token + "(" + to_string(p.second) +
               ")";
    });
}

std::string to_string(const LinComb<TreePair>& a) {
    return render(a, [](const TreePair& p) {
        return "T" + p.first.encoding() + " (x) T" + p.second.encoding();
    });
}

std::string to_string(const LinComb<ForestPair>& a) {
    return render(a, [](const ForestPair& p) {
        return "K[" + to_string(p.first) + "] (x) K[" + to_string(p.second) + "]";
    });
}

std::string to_string(const LinComb<PlanarForestPair>& a) {
    return render(a, [](const PlanarForestPair& p) {
        return "F[" + to_string(p.first) + "] (x) F[" + to_string(p.second) + "]";
    });
}

std::string to_string(const Element& e) {
    switch (e.kind) {
        case Element::Kind::QSym: return to_string(e.qsym, "M");
        case Element::Kind::NSym: return to_string(e.nsym, "S");
        case Element::Kind::Sym: return to_string(e.sym);
        case Element::Kind::Word: return to_string(e.word);
        case Element::Kind::T: return to_string(e.t);
        case Element::Kind::HK: return to_string(e.hk);
        case Element::Kind::HF: return to_string(e.hf);
    }
    return "0";
}

}  // namespace hz
