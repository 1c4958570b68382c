#include "hopfzeta.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "hopfzeta/element.hpp"
#include "hopfzeta/mzv.hpp"
#include "hopfzeta/verify.hpp"

using json = nlohmann::json;

struct hz_context {
    hz::VerifyConfig cfg;
    bool json_output = false;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// Every API body runs through here so error handling stays uniform.
template <typename F>
hz_status guarded(hz_context* ctx, F&& f) {
    if (!ctx) return HZ_INTERNAL_ERROR;
    ctx->last_error.clear();
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return HZ_PARSE_ERROR;
    } catch (const std::domain_error& e) {
        ctx->last_error = e.what();
        return HZ_DOMAIN_ERROR;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HZ_INTERNAL_ERROR;
    }
}

std::string wrap_element(const hz_context* ctx, const hz::Element& e) {
    std::string text = hz::to_string(e);
    if (!ctx->json_output) return text;
    return json{{"element", text}}.dump();
}

std::string as_text(const char* s) {
    if (!s) throw std::invalid_argument("null input string");
    return s;
}

char** require_out(char** out) {
    if (!out) throw std::runtime_error("null output pointer");
    return out;
}

hz::Element require_kind(const char* text, hz::Element::Kind kind, const char* what) {
    hz::Element e = hz::parse_element(as_text(text));
    if (e.kind != kind) throw std::invalid_argument(std::string("expected ") + what);
    return e;
}

}  // namespace

extern "C" {

hz_context* hz_context_create(void) { return new hz_context(); }

void hz_context_destroy(hz_context* ctx) { delete ctx; }

hz_status hz_context_set(hz_context* ctx, const char* key, const char* value) {
    return guarded(ctx, [&]() -> hz_status {
        std::string k = key ? key : "", v = value ? value : "";
        if (k == "max_degree") {
            int d = std::stoi(v);
            if (d < 1) throw std::invalid_argument("max_degree must be >= 1");
            ctx->cfg.max_degree = d;
        } else if (k == "N") {
            long n = std::stol(v);
            if (n < 2) throw std::invalid_argument("N must be >= 2");
            ctx->cfg.truncation_N = n;
        } else if (k == "tol") {
            double t = std::stod(v);
            if (!(t > 0)) throw std::invalid_argument("tol must be > 0");
            ctx->cfg.tolerance = t;
        } else if (k == "format") {
            if (v == "json")
                ctx->json_output = true;
            else if (v == "text")
                ctx->json_output = false;
            else
                throw std::invalid_argument("format must be 'text' or 'json'");
        } else {
            throw std::invalid_argument("unknown config key: " + k);
        }
        return HZ_OK;
    });
}

const char* hz_last_error(const hz_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void hz_string_free(char* s) { std::free(s); }

hz_status hz_qsym_mul(hz_context* ctx, const char* a, const char* b, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::QSym, "a QSym element (M basis)");
        auto eb = require_kind(b, hz::Element::Kind::QSym, "a QSym element (M basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::QSym;
        r.qsym = hz::qsym_mul(ea.qsym, eb.qsym);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_qsym_coproduct(hz_context* ctx, const char* a, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::QSym, "a QSym element (M basis)");
        std::string text = hz::to_string(hz::qsym_coproduct(ea.qsym), "M");
        *require_out(out) = dup_string(ctx->json_output ? json{{"element", text}}.dump() : text);
        return HZ_OK;
    });
}

hz_status hz_qsym_antipode(hz_context* ctx, const char* a, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::QSym, "a QSym element (M basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::QSym;
        r.qsym = hz::qsym_antipode(ea.qsym);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_qsym_expand(hz_context* ctx, const char* a, int num_vars, int max_deg, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::QSym, "a QSym element (M basis)");
        hz::TruncatedPoly p = hz::expand_truncated(ea.qsym, num_vars, max_deg);
        std::string text;
        if (p.terms().empty()) text = "0";
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            hz::Rational abs = c < 0 ? hz::Rational(-c) : c;
            if (first) {
                if (c < 0) text += "-";
            } else {
                text += (c < 0) ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "t" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) mono = "1";
            if (abs != 1 || mono == "1") {
                text += hz::to_string(abs);
                if (mono != "1") text += "*";
            }
            if (mono != "1") text += mono;
        }
        *require_out(out) = dup_string(ctx->json_output ? json{{"element", text}}.dump() : text);
        return HZ_OK;
    });
}

hz_status hz_nsym_mul(hz_context* ctx, const char* a, const char* b, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::NSym, "an NSym element (S basis)");
        auto eb = require_kind(b, hz::Element::Kind::NSym, "an NSym element (S basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::NSym;
        r.nsym = hz::nsym_mul(ea.nsym, eb.nsym);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_nsym_coproduct(hz_context* ctx, const char* a, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::NSym, "an NSym element (S basis)");
        std::string text = hz::to_string(hz::nsym_coproduct(ea.nsym), "S");
        *require_out(out) = dup_string(ctx->json_output ? json{{"element", text}}.dump() : text);
        return HZ_OK;
    });
}

hz_status hz_sym_convert(hz_context* ctx, const char* a, const char* target_basis, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::Sym, "a Sym element (e/h/m/p basis)");
        std::string t = target_basis ? target_basis : "";
        hz::SymBasis tag;
        if (t == "m")
            tag = hz::SymBasis::m;
        else if (t == "e")
            tag = hz::SymBasis::e;
        else if (t == "h")
            tag = hz::SymBasis::h;
        else if (t == "p")
            tag = hz::SymBasis::p;
        else
            throw std::invalid_argument("target basis must be one of m, e, h, p");
        hz::Element r;
        r.kind = hz::Element::Kind::Sym;
        r.sym = hz::sym_basis_convert(ea.sym, tag);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_word_shuffle(hz_context* ctx, const char* a, const char* b, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::Word, "a word element (W basis)");
        auto eb = require_kind(b, hz::Element::Kind::Word, "a word element (W basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::Word;
        r.word = hz::shuffle(ea.word, eb.word);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_word_tau(hz_context* ctx, const char* a, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::Word, "a word element (W basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::Word;
        for (const auto& [w, c] : ea.word.terms()) r.word.add_term(hz::tau(w), c);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_word_ohno(hz_context* ctx, int i, const char* w, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ew = require_kind(w, hz::Element::Kind::Word, "a word element (W basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::Word;
        for (const auto& [word, c] : ew.word.terms()) r.word += c * hz::ohno_action(i, word);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

namespace {

hz::ZetaValue eval_zeta(const hz_context* ctx, const hz::Element& e) {
    switch (e.kind) {
        case hz::Element::Kind::QSym: return hz::zeta_of_lincomb(e.qsym, ctx->cfg.truncation_N);
        case hz::Element::Kind::Word: return hz::zeta_of_lincomb(e.word, ctx->cfg.truncation_N);
        default:
            throw std::invalid_argument("zeta is defined on QSym (M basis) or word elements");
    }
}

}  // namespace

hz_status hz_mzv_eval(hz_context* ctx, const char* a, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        hz::ZetaValue z = eval_zeta(ctx, hz::parse_element(as_text(a)));
        json j{{"value", z.value}, {"error_estimate", z.error_estimate}, {"N", z.truncation_N}};
        *require_out(out) = dup_string(j.dump());
        return HZ_OK;
    });
}

hz_status hz_mzv_verify(hz_context* ctx, const char* a, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        hz::ZetaValue z = eval_zeta(ctx, hz::parse_element(as_text(a)));
        bool pass = std::abs(z.value) <= std::max(ctx->cfg.tolerance, 3.0 * z.error_estimate);
        json j{{"value", z.value},
               {"error_estimate", z.error_estimate},
               {"N", z.truncation_N},
               {"pass", pass}};
        *require_out(out) = dup_string(j.dump());
        return pass ? HZ_OK : HZ_VERIFY_FAILED;
    });
}

hz_status hz_mzv_verify_ohno(hz_context* ctx, int weight, int i, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        if (weight < 2) throw std::invalid_argument("ohno verify: need weight >= 2");
        if (i < 0) throw std::invalid_argument("ohno verify: need i >= 0");
        json cases = json::array();
        bool all = true;
        for (const auto& I : hz::compositions_of(weight)) {
            if (!hz::is_admissible(I)) continue;
            hz::Word w = hz::comp_to_word(I);
            hz::WordSum delta = hz::ohno_action(i, w) - hz::ohno_action(i, hz::tau(w));
            hz::VerifyReport r =
                hz::verify_relation(delta, ctx->cfg.truncation_N, ctx->cfg.tolerance);
            all = all && r.pass;
            cases.push_back({{"word", w.letters},
                             {"value", r.value},
                             {"error_estimate", r.error_estimate},
                             {"pass", r.pass}});
        }
        json j{{"weight", weight}, {"i", i}, {"N", ctx->cfg.truncation_N},
               {"pass", all},      {"cases", cases}};
        *require_out(out) = dup_string(j.dump());
        return all ? HZ_OK : HZ_VERIFY_FAILED;
    });
}

hz_status hz_tree_enum(hz_context* ctx, int n, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        std::string text;
        for (const auto& t : hz::enumerate_trees(n)) {
            if (!text.empty()) text += "\n";
            text += t.encoding();
        }
        if (ctx->json_output) {
            json arr = json::array();
            for (const auto& t : hz::enumerate_trees(n)) arr.push_back(t.encoding());
            *require_out(out) = dup_string(json{{"trees", arr}}.dump());
        } else {
            *require_out(out) = dup_string(text);
        }
        return HZ_OK;
    });
}

hz_status hz_tree_symm(hz_context* ctx, const char* tree, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        hz::RootedTree t = hz::parse_rooted_tree(as_text(tree));
        std::string text = hz::symm_order(t).str();
        *require_out(out) = dup_string(ctx->json_output ? json{{"order", text}}.dump() : text);
        return HZ_OK;
    });
}

hz_status hz_tree_glmul(hz_context* ctx, const char* a, const char* b, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto ea = require_kind(a, hz::Element::Kind::T, "a T element (T[...] basis)");
        auto eb = require_kind(b, hz::Element::Kind::T, "a T element (T[...] basis)");
        hz::Element r;
        r.kind = hz::Element::Kind::T;
        r.t = hz::gl_mul(ea.t, eb.t);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_tree_kappa(hz_context* ctx, int n, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        hz::Element r;
        r.kind = hz::Element::Kind::T;
        r.t = hz::kappa(n);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_tree_epsilon(hz_context* ctx, int n, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        hz::Element r;
        r.kind = hz::Element::Kind::T;
        r.t = hz::epsilon(n);
        *require_out(out) = dup_string(wrap_element(ctx, r));
        return HZ_OK;
    });
}

hz_status hz_tree_multiplicity(hz_context* ctx, const char* tree, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        hz::RootedTree t = hz::parse_rooted_tree(as_text(tree));
        std::string text = hz::tree_multiplicity(t).str();
        *require_out(out) = dup_string(ctx->json_output ? json{{"multiplicity", text}}.dump() : text);
        return HZ_OK;
    });
}

hz_status hz_verify_all(hz_context* ctx, char** out) {
    return guarded(ctx, [&]() -> hz_status {
        auto checks = hz::verify_all(ctx->cfg);
        std::string report = hz::render_report(checks);
        bool all = true;
        for (const auto& c : checks) all = all && c.pass;
        if (ctx->json_output) {
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            *require_out(out) = dup_string(json{{"checks", arr}, {"all_pass", all}}.dump());
        } else {
            *require_out(out) = dup_string(report);
        }
        return all ? HZ_OK : HZ_VERIFY_FAILED;
    });
}

}  // extern "C"
