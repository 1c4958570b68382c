// Batch CLI over the hopfzeta C API.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 parse or argument error.

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "hopfzeta.h"

namespace {

struct Session {
    hz_context* ctx = nullptr;
    Session() : ctx(hz_context_create()) {}
    ~Session() { hz_context_destroy(ctx); }
};

int status_to_exit(hz_status s) {
    switch (s) {
        case HZ_OK: return 0;
        case HZ_VERIFY_FAILED: return 1;
        case HZ_PARSE_ERROR:
        case HZ_DOMAIN_ERROR: return 2;
        default: return 1;
    }
}

int finish(hz_context* ctx, hz_status s, char* out) {
    if (out) {
        std::puts(out);
        hz_string_free(out);
    }
    if (s != HZ_OK && s != HZ_VERIFY_FAILED) std::fprintf(stderr, "error: %s\n", hz_last_error(ctx));
    return status_to_exit(s);
}

}  // namespace

int main(int argc, char** argv) {
    Session session;
    hz_context* ctx = session.ctx;

    CLI::App app{"hopfzeta: Hopf algebras of quasi-symmetric functions, words, "
                 "rooted trees, and a numerical multiple-zeta-value engine"};
    app.require_subcommand(1);
    // global flags remain usable after a subcommand name
    app.fallthrough();

    int max_degree = 5;
    std::string trunc_n = "1000000";
    double tol = 1e-4;
    bool json = false;
    app.add_option("--max-degree", max_degree, "degree cap for verification suites")
        ->capture_default_str();
    app.add_option("--N", trunc_n, "zeta truncation level")->capture_default_str();
    app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    app.add_flag("--json", json, "JSON output");

    std::string arg1, arg2;
    int int_arg = 0;

    // qsym
    auto* qsym = app.add_subcommand("qsym", "QSym/NSym/Sym operations (M, S, e/h/m/p bases)");
    qsym->require_subcommand(1);
    auto* q_mul = qsym->add_subcommand("mul", "quasi-shuffle product of two M-basis elements");
    q_mul->add_option("a", arg1)->required();
    q_mul->add_option("b", arg2)->required();
    auto* q_cop = qsym->add_subcommand("coprod", "deconcatenation coproduct");
    q_cop->add_option("a", arg1)->required();
    auto* q_ant = qsym->add_subcommand("antipode", "antipode of an M-basis element");
    q_ant->add_option("a", arg1)->required();
    auto* q_exp = qsym->add_subcommand("expand", "truncated power-series expansion");
    int num_vars = 4, max_deg = 6;
    q_exp->add_option("a", arg1)->required();
    q_exp->add_option("--vars", num_vars, "number of variables")->capture_default_str();
    q_exp->add_option("--deg", max_deg, "degree cap")->capture_default_str();
    auto* n_mul = qsym->add_subcommand("nmul", "NSym product (concatenation in the S basis)");
    n_mul->add_option("a", arg1)->required();
    n_mul->add_option("b", arg2)->required();
    auto* n_cop = qsym->add_subcommand("ncoprod", "NSym coproduct");
    n_cop->add_option("a", arg1)->required();
    auto* s_conv = qsym->add_subcommand("convert", "Sym basis conversion");
    s_conv->add_option("a", arg1)->required();
    s_conv->add_option("target", arg2, "target basis: m, e, h or p")->required();

    // word
    auto* word = app.add_subcommand("word", "word algebra over {x,y}");
    word->require_subcommand(1);
    auto* w_shuf = word->add_subcommand("shuffle", "shuffle product");
    w_shuf->add_option("a", arg1)->required();
    w_shuf->add_option("b", arg2)->required();
    auto* w_tau = word->add_subcommand("tau", "duality antiautomorphism");
    w_tau->add_option("a", arg1)->required();
    auto* w_ohno = word->add_subcommand("ohno", "h_i action on an admissible word");
    w_ohno->add_option("--i", int_arg, "degree of h_i")->required();
    w_ohno->add_option("w", arg1)->required();

    // mzv
    auto* mzv = app.add_subcommand("mzv", "numerical multiple zeta values");
    mzv->require_subcommand(1);
    auto* m_eval = mzv->add_subcommand("eval", "truncated zeta of an M-basis or word element");
    m_eval->add_option("a", arg1)->required();
    auto* m_verify = mzv->add_subcommand("verify", "numeric identity certification");
    bool ohno_flag = false;
    int ohno_weight = 3, ohno_i = 1;
    m_verify->add_option("a", arg1, "element whose zeta should vanish");
    m_verify->add_flag("--ohno", ohno_flag, "run the Ohno family instead of an element");
    m_verify->add_option("--weight", ohno_weight, "word weight for --ohno")->capture_default_str();
    m_verify->add_option("--i", ohno_i, "h_i degree for --ohno")->capture_default_str();

    // tree
    auto* tree = app.add_subcommand("tree", "rooted trees and tree Hopf algebras");
    tree->require_subcommand(1);
    auto* t_enum = tree->add_subcommand("enum", "all rooted trees with n vertices");
    t_enum->add_option("n", int_arg)->required();
    auto* t_symm = tree->add_subcommand("symm", "symmetry group order");
    t_symm->add_option("t", arg1)->required();
    auto* t_gl = tree->add_subcommand("glmul", "Grossman-Larson product of T elements");
    t_gl->add_option("a", arg1)->required();
    t_gl->add_option("b", arg2)->required();
    auto* t_kappa = tree->add_subcommand("kappa", "kappa_n in T");
    t_kappa->add_option("n", int_arg)->required();
    auto* t_eps = tree->add_subcommand("epsilon", "epsilon_n = (-1)^n S(kappa_n)");
    t_eps->add_option("n", int_arg)->required();
    auto* t_mult = tree->add_subcommand("mult", "tree multiplicity n(.;t)");
    t_mult->add_option("t", arg1)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "identity suites");
    auto* v_all = verify->add_subcommand("all", "run every identity suite up to --max-degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    hz_context_set(ctx, "max_degree", std::to_string(max_degree).c_str());
    if (hz_context_set(ctx, "N", trunc_n.c_str()) != HZ_OK) {
        std::fprintf(stderr, "error: %s\n", hz_last_error(ctx));
        return 2;
    }
    hz_context_set(ctx, "tol", std::to_string(tol).c_str());
    hz_context_set(ctx, "format", json ? "json" : "text");

    char* out = nullptr;
    hz_status s = HZ_INTERNAL_ERROR;
    if (q_mul->parsed()) s = hz_qsym_mul(ctx, arg1.c_str(), arg2.c_str(), &out);
    else if (q_cop->parsed()) s = hz_qsym_coproduct(ctx, arg1.c_str(), &out);
    else if (q_ant->parsed()) s = hz_qsym_antipode(ctx, arg1.c_str(), &out);
    else if (q_exp->parsed()) s = hz_qsym_expand(ctx, arg1.c_str(), num_vars, max_deg, &out);
    else if (n_mul->parsed()) s = hz_nsym_mul(ctx, arg1.c_str(), arg2.c_str(), &out);
    else if (n_cop->parsed()) s = hz_nsym_coproduct(ctx, arg1.c_str(), &out);
    else if (s_conv->parsed()) s = hz_sym_convert(ctx, arg1.c_str(), arg2.c_str(), &out);
    else if (w_shuf->parsed()) s = hz_word_shuffle(ctx, arg1.c_str(), arg2.c_str(), &out);
    else if (w_tau->parsed()) s = hz_word_tau(ctx, arg1.c_str(), &out);
    else if (w_ohno->parsed()) s = hz_word_ohno(ctx, int_arg, arg1.c_str(), &out);
    else if (m_eval->parsed()) s = hz_mzv_eval(ctx, arg1.c_str(), &out);
    else if (m_verify->parsed()) {
        if (ohno_flag)
            s = hz_mzv_verify_ohno(ctx, ohno_weight, ohno_i, &out);
        else if (!arg1.empty())
            s = hz_mzv_verify(ctx, arg1.c_str(), &out);
        else {
            std::fprintf(stderr, "error: mzv verify needs an element or --ohno\n");
            return 2;
        }
    } else if (t_enum->parsed()) s = hz_tree_enum(ctx, int_arg, &out);
    else if (t_symm->parsed()) s = hz_tree_symm(ctx, arg1.c_str(), &out);
    else if (t_gl->parsed()) s = hz_tree_glmul(ctx, arg1.c_str(), arg2.c_str(), &out);
    else if (t_kappa->parsed()) s = hz_tree_kappa(ctx, int_arg, &out);
    else if (t_eps->parsed()) s = hz_tree_epsilon(ctx, int_arg, &out);
    else if (t_mult->parsed()) s = hz_tree_multiplicity(ctx, arg1.c_str(), &out);
    else if (v_all->parsed()) s = hz_verify_all(ctx, &out);

    return finish(ctx, s, out);
}
