/* C API for the hopfzeta computer-algebra core.
 *
 * All algebra elements travel as text in the element grammar:
 *   rational:      "3", "-1/2"
 *   composition:   "2,1"; the empty composition is "()"
 *   terms:         c*M(2,1), c*S(1,2), c*e(2,1), c*h(2), c*m(1,1), c*p(3),
 *                  c*W(xxy), c*T[[][]], c*K[[][[]]], c*F[[][]]
 *   elements:      terms joined by '+' / '-'; whitespace insignificant.
 *
 * Every function that produces output allocates a NUL-terminated string the
 * caller must release with hz_string_free(). Errors are reported through the
 * return code; hz_last_error() gives the message for the most recent failing
 * call on that context.
 */
#ifndef HOPFZETA_H
#define HOPFZETA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hz_context hz_context;

typedef enum hz_status {
    HZ_OK = 0,
    HZ_VERIFY_FAILED = 1,  /* an identity check did not pass */
    HZ_PARSE_ERROR = 2,    /* malformed element text or bad argument */
    HZ_DOMAIN_ERROR = 3,   /* e.g. divergent zeta of a non-admissible term */
    HZ_INTERNAL_ERROR = 4
} hz_status;

/* Context: holds configuration and the last error message. Not thread-safe;
 * use one context per thread. */
hz_context* hz_context_create(void);
void hz_context_destroy(hz_context* ctx);

/* Keys: "max_degree" (int >= 1), "N" (long >= 2), "tol" (double > 0),
 * "format" ("text" or "json"). */
hz_status hz_context_set(hz_context* ctx, const char* key, const char* value);

const char* hz_last_error(const hz_context* ctx);
void hz_string_free(char* s);

/* --- QSym / NSym / Sym --- */
hz_status hz_qsym_mul(hz_context* ctx, const char* a, const char* b, char** out);
hz_status hz_qsym_coproduct(hz_context* ctx, const char* a, char** out);
hz_status hz_qsym_antipode(hz_context* ctx, const char* a, char** out);
/* Truncated power-series expansion of a QSym element. */
hz_status hz_qsym_expand(hz_context* ctx, const char* a, int num_vars, int max_deg, char** out);
hz_status hz_nsym_mul(hz_context* ctx, const char* a, const char* b, char** out);
hz_status hz_nsym_coproduct(hz_context* ctx, const char* a, char** out);
hz_status hz_sym_convert(hz_context* ctx, const char* a, const char* target_basis, char** out);

/* --- word algebra --- */
hz_status hz_word_shuffle(hz_context* ctx, const char* a, const char* b, char** out);
hz_status hz_word_tau(hz_context* ctx, const char* a, char** out);
hz_status hz_word_ohno(hz_context* ctx, int i, const char* w, char** out);

/* --- multiple zeta values --- */
/* Evaluates zeta of a QSym element or word combination; output is JSON:
 * {"value":...,"error_estimate":...,"N":...}. */
hz_status hz_mzv_eval(hz_context* ctx, const char* a, char** out);
/* As above plus "pass"; returns HZ_VERIFY_FAILED when |value| exceeds
 * max(tol, 3*error_estimate). */
hz_status hz_mzv_verify(hz_context* ctx, const char* a, char** out);
/* Ohno's identity zeta(h_i . w) = zeta(h_i . tau(w)) over every admissible
 * word of the given weight; JSON report with one case per word. */
hz_status hz_mzv_verify_ohno(hz_context* ctx, int weight, int i, char** out);

/* --- trees --- */
hz_status hz_tree_enum(hz_context* ctx, int n, char** out);
hz_status hz_tree_symm(hz_context* ctx, const char* tree, char** out);
hz_status hz_tree_glmul(hz_context* ctx, const char* a, const char* b, char** out);
hz_status hz_tree_kappa(hz_context* ctx, int n, char** out);
hz_status hz_tree_epsilon(hz_context* ctx, int n, char** out);
hz_status hz_tree_multiplicity(hz_context* ctx, const char* tree, char** out);

/* --- verification suites --- */
/* Runs every identity suite up to the context's max_degree; *out is the
 * pass/fail table (deterministic, byte-identical for equal configuration).
 * Returns HZ_VERIFY_FAILED when any line fails. */
hz_status hz_verify_all(hz_context* ctx, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HOPFZETA_H */
