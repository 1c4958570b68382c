#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "hopfzeta.h"

namespace {

struct Ctx {
    hz_context* c;
    Ctx() : c(hz_context_create()) {}
    ~Ctx() { hz_context_destroy(c); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    hz_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("context lifecycle and configuration") {
    Ctx ctx;
    REQUIRE(ctx.c != nullptr);
    CHECK(hz_context_set(ctx.c, "max_degree", "4") == HZ_OK);
    CHECK(hz_context_set(ctx.c, "N", "100000") == HZ_OK);
    CHECK(hz_context_set(ctx.c, "tol", "1e-4") == HZ_OK);
    CHECK(hz_context_set(ctx.c, "format", "json") == HZ_OK);
    CHECK(hz_context_set(ctx.c, "format", "text") == HZ_OK);
    CHECK(hz_context_set(ctx.c, "max_degree", "0") == HZ_PARSE_ERROR);
    CHECK(hz_context_set(ctx.c, "N", "1") == HZ_PARSE_ERROR);
    CHECK(hz_context_set(ctx.c, "tol", "-1") == HZ_PARSE_ERROR);
    CHECK(hz_context_set(ctx.c, "no_such_key", "1") == HZ_PARSE_ERROR);
    CHECK(std::strlen(hz_last_error(ctx.c)) > 0);
}

TEST_CASE("qsym operations") {
    Ctx ctx;
    char* out = nullptr;
    REQUIRE(hz_qsym_mul(ctx.c, "M(1)", "M(1)", &out) == HZ_OK);
    CHECK(take(out) == "2*M(1,1) + M(2)");
    REQUIRE(hz_qsym_antipode(ctx.c, "M(1,1)", &out) == HZ_OK);
    CHECK(take(out) == "M(1,1) + M(2)");
    REQUIRE(hz_qsym_coproduct(ctx.c, "M(2,1)", &out) == HZ_OK);
    std::string cop = take(out);
    CHECK(cop.find("M(2) (x) M(1)") != std::string::npos);
    REQUIRE(hz_qsym_expand(ctx.c, "M(1)", 2, 1, &out) == HZ_OK);
    CHECK(take(out) == "t2 + t1");
    CHECK(hz_qsym_mul(ctx.c, "M(1)", "garbage", &out) == HZ_PARSE_ERROR);
    CHECK(std::string(hz_last_error(ctx.c)).find("parse") != std::string::npos);
}

TEST_CASE("nsym and sym") {
    Ctx ctx;
    char* out = nullptr;
    REQUIRE(hz_nsym_mul(ctx.c, "S(2)", "S(1)", &out) == HZ_OK);
    CHECK(take(out) == "S(2,1)");
    REQUIRE(hz_sym_convert(ctx.c, "h(2)", "e", &out) == HZ_OK);
    CHECK(take(out) == "e(1,1) - e(2)");
    CHECK(hz_sym_convert(ctx.c, "h(2)", "q", &out) == HZ_PARSE_ERROR);
}

TEST_CASE("words") {
    Ctx ctx;
    char* out = nullptr;
    REQUIRE(hz_word_tau(ctx.c, "W(xxy)", &out) == HZ_OK);
    CHECK(take(out) == "W(xyy)");
    REQUIRE(hz_word_shuffle(ctx.c, "W(x)", "W(y)", &out) == HZ_OK);
    CHECK(take(out) == "W(xy) + W(yx)");
    REQUIRE(hz_word_ohno(ctx.c, 1, "W(xxy)", &out) == HZ_OK);
    CHECK(take(out) == "W(xxxy)");
    CHECK(hz_word_ohno(ctx.c, -1, "W(xy)", &out) == HZ_PARSE_ERROR);
}

TEST_CASE("mzv evaluation and verification") {
    Ctx ctx;
    REQUIRE(hz_context_set(ctx.c, "N", "200000") == HZ_OK);
    char* out = nullptr;
    REQUIRE(hz_mzv_eval(ctx.c, "M(2)", &out) == HZ_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(std::fabs(j["value"].get<double>() - 1.6449340668) < 1e-4);
    CHECK(j["N"].get<long>() == 200000);
    CHECK(j["error_estimate"].get<double>() >= 0);

    // Euler's relation holds, zeta(2) alone does not vanish
    REQUIRE(hz_mzv_verify(ctx.c, "M(1,2) - M(3)", &out) == HZ_OK);
    auto jv = nlohmann::json::parse(take(out));
    CHECK(jv["pass"].get<bool>());
    CHECK(hz_mzv_verify(ctx.c, "M(2)", &out) == HZ_VERIFY_FAILED);
    auto jf = nlohmann::json::parse(take(out));
    CHECK_FALSE(jf["pass"].get<bool>());

    // divergent input
    CHECK(hz_mzv_eval(ctx.c, "M(2,1)", &out) == HZ_DOMAIN_ERROR);
    // word form works too
    REQUIRE(hz_mzv_verify(ctx.c, "W(xyy) - W(xxy)", &out) == HZ_OK);
    hz_string_free(out);
}

TEST_CASE("ohno verification report") {
    Ctx ctx;
    REQUIRE(hz_context_set(ctx.c, "N", "100000") == HZ_OK);
    REQUIRE(hz_context_set(ctx.c, "tol", "1e-3") == HZ_OK);
    char* out = nullptr;
    REQUIRE(hz_mzv_verify_ohno(ctx.c, 4, 1, &out) == HZ_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["pass"].get<bool>());
    CHECK(j["cases"].size() > 0);
}

TEST_CASE("tree operations") {
    Ctx ctx;
    char* out = nullptr;
    REQUIRE(hz_tree_enum(ctx.c, 4, &out) == HZ_OK);
    std::string trees = take(out);
    CHECK(trees.find("[[[[]]]]") != std::string::npos);
    REQUIRE(hz_tree_symm(ctx.c, "[[][]]", &out) == HZ_OK);
    CHECK(take(out) == "2");
    REQUIRE(hz_tree_glmul(ctx.c, "T[[]]", "T[[]]", &out) == HZ_OK);
    CHECK(take(out) == "T[[[]]] + T[[][]]");
    REQUIRE(hz_tree_kappa(ctx.c, 2, &out) == HZ_OK);
    CHECK(take(out) == "T[[[]]] + 1/2*T[[][]]");
    REQUIRE(hz_tree_epsilon(ctx.c, 2, &out) == HZ_OK);
    CHECK(take(out) == "1/2*T[[][]]");
    REQUIRE(hz_tree_multiplicity(ctx.c, "[[][[]]]", &out) == HZ_OK);
    CHECK(take(out) == "3");
    CHECK(hz_tree_enum(ctx.c, 0, &out) == HZ_PARSE_ERROR);
    CHECK(hz_tree_symm(ctx.c, "[[", &out) == HZ_PARSE_ERROR);
}

TEST_CASE("verify_all") {
    Ctx ctx;
    REQUIRE(hz_context_set(ctx.c, "max_degree", "3") == HZ_OK);
    REQUIRE(hz_context_set(ctx.c, "N", "1000000") == HZ_OK);
    char* out = nullptr;
    REQUIRE(hz_verify_all(ctx.c, &out) == HZ_OK);
    std::string r1 = take(out);
    CHECK(r1.find("PASS") != std::string::npos);
    CHECK(r1.find("FAIL") == std::string::npos);
    // deterministic: a second run is byte-identical
    REQUIRE(hz_verify_all(ctx.c, &out) == HZ_OK);
    CHECK(take(out) == r1);
}

TEST_CASE("null argument handling") {
    Ctx ctx;
    char* out = nullptr;
    CHECK(hz_qsym_mul(nullptr, "M(1)", "M(1)", &out) == HZ_INTERNAL_ERROR);
    CHECK(hz_qsym_mul(ctx.c, nullptr, "M(1)", &out) == HZ_PARSE_ERROR);
    CHECK(hz_qsym_mul(ctx.c, "M(1)", "M(1)", nullptr) == HZ_INTERNAL_ERROR);
}
