#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1k/corpus.hpp"
#include "l1k/modal_k.hpp"
#include "l1k/tableau.hpp"
#include "l1k/translate.hpp"
#include "support.hpp"

using namespace l1k;
using namespace l1k::testing;

namespace {

int subformulas(const ModalFormula& f) { return f.size(); }

}  // namespace

TEST_CASE("the distribution schema is valid") {
    CHECK(is_valid_k(parse_modal("[](p -> q) -> ([]p -> []q)")).valid);
}

TEST_CASE("simple validities and invalidities") {
    CHECK(is_valid_k(parse_modal("[]p | ![]p")).valid);
    CHECK(is_valid_k(parse_modal("p | !p")).valid);
    CHECK_FALSE(is_valid_k(parse_modal("[]p -> p")).valid);   // needs reflexivity
    CHECK_FALSE(is_valid_k(parse_modal("[]p -> [][]p")).valid);  // transitivity
    CHECK_FALSE(is_valid_k(parse_modal("p -> []p")).valid);
    CHECK_FALSE(is_valid_k(parse_modal("<>p")).valid);
}

TEST_CASE("the separation formula tells the translations apart") {
    L1Formula sep = parse_l1("eps(a,c) & eps(b,c) -> (eps(a,b) | eps(c,c))");
    CHECK(is_valid_k(naive(sep)).valid);
    Verdict v = is_valid_k(blass(sep));
    CHECK_FALSE(v.valid);
    REQUIRE(v.countermodel.has_value());
    CHECK_FALSE(forces(*v.countermodel, v.countermodel->star, blass(sep)));
}

TEST_CASE("the translated axiom schemata are valid") {
    for (const char* text :
         {"eps(a,b) -> eps(a,a)", "eps(a,b) & eps(b,c) -> eps(a,c)",
          "eps(a,b) & eps(b,c) -> eps(b,a)"}) {
        L1Formula f = parse_l1(text);
        CAPTURE(text);
        CHECK(is_valid_k(blass(f)).valid);
        CHECK(is_valid_k_depth1(blass(f)).valid);
    }
}

TEST_CASE("a bare translated atom is invalid") {
    Verdict v = is_valid_k(blass(ev("a", "b")));
    CHECK_FALSE(v.valid);
    REQUIRE(v.countermodel.has_value());
    CHECK_FALSE(forces(*v.countermodel, "*", blass(ev("a", "b"))));

    Verdict o = is_valid_k_depth1(blass(ev("a", "b")));
    CHECK_FALSE(o.valid);
    REQUIRE(o.countermodel.has_value());
    CHECK_FALSE(forces(*o.countermodel, "*", blass(ev("a", "b"))));
}

TEST_CASE("depth-1 oracle basics") {
    CHECK(is_valid_k_depth1(parse_modal("[]p | ![]p")).valid);
    CHECK(is_valid_k_depth1(parse_modal("[](p -> p)")).valid);
    CHECK_FALSE(is_valid_k_depth1(parse_modal("[]p -> p")).valid);
    CHECK_THROWS_AS(is_valid_k_depth1(parse_modal("[][]p")), DepthExceededError);
}

TEST_CASE("tableau and oracle agree on random depth-1 formulas") {
    auto sample = sample_modal_depth1(3, 14, 424242, 200);
    for (const auto& f : sample) {
        CAPTURE(f.to_string());
        Verdict tableau = is_valid_k(f);
        Verdict oracle = is_valid_k_depth1(f);
        CHECK(tableau.valid == oracle.valid);
        if (!tableau.valid) {
            CHECK_FALSE(forces(*tableau.countermodel, tableau.countermodel->star, f));
            CHECK_FALSE(forces(*oracle.countermodel, oracle.countermodel->star, f));
        }
    }
}

TEST_CASE("search effort stays within the structural bounds") {
    auto sample = sample_modal_depth1(3, 16, 9, 150);
    for (const auto& f : sample) {
        KProofStats stats;
        is_valid_k(f, &stats);
        // Along one branch every signed subformula is processed at most once.
        CHECK(stats.max_branch_length <= 2 * subformulas(f) + 2);
        CHECK(stats.max_world_depth <= modal_depth(f) + 1);
    }
    // Also exercise deeper nesting than the translations produce.
    ModalFormula deep = parse_modal("[]([](p -> []q) -> <>(q & []p))");
    KProofStats stats;
    is_valid_k(deep, &stats);
    CHECK(stats.max_branch_length <= 2 * subformulas(deep) + 2);
    CHECK(stats.max_world_depth <= modal_depth(deep) + 1);
}

TEST_CASE("verdict json") {
    std::string valid = is_valid_k(parse_modal("p | !p")).to_json();
    CHECK(valid.find("\"valid\": true") != std::string::npos);
    CHECK(valid.find("\"countermodel\": null") != std::string::npos);
    std::string invalid = is_valid_k(parse_modal("p")).to_json();
    CHECK(invalid.find("\"valid\": false") != std::string::npos);
    CHECK(invalid.find("\"worlds\"") != std::string::npos);
}
