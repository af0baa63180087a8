#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l1k/chains.hpp"
#include "l1k/corpus.hpp"
#include "l1k/kripke.hpp"
#include "l1k/tableau.hpp"
#include "l1k/translate.hpp"
#include "support.hpp"

using namespace l1k;
using namespace l1k::testing;

namespace {

using Rel = std::set<std::pair<std::string, std::string>>;

const L1Formula kTailLeaf =
    L1Formula::disj(L1Formula::neg(ev("a", "b")), L1Formula::neg(ev("a", "a")));

KripkeModel tiny_model() {
    KripkeModel m;
    m.worlds = {"*", "g"};
    m.star = "*";
    m.relation = {{"*", "g"}};
    m.valuation["p"] = {{"*", false}, {"g", true}};
    return m;
}

}  // namespace

TEST_CASE("forcing basics") {
    KripkeModel m = tiny_model();
    ModalFormula p = ModalFormula::var("p");
    CHECK(forces(m, "*", ModalFormula::box(p)));
    CHECK_FALSE(forces(m, "*", p));
    CHECK(forces(m, "g", p));
    // Boxes are vacuously true at a world with no successors.
    CHECK(forces(m, "g", ModalFormula::box(ModalFormula::neg(p))));
    CHECK_THROWS_AS(forces(m, "nowhere", p), ModelError);
    CHECK_THROWS_AS(forces(m, "*", ModalFormula::var("q")), ModelError);
}

TEST_CASE("countermodel of a chain-plus-tail leaf") {
    KripkeModel m = countermodel_k(kTailLeaf);
    CHECK(m.worlds == std::vector<std::string>{"*", "g1"});
    CHECK(m.relation == Rel{{"*", "g1"}});
    CHECK(m.valuation.at("p_a").at("*"));
    CHECK(m.valuation.at("p_a").at("g1"));
    CHECK_FALSE(m.valuation.at("p_b").at("*"));
    CHECK(m.valuation.at("p_b").at("g1"));
    CHECK_FALSE(forces(m, "*", blass(kTailLeaf)));
}

TEST_CASE("countermodel of a negative self-atom") {
    L1Formula psi = L1Formula::neg(ev("a", "a"));
    KripkeModel m = countermodel_k(psi);
    CHECK(m.worlds == std::vector<std::string>{"*", "g1"});
    CHECK(m.valuation.at("p_a").at("*"));
    CHECK(m.valuation.at("p_a").at("g1"));
    // The translation of eps(a,a) is true at *, so its negation fails there.
    CHECK(forces(m, "*", blass(ev("a", "a"))));
    CHECK_FALSE(forces(m, "*", blass(psi)));
}

TEST_CASE("countermodel with no chains degenerates to the two-world core") {
    KripkeModel m = countermodel_k(ev("a", "a"));
    CHECK(m.worlds == std::vector<std::string>{"*", "g1"});
    CHECK(m.relation == Rel{{"*", "g1"}});
    CHECK_FALSE(m.valuation.at("p_a").at("*"));
    CHECK_FALSE(m.valuation.at("p_a").at("g1"));
    CHECK_FALSE(forces(m, "*", blass(ev("a", "a"))));
}

TEST_CASE("countermodel rejects non-hintikka input") {
    CHECK_THROWS_AS(countermodel_k(L1Formula::neg(ev("a", "b"))),
                    NotHintikkaError);
}

TEST_CASE("variant relations on the examples") {
    L1Formula psi = L1Formula::neg(ev("a", "a"));

    KripkeModel om = countermodel_variant(psi, FrameVariant::DeonticOM);
    CHECK(om.relation == Rel{{"*", "g1"}, {"g1", "g1"}});
    CHECK_FALSE(forces(om, "*", blass(psi)));

    // The transitive-irreflexive catalogue entry coincides with the base.
    KripkeModel gl = countermodel_variant(psi, FrameVariant::Gl);
    KripkeModel base = countermodel_k(psi);
    CHECK(gl.relation == base.relation);
    CHECK(gl.valuation == base.valuation);

    KripkeModel full = countermodel_variant(kTailLeaf, FrameVariant::DeonticFull);
    CHECK(full.relation == Rel{{"*", "g1"}, {"g1", "g1"}});
    CHECK_FALSE(forces(full, "*", blass(kTailLeaf)));
}

TEST_CASE("chainless deontic cores") {
    KripkeModel os5 = countermodel_variant(ev("a", "a"), FrameVariant::DeonticOS5);
    CHECK(os5.relation == Rel{{"*", "g1"}});
    KripkeModel om = countermodel_variant(ev("a", "a"), FrameVariant::DeonticOM);
    CHECK(om.relation == Rel{{"*", "g1"}, {"g1", "*"}, {"g1", "g1"}});
    CHECK_FALSE(forces(os5, "*", blass(ev("a", "a"))));
    CHECK_FALSE(forces(om, "*", blass(ev("a", "a"))));
}

TEST_CASE("the two starloop variants do not falsify leaves with tails") {
    // With (*,*) in the relation, a box at * is also evaluated at * itself,
    // where a tail variable is false while its chain variable is true. The
    // base construction's valuation therefore satisfies the translation of
    // eps(a,b), and the leaf's translation comes out true at *.
    for (auto v : {FrameVariant::ClusterStarLoop, FrameVariant::FanReturnStarLoop}) {
        KripkeModel m = countermodel_variant(kTailLeaf, v);
        CHECK(m.relation.count({"*", "*"}) == 1);
        CHECK(forces(m, "*", blass(kTailLeaf)));  // falsification fails
        CHECK(!audit_notes(v, 1).empty());
    }
    // Without tails the same variants falsify fine.
    L1Formula no_tail = L1Formula::neg(ev("a", "a"));
    for (auto v : {FrameVariant::ClusterStarLoop, FrameVariant::FanReturnStarLoop}) {
        KripkeModel m = countermodel_variant(no_tail, v);
        CHECK_FALSE(forces(m, "*", blass(no_tail)));
    }
}

TEST_CASE("frame properties of the base fan") {
    for (const auto& psi :
         {kTailLeaf, L1Formula::neg(ev("a", "a")), ev("a", "a")}) {
        FrameProperties p = frame_properties(countermodel_k(psi));
        CHECK(p.transitive);
        CHECK(p.irreflexive);
        CHECK_FALSE(p.serial);
    }
}

TEST_CASE("frame properties of a single reflexive-free world") {
    KripkeModel m;
    m.worlds = {"w"};
    m.star = "w";
    FrameProperties p = frame_properties(m);
    CHECK_FALSE(p.serial);
    CHECK(p.transitive);
    CHECK(p.euclidean);
    CHECK(p.almost_reflexive);
    CHECK(p.irreflexive);
}

TEST_CASE("variant frame audits") {
    SUBCASE("diagonal loops give almost-reflexivity and keep transitivity") {
        FrameProperties p = audit_variant(FrameVariant::FanLoops, 3);
        CHECK(p.almost_reflexive);
        CHECK(p.transitive);
        CHECK(p.serial);
    }
    SUBCASE("deontic frames are serial and almost reflexive") {
        for (auto v : {FrameVariant::DeonticOK, FrameVariant::DeonticOM,
                       FrameVariant::DeonticOS4, FrameVariant::DeonticOB,
                       FrameVariant::DeonticOKPlus, FrameVariant::DeonticOMPlus,
                       FrameVariant::DeonticOS4Plus, FrameVariant::DeonticOBPlus})
            for (int n : {1, 2, 4}) {
                FrameProperties p = audit_variant(v, n);
                CHECK(p.serial);
                CHECK(p.almost_reflexive);
            }
    }
    SUBCASE("the complete-block deontic repair") {
        for (int n : {1, 2, 3, 5}) {
            FrameProperties p = audit_variant(FrameVariant::DeonticFull, n);
            CHECK(p.euclidean);
            CHECK(p.almost_reflexive);
            CHECK(p.almost_symmetric);
            CHECK(p.serial);
        }
    }
    SUBCASE("the irreflexive cluster is not euclidean, as the notes say") {
        FrameProperties p = audit_variant(FrameVariant::DeonticOS5, 2);
        CHECK_FALSE(p.euclidean);
        CHECK(!audit_notes(FrameVariant::DeonticOS5, 2).empty());
    }
    SUBCASE("with one companion the cluster part is empty") {
        CHECK(variant_relation(FrameVariant::FanCluster, 1) ==
              variant_relation(FrameVariant::K, 1));
    }
    SUBCASE("n must be positive") {
        CHECK_THROWS_AS(audit_variant(FrameVariant::K, 0), Error);
    }
}

TEST_CASE("variant names round-trip") {
    for (auto v : all_frame_variants()) CHECK(parse_variant(variant_name(v)) == v);
    CHECK(all_variant_names().size() == all_frame_variants().size());
    CHECK_THROWS_AS(parse_variant("no-such-frame"), Error);
}

TEST_CASE("only the starloop variants touch the successors of *") {
    // The falsification argument evaluates boxes one step from *, so a
    // variant is automatically safe when it keeps *'s successor set; the
    // two starloop variants are the only ones that add * to it.
    for (int n = 0; n <= 6; ++n) {
        auto base = variant_relation(FrameVariant::K, n);
        std::set<std::string> base_succ;
        for (const auto& [x, y] : base)
            if (x == "*") base_succ.insert(y);
        for (auto v : all_frame_variants()) {
            std::set<std::string> succ;
            for (const auto& [x, y] : variant_relation(v, n))
                if (x == "*") succ.insert(y);
            bool starloop = v == FrameVariant::ClusterStarLoop ||
                            v == FrameVariant::FanReturnStarLoop;
            CAPTURE(variant_name(v));
            CAPTURE(n);
            if (starloop) {
                auto expected = base_succ;
                expected.insert("*");
                CHECK(succ == expected);
            } else {
                CHECK(succ == base_succ);
            }
        }
    }
}

TEST_CASE("base countermodel properties on harvested leaves") {
    auto vars = default_name_vars(4);
    auto leaves = harvest_leaves(sample_l1(vars, 12, 555, 400), 250);
    CHECK(leaves.size() >= 150);
    for (const auto& leaf : leaves) {
        CAPTURE(leaf.to_string());
        ChainAnalysis a = analyze(leaf);
        KripkeModel m = countermodel_k(leaf);

        // Identity pattern: chain i's variables hold exactly at world g_{i+1}.
        for (std::size_t i = 0; i < a.chains.size(); ++i)
            for (const auto& v : a.chains[i])
                for (std::size_t j = 0; j < a.chains.size(); ++j) {
                    bool val = m.valuation.at(prop_var_name(v))
                                   .at("g" + std::to_string(j + 1));
                    CHECK(val == (i == j));
                }

        // Falsification at the distinguished world.
        CHECK_FALSE(forces(m, "*", blass(leaf)));

        // Atomic positive parts translate false at *, atomic negative parts
        // true.
        for (const auto& p : parts(leaf)) {
            if (!p.formula.is_atom()) continue;
            if (p.polarity == Polarity::Positive)
                CHECK_FALSE(forces(m, "*", blass(p.formula)));
            else
                CHECK(forces(m, "*", blass(p.formula)));
        }

        // The frame stays usable for logics demanding finite transitive
        // irreflexive frames.
        FrameProperties fp = frame_properties(m);
        CHECK(fp.transitive);
        CHECK(fp.irreflexive);
    }
}

TEST_CASE("model json round trip") {
    KripkeModel m = countermodel_k(kTailLeaf);
    KripkeModel back = KripkeModel::from_json(m.to_json());
    CHECK(back.worlds == m.worlds);
    CHECK(back.star == m.star);
    CHECK(back.relation == m.relation);
    CHECK(back.valuation == m.valuation);
    CHECK_FALSE(forces(back, "*", blass(kTailLeaf)));
}

TEST_CASE("model json validation") {
    CHECK_THROWS_AS(KripkeModel::from_json("{"), ModelError);
    CHECK_THROWS_AS(KripkeModel::from_json("{\"worlds\":[]}"), ModelError);
    CHECK_THROWS_AS(KripkeModel::from_json(
                        R"({"worlds":["*"],"star":"x","relation":[],"valuation":{}})"),
                    ModelError);
    CHECK_THROWS_AS(KripkeModel::from_json(
                        R"({"worlds":["*"],"star":"*","relation":[["*","y"]],"valuation":{}})"),
                    ModelError);
    // Partial valuations are rejected.
    CHECK_THROWS_AS(KripkeModel::from_json(
                        R"({"worlds":["*","g"],"star":"*","relation":[],"valuation":{"p":{"*":1}}})"),
                    ModelError);
}
