#pragma once

// Finite pointed Kripke models, the forcing relation, the countermodel
// constructions built from a Hintikka formula's chain analysis, a catalogue
// of frame variants over the same worlds, and the accessibility-property
// auditor that checks each variant frame against the conditions claimed for
// it.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "l1k/syntax.hpp"

namespace l1k {

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

struct KripkeModel {
    std::vector<std::string> worlds;           // star first, then g1..gn
    std::string star;
    std::set<std::pair<std::string, std::string>> relation;
    // variable -> world -> truth value; total on declared vars x worlds.
    std::map<std::string, std::map<std::string, bool>> valuation;

    bool has_world(const std::string& w) const;

    std::string to_json() const;
    static KripkeModel from_json(const std::string& text);  // validates
};

// Standard forcing; a box holds vacuously at a world without successors.
// Throws ModelError for an unknown world or an undeclared variable.
bool forces(const KripkeModel& m, const std::string& world,
            const ModalFormula& f);

// ---------------------------------------------------------------------------
// Frame variants
// ---------------------------------------------------------------------------
//
// Every variant lives on the worlds {*, g1..gn} (a single companion g1 when
// the formula has no chains) and keeps the base valuation; only the
// accessibility relation changes. Names describe the relation's shape:
// the base "fan" is {(*,gi)}; "cluster" adds all gi->gj with i != j;
// "loops" adds the diagonal gi->gi; "complete" the full g-block; "return"
// the edges gi->*; "starloop" the edge *->*.

enum class FrameVariant {
    K,                  // fan: the base countermodel frame
    Gl,                 // fan again, catalogued for transitive/irreflexive logics
    DeonticOK, DeonticOM, DeonticOS4, DeonticOB, DeonticOS5,
    DeonticOKPlus, DeonticOMPlus, DeonticOS4Plus, DeonticOBPlus, DeonticOS5Plus,
    DeonticFull,        // fan + complete g-block
    FanCluster,
    FanLoops,
    FanComplete,
    FanClusterReturn,
    ClusterStarLoop,    // fan + cluster + (*,*)
    FanReturnStarLoop,  // fan + return + (*,*)
};

const std::vector<FrameVariant>& all_frame_variants();
const std::vector<std::string>& all_variant_names();

std::string variant_name(FrameVariant v);
FrameVariant parse_variant(const std::string& name);  // throws Error

bool is_deontic(FrameVariant v);

// The variant relation on {*, g1..gn}; n = 0 builds the two-world core.
// The deontic variants have their own n = 0 branches: {(*,g1)} for the
// S5-flavoured systems and {(*,g1),(g1,*),(g1,g1)} for the others.
std::set<std::pair<std::string, std::string>> variant_relation(FrameVariant v,
                                                               int n);

// The bare variant frame (empty valuation), for audits.
KripkeModel variant_frame(FrameVariant v, int n);

// ---------------------------------------------------------------------------
// Countermodels
// ---------------------------------------------------------------------------

// The base countermodel of a Hintikka formula psi with chains C1..Cn:
// worlds {*, g1..gn}, relation {(*,gi)}, and the valuation
//   (i)   p_a true at *         iff a is a chain variable;
//   (ii)  chain Ci's variables  true exactly at gi (the identity pattern);
//   (iii) a tail's variable     true exactly at the worlds of the chains it
//         tails;
//   (iv)  everything else       false at every gi.
// With no chains the model degenerates to {*, g1}, one edge, all-false
// valuation. The translated formula is then false at *.
// Throws NotHintikkaError when psi is not a Hintikka formula.
KripkeModel countermodel_k(const L1Formula& psi);

// Same worlds and valuation, relation per the variant.
KripkeModel countermodel_variant(const L1Formula& psi, FrameVariant v);

// ---------------------------------------------------------------------------
// Frame properties
// ---------------------------------------------------------------------------

struct FrameProperties {
    bool serial = false;            // Ax Ey xRy
    bool transitive = false;        // xRy & yRz -> xRz
    bool euclidean = false;         // xRy & xRz -> yRz
    bool almost_reflexive = false;  // xRy -> yRy
    bool almost_symmetric = false;  // xRy -> (yRz -> zRy)
    bool reflexive = false;
    bool irreflexive = false;
    bool symmetric = false;

    std::string to_json() const;
    bool operator==(const FrameProperties&) const = default;
};

// Evaluates every condition exactly over the finite frame of `m`.
FrameProperties frame_properties(const KripkeModel& m);

// Properties of the variant frame on {*, g1..gn}, n >= 1.
FrameProperties audit_variant(FrameVariant v, int n);

// Known mismatches between a variant frame (or its countermodels) and the
// conditions usually claimed for it; empty for unremarkable variants.
std::vector<std::string> audit_notes(FrameVariant v, int n);

}  // namespace l1k
