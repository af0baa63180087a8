#pragma once

// Validity for the basic normal modal logic: a terminating signed-tableau
// search that extracts a finite tree countermodel from any open saturated
// branch, plus an exhaustive semantic oracle for box-depth <= 1 formulas.
// The two take entirely different routes, so their agreement is a real
// cross-check.

#include <optional>
#include <string>

#include "l1k/kripke.hpp"
#include "l1k/syntax.hpp"

namespace l1k {

struct Verdict {
    bool valid;
    std::optional<KripkeModel> countermodel;  // present iff not valid

    std::string to_json() const;
};

// Search effort counters, mostly for the termination-bound tests.
struct KProofStats {
    long worlds = 0;            // tableau worlds explored
    long expansions = 0;        // signed formulas processed
    long max_branch_length = 0; // expansions within a single world branch
    int max_world_depth = 0;    // nesting of successor worlds
};

// Decides K-validity by a signed tableau: alpha rules are saturated first,
// disjunctions branch, and each refuted box spawns one successor world
// carrying every asserted box body. Terminating on all inputs; when the
// formula is invalid the verdict carries a tree model falsifying it at "*".
Verdict is_valid_k(const ModalFormula& f, KProofStats* stats = nullptr);

// Exhaustive oracle for modal depth <= 1: a depth-1 formula's truth at a
// world only depends on that world's valuation and the set of successor
// valuations, so enumerating all (root valuation, successor-valuation set)
// pairs over the formula's variables is complete. Throws DepthExceededError
// above depth 1; practical up to 4 variables.
Verdict is_valid_k_depth1(const ModalFormula& f);

}  // namespace l1k
