#pragma once

// The reduction tableau for the ontology fragment: four reduction rules,
// normal-tableau construction, the provability decision, and recognition /
// extraction of Hintikka formulas (the terminal formulas of open branches).

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "l1k/syntax.hpp"

namespace l1k {

enum class RuleKind : std::uint8_t { VeeMinus, Eps1, Eps2, Eps3 };

const char* rule_name(RuleKind k);

// The rule application that produced a node's children: the negative-part
// occurrence(s) consumed and the formula(s) adjoined as new negative parts
// (two for the splitting vee rule, one otherwise).
struct RuleApplication {
    RuleKind kind;
    std::vector<PartOccurrence> triggers;
    std::vector<L1Formula> emitted;
};

struct TableauNode {
    explicit TableauNode(L1Formula f) : formula(std::move(f)) {}

    L1Formula formula;
    std::optional<RuleApplication> rule;  // absent on leaves
    std::vector<std::unique_ptr<TableauNode>> children;

    enum class Leaf : std::uint8_t { None, Closed, Open };
    Leaf leaf = Leaf::None;
    std::optional<L1Formula> witness;  // the axiom witness of a closed leaf

    bool is_leaf() const { return leaf != Leaf::None; }
};

struct Tableau {
    L1Formula root;
    std::unique_ptr<TableauNode> tree;

    bool closed() const;                       // every leaf closed
    std::vector<const TableauNode*> leaves() const;
    std::string to_json() const;               // CLI trace format
};

// Saturation test: not an axiom shape, negative disjunctions have a disjunct
// present, and the three closure conditions on negative eps-atoms hold.
bool is_hintikka(const L1Formula& phi);

// Builds the normal tableau of `phi` under the deterministic strategy:
// negative-part occurrences are scanned in post-order (innermost-leftmost
// first), rules tried in the fixed priority vee, eps1, eps2, eps3, and an
// application is skipped when the node is an axiom or the formula it would
// adjoin already occurs as a negative part.
Tableau build_normal_tableau(const L1Formula& phi);

// Decides provability: true iff the normal tableau closes. This is also the
// decision procedure for the Hilbert-style system (the two calculi prove the
// same formulas).
bool is_provable_l1(const L1Formula& phi);

// The open-leaf formulas of the normal tableau; empty iff provable.
std::set<L1Formula> hintikka_formulas(const L1Formula& phi);

// The leftmost open leaf, if any (the countermodel pipeline's pick).
std::optional<L1Formula> first_hintikka_leaf(const L1Formula& phi);

}  // namespace l1k
