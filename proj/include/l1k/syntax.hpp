#pragma once

// Formula representations, parsing, printing, and the positive/negative-part
// machinery shared by the tableau, chain and translation code.
//
// The object language takes disjunction and negation as primitive; the
// surface grammar additionally knows &, -> and <-> which are expanded at
// parse time, so every L1Formula the library handles is a {!,|} tree over
// eps-atoms. ModalFormula adds a single box operator on top of the same
// propositional skeleton.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "l1k/errors.hpp"

namespace l1k {

// ---------------------------------------------------------------------------
// Name variables
// ---------------------------------------------------------------------------

// A name variable of the ontology language (the `a` and `b` of eps(a,b)).
// Equality is plain string equality on the identifier.
struct NameVar {
    std::string id;

    auto operator<=>(const NameVar&) const = default;
};

// ---------------------------------------------------------------------------
// L1 formulas
// ---------------------------------------------------------------------------

class L1Formula {
  public:
    enum class Kind : std::uint8_t { Eps, Not, Or };

    // Primitive constructors.
    static L1Formula eps(NameVar subject, NameVar predicate);
    static L1Formula neg(L1Formula f);
    static L1Formula disj(L1Formula lhs, L1Formula rhs);

    // Derived connectives, expanded on construction:
    //   conj(p,q)  = !(!p | !q)
    //   impl(p,q)  = !p | q
    //   equiv(p,q) = conj(impl(p,q), impl(q,p))
    static L1Formula conj(L1Formula lhs, L1Formula rhs);
    static L1Formula impl(L1Formula lhs, L1Formula rhs);
    static L1Formula equiv(L1Formula lhs, L1Formula rhs);

    Kind kind() const { return node_->kind; }
    bool is_atom() const { return node_->kind == Kind::Eps; }

    // Eps accessors (valid only when kind() == Eps).
    const NameVar& subject() const { return node_->subj; }
    const NameVar& predicate() const { return node_->pred; }

    // child() for Not; left()/right() for Or. Cheap shared-tree handles.
    L1Formula child() const { return L1Formula(node_->lhs); }
    L1Formula left() const { return L1Formula(node_->lhs); }
    L1Formula right() const { return L1Formula(node_->rhs); }

    // Number of AST nodes.
    int size() const { return node_->size; }

    std::string to_string() const;

    friend bool operator==(const L1Formula& a, const L1Formula& b) {
        return a.compare(b) == 0;
    }
    friend std::strong_ordering operator<=>(const L1Formula& a, const L1Formula& b) {
        int c = a.compare(b);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    int compare(const L1Formula& other) const;

  private:
    struct Node {
        Kind kind;
        NameVar subj, pred;                  // Eps
        std::shared_ptr<const Node> lhs, rhs;  // Not: lhs; Or: lhs + rhs
        int size = 1;
        explicit Node(Kind k) : kind(k) {}
    };

    explicit L1Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Modal formulas
// ---------------------------------------------------------------------------

class ModalFormula {
  public:
    enum class Kind : std::uint8_t { Var, Not, Or, Box };

    static ModalFormula var(std::string name);
    static ModalFormula neg(ModalFormula f);
    static ModalFormula disj(ModalFormula lhs, ModalFormula rhs);
    static ModalFormula box(ModalFormula f);

    // Derived: conj/impl/equiv as for L1Formula, diamond(p) = !box(!p).
    static ModalFormula conj(ModalFormula lhs, ModalFormula rhs);
    static ModalFormula impl(ModalFormula lhs, ModalFormula rhs);
    static ModalFormula equiv(ModalFormula lhs, ModalFormula rhs);
    static ModalFormula diamond(ModalFormula f);

    Kind kind() const { return node_->kind; }
    bool is_var() const { return node_->kind == Kind::Var; }

    const std::string& name() const { return node_->name; }
    ModalFormula child() const { return ModalFormula(node_->lhs); }  // Not, Box
    ModalFormula left() const { return ModalFormula(node_->lhs); }
    ModalFormula right() const { return ModalFormula(node_->rhs); }

    int size() const { return node_->size; }

    // Rendering of the box operator; structure is unaffected.
    enum class Render { BoxSymbol, OSymbol };
    std::string to_string(Render render = Render::BoxSymbol) const;

    // All propositional variable names, sorted.
    std::set<std::string> variables() const;

    friend bool operator==(const ModalFormula& a, const ModalFormula& b) {
        return a.compare(b) == 0;
    }
    friend std::strong_ordering operator<=>(const ModalFormula& a,
                                            const ModalFormula& b) {
        int c = a.compare(b);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    int compare(const ModalFormula& other) const;

  private:
    struct Node {
        Kind kind;
        std::string name;                    // Var
        std::shared_ptr<const Node> lhs, rhs;  // Not/Box: lhs; Or: lhs + rhs
        int size = 1;
        explicit Node(Kind k) : kind(k) {}
    };

    explicit ModalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

// Grammar (ASCII):
//   atom         eps(<name>,<name>)      <name> = [a-z][a-z0-9_]*
//   connectives  !  &  |  ->  <->        precedence tightest-to-loosest;
//                                        -> and <-> right-associative,
//                                        & and | left-associative
// The returned AST is fully expanded into {!,|}.
L1Formula parse_l1(const std::string& text);

// Modal grammar: variables [A-Za-z_][A-Za-z0-9_]*, box [], diamond <>,
// same connectives. Expanded into {!,|,[]}.
ModalFormula parse_modal(const std::string& text);

// ---------------------------------------------------------------------------
// Positive and negative parts
// ---------------------------------------------------------------------------

enum class Polarity : std::uint8_t { Positive, Negative };

// One part occurrence: the subformula at `path` (child indices from the
// root) together with its polarity. The root is a positive part; Or
// propagates polarity to both children when positive; Not flips. A
// disjunction occurring negatively does not decompose further.
struct PartOccurrence {
    std::vector<int> path;
    Polarity polarity;
    L1Formula formula;
};

// All part occurrences of `phi`, in pre-order.
std::vector<PartOccurrence> parts(const L1Formula& phi);

// Formula-level views of the occurrence list.
std::set<L1Formula> positive_part_set(const L1Formula& phi);
std::set<L1Formula> negative_part_set(const L1Formula& phi);

// The eps-atoms occurring as negative parts, as (subject, predicate) pairs.
std::set<std::pair<NameVar, NameVar>> negative_atoms(const L1Formula& phi);

struct MinimalParts {
    std::set<L1Formula> minimal_pos;  // positive parts that are neither !p nor p|q
    std::set<L1Formula> minimal_neg;  // negative parts that are not !p
};

MinimalParts minimal_parts(const L1Formula& phi);

// True iff some formula occurs both as a positive and as a negative part at
// two non-overlapping occurrences (prefix-disjoint paths).
bool is_axiom_tl1(const L1Formula& phi);

// The shared formula of such a pair, if any (used to tag closed leaves).
std::optional<L1Formula> axiom_witness(const L1Formula& phi);

// True iff a path is a prefix of b (or equal).
bool path_is_prefix(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace l1k
