#pragma once

// Translations from the ontology language into modal logic. The faithful
// translation maps eps(a,b) to
//
//     (p_a & [](p_a -> p_b)) & (p_b -> [](p_b -> p_a))
//
// and commutes with negation and disjunction; the naive variant maps
// eps(a,b) to p_a & [](p_a <-> p_b) and is kept for contrast tests (it is
// sound but proves too much). The deontic rendering is the same AST printed
// with O instead of []; no separate transformation exists.

#include "l1k/syntax.hpp"

namespace l1k {

enum class TranslationScheme { Blass, Naive };

// The propositional variable standing for a name variable.
std::string prop_var_name(const NameVar& v);

ModalFormula blass(const L1Formula& phi);
ModalFormula naive(const L1Formula& phi);

ModalFormula translate(const L1Formula& phi, TranslationScheme scheme);

// Maximum box-nesting depth; both translations stay at depth <= 1.
int modal_depth(const ModalFormula& f);

}  // namespace l1k
