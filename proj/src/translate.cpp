#include "l1k/translate.hpp"

#include <algorithm>

namespace l1k {

std::string prop_var_name(const NameVar& v) { return "p_" + v.id; }

namespace {

ModalFormula pvar(const NameVar& v) { return ModalFormula::var(prop_var_name(v)); }

ModalFormula blass_atom(const NameVar& a, const NameVar& b) {
    ModalFormula pa = pvar(a);
    ModalFormula pb = pvar(b);
    // (p_a & [](p_a -> p_b)) & (p_b -> [](p_b -> p_a))
    return ModalFormula::conj(
        ModalFormula::conj(pa, ModalFormula::box(ModalFormula::impl(pa, pb))),
        ModalFormula::impl(pb, ModalFormula::box(ModalFormula::impl(pb, pa))));
}

ModalFormula naive_atom(const NameVar& a, const NameVar& b) {
    ModalFormula pa = pvar(a);
    ModalFormula pb = pvar(b);
    // p_a & [](p_a <-> p_b)
    return ModalFormula::conj(pa,
                              ModalFormula::box(ModalFormula::equiv(pa, pb)));
}

template <typename Atom>
ModalFormula homomorphic(const L1Formula& phi, Atom&& atom) {
    switch (phi.kind()) {
        case L1Formula::Kind::Eps:
            return atom(phi.subject(), phi.predicate());
        case L1Formula::Kind::Not:
            return ModalFormula::neg(homomorphic(phi.child(), atom));
        case L1Formula::Kind::Or:
            return ModalFormula::disj(homomorphic(phi.left(), atom),
                                      homomorphic(phi.right(), atom));
    }
    throw Error("unreachable formula kind");
}

}  // namespace

ModalFormula blass(const L1Formula& phi) { return homomorphic(phi, blass_atom); }

ModalFormula naive(const L1Formula& phi) { return homomorphic(phi, naive_atom); }

ModalFormula translate(const L1Formula& phi, TranslationScheme scheme) {
    return scheme == TranslationScheme::Blass ? blass(phi) : naive(phi);
}

int modal_depth(const ModalFormula& f) {
    switch (f.kind()) {
        case ModalFormula::Kind::Var: return 0;
        case ModalFormula::Kind::Not: return modal_depth(f.child());
        case ModalFormula::Kind::Box: return 1 + modal_depth(f.child());
        case ModalFormula::Kind::Or:
            return std::max(modal_depth(f.left()), modal_depth(f.right()));
    }
    return 0;
}

}  // namespace l1k
