#pragma once

// Shared helpers for the test binaries: shorthand constructors, a
// closure-based re-implementation of the part calculus, classical
// evaluation, and an axiomatic-consequence oracle for the ontology
// fragment. These deliberately take different routes than the library so
// agreement means something.

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "l1k/chains.hpp"
#include "l1k/syntax.hpp"
#include "l1k/tableau.hpp"

namespace l1k::testing {

inline NameVar nv(const char* id) { return NameVar{id}; }

inline L1Formula ev(const char* a, const char* b) {
    return L1Formula::eps(nv(a), nv(b));
}

// ---------------------------------------------------------------------------
// Part-calculus oracle
// ---------------------------------------------------------------------------
//
// Computes part occurrences as a fixpoint of the defining clauses instead of
// a structural recursion: start from the root occurrence and keep applying
//   positive p|q  -> both children positive
//   positive !p   -> child negative
//   negative !p   -> child positive
// until nothing new appears.

struct OccKey {
    std::vector<int> path;
    bool positive;
    auto operator<=>(const OccKey&) const = default;
};

inline L1Formula subformula_at(const L1Formula& f, const std::vector<int>& path) {
    L1Formula cur = f;
    for (int step : path) {
        switch (cur.kind()) {
            case L1Formula::Kind::Not:
                cur = cur.child();
                break;
            case L1Formula::Kind::Or:
                cur = step == 0 ? cur.left() : cur.right();
                break;
            case L1Formula::Kind::Eps:
                throw Error("path descends below an atom");
        }
    }
    return cur;
}

inline std::set<OccKey> parts_closure(const L1Formula& phi) {
    std::set<OccKey> acc{{{}, true}};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& occ : std::set<OccKey>(acc)) {
            L1Formula f = subformula_at(phi, occ.path);
            std::vector<OccKey> next;
            if (f.kind() == L1Formula::Kind::Or && occ.positive) {
                auto p0 = occ.path, p1 = occ.path;
                p0.push_back(0);
                p1.push_back(1);
                next.push_back({p0, true});
                next.push_back({p1, true});
            } else if (f.kind() == L1Formula::Kind::Not) {
                auto p = occ.path;
                p.push_back(0);
                next.push_back({p, !occ.positive});
            }
            for (auto& n : next)
                if (acc.insert(n).second) grew = true;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Classical evaluation
// ---------------------------------------------------------------------------

using AtomValuation = std::map<std::pair<NameVar, NameVar>, bool>;

inline bool eval_classical(const L1Formula& f, const AtomValuation& v) {
    switch (f.kind()) {
        case L1Formula::Kind::Eps: {
            auto it = v.find({f.subject(), f.predicate()});
            return it != v.end() && it->second;
        }
        case L1Formula::Kind::Not:
            return !eval_classical(f.child(), v);
        case L1Formula::Kind::Or:
            return eval_classical(f.left(), v) || eval_classical(f.right(), v);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Axiomatic-consequence oracle
// ---------------------------------------------------------------------------
//
// The Hilbert system is classical logic plus three atom schemata, so a
// formula is provable iff it holds under every valuation of the atoms over
// its name variables that satisfies all schema instances:
//   eps(x,y) -> eps(x,x)
//   eps(x,y) & eps(y,z) -> eps(x,z)
//   eps(x,y) & eps(y,z) -> eps(y,x)
// Valuations over additional name variables never constrain these, so the
// finite check is exact. Exponential in the atom count; use few variables.

inline bool hilbert_provable(const L1Formula& f) {
    std::vector<NameVar> vars;
    for (const auto& v : name_vars(f)) vars.push_back(v);
    const std::size_t n = vars.size();
    const std::size_t atoms = n * n;
    if (atoms > 16) throw Error("hilbert oracle limited to 4 name variables");

    auto bit = [&](std::uint32_t m, std::size_t i, std::size_t j) {
        return ((m >> (i * n + j)) & 1u) != 0;
    };

    for (std::uint32_t m = 0; m < (1u << atoms); ++m) {
        bool model = true;
        for (std::size_t x = 0; x < n && model; ++x)
            for (std::size_t y = 0; y < n && model; ++y) {
                if (bit(m, x, y) && !bit(m, x, x)) model = false;
                for (std::size_t z = 0; z < n && model; ++z)
                    if (bit(m, x, y) && bit(m, y, z) &&
                        (!bit(m, x, z) || !bit(m, y, x)))
                        model = false;
            }
        if (!model) continue;
        AtomValuation val;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                val[{vars[x], vars[y]}] = bit(m, x, y);
        if (!eval_classical(f, val)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Leaf harvesting
// ---------------------------------------------------------------------------

// All open leaves of the normal tableaux of `corpus`, capped at `limit`.
inline std::vector<L1Formula> harvest_leaves(const std::vector<L1Formula>& corpus,
                                             std::size_t limit) {
    std::vector<L1Formula> out;
    for (const auto& f : corpus) {
        for (const auto& leaf : hintikka_formulas(f)) {
            out.push_back(leaf);
            if (out.size() >= limit) return out;
        }
    }
    return out;
}

}  // namespace l1k::testing
