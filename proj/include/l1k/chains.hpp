#pragma once

// Name-variable analysis of a Hintikka formula: the both-directions relation
// on chain variables, its quotient into chains, the independently computed
// saturation-style chain sets, tails, and the leftover variables. All entry
// points require a Hintikka formula and throw NotHintikkaError otherwise.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "l1k/syntax.hpp"

namespace l1k {

using Chain = std::set<NameVar>;

struct ChainAnalysis {
    std::set<NameVar> nv;    // all name variables
    std::set<NameVar> cn;    // chain name variables
    std::vector<Chain> chains;  // partition of cn, ordered by least member
    std::set<NameVar> tails;
    std::set<NameVar> rest;  // nv minus chains minus tails
    // For each tail, the indices (into `chains`, 0-based) of the chains it
    // tails. World g_{i+1} of the countermodel corresponds to chains[i].
    std::map<NameVar, std::set<std::size_t>> tail_links;

    std::string to_json() const;
};

// All name variables occurring in `phi` (no Hintikka precondition).
std::set<NameVar> name_vars(const L1Formula& phi);

// The relation {(a,b) : eps(a,b) and eps(b,a) both occur as negative parts},
// restricted to the chain variables. A single negative occurrence of
// eps(a,a) witnesses both directions for (a,a). On a Hintikka formula this
// is an equivalence relation on cn.
std::set<std::pair<NameVar, NameVar>> chain_relation(const L1Formula& psi);

// Equivalence classes of chain_relation, ordered by least member.
std::vector<Chain> chain_quotient(const L1Formula& psi);

// The same sets computed by greedy saturation over the both-directions
// relation (grow a candidate set until no further variable is connected to
// every member). Kept independent of chain_quotient so their agreement is a
// meaningful cross-check rather than a tautology.
std::vector<Chain> chains_ki(const L1Formula& psi);

struct Tails {
    std::set<NameVar> tails;
    std::map<NameVar, std::set<std::size_t>> links;  // tail -> chain indices
};

// b is a tail of chain C iff some eps(a,b) is a negative part with a in C
// and b outside C.
Tails tails_of(const L1Formula& psi);

// Full analysis; verifies the disjoint partition nv = cn + tails + rest and
// that every rest variable occurs in some minimal positive part.
ChainAnalysis analyze(const L1Formula& psi);

}  // namespace l1k
