#include "l1k/modal_k.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include <json.hpp>

#include "l1k/translate.hpp"

namespace l1k {

namespace {

using Signed = std::pair<bool, ModalFormula>;  // sign: asserted true / false

// A single tableau world in the making. Branching copies the whole state;
// formulas are shared trees, so copies are cheap.
struct Branch {
    std::set<Signed> seen;
    std::deque<ModalFormula> betas;      // asserted-true disjunctions
    std::vector<ModalFormula> box_true;  // psi with [](psi) asserted true
    std::vector<ModalFormula> box_false; // psi with [](psi) asserted false
    std::map<std::string, bool> literals;
    long expansions = 0;

    // Returns false on contradiction.
    bool add(bool sign, const ModalFormula& f) {
        Signed s{sign, f};
        if (seen.count(s)) return true;
        if (seen.count({!sign, f})) return false;
        seen.insert(std::move(s));
        ++expansions;
        switch (f.kind()) {
            case ModalFormula::Kind::Var:
                literals[f.name()] = sign;
                return true;
            case ModalFormula::Kind::Not:
                return add(!sign, f.child());
            case ModalFormula::Kind::Or:
                if (sign) {
                    betas.push_back(f);
                    return true;
                }
                return add(false, f.left()) && add(false, f.right());
            case ModalFormula::Kind::Box:
                (sign ? box_true : box_false).push_back(f.child());
                return true;
        }
        return true;
    }
};

struct Search {
    KProofStats stats;

    // Satisfiability of the branch; on success returns the world subtree
    // (worlds are named later, at extraction).
    struct World {
        std::map<std::string, bool> literals;
        std::vector<World> successors;
    };

    std::optional<World> solve(Branch branch, int depth) {
        ++stats.worlds;
        stats.max_world_depth = std::max(stats.max_world_depth, depth);

        while (!branch.betas.empty()) {
            ModalFormula beta = branch.betas.front();
            branch.betas.pop_front();
            // Already satisfied disjunctions need no split.
            if (branch.seen.count({true, beta.left()}) ||
                branch.seen.count({true, beta.right()}))
                continue;
            for (const ModalFormula& pick : {beta.left(), beta.right()}) {
                Branch next = branch;
                if (next.add(true, pick)) {
                    if (auto w = solve(std::move(next), depth)) return w;
                }
            }
            return std::nullopt;  // both alternatives close
        }

        stats.expansions += branch.expansions;
        stats.max_branch_length =
            std::max(stats.max_branch_length, branch.expansions);

        // Saturated: every refuted box demands a successor falsifying its
        // body while satisfying all asserted box bodies.
        World w;
        w.literals = branch.literals;
        for (const ModalFormula& refuted : branch.box_false) {
            Branch succ;
            bool ok = succ.add(false, refuted);
            for (const ModalFormula& body : branch.box_true)
                ok = ok && succ.add(true, body);
            if (!ok) return std::nullopt;
            auto sub = solve(std::move(succ), depth + 1);
            if (!sub) return std::nullopt;
            w.successors.push_back(std::move(*sub));
        }
        return w;
    }
};

KripkeModel extract_model(const Search::World& root,
                          const std::set<std::string>& vars) {
    KripkeModel m;
    m.star = "*";
    std::vector<std::pair<const Search::World*, std::string>> flat;
    int counter = 0;
    auto walk = [&](auto&& self, const Search::World& w,
                    const std::string& name) -> void {
        m.worlds.push_back(name);
        flat.push_back({&w, name});
        for (const auto& succ : w.successors) {
            std::string child = "w" + std::to_string(++counter);
            m.relation.insert({name, child});
            self(self, succ, child);
        }
    };
    walk(walk, root, "*");

    // Totalize: variables a branch never mentioned default to false.
    for (const auto& v : vars) {
        auto& row = m.valuation[v];
        for (const auto& [w, name] : flat) {
            auto it = w->literals.find(v);
            row[name] = it != w->literals.end() && it->second;
        }
    }
    return m;
}

}  // namespace

Verdict is_valid_k(const ModalFormula& f, KProofStats* stats) {
    Search search;
    Branch root;
    std::optional<Search::World> world;
    if (root.add(false, f)) world = search.solve(std::move(root), 0);
    if (stats) *stats = search.stats;
    if (!world) return Verdict{true, std::nullopt};
    return Verdict{false, extract_model(*world, f.variables())};
}

// ---------------------------------------------------------------------------
// Depth-1 oracle
// ---------------------------------------------------------------------------

namespace {

// Truth of a propositional (box-free under the hood) formula at a bitmask
// valuation.
bool eval_prop(const ModalFormula& f, const std::vector<std::string>& vars,
               unsigned mask) {
    switch (f.kind()) {
        case ModalFormula::Kind::Var: {
            auto it = std::lower_bound(vars.begin(), vars.end(), f.name());
            return (mask >> (it - vars.begin())) & 1u;
        }
        case ModalFormula::Kind::Not:
            return !eval_prop(f.child(), vars, mask);
        case ModalFormula::Kind::Or:
            return eval_prop(f.left(), vars, mask) ||
                   eval_prop(f.right(), vars, mask);
        case ModalFormula::Kind::Box:
            throw DepthExceededError("box below depth 1");
    }
    return false;
}

bool eval_root(const ModalFormula& f, const std::vector<std::string>& vars,
               unsigned sigma, const std::vector<unsigned>& successors) {
    switch (f.kind()) {
        case ModalFormula::Kind::Var:
            return eval_prop(f, vars, sigma);
        case ModalFormula::Kind::Not:
            return !eval_root(f.child(), vars, sigma, successors);
        case ModalFormula::Kind::Or:
            return eval_root(f.left(), vars, sigma, successors) ||
                   eval_root(f.right(), vars, sigma, successors);
        case ModalFormula::Kind::Box:
            for (unsigned tau : successors)
                if (!eval_prop(f.child(), vars, tau)) return false;
            return true;
    }
    return false;
}

KripkeModel oracle_model(const std::vector<std::string>& vars, unsigned sigma,
                         const std::vector<unsigned>& successors) {
    KripkeModel m;
    m.star = "*";
    m.worlds.push_back("*");
    for (std::size_t i = 0; i < successors.size(); ++i) {
        std::string name = "s" + std::to_string(i + 1);
        m.worlds.push_back(name);
        m.relation.insert({"*", name});
    }
    for (std::size_t b = 0; b < vars.size(); ++b) {
        auto& row = m.valuation[vars[b]];
        row["*"] = (sigma >> b) & 1u;
        for (std::size_t i = 0; i < successors.size(); ++i)
            row["s" + std::to_string(i + 1)] = (successors[i] >> b) & 1u;
    }
    return m;
}

}  // namespace

Verdict is_valid_k_depth1(const ModalFormula& f) {
    if (modal_depth(f) > 1)
        throw DepthExceededError("oracle requires modal depth <= 1, got " +
                                 std::to_string(modal_depth(f)));
    auto var_set = f.variables();
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    if (vars.size() > 4)
        throw Error("depth-1 oracle is exhaustive and limited to 4 variables");

    const unsigned nvals = 1u << vars.size();
    for (unsigned sigma = 0; sigma < nvals; ++sigma) {
        for (unsigned long long smask = 0; smask < (1ull << nvals); ++smask) {
            std::vector<unsigned> successors;
            for (unsigned t = 0; t < nvals; ++t)
                if ((smask >> t) & 1ull) successors.push_back(t);
            if (!eval_root(f, vars, sigma, successors))
                return Verdict{false, oracle_model(vars, sigma, successors)};
        }
    }
    return Verdict{true, std::nullopt};
}

std::string Verdict::to_json() const {
    nlohmann::json j;
    j["valid"] = valid;
    if (countermodel)
        j["countermodel"] = nlohmann::json::parse(countermodel->to_json());
    else
        j["countermodel"] = nullptr;
    return j.dump(2);
}

}  // namespace l1k
