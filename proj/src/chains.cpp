#include "l1k/chains.hpp"

#include <stdexcept>

#include <json.hpp>

#include "l1k/tableau.hpp"

namespace l1k {

namespace {

void require_hintikka(const L1Formula& psi) {
    if (!is_hintikka(psi))
        throw NotHintikkaError("chain analysis requires a Hintikka formula: " +
                               psi.to_string());
}

void collect_vars(const L1Formula& f, std::set<NameVar>& out) {
    switch (f.kind()) {
        case L1Formula::Kind::Eps:
            out.insert(f.subject());
            out.insert(f.predicate());
            break;
        case L1Formula::Kind::Not:
            collect_vars(f.child(), out);
            break;
        case L1Formula::Kind::Or:
            collect_vars(f.left(), out);
            collect_vars(f.right(), out);
            break;
    }
}

bool both_directions(const std::set<std::pair<NameVar, NameVar>>& neg,
                     const NameVar& a, const NameVar& b) {
    return neg.count({a, b}) > 0 && neg.count({b, a}) > 0;
}

std::set<NameVar> chain_vars(const std::set<std::pair<NameVar, NameVar>>& neg,
                             const std::set<NameVar>& nv) {
    std::set<NameVar> cn;
    for (const auto& a : nv)
        for (const auto& b : nv)
            if (both_directions(neg, a, b)) {
                cn.insert(a);
                break;
            }
    return cn;
}

std::vector<Chain> sorted_chains(std::set<Chain> classes) {
    // std::set<Chain> already orders by least member (lexicographic set
    // comparison), so a plain copy preserves the representative order.
    return {classes.begin(), classes.end()};
}

}  // namespace

std::set<NameVar> name_vars(const L1Formula& phi) {
    std::set<NameVar> out;
    collect_vars(phi, out);
    return out;
}

std::set<std::pair<NameVar, NameVar>> chain_relation(const L1Formula& psi) {
    require_hintikka(psi);
    auto neg = negative_atoms(psi);
    auto nv = name_vars(psi);
    auto cn = chain_vars(neg, nv);
    std::set<std::pair<NameVar, NameVar>> rel;
    for (const auto& a : cn)
        for (const auto& b : cn)
            if (both_directions(neg, a, b)) rel.insert({a, b});
    return rel;
}

std::vector<Chain> chain_quotient(const L1Formula& psi) {
    auto rel = chain_relation(psi);
    std::map<NameVar, Chain> cls;
    for (const auto& [a, b] : rel) cls[a].insert(b);
    std::set<Chain> classes;
    for (const auto& [a, c] : cls) classes.insert(c);
    return sorted_chains(std::move(classes));
}

std::vector<Chain> chains_ki(const L1Formula& psi) {
    require_hintikka(psi);
    auto neg = negative_atoms(psi);
    auto nv = name_vars(psi);

    // Candidates must be self-connected (a negative eps(a,a)); a singleton
    // without that witness is not a chain.
    std::vector<NameVar> candidates;
    for (const auto& a : nv)
        if (both_directions(neg, a, a)) candidates.push_back(a);

    std::set<Chain> chains;
    for (const auto& seed : candidates) {
        Chain c{seed};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& b : candidates) {
                if (c.count(b)) continue;
                bool connected_to_all = true;
                for (const auto& m : c)
                    if (!both_directions(neg, b, m)) {
                        connected_to_all = false;
                        break;
                    }
                if (connected_to_all) {
                    c.insert(b);
                    grew = true;
                }
            }
        }
        chains.insert(std::move(c));
    }
    return sorted_chains(std::move(chains));
}

Tails tails_of(const L1Formula& psi) {
    auto chains = chain_quotient(psi);
    auto neg = negative_atoms(psi);
    Tails t;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (const auto& a : chains[i]) {
            for (const auto& [x, b] : neg) {
                if (!(x == a)) continue;
                if (chains[i].count(b)) continue;
                t.tails.insert(b);
                t.links[b].insert(i);
            }
        }
    }
    return t;
}

ChainAnalysis analyze(const L1Formula& psi) {
    ChainAnalysis a;
    a.nv = name_vars(psi);
    a.chains = chain_quotient(psi);
    for (const auto& c : a.chains) a.cn.insert(c.begin(), c.end());
    Tails t = tails_of(psi);
    a.tails = std::move(t.tails);
    a.tail_links = std::move(t.links);
    for (const auto& v : a.nv)
        if (!a.cn.count(v) && !a.tails.count(v)) a.rest.insert(v);

    // nv = cn + tails + rest must be a disjoint partition.
    for (const auto& v : a.tails)
        if (a.cn.count(v))
            throw std::logic_error("tail inside a chain: " + v.id);
    if (a.cn.size() + a.tails.size() + a.rest.size() != a.nv.size())
        throw std::logic_error("name variable partition is not disjoint");

    // A rest variable never occurs in a negative atom, so wherever it shows
    // up in a minimal part, that part is a positive atom. (It may also occur
    // in no part at all, buried in a negative disjunction whose other
    // disjunct discharges the saturation condition.)
    auto neg = negative_atoms(psi);
    for (const auto& v : a.rest)
        for (const auto& [x, y] : neg)
            if (x == v || y == v)
                throw std::logic_error("rest variable in a negative atom: " +
                                       v.id);
    return a;
}

std::string ChainAnalysis::to_json() const {
    nlohmann::json j;
    auto names = [](const std::set<NameVar>& s) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : s) arr.push_back(v.id);
        return arr;
    };
    j["nv"] = names(nv);
    j["cn"] = names(cn);
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : chains) cs.push_back(names(c));
    j["chains"] = std::move(cs);
    j["tails"] = names(tails);
    j["rest"] = names(rest);
    nlohmann::json links = nlohmann::json::object();
    for (const auto& [tail, idx] : tail_links) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto i : idx) arr.push_back(i + 1);  // 1-based, matching g_i
        links[tail.id] = std::move(arr);
    }
    j["tail_links"] = std::move(links);
    return j.dump(2);
}

}  // namespace l1k
