#include "l1k/kripke.hpp"

#include <algorithm>

#include <json.hpp>

#include "l1k/chains.hpp"
#include "l1k/tableau.hpp"
#include "l1k/translate.hpp"

namespace l1k {

// ===========================================================================
// Models and forcing
// ===========================================================================

bool KripkeModel::has_world(const std::string& w) const {
    return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

bool forces(const KripkeModel& m, const std::string& world,
            const ModalFormula& f) {
    if (!m.has_world(world)) throw ModelError("unknown world: " + world);
    switch (f.kind()) {
        case ModalFormula::Kind::Var: {
            auto v = m.valuation.find(f.name());
            if (v == m.valuation.end())
                throw ModelError("undeclared variable: " + f.name());
            auto w = v->second.find(world);
            if (w == v->second.end())
                throw ModelError("no value for " + f.name() + " at " + world);
            return w->second;
        }
        case ModalFormula::Kind::Not:
            return !forces(m, world, f.child());
        case ModalFormula::Kind::Or:
            return forces(m, world, f.left()) || forces(m, world, f.right());
        case ModalFormula::Kind::Box:
            for (const auto& [u, v] : m.relation)
                if (u == world && !forces(m, v, f.child())) return false;
            return true;
    }
    throw ModelError("unreachable formula kind");
}

std::string KripkeModel::to_json() const {
    nlohmann::json j;
    j["worlds"] = worlds;
    j["star"] = star;
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& [u, v] : relation)
        rel.push_back(nlohmann::json::array({u, v}));
    j["relation"] = std::move(rel);
    nlohmann::json val = nlohmann::json::object();
    for (const auto& [var, byWorld] : valuation) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto& [w, b] : byWorld) row[w] = b ? 1 : 0;
        val[var] = std::move(row);
    }
    j["valuation"] = std::move(val);
    return j.dump(2);
}

KripkeModel KripkeModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("invalid model JSON: ") + e.what());
    }
    KripkeModel m;
    try {
        m.worlds = j.at("worlds").get<std::vector<std::string>>();
        m.star = j.at("star").get<std::string>();
        for (const auto& pair : j.at("relation"))
            m.relation.insert({pair.at(0).get<std::string>(),
                               pair.at(1).get<std::string>()});
        for (const auto& [var, row] : j.at("valuation").items())
            for (const auto& [w, b] : row.items())
                m.valuation[var][w] = b.get<int>() != 0;
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("invalid model JSON: ") + e.what());
    }

    if (m.worlds.empty()) throw ModelError("model has no worlds");
    if (!m.has_world(m.star))
        throw ModelError("star world is not a world: " + m.star);
    for (const auto& [u, v] : m.relation)
        if (!m.has_world(u) || !m.has_world(v))
            throw ModelError("relation mentions unknown world: " + u + " -> " +
                             v);
    for (const auto& [var, row] : m.valuation)
        for (const auto& w : m.worlds)
            if (row.find(w) == row.end())
                throw ModelError("valuation of " + var +
                                 " is not total: missing world " + w);
    return m;
}

// ===========================================================================
// Frame variants
// ===========================================================================

namespace {

struct VariantInfo {
    FrameVariant v;
    const char* name;
};

constexpr VariantInfo kVariants[] = {
    {FrameVariant::K, "k"},
    {FrameVariant::Gl, "gl"},
    {FrameVariant::DeonticOK, "ok"},
    {FrameVariant::DeonticOM, "om"},
    {FrameVariant::DeonticOS4, "os4"},
    {FrameVariant::DeonticOB, "ob"},
    {FrameVariant::DeonticOS5, "os5"},
    {FrameVariant::DeonticOKPlus, "ok+"},
    {FrameVariant::DeonticOMPlus, "om+"},
    {FrameVariant::DeonticOS4Plus, "os4+"},
    {FrameVariant::DeonticOBPlus, "ob+"},
    {FrameVariant::DeonticOS5Plus, "os5+"},
    {FrameVariant::DeonticFull, "deontic-full"},
    {FrameVariant::FanCluster, "fan-cluster"},
    {FrameVariant::FanLoops, "fan-loops"},
    {FrameVariant::FanComplete, "fan-complete"},
    {FrameVariant::FanClusterReturn, "fan-cluster-return"},
    {FrameVariant::ClusterStarLoop, "cluster-starloop"},
    {FrameVariant::FanReturnStarLoop, "fan-return-starloop"},
};

bool deontic_s5(FrameVariant v) {
    return v == FrameVariant::DeonticOS5 || v == FrameVariant::DeonticOS5Plus;
}

std::string gname(int i) { return "g" + std::to_string(i); }

}  // namespace

const std::vector<FrameVariant>& all_frame_variants() {
    static const std::vector<FrameVariant> all = [] {
        std::vector<FrameVariant> out;
        for (const auto& info : kVariants) out.push_back(info.v);
        return out;
    }();
    return all;
}

const std::vector<std::string>& all_variant_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& info : kVariants) out.push_back(info.name);
        return out;
    }();
    return names;
}

std::string variant_name(FrameVariant v) {
    for (const auto& info : kVariants)
        if (info.v == v) return info.name;
    throw Error("unknown frame variant");
}

FrameVariant parse_variant(const std::string& name) {
    for (const auto& info : kVariants)
        if (name == info.name) return info.v;
    throw Error("unknown frame variant: " + name);
}

bool is_deontic(FrameVariant v) {
    switch (v) {
        case FrameVariant::DeonticOK:
        case FrameVariant::DeonticOM:
        case FrameVariant::DeonticOS4:
        case FrameVariant::DeonticOB:
        case FrameVariant::DeonticOS5:
        case FrameVariant::DeonticOKPlus:
        case FrameVariant::DeonticOMPlus:
        case FrameVariant::DeonticOS4Plus:
        case FrameVariant::DeonticOBPlus:
        case FrameVariant::DeonticOS5Plus:
            return true;
        default:
            return false;
    }
}

std::set<std::pair<std::string, std::string>> variant_relation(FrameVariant v,
                                                               int n) {
    using Rel = std::set<std::pair<std::string, std::string>>;

    if (n == 0 && is_deontic(v)) {
        // The chainless deontic cores.
        if (deontic_s5(v)) return Rel{{"*", gname(1)}};
        return Rel{{"*", gname(1)}, {gname(1), "*"}, {gname(1), gname(1)}};
    }

    int m = std::max(n, 1);  // the chainless core keeps a single companion g1
    Rel fan, cluster, loops, complete, ret;
    for (int i = 1; i <= m; ++i) {
        fan.insert({"*", gname(i)});
        ret.insert({gname(i), "*"});
        loops.insert({gname(i), gname(i)});
        for (int j = 1; j <= m; ++j) {
            complete.insert({gname(i), gname(j)});
            if (i != j) cluster.insert({gname(i), gname(j)});
        }
    }
    auto with = [](Rel a, const Rel& b) {
        a.insert(b.begin(), b.end());
        return a;
    };

    switch (v) {
        case FrameVariant::K:
        case FrameVariant::Gl:
            return fan;
        case FrameVariant::DeonticOK:
        case FrameVariant::DeonticOM:
        case FrameVariant::DeonticOS4:
        case FrameVariant::DeonticOB:
        case FrameVariant::DeonticOKPlus:
        case FrameVariant::DeonticOMPlus:
        case FrameVariant::DeonticOS4Plus:
        case FrameVariant::DeonticOBPlus:
            return with(fan, loops);
        case FrameVariant::DeonticOS5:
        case FrameVariant::DeonticOS5Plus:
            return with(fan, cluster);
        case FrameVariant::DeonticFull:
            return with(fan, complete);
        case FrameVariant::FanCluster:
            return with(fan, cluster);
        case FrameVariant::FanLoops:
            return with(fan, loops);
        case FrameVariant::FanComplete:
            return with(fan, complete);
        case FrameVariant::FanClusterReturn:
            return with(with(fan, cluster), ret);
        case FrameVariant::ClusterStarLoop: {
            Rel r = with(fan, cluster);
            r.insert({"*", "*"});
            return r;
        }
        case FrameVariant::FanReturnStarLoop: {
            Rel r = with(fan, ret);
            r.insert({"*", "*"});
            return r;
        }
    }
    throw Error("unknown frame variant");
}

KripkeModel variant_frame(FrameVariant v, int n) {
    KripkeModel m;
    m.star = "*";
    m.worlds.push_back("*");
    int companions = std::max(n, 1);
    for (int i = 1; i <= companions; ++i) m.worlds.push_back(gname(i));
    m.relation = variant_relation(v, n);
    return m;
}

// ===========================================================================
// Countermodels
// ===========================================================================

namespace {

KripkeModel base_countermodel(const ChainAnalysis& a) {
    KripkeModel m;
    m.star = "*";
    m.worlds.push_back("*");
    int n = static_cast<int>(a.chains.size());
    int companions = std::max(n, 1);
    for (int i = 1; i <= companions; ++i) m.worlds.push_back(gname(i));
    m.relation = variant_relation(FrameVariant::K, n);

    for (const auto& v : a.nv) {
        auto& row = m.valuation[prop_var_name(v)];
        for (const auto& w : m.worlds) row[w] = false;
    }
    if (n == 0) return m;  // all-false valuation

    for (std::size_t i = 0; i < a.chains.size(); ++i) {
        for (const auto& v : a.chains[i]) {
            auto& row = m.valuation[prop_var_name(v)];
            row["*"] = true;
            row[gname(static_cast<int>(i) + 1)] = true;
        }
    }
    for (const auto& [tail, linked] : a.tail_links) {
        auto& row = m.valuation[prop_var_name(tail)];
        for (auto i : linked) row[gname(static_cast<int>(i) + 1)] = true;
    }
    return m;
}

}  // namespace

KripkeModel countermodel_k(const L1Formula& psi) {
    return base_countermodel(analyze(psi));  // analyze checks the precondition
}

KripkeModel countermodel_variant(const L1Formula& psi, FrameVariant v) {
    ChainAnalysis a = analyze(psi);
    KripkeModel m = base_countermodel(a);
    m.relation = variant_relation(v, static_cast<int>(a.chains.size()));
    return m;
}

// ===========================================================================
// Frame properties
// ===========================================================================

FrameProperties frame_properties(const KripkeModel& m) {
    const auto& W = m.worlds;
    auto rel = [&](const std::string& x, const std::string& y) {
        return m.relation.count({x, y}) > 0;
    };

    FrameProperties p;
    p.serial = true;
    p.transitive = true;
    p.euclidean = true;
    p.almost_reflexive = true;
    p.almost_symmetric = true;
    p.reflexive = true;
    p.irreflexive = true;
    p.symmetric = true;

    for (const auto& x : W) {
        if (rel(x, x)) p.irreflexive = false;
        else p.reflexive = false;

        bool has_succ = false;
        for (const auto& y : W) {
            if (!rel(x, y)) continue;
            has_succ = true;
            if (!rel(y, y)) p.almost_reflexive = false;
            if (!rel(y, x)) p.symmetric = false;
            for (const auto& z : W) {
                if (rel(y, z) && !rel(x, z)) p.transitive = false;
                if (rel(x, z) && !rel(y, z)) p.euclidean = false;
                if (rel(y, z) && !rel(z, y)) p.almost_symmetric = false;
            }
        }
        if (!has_succ) p.serial = false;
    }
    return p;
}

FrameProperties audit_variant(FrameVariant v, int n) {
    if (n < 1) throw Error("audit_variant expects n >= 1");
    return frame_properties(variant_frame(v, n));
}

std::vector<std::string> audit_notes(FrameVariant v, int n) {
    std::vector<std::string> notes;
    switch (v) {
        case FrameVariant::ClusterStarLoop:
            notes.push_back(
                "the (*,gi) edges are included: the relation is often displayed "
                "without them, but evaluating a box at * is only meaningful "
                "with them present");
            notes.push_back(
                "countermodels over this frame do not falsify translations of "
                "leaves with tails: (*,*) makes the box at * evaluate at * "
                "itself, where tail variables are false");
            break;
        case FrameVariant::FanReturnStarLoop:
            notes.push_back(
                "countermodels over this frame do not falsify translations of "
                "leaves with tails: (*,*) makes the box at * evaluate at * "
                "itself, where tail variables are false");
            break;
        case FrameVariant::DeonticOS5:
        case FrameVariant::DeonticOS5Plus:
            if (n == 0) {
                notes.push_back(
                    "the chainless core {(*,g1)} is not Euclidean: (*,g1) with "
                    "itself requires (g1,g1)");
            } else {
                notes.push_back(
                    "not Euclidean: (*,gi) taken twice requires (gi,gi), which "
                    "the irreflexive cluster omits; the deontic-full relation "
                    "is the Euclidean repair");
            }
            break;
        case FrameVariant::DeonticOK:
        case FrameVariant::DeonticOM:
        case FrameVariant::DeonticOS4:
        case FrameVariant::DeonticOB:
        case FrameVariant::DeonticOKPlus:
        case FrameVariant::DeonticOMPlus:
        case FrameVariant::DeonticOS4Plus:
        case FrameVariant::DeonticOBPlus:
            if (n == 0)
                notes.push_back(
                    "the chainless core {(*,g1),(g1,*),(g1,g1)} is not almost "
                    "reflexive: (g1,*) requires (*,*)");
            break;
        default:
            break;
    }
    return notes;
}

std::string FrameProperties::to_json() const {
    nlohmann::json j;
    j["serial"] = serial;
    j["transitive"] = transitive;
    j["euclidean"] = euclidean;
    j["almost_reflexive"] = almost_reflexive;
    j["almost_symmetric"] = almost_symmetric;
    j["reflexive"] = reflexive;
    j["irreflexive"] = irreflexive;
    j["symmetric"] = symmetric;
    return j.dump(2);
}

}  // namespace l1k
