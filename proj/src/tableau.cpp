#include "l1k/tableau.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace l1k {

const char* rule_name(RuleKind k) {
    switch (k) {
        case RuleKind::VeeMinus: return "vee_minus";
        case RuleKind::Eps1: return "eps1";
        case RuleKind::Eps2: return "eps2";
        case RuleKind::Eps3: return "eps3";
    }
    return "?";
}

namespace {

// Post-order on occurrence paths: descendants first, then left-to-right.
bool postorder_less(const std::vector<int>& p, const std::vector<int>& q) {
    std::size_t i = 0;
    while (i < p.size() && i < q.size()) {
        if (p[i] != q[i]) return p[i] < q[i];
        ++i;
    }
    if (i == p.size() && i == q.size()) return false;  // equal
    return p.size() > q.size();  // deeper (descendant) comes first
}

struct NodeView {
    std::vector<PartOccurrence> neg_occ;  // negative occurrences, post-order
    std::set<L1Formula> neg_set;
    std::set<std::pair<NameVar, NameVar>> neg_atoms;

    explicit NodeView(const L1Formula& f) {
        for (auto& p : parts(f)) {
            if (p.polarity != Polarity::Negative) continue;
            neg_set.insert(p.formula);
            if (p.formula.is_atom())
                neg_atoms.insert({p.formula.subject(), p.formula.predicate()});
            neg_occ.push_back(std::move(p));
        }
        std::sort(neg_occ.begin(), neg_occ.end(),
                  [](const PartOccurrence& a, const PartOccurrence& b) {
                      return postorder_less(a.path, b.path);
                  });
    }

    bool has_neg(const L1Formula& f) const { return neg_set.count(f) > 0; }
    bool has_neg_atom(const NameVar& s, const NameVar& p) const {
        return neg_atoms.count({s, p}) > 0;
    }
};

// Adjoining a new disjunct: the rules extend the node formula on the right.
L1Formula extend(const L1Formula& node, const L1Formula& new_neg_part) {
    return L1Formula::disj(node, L1Formula::neg(new_neg_part));
}

// The first applicable reduction at `f` under the fixed strategy, or nullopt
// when `f` is saturated. Normality: an application is skipped whenever the
// formula it would adjoin is already a negative part.
std::optional<RuleApplication> pick_rule(const NodeView& v) {
    // vee: split a negative disjunction neither of whose disjuncts is present.
    for (const auto& o : v.neg_occ) {
        if (o.formula.kind() != L1Formula::Kind::Or) continue;
        const L1Formula& lhs = o.formula.left();
        const L1Formula& rhs = o.formula.right();
        if (v.has_neg(lhs) || v.has_neg(rhs)) continue;
        return RuleApplication{RuleKind::VeeMinus, {o}, {lhs, rhs}};
    }
    // eps1: a negative eps(x,y) demands eps(x,x).
    for (const auto& o : v.neg_occ) {
        if (!o.formula.is_atom()) continue;
        const NameVar& x = o.formula.subject();
        if (v.has_neg_atom(x, x)) continue;
        return RuleApplication{RuleKind::Eps1, {o}, {L1Formula::eps(x, x)}};
    }
    // eps2/eps3: a chained pair eps(x,y), eps(y,z) demands eps(x,z) resp.
    // eps(y,x). The pair scan admits the same occurrence in both roles (the
    // eps(x,x) case) and distinct occurrences of the same atom.
    for (int rule = 0; rule < 2; ++rule) {
        for (const auto& o1 : v.neg_occ) {
            if (!o1.formula.is_atom()) continue;
            const NameVar& x = o1.formula.subject();
            const NameVar& y = o1.formula.predicate();
            for (const auto& o2 : v.neg_occ) {
                if (!o2.formula.is_atom()) continue;
                if (!(o2.formula.subject() == y)) continue;
                const NameVar& z = o2.formula.predicate();
                if (rule == 0) {
                    if (!v.has_neg_atom(x, z))
                        return RuleApplication{
                            RuleKind::Eps2, {o1, o2}, {L1Formula::eps(x, z)}};
                } else {
                    if (!v.has_neg_atom(y, x))
                        return RuleApplication{
                            RuleKind::Eps3, {o1, o2}, {L1Formula::eps(y, x)}};
                }
            }
        }
    }
    return std::nullopt;
}

std::unique_ptr<TableauNode> expand(const L1Formula& f) {
    auto node = std::make_unique<TableauNode>(f);

    if (auto w = axiom_witness(f)) {
        node->leaf = TableauNode::Leaf::Closed;
        node->witness = std::move(w);
        return node;
    }

    NodeView view(f);
    auto rule = pick_rule(view);
    if (!rule) {
        node->leaf = TableauNode::Leaf::Open;
        return node;
    }

    for (const auto& emitted : rule->emitted)
        node->children.push_back(expand(extend(f, emitted)));
    node->rule = std::move(rule);
    return node;
}

void collect_leaves(const TableauNode* n,
                    std::vector<const TableauNode*>& out) {
    if (n->is_leaf()) {
        out.push_back(n);
        return;
    }
    for (const auto& c : n->children) collect_leaves(c.get(), out);
}

nlohmann::json node_to_json(const TableauNode& n) {
    nlohmann::json j;
    j["formula"] = n.formula.to_string();
    if (n.rule) {
        nlohmann::json r;
        r["kind"] = rule_name(n.rule->kind);
        nlohmann::json trig = nlohmann::json::array();
        for (const auto& t : n.rule->triggers)
            trig.push_back(t.formula.to_string());
        r["triggers"] = std::move(trig);
        nlohmann::json em = nlohmann::json::array();
        for (const auto& e : n.rule->emitted) em.push_back(e.to_string());
        r["emitted"] = std::move(em);
        j["rule"] = std::move(r);
    } else {
        j["rule"] = nullptr;
    }
    switch (n.leaf) {
        case TableauNode::Leaf::None: j["leaf"] = nullptr; break;
        case TableauNode::Leaf::Closed:
            j["leaf"] = "closed";
            j["axiom_witness"] = n.witness->to_string();
            break;
        case TableauNode::Leaf::Open: j["leaf"] = "open"; break;
    }
    if (!n.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : n.children) kids.push_back(node_to_json(*c));
        j["children"] = std::move(kids);
    }
    return j;
}

}  // namespace

bool Tableau::closed() const {
    for (const auto* leaf : leaves())
        if (leaf->leaf != TableauNode::Leaf::Closed) return false;
    return true;
}

std::vector<const TableauNode*> Tableau::leaves() const {
    std::vector<const TableauNode*> out;
    collect_leaves(tree.get(), out);
    return out;
}

std::string Tableau::to_json() const { return node_to_json(*tree).dump(2); }

bool is_hintikka(const L1Formula& phi) {
    if (is_axiom_tl1(phi)) return false;  // condition (1)

    NodeView v(phi);
    // (2): every negative disjunction has a disjunct among the negative parts.
    for (const auto& f : v.neg_set) {
        if (f.kind() != L1Formula::Kind::Or) continue;
        if (!v.has_neg(f.left()) && !v.has_neg(f.right())) return false;
    }
    // (3): eps(x,y) negative demands eps(x,x) negative.
    for (const auto& [x, y] : v.neg_atoms)
        if (!v.has_neg_atom(x, x)) return false;
    // (4), (5): a chained pair eps(x,y), eps(y,z) demands eps(x,z) and
    // eps(y,x) negative.
    for (const auto& [x, y] : v.neg_atoms)
        for (const auto& [y2, z] : v.neg_atoms) {
            if (!(y == y2)) continue;
            if (!v.has_neg_atom(x, z)) return false;
            if (!v.has_neg_atom(y, x)) return false;
        }
    return true;
}

Tableau build_normal_tableau(const L1Formula& phi) {
    Tableau t{phi, expand(phi)};
    return t;
}

bool is_provable_l1(const L1Formula& phi) {
    return build_normal_tableau(phi).closed();
}

std::set<L1Formula> hintikka_formulas(const L1Formula& phi) {
    std::set<L1Formula> out;
    Tableau t = build_normal_tableau(phi);
    for (const auto* leaf : t.leaves())
        if (leaf->leaf == TableauNode::Leaf::Open) out.insert(leaf->formula);
    return out;
}

std::optional<L1Formula> first_hintikka_leaf(const L1Formula& phi) {
    Tableau t = build_normal_tableau(phi);
    for (const auto* leaf : t.leaves())
        if (leaf->leaf == TableauNode::Leaf::Open) return leaf->formula;
    return std::nullopt;
}

}  // namespace l1k
