#include "l1k/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace l1k {

// ===========================================================================
// L1Formula construction
// ===========================================================================

L1Formula L1Formula::eps(NameVar subject, NameVar predicate) {
    auto n = std::make_shared<Node>(Kind::Eps);
    n->subj = std::move(subject);
    n->pred = std::move(predicate);
    n->size = 1;
    return L1Formula(std::move(n));
}

L1Formula L1Formula::neg(L1Formula f) {
    auto n = std::make_shared<Node>(Kind::Not);
    n->size = 1 + f.size();
    n->lhs = std::move(f.node_);
    return L1Formula(std::move(n));
}

L1Formula L1Formula::disj(L1Formula lhs, L1Formula rhs) {
    auto n = std::make_shared<Node>(Kind::Or);
    n->size = 1 + lhs.size() + rhs.size();
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return L1Formula(std::move(n));
}

L1Formula L1Formula::conj(L1Formula lhs, L1Formula rhs) {
    return neg(disj(neg(std::move(lhs)), neg(std::move(rhs))));
}

L1Formula L1Formula::impl(L1Formula lhs, L1Formula rhs) {
    return disj(neg(std::move(lhs)), std::move(rhs));
}

L1Formula L1Formula::equiv(L1Formula lhs, L1Formula rhs) {
    L1Formula fwd = impl(lhs, rhs);
    L1Formula bwd = impl(std::move(rhs), std::move(lhs));
    return conj(std::move(fwd), std::move(bwd));
}

int L1Formula::compare(const L1Formula& other) const {
    if (node_ == other.node_) return 0;
    auto ka = static_cast<int>(kind());
    auto kb = static_cast<int>(other.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (kind()) {
        case Kind::Eps: {
            if (auto c = subject() <=> other.subject(); c != 0)
                return c < 0 ? -1 : 1;
            if (auto c = predicate() <=> other.predicate(); c != 0)
                return c < 0 ? -1 : 1;
            return 0;
        }
        case Kind::Not:
            return child().compare(other.child());
        case Kind::Or: {
            if (int c = left().compare(other.left()); c != 0) return c;
            return right().compare(other.right());
        }
    }
    return 0;
}

// ===========================================================================
// ModalFormula construction
// ===========================================================================

ModalFormula ModalFormula::var(std::string name) {
    auto n = std::make_shared<Node>(Kind::Var);
    n->name = std::move(name);
    n->size = 1;
    return ModalFormula(std::move(n));
}

ModalFormula ModalFormula::neg(ModalFormula f) {
    auto n = std::make_shared<Node>(Kind::Not);
    n->size = 1 + f.size();
    n->lhs = std::move(f.node_);
    return ModalFormula(std::move(n));
}

ModalFormula ModalFormula::disj(ModalFormula lhs, ModalFormula rhs) {
    auto n = std::make_shared<Node>(Kind::Or);
    n->size = 1 + lhs.size() + rhs.size();
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return ModalFormula(std::move(n));
}

ModalFormula ModalFormula::box(ModalFormula f) {
    auto n = std::make_shared<Node>(Kind::Box);
    n->size = 1 + f.size();
    n->lhs = std::move(f.node_);
    return ModalFormula(std::move(n));
}

ModalFormula ModalFormula::conj(ModalFormula lhs, ModalFormula rhs) {
    return neg(disj(neg(std::move(lhs)), neg(std::move(rhs))));
}

ModalFormula ModalFormula::impl(ModalFormula lhs, ModalFormula rhs) {
    return disj(neg(std::move(lhs)), std::move(rhs));
}

ModalFormula ModalFormula::equiv(ModalFormula lhs, ModalFormula rhs) {
    ModalFormula fwd = impl(lhs, rhs);
    ModalFormula bwd = impl(std::move(rhs), std::move(lhs));
    return conj(std::move(fwd), std::move(bwd));
}

ModalFormula ModalFormula::diamond(ModalFormula f) {
    return neg(box(neg(std::move(f))));
}

int ModalFormula::compare(const ModalFormula& other) const {
    if (node_ == other.node_) return 0;
    auto ka = static_cast<int>(kind());
    auto kb = static_cast<int>(other.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (kind()) {
        case Kind::Var:
            return name().compare(other.name());
        case Kind::Not:
        case Kind::Box:
            return child().compare(other.child());
        case Kind::Or: {
            if (int c = left().compare(other.left()); c != 0) return c;
            return right().compare(other.right());
        }
    }
    return 0;
}

std::set<std::string> ModalFormula::variables() const {
    std::set<std::string> out;
    auto walk = [&](auto&& self, const ModalFormula& f) -> void {
        switch (f.kind()) {
            case Kind::Var: out.insert(f.name()); break;
            case Kind::Not:
            case Kind::Box: self(self, f.child()); break;
            case Kind::Or:
                self(self, f.left());
                self(self, f.right());
                break;
        }
    };
    walk(walk, *this);
    return out;
}

// ===========================================================================
// Printing
// ===========================================================================
//
// Precedence used by both printers (loosest to tightest): <-> 1, -> 2,
// | 3, & 4, unary 5. The canonical printers emit only !, | and [] / O,
// matching what the parsers build, so one pair of rules suffices:
// a left-associative | needs parentheses around a right child of the same
// precedence, and unary operators parenthesize non-atomic operands that
// bind looser.

namespace {

constexpr int kPrecOr = 3;
constexpr int kPrecUnary = 5;

int l1_prec(const L1Formula& f) {
    switch (f.kind()) {
        case L1Formula::Kind::Eps: return 6;
        case L1Formula::Kind::Not: return kPrecUnary;
        case L1Formula::Kind::Or: return kPrecOr;
    }
    return 6;
}

void print_l1(std::ostream& os, const L1Formula& f) {
    switch (f.kind()) {
        case L1Formula::Kind::Eps:
            os << "eps(" << f.subject().id << "," << f.predicate().id << ")";
            break;
        case L1Formula::Kind::Not: {
            os << "!";
            bool parens = l1_prec(f.child()) < kPrecUnary;
            if (parens) os << "(";
            print_l1(os, f.child());
            if (parens) os << ")";
            break;
        }
        case L1Formula::Kind::Or: {
            bool lp = l1_prec(f.left()) < kPrecOr;
            bool rp = l1_prec(f.right()) <= kPrecOr;
            if (lp) os << "(";
            print_l1(os, f.left());
            if (lp) os << ")";
            os << " | ";
            if (rp) os << "(";
            print_l1(os, f.right());
            if (rp) os << ")";
            break;
        }
    }
}

int modal_prec(const ModalFormula& f) {
    switch (f.kind()) {
        case ModalFormula::Kind::Var: return 6;
        case ModalFormula::Kind::Not:
        case ModalFormula::Kind::Box: return kPrecUnary;
        case ModalFormula::Kind::Or: return kPrecOr;
    }
    return 6;
}

void print_modal(std::ostream& os, const ModalFormula& f,
                 ModalFormula::Render render) {
    switch (f.kind()) {
        case ModalFormula::Kind::Var:
            os << f.name();
            break;
        case ModalFormula::Kind::Not: {
            os << "!";
            bool parens = modal_prec(f.child()) < kPrecUnary;
            if (parens) os << "(";
            print_modal(os, f.child(), render);
            if (parens) os << ")";
            break;
        }
        case ModalFormula::Kind::Box: {
            bool parens = modal_prec(f.child()) < kPrecUnary;
            if (render == ModalFormula::Render::BoxSymbol) {
                os << "[]";
            } else {
                os << (parens ? "O" : "O ");
            }
            if (parens) os << "(";
            print_modal(os, f.child(), render);
            if (parens) os << ")";
            break;
        }
        case ModalFormula::Kind::Or: {
            bool lp = modal_prec(f.left()) < kPrecOr;
            bool rp = modal_prec(f.right()) <= kPrecOr;
            if (lp) os << "(";
            print_modal(os, f.left(), render);
            if (lp) os << ")";
            os << " | ";
            if (rp) os << "(";
            print_modal(os, f.right(), render);
            if (rp) os << ")";
            break;
        }
    }
}

}  // namespace

std::string L1Formula::to_string() const {
    std::ostringstream os;
    print_l1(os, *this);
    return os.str();
}

std::string ModalFormula::to_string(Render render) const {
    std::ostringstream os;
    print_modal(os, *this, render);
    return os.str();
}

// ===========================================================================
// Lexer
// ===========================================================================

namespace {

enum class Tok {
    End, LParen, RParen, Comma, Bang, Amp, Pipe, Arrow, DArrow, Box, Diamond,
    Ident
};

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    std::size_t tok_pos = 0;

    explicit Lexer(const std::string& t) : text(t) { next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_pos);
    }

    void next() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        switch (c) {
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            case ',': tok = Tok::Comma; ++pos; return;
            case '!': tok = Tok::Bang; ++pos; return;
            case '&': tok = Tok::Amp; ++pos; return;
            case '|': tok = Tok::Pipe; ++pos; return;
            case '-':
                if (pos + 1 < text.size() && text[pos + 1] == '>') {
                    tok = Tok::Arrow;
                    pos += 2;
                    return;
                }
                throw ParseError("expected '->'", pos);
            case '<':
                if (pos + 2 < text.size() && text[pos + 1] == '-' &&
                    text[pos + 2] == '>') {
                    tok = Tok::DArrow;
                    pos += 3;
                    return;
                }
                if (pos + 1 < text.size() && text[pos + 1] == '>') {
                    tok = Tok::Diamond;
                    pos += 2;
                    return;
                }
                throw ParseError("expected '<->' or '<>'", pos);
            case '[':
                if (pos + 1 < text.size() && text[pos + 1] == ']') {
                    tok = Tok::Box;
                    pos += 2;
                    return;
                }
                throw ParseError("expected '[]'", pos);
            default:
                if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    std::size_t start = pos;
                    while (pos < text.size() &&
                           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                            text[pos] == '_'))
                        ++pos;
                    ident = text.substr(start, pos - start);
                    tok = Tok::Ident;
                    return;
                }
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 pos);
        }
    }

    void expect(Tok t, const char* what) {
        if (tok != t) fail(std::string("expected ") + what);
        next();
    }
};

// Shared precedence-climbing skeleton; `Unary` supplies the language-specific
// atom and prefix-operator parsing.
template <typename F, typename Unary>
struct InfixParser {
    Lexer& lx;
    Unary unary;

    F parse_iff() {  // right-associative
        F lhs = parse_imp();
        if (lx.tok == Tok::DArrow) {
            lx.next();
            return F::equiv(std::move(lhs), parse_iff());
        }
        return lhs;
    }

    F parse_imp() {  // right-associative
        F lhs = parse_or();
        if (lx.tok == Tok::Arrow) {
            lx.next();
            return F::impl(std::move(lhs), parse_imp());
        }
        return lhs;
    }

    F parse_or() {  // left-associative
        F lhs = parse_and();
        while (lx.tok == Tok::Pipe) {
            lx.next();
            lhs = F::disj(std::move(lhs), parse_and());
        }
        return lhs;
    }

    F parse_and() {  // left-associative
        F lhs = unary(*this);
        while (lx.tok == Tok::Amp) {
            lx.next();
            lhs = F::conj(std::move(lhs), unary(*this));
        }
        return lhs;
    }
};

NameVar parse_name(Lexer& lx) {
    if (lx.tok != Tok::Ident) lx.fail("expected a name variable");
    const std::string& id = lx.ident;
    if (!std::islower(static_cast<unsigned char>(id[0])))
        lx.fail("name variables must start with a lowercase letter");
    for (char c : id)
        if (std::isupper(static_cast<unsigned char>(c)))
            lx.fail("name variables must be lowercase");
    NameVar v{id};
    lx.next();
    return v;
}

struct L1Unary {
    template <typename P>
    L1Formula operator()(P& p) const {
        Lexer& lx = p.lx;
        if (lx.tok == Tok::Bang) {
            lx.next();
            return L1Formula::neg((*this)(p));
        }
        if (lx.tok == Tok::LParen) {
            lx.next();
            L1Formula f = p.parse_iff();
            lx.expect(Tok::RParen, "')'");
            return f;
        }
        if (lx.tok == Tok::Ident && lx.ident == "eps") {
            lx.next();
            lx.expect(Tok::LParen, "'(' after eps");
            NameVar s = parse_name(lx);
            lx.expect(Tok::Comma, "','");
            NameVar t = parse_name(lx);
            lx.expect(Tok::RParen, "')'");
            return L1Formula::eps(std::move(s), std::move(t));
        }
        lx.fail("expected an atom 'eps(a,b)', '!' or '('");
    }
};

struct ModalUnary {
    template <typename P>
    ModalFormula operator()(P& p) const {
        Lexer& lx = p.lx;
        if (lx.tok == Tok::Bang) {
            lx.next();
            return ModalFormula::neg((*this)(p));
        }
        if (lx.tok == Tok::Box) {
            lx.next();
            return ModalFormula::box((*this)(p));
        }
        if (lx.tok == Tok::Diamond) {
            lx.next();
            return ModalFormula::diamond((*this)(p));
        }
        if (lx.tok == Tok::LParen) {
            lx.next();
            ModalFormula f = p.parse_iff();
            lx.expect(Tok::RParen, "')'");
            return f;
        }
        if (lx.tok == Tok::Ident) {
            ModalFormula v = ModalFormula::var(lx.ident);
            lx.next();
            return v;
        }
        lx.fail("expected a variable, '!', '[]', '<>' or '('");
    }
};

}  // namespace

L1Formula parse_l1(const std::string& text) {
    Lexer lx(text);
    InfixParser<L1Formula, L1Unary> p{lx, L1Unary{}};
    L1Formula f = p.parse_iff();
    if (lx.tok != Tok::End) lx.fail("trailing input after formula");
    return f;
}

ModalFormula parse_modal(const std::string& text) {
    Lexer lx(text);
    InfixParser<ModalFormula, ModalUnary> p{lx, ModalUnary{}};
    ModalFormula f = p.parse_iff();
    if (lx.tok != Tok::End) lx.fail("trailing input after formula");
    return f;
}

// ===========================================================================
// Positive and negative parts
// ===========================================================================

namespace {

void collect_parts(const L1Formula& f, std::vector<int>& path, Polarity pol,
                   std::vector<PartOccurrence>& out) {
    out.push_back({path, pol, f});
    switch (f.kind()) {
        case L1Formula::Kind::Eps:
            break;
        case L1Formula::Kind::Not: {
            Polarity flipped = pol == Polarity::Positive ? Polarity::Negative
                                                         : Polarity::Positive;
            path.push_back(0);
            collect_parts(f.child(), path, flipped, out);
            path.pop_back();
            break;
        }
        case L1Formula::Kind::Or:
            // A negative disjunction is a part but does not decompose; the
            // tableau's vee rule is what splits it.
            if (pol == Polarity::Positive) {
                path.push_back(0);
                collect_parts(f.left(), path, pol, out);
                path.back() = 1;
                collect_parts(f.right(), path, pol, out);
                path.pop_back();
            }
            break;
    }
}

}  // namespace

std::vector<PartOccurrence> parts(const L1Formula& phi) {
    std::vector<PartOccurrence> out;
    std::vector<int> path;
    collect_parts(phi, path, Polarity::Positive, out);
    return out;
}

std::set<L1Formula> positive_part_set(const L1Formula& phi) {
    std::set<L1Formula> out;
    for (const auto& p : parts(phi))
        if (p.polarity == Polarity::Positive) out.insert(p.formula);
    return out;
}

std::set<L1Formula> negative_part_set(const L1Formula& phi) {
    std::set<L1Formula> out;
    for (const auto& p : parts(phi))
        if (p.polarity == Polarity::Negative) out.insert(p.formula);
    return out;
}

std::set<std::pair<NameVar, NameVar>> negative_atoms(const L1Formula& phi) {
    std::set<std::pair<NameVar, NameVar>> out;
    for (const auto& p : parts(phi))
        if (p.polarity == Polarity::Negative && p.formula.is_atom())
            out.insert({p.formula.subject(), p.formula.predicate()});
    return out;
}

MinimalParts minimal_parts(const L1Formula& phi) {
    MinimalParts mp;
    for (const auto& p : parts(phi)) {
        if (p.polarity == Polarity::Positive) {
            if (p.formula.kind() == L1Formula::Kind::Eps)
                mp.minimal_pos.insert(p.formula);
        } else {
            if (p.formula.kind() != L1Formula::Kind::Not)
                mp.minimal_neg.insert(p.formula);
        }
    }
    return mp;
}

bool path_is_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

std::optional<L1Formula> axiom_witness(const L1Formula& phi) {
    auto occ = parts(phi);
    for (const auto& p : occ) {
        if (p.polarity != Polarity::Positive) continue;
        for (const auto& q : occ) {
            if (q.polarity != Polarity::Negative) continue;
            if (!(p.formula == q.formula)) continue;
            if (path_is_prefix(p.path, q.path) || path_is_prefix(q.path, p.path))
                continue;
            return p.formula;
        }
    }
    return std::nullopt;
}

bool is_axiom_tl1(const L1Formula& phi) { return axiom_witness(phi).has_value(); }

}  // namespace l1k
