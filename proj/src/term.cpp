#include "bck/term.hpp"

#include <algorithm>
#include <cctype>

namespace bck {

struct Term::Node {
    TermKind kind;
    std::string name;
    Term left;
    Term right;
    bool needs_bound;
    std::size_t depth;
};

namespace {

const Term& null_term() {
    static const Term t = Term::zero();
    return t;
}

const std::string kEmpty;

}  // namespace

Term Term::var(std::string name) {
    return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), {}, {}, false, 1}));
}
Term Term::zero() { return Term(std::make_shared<const Node>(Node{TermKind::Zero, {}, {}, {}, false, 1})); }
Term Term::one() { return Term(std::make_shared<const Node>(Node{TermKind::One, {}, {}, {}, true, 1})); }

Term Term::binary(TermKind kind, Term l, Term r) {
    const bool nb = kind == TermKind::Join || l.needs_bound() || r.needs_bound();
    const std::size_t d = 1 + std::max(l.depth(), r.depth());
    return Term(std::make_shared<const Node>(Node{kind, {}, std::move(l), std::move(r), nb, d}));
}

Term Term::bdot(Term l, Term r) { return binary(TermKind::BDot, std::move(l), std::move(r)); }
Term Term::meet(Term l, Term r) { return binary(TermKind::Meet, std::move(l), std::move(r)); }
Term Term::join(Term l, Term r) { return binary(TermKind::Join, std::move(l), std::move(r)); }

Term Term::neg(Term t) {
    std::size_t d = 1 + t.depth();
    return Term(std::make_shared<const Node>(Node{TermKind::Neg, {}, std::move(t), {}, true, d}));
}

TermKind Term::kind() const noexcept { return node_ ? node_->kind : TermKind::Zero; }
const std::string& Term::name() const noexcept { return node_ ? node_->name : kEmpty; }
const Term& Term::left() const noexcept { return node_ && node_->left.node_ ? node_->left : null_term(); }
const Term& Term::right() const noexcept { return node_ && node_->right.node_ ? node_->right : null_term(); }
bool Term::needs_bound() const noexcept { return node_ && node_->needs_bound; }
std::size_t Term::depth() const noexcept { return node_ ? node_->depth : 0; }

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TermKind::Var: return a.name() == b.name();
        case TermKind::Zero:
        case TermKind::One: return true;
        case TermKind::Neg: return a.left() == b.left();
        default: return a.left() == b.left() && a.right() == b.right();
    }
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
    switch (t.kind()) {
        case TermKind::Var:
            if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
            return;
        case TermKind::Zero:
        case TermKind::One: return;
        case TermKind::Neg: collect_vars(t.left(), out); return;
        default:
            collect_vars(t.left(), out);
            collect_vars(t.right(), out);
    }
}

}  // namespace

Equation Equation::make(Term lhs, Term rhs) {
    Equation e{std::move(lhs), std::move(rhs), {}};
    collect_vars(e.lhs, e.vars);
    collect_vars(e.rhs, e.vars);
    return e;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Equation equation() {
        Term l = join();
        skip_ws();
        if (!eat('=')) fail_here("expected '='");
        Term r = join();
        skip_ws();
        if (pos_ != s_.size()) {
            if (s_[pos_] == '=') throw ParseError("more than one '='", pos_);
            fail_here("unexpected input");
        }
        return Equation::make(std::move(l), std::move(r));
    }

    Term term_only() {
        Term t = join();
        skip_ws();
        if (pos_ != s_.size()) fail_here("unexpected input");
        return t;
    }

private:
    [[noreturn]] void fail_here(const std::string& what) {
        if (pos_ >= s_.size()) throw ParseError(what + ", found end of input", pos_);
        char c = s_[pos_];
        if (std::string_view(".&|~()=01").find(c) == std::string_view::npos && !is_ident_start(c))
            throw ParseError("unknown operator '" + std::string(1, c) + "'", pos_);
        throw ParseError(what + ", found '" + std::string(1, c) + "'", pos_);
    }

    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Term join() {
        Term t = meet();
        while (eat('|')) t = Term::join(std::move(t), meet());
        return t;
    }

    Term meet() {
        Term t = dot();
        while (eat('&')) t = Term::meet(std::move(t), dot());
        return t;
    }

    Term dot() {
        Term t = unary();
        while (eat('.')) t = Term::bdot(std::move(t), unary());
        return t;
    }

    Term unary() {
        if (eat('~')) return Term::neg(unary());
        return primary();
    }

    Term primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail_here("expected a term");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = join();
            if (!eat(')')) fail_here("expected ')'");
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
            std::string_view tok = s_.substr(start, pos_ - start);
            if (tok == "0") return Term::zero();
            if (tok == "1") return Term::one();
            throw ParseError("unknown constant '" + std::string(tok) + "'", start);
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
            return Term::var(std::string(s_.substr(start, pos_ - start)));
        }
        fail_here("expected a term");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Equation parse(std::string_view text) { return Parser(text).equation(); }
Term parse_term(std::string_view text) { return Parser(text).term_only(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(TermKind k) {
    switch (k) {
        case TermKind::Join: return 1;
        case TermKind::Meet: return 2;
        case TermKind::BDot: return 3;
        case TermKind::Neg: return 4;
        default: return 5;
    }
}

void print(const Term& t, std::string& out) {
    auto child = [&](const Term& c, bool paren) {
        if (paren) out += '(';
        print(c, out);
        if (paren) out += ')';
    };
    switch (t.kind()) {
        case TermKind::Var: out += t.name(); return;
        case TermKind::Zero: out += '0'; return;
        case TermKind::One: out += '1'; return;
        case TermKind::Neg:
            out += '~';
            child(t.left(), precedence(t.left().kind()) < precedence(TermKind::Neg));
            return;
        default: break;
    }
    const int p = precedence(t.kind());
    const char* sym = t.kind() == TermKind::BDot ? " . " : t.kind() == TermKind::Meet ? " & " : " | ";
    child(t.left(), precedence(t.left().kind()) < p);
    out += sym;
    child(t.right(), precedence(t.right().kind()) <= p);
}

}  // namespace

std::string to_string(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

// ---------------------------------------------------------------------------
// Named equations

std::string_view builtin_text(Builtin b) noexcept {
    switch (b) {
        case Builtin::DN: return "~~x = x";
        case Builtin::EM: return "x | ~x = 1";
        case Builtin::T: return "x & y = y & x";
        case Builtin::E1: return "x . y = (x . y) . y";
        case Builtin::I: return "x . (y . x) = x";
        case Builtin::X1: return "x = 1";
        case Builtin::NX1: return "~x = 1";
    }
    return "";
}

std::string_view builtin_label(Builtin b) noexcept {
    switch (b) {
        case Builtin::DN: return "DN";
        case Builtin::EM: return "EM";
        case Builtin::T: return "T";
        case Builtin::E1: return "E1";
        case Builtin::I: return "I";
        case Builtin::X1: return "X1";
        case Builtin::NX1: return "NX1";
    }
    return "";
}

std::optional<Builtin> parse_builtin(std::string_view label) {
    for (Builtin b : {Builtin::DN, Builtin::EM, Builtin::T, Builtin::E1, Builtin::I, Builtin::X1, Builtin::NX1})
        if (builtin_label(b) == label) return b;
    return std::nullopt;
}

Equation builtin(Builtin b) { return parse(builtin_text(b)); }

// ---------------------------------------------------------------------------
// Evaluation

Element eval(const BckAlgebra& a, const Term& t, const Assignment& assignment) {
    switch (t.kind()) {
        case TermKind::Var: {
            auto it = assignment.find(t.name());
            if (it == assignment.end()) throw UnboundVariable(t.name());
            if (it->second >= a.order()) throw RangeError("value for '" + t.name() + "' is out of range");
            return it->second;
        }
        case TermKind::Zero: return 0;
        case TermKind::One:
            if (!a.bound()) throw UnboundedAlgebra();
            return *a.bound();
        case TermKind::Neg: return a.neg(eval(a, t.left(), assignment));
        case TermKind::BDot: return a.op(eval(a, t.left(), assignment), eval(a, t.right(), assignment));
        case TermKind::Meet: return a.meet(eval(a, t.left(), assignment), eval(a, t.right(), assignment));
        case TermKind::Join: return a.join(eval(a, t.left(), assignment), eval(a, t.right(), assignment));
    }
    throw InternalError("unreachable term kind");
}

bool holds(const BckAlgebra& a, const Equation& eq, const Assignment& assignment) {
    return eval(a, eq.lhs, assignment) == eval(a, eq.rhs, assignment);
}

namespace {

template <class Instr>
void emit(const Term& t, const std::vector<std::string>& vars, std::vector<Instr>& code) {
    switch (t.kind()) {
        case TermKind::Var: {
            auto it = std::find(vars.begin(), vars.end(), t.name());
            code.push_back({TermKind::Var, static_cast<std::size_t>(it - vars.begin())});
            return;
        }
        case TermKind::Zero:
        case TermKind::One: code.push_back({t.kind(), 0}); return;
        case TermKind::Neg:
            emit(t.left(), vars, code);
            code.push_back({TermKind::Neg, 0});
            return;
        default:
            emit(t.left(), vars, code);
            emit(t.right(), vars, code);
            code.push_back({t.kind(), 0});
    }
}

}  // namespace

CompiledEquation::CompiledEquation(const BckAlgebra& a, const Equation& eq) : algebra_(&a) {
    if ((eq.lhs.needs_bound() || eq.rhs.needs_bound()) && !a.bound()) throw UnboundedAlgebra();
    emit(eq.lhs, eq.vars, lhs_);
    emit(eq.rhs, eq.vars, rhs_);
}

Element CompiledEquation::run(const std::vector<Instr>& code, std::span<const Element> tuple,
                              std::vector<Element>& stack) const {
    const BckAlgebra& a = *algebra_;
    stack.clear();
    for (const Instr& in : code) {
        switch (in.kind) {
            case TermKind::Var: stack.push_back(tuple[in.var]); break;
            case TermKind::Zero: stack.push_back(0); break;
            case TermKind::One: stack.push_back(*a.bound()); break;
            case TermKind::Neg: stack.back() = a.neg(stack.back()); break;
            default: {
                Element r = stack.back();
                stack.pop_back();
                Element l = stack.back();
                stack.back() = in.kind == TermKind::BDot ? a.op(l, r) : in.kind == TermKind::Meet ? a.meet(l, r)
                                                                                                  : a.join(l, r);
            }
        }
    }
    return stack.back();
}

bool CompiledEquation::holds(std::span<const Element> tuple) const {
    thread_local std::vector<Element> stack;
    return run(lhs_, tuple, stack) == run(rhs_, tuple, stack);
}

}  // namespace bck
