#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

enum class TermKind { Var, Zero, One, BDot, Meet, Join, Neg };

/// Immutable term tree over {., 0, 1, &, |, ~}. Copies share structure.
class Term {
public:
    Term() = default;
    static Term var(std::string name);
    static Term zero();
    static Term one();
    static Term bdot(Term l, Term r);
    static Term meet(Term l, Term r);
    static Term join(Term l, Term r);
    static Term neg(Term t);

    TermKind kind() const noexcept;
    /// Variable name; empty for other kinds.
    const std::string& name() const noexcept;
    /// Left operand of a binary node, or the operand of Neg.
    const Term& left() const noexcept;
    const Term& right() const noexcept;

    /// True when the term mentions 1, ~ or |, i.e. needs a bounded algebra.
    bool needs_bound() const noexcept;
    std::size_t depth() const noexcept;

    friend bool operator==(const Term& a, const Term& b) noexcept;

private:
    struct Node;
    static Term binary(TermKind kind, Term l, Term r);
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Equation {
    Term lhs;
    Term rhs;
    /// Free variables of lhs then rhs, each once, in order of first occurrence.
    std::vector<std::string> vars;

    static Equation make(Term lhs, Term rhs);
    std::size_t arity() const noexcept { return vars.size(); }

    friend bool operator==(const Equation& a, const Equation& b) noexcept {
        return a.lhs == b.lhs && a.rhs == b.rhs && a.vars == b.vars;
    }
};

/// Grammar: '|' < '&' < '.' < prefix '~' in binding strength; binary
/// operators associate to the left; constants 0 and 1; identifiers are
/// variables. Exactly one '=' separates the sides.
Equation parse(std::string_view text);
Term parse_term(std::string_view text);

/// Minimal-parenthesis rendering in the same grammar; parse(to_string(e)) == e.
std::string to_string(const Term& t);
std::string to_string(const Equation& e);

enum class Builtin { DN, EM, T, E1, I, X1, NX1 };

std::string_view builtin_text(Builtin b) noexcept;
std::string_view builtin_label(Builtin b) noexcept;
std::optional<Builtin> parse_builtin(std::string_view label);
Equation builtin(Builtin b);

using Assignment = std::map<std::string, Element>;

/// Throws UnboundedAlgebra if t needs 1 and `a` has none; UnboundVariable if
/// a free variable is missing from the assignment.
Element eval(const BckAlgebra& a, const Term& t, const Assignment& assignment);
bool holds(const BckAlgebra& a, const Equation& eq, const Assignment& assignment);

/// An equation flattened to postfix code against one algebra, for repeated
/// evaluation over tuples indexed like `eq.vars`. Meet, join and negation
/// are still expanded to their defining terms on every evaluation.
class CompiledEquation {
public:
    CompiledEquation(const BckAlgebra& a, const Equation& eq);
    bool holds(std::span<const Element> tuple) const;

private:
    struct Instr {
        TermKind kind;
        std::size_t var;
    };
    Element run(const std::vector<Instr>& code, std::span<const Element> tuple, std::vector<Element>& stack) const;

    const BckAlgebra* algebra_;
    std::vector<Instr> lhs_, rhs_;
};

}  // namespace bck
