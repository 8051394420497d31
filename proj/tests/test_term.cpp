#include <doctest.h>

#include <random>

#include "bck/constructions.hpp"
#include "bck/engine.hpp"
#include "bck/term.hpp"
#include "oracles.hpp"

using namespace bck;

namespace {
Term x() { return Term::var("x"); }
Term y() { return Term::var("y"); }
}  // namespace

TEST_CASE("parsing the studied equations") {
    auto t = parse("x & y = y & x");
    CHECK(t.lhs == Term::meet(x(), y()));
    CHECK(t.rhs == Term::meet(y(), x()));
    CHECK(t.vars == std::vector<std::string>{"x", "y"});
    CHECK(parse("x . (y . x) = x").lhs == Term::bdot(x(), Term::bdot(y(), x())));
    auto r = parse("x = x");
    CHECK(r.vars == std::vector<std::string>{"x"});
    CHECK(builtin(Builtin::DN) == parse("~~x = x"));
    CHECK(builtin(Builtin::EM) == parse("x | ~x = 1"));
    CHECK(builtin(Builtin::E1) == parse("x . y = (x . y) . y"));
    CHECK(builtin(Builtin::EM).lhs == Term::join(x(), Term::neg(x())));
}

TEST_CASE("precedence and associativity") {
    // ~ binds tightest, then ., then &, then |
    CHECK(parse_term("x . y & y . x") == Term::meet(Term::bdot(x(), y()), Term::bdot(y(), x())));
    CHECK(parse_term("x & y | y") == Term::join(Term::meet(x(), y()), y()));
    CHECK(parse_term("~x . y") == Term::bdot(Term::neg(x()), y()));
    CHECK(parse_term("x . y . y") == Term::bdot(Term::bdot(x(), y()), y()));
    CHECK(parse_term("x & y & x") == Term::meet(Term::meet(x(), y()), x()));
    CHECK(to_string(parse_term("x . (y . x)")) == "x . (y . x)");
    CHECK(to_string(parse_term("(x . y) . y")) == "x . y . y");
    CHECK(to_string(parse_term("~(x . y)")) == "~(x . y)");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("x . y"), ParseError);
    CHECK_THROWS_AS(parse("x = y = z"), ParseError);
    CHECK_THROWS_AS(parse("x + y = y"), ParseError);
    CHECK_THROWS_AS(parse("(x . y = y"), ParseError);
    CHECK_THROWS_AS(parse("x . = y"), ParseError);
    CHECK_THROWS_AS(parse("2 = x"), ParseError);
    try {
        parse("x + y = y");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("evaluation") {
    CHECK(eval(pi(), Term::meet(x(), y()), {{"x", 1}, {"y", 2}}) == 0);
    CHECK(eval(tc(), parse_term("~x"), {{"x", 1}}) == 1);
    CHECK(eval(pi(), Term::zero(), {}) == 0);
    CHECK(eval(tc(), Term::one(), {}) == 2);
    CHECK_FALSE(holds(pi(), builtin(Builtin::T), {{"x", 1}, {"y", 2}}));
    for (Element t = 0; t < 3; ++t) CHECK(holds(pi(), builtin(Builtin::T), {{"x", t}, {"y", t}}));
    CHECK_FALSE(holds(tc(), builtin(Builtin::E1), {{"x", 2}, {"y", 1}}));
    CHECK_THROWS_AS(eval(pi(), x(), {}), UnboundVariable);
    auto u = bck_union(two(), two());
    CHECK_THROWS_AS(eval(u, parse_term("~x"), {{"x", 1}}), UnboundedAlgebra);
    CHECK_THROWS_AS(CompiledEquation(u, builtin(Builtin::DN)), UnboundedAlgebra);
}

TEST_CASE("compiled equations agree with the tree evaluator") {
    std::mt19937 rng(11);
    const std::vector<BckAlgebra> algebras{pi(), tc(), chain(5), d_algebra(4), family({FamilyName::M, 5})};
    for (int i = 0; i < 200; ++i) {
        Equation eq = Equation::make(oracle::random_term(rng, 4), oracle::random_term(rng, 4));
        for (const auto& a : algebras) {
            CompiledEquation ce(a, eq);
            std::vector<Element> tuple(eq.arity());
            const std::size_t n = a.order();
            std::size_t total = 1;
            for (std::size_t k = 0; k < eq.arity(); ++k) total *= n;
            for (std::size_t idx = 0; idx < total; ++idx) {
                Assignment as;
                for (std::size_t k = 0, r = idx; k < eq.arity(); ++k, r /= n) {
                    tuple[k] = static_cast<Element>(r % n);
                    as[eq.vars[k]] = tuple[k];
                }
                REQUIRE(ce.holds(tuple) == holds(a, eq, as));
            }
        }
    }
}

TEST_CASE("pretty print round trip") {
    std::mt19937 rng(3);
    for (int i = 0; i < 500; ++i) {
        Term t = oracle::random_term(rng, 6);
        CHECK(parse_term(to_string(t)) == t);
    }
}
