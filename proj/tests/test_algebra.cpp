#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "bck/constructions.hpp"
#include "bck/table_io.hpp"
#include "oracles.hpp"

using namespace bck;

TEST_CASE("axiom report on small tables") {
    CHECK(check_axioms(3, RawTable{{0, 0, 0}, {1, 0, 0}, {2, 2, 0}}).ok());

    auto r = check_axioms(2, RawTable{{0, 1}, {1, 0}});
    REQUIRE(r.find(Axiom::BCK4));
    CHECK(r.find(Axiom::BCK4)->witness == std::vector<Element>{1});

    auto r5 = check_axioms(3, RawTable{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}});
    REQUIRE(r5.find(Axiom::BCK5));
    CHECK(r5.find(Axiom::BCK5)->witness == std::vector<Element>{1, 2});
}

TEST_CASE("structural errors are not axiom violations") {
    CHECK_THROWS_AS(check_axioms(2, RawTable{{0, 0}}), MalformedTable);
    CHECK_THROWS_AS(check_axioms(2, RawTable{{0, 0}, {1, 2}}), MalformedTable);
    CHECK_THROWS_AS(check_axioms(2, RawTable{{0, 0}, {1, -1}}), MalformedTable);
    CHECK_THROWS_AS(BckAlgebra::from_table(2, RawTable{{0, 1}, {1, 0}}), InvalidAlgebra);
}

TEST_CASE("bound detection") {
    CHECK(tc().bound() == Element{2});
    CHECK(trivial().bound() == Element{0});
    auto u = BckAlgebra::from_table(3, RawTable{{0, 0, 0}, {1, 0, 1}, {2, 2, 0}});
    CHECK_FALSE(u.bound());
    CHECK_THROWS_AS(u.neg(1), UnboundedAlgebra);
}

TEST_CASE("derived operations") {
    auto p = pi();
    CHECK(p.op(2, 1) == 2);
    CHECK(p.meet(1, 2) == 0);
    CHECK(p.meet(2, 1) == 1);
    CHECK(tc().leq(1, 2));
    auto u = bck_union(two(), two());
    CHECK_FALSE(u.leq(1, 2));
    CHECK_FALSE(u.leq(2, 1));
    CHECK(tc().neg(1) == 1);
    CHECK(chain(4).join(1, 2) == 2);
    CHECK(tc().join(1, tc().neg(1)) == 1);
    for (std::size_t n = 2; n <= 6; ++n) {
        auto c = chain(n);
        for (Element x = 0; x < n; ++x) {
            CHECK(c.op(x, x) == 0);
            CHECK(c.op(x, 0) == x);
            CHECK(c.meet(x, x) == x);
            CHECK(c.neg(c.neg(c.neg(x))) == c.neg(x));
        }
    }
}

TEST_CASE("properties of the named algebras") {
    auto p = pi(), t = tc();
    CHECK(p.is_linear());
    CHECK_FALSE(p.is_commutative());
    CHECK(p.is_positive_implicative());
    CHECK_FALSE(p.is_implicative());
    CHECK(t.is_linear());
    CHECK(t.is_commutative());
    CHECK_FALSE(t.is_positive_implicative());
    CHECK(two().is_implicative());
    CHECK(family({FamilyName::B, 5}).atoms().size() == 3);
    CHECK(chain(5).atoms() == std::vector<Element>{1});
    CHECK(bck_union(two(), two()).atoms() == std::vector<Element>{1, 2});
}

TEST_CASE("canonical form and isomorphism") {
    auto p = pi();
    const std::vector<Element> swap{0, 2, 1};
    auto q = permuted(p, swap);
    CHECK_FALSE(q == p);
    CHECK(is_isomorphic(p, q));
    CHECK(find_isomorphism(p, q));
    CHECK_FALSE(is_isomorphic(p, tc()));
    CHECK(canonical_form(canonical(p)) == canonical_form(p));

    // fast canonical form against the exhaustive one, on shuffled family members
    std::mt19937 rng(7);
    for (auto f : {FamilyName::B, FamilyName::M, FamilyName::P, FamilyName::Q, FamilyName::D}) {
        auto a = family({f, 5});
        std::vector<Element> perm(a.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        auto b = permuted(a, perm);
        Cells cells(b.cells().begin(), b.cells().end());
        CHECK(canonical_form(b) == oracle::slow_canonical(b.order(), cells));
        CHECK(canonical_form(b) == canonical_form(a));
        auto iso = find_isomorphism(a, b);
        REQUIRE(iso);
        CHECK(permuted(a, *iso) == b);
    }
}

TEST_CASE("backtracking isomorphism on larger orders") {
    auto a = direct_product(chain(3), chain(3));
    auto b = direct_product(chain(3), chain(3));
    std::vector<Element> perm{0, 8, 7, 6, 5, 4, 3, 2, 1};
    auto c = permuted(b, perm);
    CHECK(find_isomorphism(a, c));
    CHECK_FALSE(find_isomorphism(a, chain(9)));
}

TEST_CASE("table text format") {
    std::istringstream in("# comment\n\n3\n0 0 0\n1 0 0\n2 1 0\n");
    auto t = read_table(in);
    CHECK(t.order == 3);
    CHECK(BckAlgebra::from_table(t.order, t.table) == tc());

    std::istringstream empty("");
    CHECK_THROWS_AS(read_table(empty), ParseError);
    std::istringstream junk("2\n0 0\n1 x\n");
    CHECK_THROWS_AS(read_table(junk), ParseError);
    std::istringstream short_row("3\n0 0 0\n1 0\n2 2 0\n");
    CHECK_THROWS_AS(read_table(short_row), ParseError);

    std::ostringstream out;
    write_table(out, pi());
    CHECK(out.str() == "3\n0 0 0\n1 0 0\n2 2 0\n");
    std::istringstream back(out.str());
    auto r = read_table(back);
    CHECK(BckAlgebra::from_table(r.order, r.table) == pi());
}
