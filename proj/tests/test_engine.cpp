#include <doctest.h>

#include "bck/constructions.hpp"
#include "bck/engine.hpp"
#include "oracles.hpp"

using namespace bck;

TEST_CASE("degree arithmetic") {
    CHECK(Degree(2, 4) == Degree(1, 2));
    CHECK(Degree(2, 4).str() == "1/2");
    CHECK(Degree(7, 9) < Degree(8, 9));
    CHECK(Degree(0, 5).str() == "0/1");
    CHECK(Degree(3, 3).is_one());
    CHECK(Degree(2, 3) * Degree(3, 4) == Degree(1, 2));
    CHECK_THROWS(Degree(1, 0));
    CHECK_THROWS(Degree(4, 3));
}

TEST_CASE("named degrees") {
    CHECK(cd(pi()) == Degree(7, 9));
    CHECK(cd(pi()).count() == 7);
    CHECK(cd(pi()).total() == 9);
    CHECK(dnd(pi()) == Degree(2, 3));
    CHECK(pid(tc()) == Degree(8, 9));
    CHECK(id(tc()) == Degree(8, 9));
    CHECK(pid(pi()).is_one());
    CHECK(cd(tc()).is_one());
    CHECK(ds(direct_product(pi(), tc()), builtin(Builtin::T)) == Degree(63, 81));
    for (std::size_t n = 2; n <= 10; ++n) CHECK(emd(chain(n)).degree == Degree(2, n));
    CHECK(emd(pi()).outside_hypothesis);
    CHECK_FALSE(emd(tc()).outside_hypothesis);
    CHECK_THROWS_AS(dnd(bck_union(two(), two())), UnboundedAlgebra);
}

TEST_CASE("term engine against direct table counts") {
    std::vector<BckAlgebra> as{pi(), tc(), chain(6), d_algebra(5), q_algebra(5), family({FamilyName::B, 6}),
                               family({FamilyName::M, 5}), family({FamilyName::Pprime, 5}),
                               direct_product(pi(), tc())};
    for (const auto& a : as) {
        CHECK(cd(a) == oracle::cd(a));
        CHECK(pid(a) == oracle::pid(a));
        CHECK(id(a) == oracle::id(a));
        if (a.bound()) {
            CHECK(dnd(a) == oracle::dnd(a));
            CHECK(emd(a).degree == oracle::emd(a));
        }
    }
}

TEST_CASE("parallel counting matches serial") {
    auto a = direct_product(d_algebra(4), chain(3));
    for (auto b : {Builtin::T, Builtin::E1, Builtin::I, Builtin::DN}) {
        const auto one = ds(a, builtin(b), 1);
        for (unsigned j : {2u, 3u, 8u}) {
            const auto many = ds(a, builtin(b), j);
            CHECK(many.count() == one.count());
            CHECK(many.total() == one.total());
        }
    }
    auto three = parse("x . (y . z) = y . (x . z)");
    CHECK(ds(a, three, 1).count() == ds(a, three, 5).count());
}

TEST_CASE("multiplicativity") {
    CHECK(check_multiplicative(pi(), pi(), builtin(Builtin::T)));
    CHECK(check_multiplicative(pi(), trivial(), builtin(Builtin::E1)));
    CHECK(check_multiplicative(tc(), chain(4), builtin(Builtin::E1)));
    CHECK(check_multiplicative(d_algebra(3), pi(), builtin(Builtin::DN)));
}

TEST_CASE("chain sequences and gap evidence") {
    auto em = chain_degrees(builtin(Builtin::EM), 10);
    REQUIRE(em.size() == 9);
    for (std::size_t n = 2; n <= 10; ++n) CHECK(em[n - 2] == Degree(2, n));
    for (const auto& d : chain_degrees(builtin(Builtin::T), 12)) CHECK(d.is_one());
    auto e1 = chain_degrees(builtin(Builtin::E1), 12);
    for (std::size_t n = 2; n <= 12; ++n) CHECK(e1[n - 2] == Degree(n * n + 3 * n - 2, 2 * n * n));

    auto ev = gap_evidence(builtin(Builtin::EM), 20);
    REQUIRE(ev.sub_one_max);
    CHECK(ev.sub_one_max->first == 3);
    CHECK(ev.sub_one_max->second == Degree(2, 3));
    CHECK(*ev.candidate_gap() == Degree(1, 3));
    CHECK(ev.monotone_nonincreasing_after_first_sub_one);

    auto evi = gap_evidence(builtin(Builtin::I), 20);
    CHECK(*evi.candidate_gap() == Degree(1, 9));

    auto evt = gap_evidence(builtin(Builtin::T), 20);
    CHECK_FALSE(evt.sub_one_max);
    CHECK_FALSE(evt.candidate_gap());
    CHECK_THROWS_AS(gap_evidence(builtin(Builtin::T), 2), RangeError);
}

TEST_CASE("chain decomposition") {
    CHECK(decompose_commutative(tc()).chain_lengths == std::vector<std::size_t>{3});
    CHECK(decompose_commutative(direct_product(chain(2), chain(3))).chain_lengths ==
          std::vector<std::size_t>{2, 3});
    CHECK(decompose_commutative(direct_product(direct_product(two(), chain(3)), two())).chain_lengths ==
          std::vector<std::size_t>{2, 2, 3});
    CHECK(decompose_commutative(direct_product(chain(4), chain(2))).chain_lengths ==
          std::vector<std::size_t>{2, 4});
    CHECK(decompose_commutative(trivial()).chain_lengths.empty());
    CHECK_THROWS_AS(decompose_commutative(pi()), NotCommutative);
    // commutative but unbounded; no direct product of chains has this shape
    CHECK_THROWS_AS(decompose_commutative(bck_union(two(), two())), InternalError);
}
