#include <doctest.h>

#include <set>

#include "koszul/graded.hpp"
#include "koszul/pbw.hpp"
#include "test_support.hpp"

using namespace koszul;

TEST_SUITE_BEGIN("pbw");

TEST_CASE("normalized basis of a commutator pair splits into monomial rules") {
    // span{X1X2 + X2X1, X1X2 - X2X1} = span{X1X2, X2X1} over F_3
    NcPoly r1(3, 2), r2(3, 2);
    r1.add_term(MultiIndex{0, 1}, 1);
    r1.add_term(MultiIndex{1, 0}, 1);
    r2.add_term(MultiIndex{0, 1}, 1);
    r2.add_term(MultiIndex{1, 0}, -1);
    auto a = QuadraticAlgebra::from_relator_polys(3, gen_labels(2), {r1, r2});
    auto sys = normalize_basis(a.relators(), DeglexOrder::identity(2));
    REQUIRE(sys.rules.size() == 2);
    CHECK(sys.rules.at({0, 1}).is_zero());
    CHECK(sys.rules.at({1, 0}).is_zero());
}

TEST_CASE("empty relators give an empty rule set") {
    auto sys = normalize_basis(Subspace(5, 9), DeglexOrder::identity(3));
    CHECK(sys.rules.empty());
    CHECK(critical_monomials(sys).empty());
}

TEST_CASE("exterior(2) over F_2 normalizes to the three expected rules") {
    auto ext = QuadraticAlgebra::exterior(2, gen_labels(2));
    auto sys = normalize_basis(ext.relators(), DeglexOrder::identity(2));
    REQUIRE(sys.rules.size() == 3);
    CHECK(sys.rules.at({0, 0}).is_zero());
    CHECK(sys.rules.at({1, 1}).is_zero());
    CHECK(sys.rules.at({1, 0}) == NcPoly::monomial(2, 2, MultiIndex{0, 1}));

    auto crits = critical_monomials(sys);
    std::set<MultiIndex> expect{MultiIndex{0, 0, 0}, MultiIndex{1, 1, 1}, MultiIndex{1, 0, 0},
                                MultiIndex{1, 1, 0}};
    CHECK(std::set<MultiIndex>(crits.begin(), crits.end()) == expect);
}

TEST_CASE("a single off-diagonal lead has no critical monomials") {
    NcPoly rho(3, 2);
    rho.add_term(MultiIndex{0, 1}, 1);
    rho.add_term(MultiIndex{1, 0}, -1);
    auto a = QuadraticAlgebra::from_relator_polys(3, gen_labels(2), {rho});
    auto sys = normalize_basis(a.relators(), DeglexOrder::identity(2));
    REQUIRE(sys.rules.size() == 1);
    CHECK(critical_monomials(sys).empty());
}

TEST_CASE("rule tails sit strictly below their leads") {
    TestRng rng(399);
    for (int trial = 0; trial < 15; ++trial) {
        uint32_t p = trial % 2 ? 2 : 5;
        auto a = random_algebra(rng, p, 2 + rng.below(2));
        DeglexOrder order = DeglexOrder::identity(a.generator_count());
        auto sys = normalize_basis(a.relators(), order);
        CHECK(sys.rules.size() == a.relators().dim());
        for (const auto& [lead, tail] : sys.rules) {
            MultiIndex lm{lead.first, lead.second};
            for (const auto& [m, c] : tail.terms()) CHECK(order.less(m, lm));
            // leads never occur in other rules
            for (const auto& [lead2, tail2] : sys.rules) {
                if (lead2 == lead) continue;
                CHECK(tail2.coeff(lm) == 0);
            }
        }
    }
}

TEST_CASE("the step budget trips on forced runaway limits") {
    auto ext = QuadraticAlgebra::exterior(2, gen_labels(2));
    auto sys = normalize_basis(ext.relators(), DeglexOrder::identity(2));
    NcPoly f = NcPoly::monomial(2, 2, MultiIndex{1, 0});
    CHECK_THROWS_AS(rewrite(sys, f, 0), Error);
    CHECK_THROWS_AS(explore_rewrites(sys, f, 0), Error);
}

TEST_CASE("rewriting a reduced polynomial is a fixed point") {
    auto ext = QuadraticAlgebra::exterior(3, gen_labels(2));
    auto sys = normalize_basis(ext.relators(), DeglexOrder::identity(2));
    NcPoly f = NcPoly::monomial(3, 2, MultiIndex{0, 1}, 2);
    auto [nf, graph] = rewrite(sys, f);
    CHECK(nf == f);
    CHECK(graph.vertices.size() == 1);
}

TEST_CASE("single rule application swaps a commutator lead") {
    NcPoly rho(5, 2);
    rho.add_term(MultiIndex{1, 0}, 1);
    rho.add_term(MultiIndex{0, 1}, -1);
    auto a = QuadraticAlgebra::from_relator_polys(5, gen_labels(2), {rho});
    auto sys = normalize_basis(a.relators(), DeglexOrder::identity(2));
    auto [nf, graph] = rewrite(sys, NcPoly::monomial(5, 2, MultiIndex{1, 0}));
    CHECK(nf == NcPoly::monomial(5, 2, MultiIndex{0, 1}));
}

TEST_CASE("both strategies on X2X2X1 in exterior(2) terminate at 0") {
    auto ext = QuadraticAlgebra::exterior(5, gen_labels(2));
    auto sys = normalize_basis(ext.relators(), DeglexOrder::identity(2));
    auto graph = explore_rewrites(sys, NcPoly::monomial(5, 2, MultiIndex{1, 1, 0}));
    REQUIRE(graph.terminals.size() == 1);
    CHECK(graph.vertices[graph.terminals[0]].is_zero());
}

TEST_CASE("exterior algebras are confluent under deglex") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (size_t d = 2; d <= 4; ++d) {
            auto ext = QuadraticAlgebra::exterior(p, gen_labels(d));
            auto res = is_confluent(normalize_basis(ext.relators(), DeglexOrder::identity(d)));
            CHECK(res.confluent);
        }
    }
}

TEST_CASE("monomial relator sets are confluent") {
    TestRng rng(400);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t p = trial % 2 ? 2 : 3;
        size_t d = 2 + rng.below(3);
        std::vector<NcPoly> rels;
        size_t count = 1 + rng.below(d * d);
        for (size_t k = 0; k < count; ++k)
            rels.push_back(NcPoly::monomial(p, d, random_monomial(rng, d, 2)));
        auto a = QuadraticAlgebra::from_relator_polys(p, gen_labels(d), rels);
        auto res = is_confluent(normalize_basis(a.relators(), DeglexOrder::identity(d)));
        CHECK(res.confluent);
    }
}

TEST_CASE("a non-confluent system reports its counterexample") {
    // single relator X1^2 + X2^2: under x2 < x1 the rule is X1X1 -> X2X2 and
    // the critical word X1X1X1 rewrites to both X2X2X1 and X1X2X2
    NcPoly r(2, 2);
    r.add_term(MultiIndex{0, 0}, 1);
    r.add_term(MultiIndex{1, 1}, 1);
    auto a = QuadraticAlgebra::from_relator_polys(2, gen_labels(2), {r});
    auto sys = normalize_basis(a.relators(), DeglexOrder::from_permutation({1, 0}));
    auto res = is_confluent(sys);
    CHECK_FALSE(res.confluent);
    REQUIRE(res.counterexample.has_value());
    CHECK(res.counterexample->monomial == MultiIndex{0, 0, 0});
    CHECK(res.counterexample->normal_forms.size() == 2);
    // both coordinate orders fail, so the search comes back empty
    CHECK_FALSE(pbw_search(a).has_value());
}

TEST_CASE("normal forms of low-degree polynomials are strategy independent") {
    TestRng rng(401);
    auto ext = QuadraticAlgebra::exterior(3, gen_labels(3));
    auto sys = normalize_basis(ext.relators(), DeglexOrder::identity(3));
    for (int trial = 0; trial < 20; ++trial) {
        NcPoly f = random_poly(rng, 3, 3, 4, 4);
        auto graph = explore_rewrites(sys, f);
        REQUIRE(graph.terminals.size() == 1);
        auto [nf, path] = rewrite(sys, f);
        CHECK(nf == graph.vertices[graph.terminals[0]]);
    }
}

TEST_CASE("normal word counts agree with graded dimensions for certified algebras") {
    std::vector<QuadraticAlgebra> algebras{
        QuadraticAlgebra::exterior(3, gen_labels(3)),
        QuadraticAlgebra::symmetric(2, gen_labels(3)),
        QuadraticAlgebra::trivial(5, gen_labels(2)),
    };
    for (const auto& a : algebras) {
        auto cert = pbw_search(a);
        REQUIRE(cert.has_value());
        for (size_t n = 0; n <= 5; ++n)
            CHECK(normal_word_count(cert->system, n) == graded_dim(a, n));
    }
}

TEST_CASE("pbw search finds the one-relator lemma order") {
    // relator with X1X2 but no squares: the order with 1 maximal, 2 second
    // maximal has lm = X1X2 and an empty critical set
    NcPoly rho(3, 3);
    rho.add_term(MultiIndex{0, 1}, 1);
    rho.add_term(MultiIndex{1, 2}, 2);
    auto a = QuadraticAlgebra::from_relator_polys(3, gen_labels(3), {rho});

    std::vector<uint8_t> lemma_perm{2, 1, 0};  // x3 < x2 < x1
    auto sys = normalize_basis(a.relators(), DeglexOrder::from_permutation(lemma_perm));
    CHECK(critical_monomials(sys).empty());
    CHECK(is_confluent(sys).confluent);
    CHECK(pbw_search(a).has_value());
}

TEST_CASE("certificates dualize under the reversed permutation") {
    std::vector<QuadraticAlgebra> algebras{
        QuadraticAlgebra::exterior(3, gen_labels(3)),
        QuadraticAlgebra::symmetric(5, gen_labels(2)),
        QuadraticAlgebra::trivial(2, gen_labels(3)),
    };
    TestRng rng(402);
    algebras.push_back(random_algebra(rng, 3, 3));
    for (const auto& a : algebras) {
        auto cert = pbw_search(a);
        if (!cert) continue;
        auto dual = quadratic_dual(a);
        auto dual_sys = normalize_basis(dual.relators(), cert->order.reversed());
        CHECK(is_confluent(dual_sys).confluent);
    }
}

TEST_CASE("free products of certified algebras stay certified on the union order") {
    auto a = QuadraticAlgebra::exterior(3, {"a1", "a2"});
    auto b = QuadraticAlgebra::symmetric(3, {"b1", "b2"});
    auto c = combine(a, b, CombineMode::FreeProduct);
    auto res = is_confluent(normalize_basis(c.relators(), DeglexOrder::identity(4)));
    CHECK(res.confluent);
}

TEST_CASE("the search samples orders when d! exceeds the budget") {
    auto a = QuadraticAlgebra::exterior(2, gen_labels(5));
    auto cert = pbw_search(a, 10);  // 5! = 120 > 10, sampled path
    CHECK(cert.has_value());
    auto again = pbw_search(a, 10);
    REQUIRE(again.has_value());
    CHECK(cert->order.rank == again->order.rank);  // seeded, reproducible
}

TEST_SUITE_END();
