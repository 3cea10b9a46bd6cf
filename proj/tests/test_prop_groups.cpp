#include <doctest.h>

#include "koszul/grouptable.hpp"
#include "koszul/magnus.hpp"
#include "test_support.hpp"

using namespace koszul;

TEST_SUITE_BEGIN("prop-groups");

TEST_CASE("word grammar round-trips") {
    std::vector<std::string> words{"x1", "x1^-1", "x1^3", "[x1,x2]", "x1*x2*x1^-1",
                                   "[x1,[x2,x3]]^2*x3", "(x1*x2)^-1"};
    for (const auto& w : words) {
        GroupWord parsed = parse_word(w, 3);
        GroupWord again = parse_word(render_word(parsed), 3);
        CHECK(render_word(parsed) == render_word(again));
    }
    CHECK_THROWS_AS(parse_word("x9", 3), Error);
    CHECK_THROWS_AS(parse_word("[x1,x2", 3), Error);
}

TEST_CASE("magnus sends a generator to 1 + X") {
    auto s = magnus_expand(parse_word("x1", 2), 2, 2, 4);
    CHECK(s.poly().coeff(MultiIndex{}) == 1);
    CHECK(s.poly().coeff(MultiIndex{0}) == 1);
    CHECK(s.poly().term_count() == 2);
}

TEST_CASE("p-th powers kill the low binomial coefficients") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto s = magnus_expand(GroupWord::power(GroupWord::gen(0), p), p, 1, p);
        CHECK(s.poly().coeff(MultiIndex{}) == 1);
        for (size_t k = 1; k < p; ++k)
            CHECK(s.poly().coeff(MultiIndex(std::vector<uint8_t>(k, 0))) == 0);
        CHECK(s.poly().coeff(MultiIndex(std::vector<uint8_t>(p, 0))) == 1);
    }
}

TEST_CASE("commutator expansion starts with the Lie bracket") {
    auto s = magnus_expand(parse_word("[x1,x2]", 3), 3, 2, 3);
    NcPoly deg2 = (s.poly() - NcPoly::constant(3, 2, 1)).homogeneous_part(2);
    NcPoly bracket(3, 2);
    bracket.add_term(MultiIndex{0, 1}, 1);
    bracket.add_term(MultiIndex{1, 0}, -1);
    CHECK(deg2 == bracket);
    // oracle: series product of the four factors, computed directly
    auto a = magnus_expand(parse_word("x1", 3), 3, 2, 3);
    auto b = magnus_expand(parse_word("x2", 3), 3, 2, 3);
    CHECK(s == trunc_inverse(a) * trunc_inverse(b) * a * b);
}

TEST_CASE("magnus is multiplicative and inverts") {
    TestRng rng(500);
    std::vector<std::string> pool{"x1", "x2^-1", "[x1,x2]", "x1^3", "x2*x1"};
    for (int trial = 0; trial < 12; ++trial) {
        std::string w1 = pool[rng.below(pool.size())];
        std::string w2 = pool[rng.below(pool.size())];
        uint32_t p = trial % 2 ? 2 : 3;
        auto s1 = magnus_expand(parse_word(w1, 2), p, 2, 4);
        auto s2 = magnus_expand(parse_word(w2, 2), p, 2, 4);
        auto s12 = magnus_expand(parse_word(w1 + "*" + w2, 2), p, 2, 4);
        CHECK(s12 == s1 * s2);
        auto inv = magnus_expand(parse_word("(" + w1 + ")^-1", 2), p, 2, 4);
        CHECK(s1 * inv == TruncSeries::one(p, 2, 4));
    }
}

TEST_CASE("initial forms of the classified relator shapes") {
    // odd p: x1^q [x1,x2][x3,x4] has the commutator sum as its initial form
    GroupWord r = parse_word("x1^3*[x1,x2]*[x3,x4]", 4);
    InitialForm f = initial_form(r, 3, 4, 4);
    CHECK(f.degree == 2);
    NcPoly expect(3, 4);
    expect.add_term(MultiIndex{0, 1}, 1);
    expect.add_term(MultiIndex{1, 0}, -1);
    expect.add_term(MultiIndex{2, 3}, 1);
    expect.add_term(MultiIndex{3, 2}, -1);
    CHECK(f.poly == expect);

    // p = 2: x1^2 x2^{2^f} [x2,x3] picks up the square
    GroupWord r2 = parse_word("x1^2*x2^4*[x2,x3]", 3);
    InitialForm f2 = initial_form(r2, 2, 3, 4);
    CHECK(f2.degree == 2);
    NcPoly expect2(2, 3);
    expect2.add_term(MultiIndex{0, 0}, 1);
    expect2.add_term(MultiIndex{1, 2}, 1);
    expect2.add_term(MultiIndex{2, 1}, 1);
    CHECK(f2.poly == expect2);

    // x1^p alone has degree p
    InitialForm f3 = initial_form(GroupWord::power(GroupWord::gen(0), 5), 5, 1, 6);
    CHECK(f3.degree == 5);

    CHECK_THROWS_AS(initial_form(parse_word("x1*x1^-1", 2), 2, 2, 4), Error);
}

TEST_CASE("initial form degrees obey the filtration axioms") {
    TestRng rng(501);
    std::vector<std::string> pool{"x1", "x2", "x1*x2", "[x1,x2]", "x2^-1*x1"};
    for (int trial = 0; trial < 10; ++trial) {
        uint32_t p = trial % 2 ? 2 : 3;
        GroupWord a = parse_word(pool[rng.below(pool.size())], 2);
        GroupWord b = parse_word(pool[rng.below(pool.size())], 2);
        size_t da = initial_form(a, p, 2, 6).degree;
        size_t db = initial_form(b, p, 2, 6).degree;
        if (da + db <= 6) {
            GroupWord c = GroupWord::commutator(a, b);
            try {
                size_t deg = initial_form(c, p, 2, 6).degree;
                CHECK(deg >= da + db);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::TruncationTooLow);  // commutator may vanish
            }
        }
        if (da * p <= 6) {
            GroupWord pw = GroupWord::power(a, p);
            CHECK(initial_form(pw, p, 2, 6).degree >= da * p);
        }
    }
}

TEST_CASE("quadratic presentation detection") {
    GroupPresentation demu{3, GroupPresentation::default_labels(2), {parse_word("x1^3*[x1,x2]", 2)}};
    CHECK(is_quadratic_presentation(demu));
    GroupPresentation powr{3, GroupPresentation::default_labels(1), {parse_word("x1^3", 1)}};
    CHECK_FALSE(is_quadratic_presentation(powr));
    GroupPresentation free{3, GroupPresentation::default_labels(2), {}};
    CHECK(is_quadratic_presentation(free));
}

TEST_CASE("relator decomposition reads the degree-2 Magnus coefficients") {
    auto dec = relator_mod_s3(parse_word("[x1,x2]", 2), 2, 2);
    REQUIRE(dec.a.has_value());
    CHECK((*dec.a)[0] == 0);
    CHECK(dec.b.at(0, 1) == 1);

    auto dec2 = relator_mod_s3(parse_word("x1^2*[x1,x2]", 2), 2, 2);
    CHECK((*dec2.a)[0] == 1);
    CHECK(dec2.b.at(0, 1) == 1);

    auto dec3 = relator_mod_s3(GroupWord::power(GroupWord::gen(0), 3), 3, 2);
    CHECK_FALSE(dec3.a.has_value());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = i + 1; j < 2; ++j) CHECK(dec3.b.at(i, j) == 0);

    CHECK_THROWS_AS(relator_mod_s3(parse_word("x1", 2), 2, 2), Error);
}

TEST_CASE("pairing values follow the sign table") {
    GroupWord com = parse_word("[x1,x2]", 2);
    CHECK(pairing_value(com, 0, 1, 3, 2).value == 2);  // -1 mod 3
    CHECK(pairing_value(com, 1, 0, 3, 2).value == 1);
    CHECK(pairing_value(com, 0, 0, 3, 2).value == 0);
    GroupWord sq = parse_word("x1^2", 1);
    CHECK(pairing_value(sq, 0, 0, 2, 1).value == 1);
}

TEST_CASE("graded candidate of a free presentation is the tensor algebra") {
    GroupPresentation free{3, GroupPresentation::default_labels(2), {}};
    auto cand = graded_algebra_candidate(free);
    REQUIRE(cand.quadratic.has_value());
    CHECK(cand.quadratic->same_presentation(QuadraticAlgebra::tensor(3, gen_labels(2))));
    CHECK(cand.quotient.dim(3) == 8);
}

TEST_CASE("graded candidate of a Demushkin presentation is the one-relator algebra") {
    GroupPresentation g{3, GroupPresentation::default_labels(2), {parse_word("x1^3*[x1,x2]", 2)}};
    auto cand = graded_algebra_candidate(g);
    REQUIRE(cand.quadratic.has_value());
    NcPoly rho(3, 2);
    rho.add_term(MultiIndex{0, 1}, 1);
    rho.add_term(MultiIndex{1, 0}, -1);
    CHECK(cand.quadratic->same_presentation(
        QuadraticAlgebra::from_relator_polys(3, gen_labels(2), {rho})));
}

TEST_CASE("the dual of the graded candidate behaves like a cohomology ring") {
    // Theorem E consistency: graded-commutative in degree 2 and dim H^2 equals
    // the number of independent initial forms
    GroupPresentation g{2, GroupPresentation::default_labels(3),
                        {parse_word("x1^2*[x1,x2]", 3), parse_word("[x2,x3]", 3)}};
    auto cand = graded_algebra_candidate(g);
    REQUIRE(cand.quadratic.has_value());
    auto h = quadratic_dual(*cand.quadratic);
    CHECK(is_graded_commutative_deg2(h));
    CHECK(graded_dim(h, 2) == 2);
}

TEST_CASE("the square example stays a graded quotient only") {
    GroupPresentation g{3, GroupPresentation::default_labels(1), {parse_word("x1^3", 1)}};
    auto cand = graded_algebra_candidate(g);
    CHECK_FALSE(cand.quadratic.has_value());
    // F_3<X>/(X^3) has dims 1,1,1,0
    CHECK(cand.quotient.dim(0) == 1);
    CHECK(cand.quotient.dim(2) == 1);
    CHECK(cand.quotient.dim(3) == 0);
}

TEST_CASE("the cyclic commutator presentation grades to the mild quotient") {
    GroupPresentation g{2,
                        GroupPresentation::default_labels(4),
                        {parse_word("[x1,x2]", 4), parse_word("[x2,x3]", 4),
                         parse_word("[x3,x4]", 4), parse_word("[x4,x1]", 4)}};
    auto cand = graded_algebra_candidate(g);
    REQUIRE(cand.quadratic.has_value());
    CHECK(cand.quadratic->relators().dim() == 4);
    CHECK(cand.quotient.hilbert_prefix(5) == std::vector<long>{1, 4, 12, 32, 80, 192});
    CHECK(strongly_free_check(cand.forms, 2, 4, 5));
}

TEST_CASE("strong freeness of the cyclic commutator example") {
    std::vector<InitialForm> forms;
    auto add_com = [&](uint8_t i, uint8_t j) {
        NcPoly f(2, 4);
        f.add_term(MultiIndex{i, j}, 1);
        f.add_term(MultiIndex{j, i}, -1);
        forms.push_back({2, f});
    };
    add_com(0, 1);
    add_com(1, 2);
    add_com(2, 3);
    add_com(3, 0);
    CHECK(strongly_free_check(forms, 2, 4, 5));

    // the duplicated relator is never strongly free
    NcPoly c(2, 2);
    c.add_term(MultiIndex{0, 1}, 1);
    c.add_term(MultiIndex{1, 0}, -1);
    std::vector<InitialForm> dup{{2, c}, {2, c}};
    CHECK_FALSE(strongly_free_check(dup, 2, 2, 4));

    CHECK(strongly_free_check({}, 5, 3, 4));
}

TEST_CASE("jennings layers of the small abelian 2-groups") {
    auto z2 = FiniteGroupTable::cyclic(2);
    auto r2 = jennings_oracle(z2, 2, 2);
    CHECK(r2.gr_dims == std::vector<long>{1, 1, 0});
    CHECK(r2.dimension_subgroups[1] == std::set<size_t>{0});

    auto z4 = FiniteGroupTable::cyclic(4);
    auto r4 = jennings_oracle(z4, 2, 4);
    CHECK(r4.gr_dims == std::vector<long>{1, 1, 1, 1, 0});
    CHECK(r4.dimension_subgroups[1] == std::set<size_t>{0, 2});
    CHECK(r4.dimension_subgroups[2] == std::set<size_t>{0});

    auto z2z2 = FiniteGroupTable::direct_product(z2, z2);
    auto r22 = jennings_oracle(z2z2, 2, 3);
    CHECK(r22.gr_dims == std::vector<long>{1, 2, 1, 0});
}

TEST_CASE("lazard chain for cyclic and abelian groups") {
    auto z4 = FiniteGroupTable::cyclic(4);
    auto chain = lazard_oracle(z4, 2, 3);
    CHECK(chain[0].size() == 4);
    CHECK(chain[1] == std::set<size_t>{0, 2});
    CHECK(chain[2] == std::set<size_t>{0});

    // abelian: G_(n) = G^(p^ceil(log_p n))
    auto z9 = FiniteGroupTable::cyclic(9);
    auto c9 = lazard_oracle(z9, 3, 4);
    CHECK(c9[0].size() == 9);
    CHECK(c9[1] == std::set<size_t>{0, 3, 6});
    CHECK(c9[2] == std::set<size_t>{0, 3, 6});
    CHECK(c9[3] == std::set<size_t>{0});
}

TEST_CASE("the two oracles and the recursion agree on dihedral-8") {
    auto d8 = FiniteGroupTable::dihedral8();
    auto jen = jennings_oracle(d8, 2, 5);
    auto laz = lazard_oracle(d8, 2, 5);
    auto rec = zassenhaus_recursion(d8, 2, 5);
    for (size_t n = 0; n < 5; ++n) {
        CHECK(jen.dimension_subgroups[n] == laz[n]);
        CHECK(laz[n] == rec[n]);
    }
}

TEST_CASE("heisenberg-27 layer dims match the product formula") {
    // L has dims 2, 1 in degrees 1, 2, so gr F_3[G] has Hilbert series
    // (1+z+z^2)^2 (1+z^2+z^4) = 1,2,4,4,5,4,4,2,1
    auto h27 = FiniteGroupTable::heisenberg(3);
    auto res = jennings_oracle(h27, 3, 9);
    CHECK(res.gr_dims == std::vector<long>{1, 2, 4, 4, 5, 4, 4, 2, 1, 0});
    long total = 0;
    for (long v : res.gr_dims) total += v;
    CHECK(total == 27);
}

TEST_CASE("oracles reject non-p-groups") {
    auto z6 = FiniteGroupTable::cyclic(6);
    CHECK_THROWS_AS(jennings_oracle(z6, 2, 3), Error);
    CHECK_THROWS_AS(lazard_oracle(z6, 3, 3), Error);
}

TEST_CASE("group table csv round-trips and validates") {
    auto q8 = FiniteGroupTable::quaternion8();
    auto again = FiniteGroupTable::parse_csv(q8.to_csv());
    CHECK(again.order() == 8);
    CHECK(again.to_csv() == q8.to_csv());
    CHECK_THROWS_AS(FiniteGroupTable::parse_csv("identity,0\n0,1\n1,1\n"), Error);
}

TEST_CASE("magnus respects the monomial budget") {
    CHECK_THROWS_AS(magnus_expand(GroupWord::gen(0), 2, 9, 6), Error);  // 9^6 > 2e5
}

TEST_SUITE_END();
