#include <doctest.h>

#include "koszul/et.hpp"
#include "koszul/graded.hpp"
#include "koszul/io.hpp"
#include "test_support.hpp"

using namespace koszul;

TEST_SUITE_BEGIN("et-catalog");

TEST_CASE("recipe s-expressions round-trip") {
    std::vector<std::string> recipes{
        "(free 2)",
        "(demushkin 4 i q=9)",
        "(demushkin 3 ii f=2)",
        "(demushkin 2 iii f=inf)",
        "(demushkin 4 iv f=2)",
        "(semidirect 2 (freeprod (free 2) (demushkin 2 i q=4)))",
        "euclid",
        "(pfr-semidirect 1 euclid)",
        "(pfr-freeprod euclid (pfr-semidirect 2 euclid))",
    };
    for (const auto& text : recipes) {
        EtRecipe r = parse_recipe(text);
        CHECK(render_recipe(r) == text);
        CHECK(render_recipe(parse_recipe(render_recipe(r))) == text);
    }
    CHECK_THROWS_AS(parse_recipe("(frree 2)"), Error);
    CHECK_THROWS_AS(parse_recipe("(demushkin 4 v q=3)"), Error);
    CHECK_THROWS_AS(parse_recipe("(free 2) trailing"), Error);
}

TEST_CASE("demushkin parameter constraints") {
    CHECK_THROWS_AS(validate_demushkin(3, 3, DemushkinCase::I, 3, std::nullopt), Error);
    CHECK_THROWS_AS(validate_demushkin(2, 2, DemushkinCase::I, 2, std::nullopt), Error);
    CHECK_THROWS_AS(validate_demushkin(3, 2, DemushkinCase::I, 4, std::nullopt), Error);
    CHECK_NOTHROW(validate_demushkin(3, 2, DemushkinCase::I, 0, std::nullopt));
    CHECK_NOTHROW(validate_demushkin(2, 2, DemushkinCase::I, 4, std::nullopt));
    CHECK_THROWS_AS(validate_demushkin(3, 3, DemushkinCase::II, 0, 2), Error);   // p must be 2
    CHECK_THROWS_AS(validate_demushkin(2, 4, DemushkinCase::II, 0, 2), Error);   // d odd
    CHECK_THROWS_AS(validate_demushkin(2, 3, DemushkinCase::II, 0, 1), Error);   // f >= 2
    CHECK_THROWS_AS(validate_demushkin(2, 2, DemushkinCase::IV, 0, 2), Error);   // d >= 4
    CHECK_THROWS_AS(validate_demushkin(2, 4, DemushkinCase::IV, 0, std::nullopt), Error);
}

TEST_CASE("classified relator words") {
    GroupWord r1 = demushkin_relator(2, DemushkinCase::I, 3, std::nullopt, 3);
    CHECK(render_word(r1) == "(x1)^3*[x1,x2]");
    GroupWord r2 = demushkin_relator(3, DemushkinCase::II, 0, 2, 2);
    CHECK(render_word(r2) == "(x1)^2*(x2)^4*[x2,x3]");
    GroupWord r3 = demushkin_relator(2, DemushkinCase::III, 0, std::nullopt, 2);
    CHECK(render_word(r3) == "(x1)^2*[x1,x2]");
    GroupWord r4 = demushkin_relator(4, DemushkinCase::IV, 0, 2, 2);
    CHECK(render_word(r4) == "(x1)^2*[x1,x2]*(x3)^4*[x3,x4]");
}

TEST_CASE("free recipes build the trivial / tensor pair") {
    EtRecipe r = EtRecipe::free_group(2);
    auto h = build_cohomology(r, 3);
    CHECK(h.same_presentation(QuadraticAlgebra::trivial(3, gen_labels(2))));
    auto u = build_group_side(r, 3);
    CHECK(u.same_presentation(QuadraticAlgebra::tensor(3, gen_labels(2))));
    CHECK(u.generator_labels() == std::vector<std::string>{"x1*", "x2*"});
}

TEST_CASE("demushkin cohomology has a one-dimensional top and the right kernel") {
    EtRecipe r = EtRecipe::demushkin(2, DemushkinCase::I, 3, std::nullopt);
    auto h = build_cohomology(r, 3);
    CHECK(h.relators().dim() == 3);
    CHECK(graded_dim(h, 2) == 1);
    CHECK(is_graded_commutative_deg2(h));
    // chi1 chi1, chi2 chi2 and chi1 chi2 + chi2 chi1 die
    std::vector<uint32_t> v(4, 0);
    v[0] = 1;
    CHECK(h.relators().contains(v));
}

TEST_CASE("euclid pair is F_2[t] against the trivial algebra") {
    auto h = build_cohomology(EtRecipe::euclid(), 2);
    CHECK(h.same_presentation(QuadraticAlgebra::tensor(2, {"t"})));
    CHECK(h.distinguished_t() == std::optional<size_t>(0));
    auto u = build_group_side(EtRecipe::euclid(), 2);
    CHECK(u.same_presentation(QuadraticAlgebra::trivial(2, {"t"})));
    CHECK_THROWS_AS(build_cohomology(EtRecipe::euclid(), 3), Error);
}

TEST_CASE("semidirect recipes build the cited tensor decompositions") {
    // H side: skew tensor with an exterior algebra
    EtRecipe r = EtRecipe::semidirect(1, EtRecipe::free_group(1));
    auto h = build_cohomology(r, 3);
    auto expect_h = combine(QuadraticAlgebra::exterior(3, {"y1"}),
                            QuadraticAlgebra::trivial(3, {"x1"}), CombineMode::SkewTensor);
    CHECK(h == expect_h);

    // group side: symmetric tensor with a polynomial algebra
    EtRecipe r2 = EtRecipe::semidirect(2, EtRecipe::free_group(1));
    auto u = build_group_side(r2, 3);
    auto expect_u = combine(QuadraticAlgebra::symmetric(3, gen_labels(2)),
                            QuadraticAlgebra::tensor(3, {"z"}), CombineMode::SymTensor);
    CHECK(u.same_presentation(expect_u));
}

TEST_CASE("builders replay the combine constructions") {
    EtRecipe l = EtRecipe::free_group(1);
    EtRecipe r = EtRecipe::demushkin(2, DemushkinCase::I, 3, std::nullopt);
    EtRecipe prod = EtRecipe::freeprod(l, r);
    for (uint32_t p : {3u}) {
        CHECK(build_cohomology(prod, p) ==
              combine(build_cohomology(l, p), build_cohomology(r, p), CombineMode::DirectSum));
        CHECK(build_group_side(prod, p).same_presentation(
            combine(build_group_side(l, p), build_group_side(r, p), CombineMode::FreeProduct)));
    }
}

TEST_CASE("dual equality holds across the catalog") {
    std::vector<std::pair<std::string, uint32_t>> cases{
        {"(free 3)", 2},
        {"(demushkin 4 i q=3)", 3},
        {"(demushkin 3 ii f=2)", 2},
        {"(semidirect 2 (free 1))", 3},
        {"(freeprod (free 1) (demushkin 2 i q=4))", 2},
        {"(semidirect 1 (freeprod (free 1) (free 1)))", 5},
    };
    for (const auto& [text, p] : cases) {
        EtRecipe r = parse_recipe(text);
        CHECK(quadratic_dual(build_cohomology(r, p)) == build_group_side(r, p));
    }
}

TEST_CASE("pfr free products re-base the class of -1") {
    EtRecipe r = EtRecipe::pfr_freeprod(EtRecipe::euclid(), EtRecipe::euclid());
    auto h = build_cohomology(r, 2);
    CHECK(h.generator_count() == 2);
    CHECK(h.distinguished_t() == std::optional<size_t>(0));
    // in the new basis w = t_L + t_R the relators t_L t_R and t_R t_L become
    // span{w t_R + t_R^2, t_R w + t_R^2}
    NcPoly r1(2, 2), r2(2, 2);
    r1.add_term(MultiIndex{0, 1}, 1);
    r1.add_term(MultiIndex{1, 1}, 1);
    r2.add_term(MultiIndex{1, 0}, 1);
    r2.add_term(MultiIndex{1, 1}, 1);
    CHECK(h.same_presentation(QuadraticAlgebra::from_relator_polys(2, gen_labels(2), {r1, r2})));
}

TEST_CASE("theorem C passes for every classified case") {
    std::vector<std::pair<std::string, uint32_t>> cases{
        {"(demushkin 4 i q=3)", 3},
        {"(demushkin 2 i q=0)", 5},
        {"(demushkin 3 ii f=2)", 2},
        {"(demushkin 2 iii f=inf)", 2},
        {"(demushkin 4 iv f=2)", 2},
        {"euclid", 2},
    };
    for (const auto& [text, p] : cases) {
        auto rep = verify_theorem(parse_recipe(text), Theorem::C, p, 4);
        CHECK(rep.pass);
    }
}

TEST_CASE("theorem B passes on a composite recipe") {
    auto rep = verify_theorem(parse_recipe("(freeprod (free 1) (demushkin 2 i q=3))"), Theorem::B,
                              3, 4);
    CHECK(rep.pass);
    CHECK(rep.cert_cohomology.has_value());
    CHECK(rep.cert_group.has_value());
}

TEST_CASE("theorem A checks only the cohomology side") {
    auto rep = verify_theorem(parse_recipe("(semidirect 2 (free 2))"), Theorem::A, 3, 4);
    CHECK(rep.pass);
    CHECK(rep.cert_cohomology.has_value());
    CHECK_FALSE(rep.cert_group.has_value());
    for (const auto& c : rep.checks) CHECK(c.name != "dual_equality");
}

TEST_CASE("nested twisted extensions all get the family check") {
    auto rep = verify_theorem(parse_recipe("(pfr-semidirect 1 (pfr-semidirect 2 euclid))"),
                              Theorem::D, 2, 4);
    CHECK(rep.pass);
    for (const auto& c : rep.checks)
        if (c.name == "nine_families") CHECK(c.detail.find("2 twisted step(s)") == 0);
}

TEST_CASE("theorem D passes with the twisted-extension families") {
    auto rep = verify_theorem(parse_recipe("(pfr-semidirect 2 euclid)"), Theorem::D, 2, 4);
    CHECK(rep.pass);
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.name == "nine_families") {
            found = true;
            CHECK(c.pass);
        }
    CHECK(found);
}

TEST_CASE("regime constraints are enforced") {
    CHECK_THROWS_AS(verify_theorem(parse_recipe("(demushkin 2 iii f=2)"), Theorem::B, 2, 4), Error);
    CHECK_THROWS_AS(verify_theorem(parse_recipe("(free 2)"), Theorem::C, 2, 4), Error);
    CHECK_THROWS_AS(verify_theorem(parse_recipe("(pfr-semidirect 1 euclid)"), Theorem::D, 3, 4),
                    Error);
    CHECK_THROWS_AS(verify_theorem(parse_recipe("(free 9)"), Theorem::A, 2, 4), Error);
}

TEST_CASE("reports serialize with stable bytes") {
    auto rep = verify_theorem(parse_recipe("(demushkin 2 i q=3)"), Theorem::C, 3, 3);
    Json j1 = report_to_json(rep);
    auto rep2 = verify_theorem(parse_recipe("(demushkin 2 i q=3)"), Theorem::C, 3, 3);
    Json j2 = report_to_json(rep2);
    CHECK(j1.dump(2) == j2.dump(2));
    CHECK(report_from_json(j1).dump(2) == j1.dump(2));
}

TEST_SUITE_END();
