#include <doctest.h>

#include <set>

#include "koszul/matrix.hpp"
#include "test_support.hpp"

using namespace koszul;

TEST_SUITE_BEGIN("fp-linalg");

TEST_CASE("prime modulus is enforced") {
    CHECK_NOTHROW(Fp(2));
    CHECK_NOTHROW(Fp(2147483647));  // 2^31 - 1
    CHECK_THROWS_AS(Fp(1), Error);
    CHECK_THROWS_AS(Fp(6), Error);
}

TEST_CASE("scalar arithmetic stays reduced") {
    Fp f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(3) == 2);
    CHECK(f5.pow(2, 10) == 4);
    CHECK(FpScalar(-1, 7).value == 6);
}

TEST_CASE("rref on the 2x2 identity over F_3") {
    FpMatrix m(3, 2, 2);
    m.set(0, 0, 1);
    m.set(1, 1, 1);
    auto [red, piv] = rref(m);
    CHECK(red == m);
    CHECK(piv == std::vector<size_t>{0, 1});
}

TEST_CASE("rref collapses duplicate rows over F_2") {
    FpMatrix m(2, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    auto [red, piv] = rref(m);
    CHECK(piv == std::vector<size_t>{0});
    CHECK(red.at(0, 0) == 1);
    CHECK(red.at(0, 1) == 1);
    CHECK(red.at(1, 0) == 0);
    CHECK(red.at(1, 1) == 0);
}

// rank oracle: enumerate the whole row space of a small matrix over F_p and
// count the distinct vectors, p^rank of them
static size_t brute_force_row_space_size(const FpMatrix& m) {
    Fp fp(m.modulus());
    std::set<std::vector<uint32_t>> space;
    size_t combos = 1;
    for (size_t r = 0; r < m.rows(); ++r) combos *= m.modulus();
    for (size_t code = 0; code < combos; ++code) {
        std::vector<uint32_t> v(m.cols(), 0);
        size_t rem = code;
        for (size_t r = 0; r < m.rows(); ++r) {
            uint32_t c = rem % m.modulus();
            rem /= m.modulus();
            for (size_t k = 0; k < m.cols(); ++k) v[k] = fp.add(v[k], fp.mul(c, m.at(r, k)));
        }
        space.insert(v);
    }
    return space.size();
}

TEST_CASE("rank agrees with brute-force row-space enumeration") {
    TestRng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        FpMatrix m = random_matrix(rng, 3, 4, 6);
        auto [red, piv] = rref(m);
        size_t expect = 1;
        for (size_t k = 0; k < piv.size(); ++k) expect *= 3;
        CHECK(brute_force_row_space_size(m) == expect);
    }
}

TEST_CASE("rref is idempotent") {
    TestRng rng(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 25; ++trial) {
            FpMatrix m = random_matrix(rng, p, 4, 5);
            auto [red, piv] = rref(m);
            auto [red2, piv2] = rref(red);
            CHECK(red == red2);
            CHECK(piv == piv2);
        }
    }
}

TEST_CASE("kernel of the zero map is everything") {
    FpMatrix z(2, 2, 3);
    Subspace k = kernel(z);
    CHECK(k.dim() == 3);
}

TEST_CASE("kernel of [1,1] over F_2 is the diagonal") {
    FpMatrix m(2, 1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK(k.contains(std::vector<uint32_t>{1, 1}));
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
    TestRng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        FpMatrix m = random_matrix(rng, 5, 3, 5);
        Subspace k = kernel(m);
        auto [red, piv] = rref(m);
        CHECK(k.dim() + piv.size() == 5);
        for (size_t r = 0; r < k.dim(); ++r) {
            auto image = m.apply(k.basis().row_vec(r));
            for (uint32_t v : image) CHECK(v == 0);
        }
    }
}

TEST_CASE("annihilator of the zero subspace is everything") {
    Subspace zero(2, 4);
    CHECK(annihilator(zero).dim() == 4);
}

TEST_CASE("annihilator of a line imposes one linear condition") {
    FpMatrix m(3, 1, 4);
    m.set(0, 0, 1);
    m.set(0, 3, 1);
    Subspace s = Subspace::span(m);
    Subspace ann = annihilator(s);
    CHECK(ann.dim() == 3);
    for (size_t r = 0; r < ann.dim(); ++r) {
        auto v = ann.basis().row_vec(r);
        CHECK(Fp(3).add(v[0], v[3]) == 0);
    }
}

TEST_CASE("double annihilator is the identity on 100 random subspaces of F_5^9") {
    TestRng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        FpMatrix m = random_matrix(rng, 5, rng.below(5), 9);
        Subspace s = Subspace::span(m);
        Subspace back = annihilator(annihilator(s));
        CHECK(s.dim() + annihilator(s).dim() == 9);
        CHECK(back == s);
    }
}

TEST_CASE("echelon basis matches batch rref") {
    TestRng rng(321);
    for (uint32_t p : {2u, 3u}) {
        FpMatrix m = random_matrix(rng, p, 8, 6);
        EchelonBasis ech(p, 6);
        for (size_t r = 0; r < m.rows(); ++r) ech.insert(m.row_vec(r));
        Subspace s = Subspace::span(m);
        CHECK(ech.rank() == s.dim());
        for (size_t r = 0; r < s.dim(); ++r) {
            auto reduced = ech.reduce(s.basis().row_vec(r));
            for (uint32_t v : reduced) CHECK(v == 0);
        }
    }
}

TEST_SUITE_END();
