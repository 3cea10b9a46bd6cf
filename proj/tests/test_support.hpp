#ifndef KOSZUL_TEST_SUPPORT_HPP
#define KOSZUL_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/ncpoly.hpp"
#include "koszul/quad.hpp"

// Deterministic splitmix64 generator so every suite is reproducible.
struct TestRng {
    uint64_t state;
    explicit TestRng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

inline koszul::FpMatrix random_matrix(TestRng& rng, uint32_t p, size_t rows, size_t cols) {
    koszul::FpMatrix m(p, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<uint32_t>(rng.below(p)));
    return m;
}

inline koszul::MultiIndex random_monomial(TestRng& rng, size_t d, size_t degree) {
    koszul::MultiIndex m;
    for (size_t i = 0; i < degree; ++i) m.letters.push_back(static_cast<uint8_t>(rng.below(d)));
    return m;
}

inline koszul::NcPoly random_poly(TestRng& rng, uint32_t p, size_t d, size_t max_degree,
                                  size_t terms) {
    koszul::NcPoly f(p, d);
    for (size_t t = 0; t < terms; ++t)
        f.add_term(random_monomial(rng, d, rng.below(max_degree + 1)),
                   static_cast<int64_t>(rng.below(p)));
    return f;
}

inline std::vector<std::string> gen_labels(size_t d) {
    std::vector<std::string> out;
    for (size_t i = 0; i < d; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

/// Random quadratic algebra: a random relator subspace over d generators.
inline koszul::QuadraticAlgebra random_algebra(TestRng& rng, uint32_t p, size_t d) {
    size_t rows = rng.below(d * d + 1);
    return koszul::QuadraticAlgebra(p, gen_labels(d),
                                    koszul::Subspace::span(random_matrix(rng, p, rows, d * d)));
}

#endif
