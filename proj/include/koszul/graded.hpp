#ifndef KOSZUL_GRADED_HPP
#define KOSZUL_GRADED_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/ncpoly.hpp"
#include "koszul/quad.hpp"

namespace koszul {

constexpr long kDefaultMonomialBudget = 200000;

/// Graded components of F_p<X_1..X_d> / (homogeneous forms). Degree n is
/// presented by a coset basis of monomials: the complement of the pivot
/// columns of the relator row space, taken degree by degree in monomial
/// (radix) order, so tables are reproducible.
///
/// Degree n relations decompose as V (x) I_{n-1} plus rho (x) V^{n-s} over the
/// forms rho, which lets each level be built from quotient coordinates of the
/// previous one instead of the full d^n matrix.
class GradedQuotient {
public:
    GradedQuotient(uint32_t p, size_t d, std::vector<NcPoly> forms,
                   long monomial_budget = kDefaultMonomialBudget);

    static GradedQuotient of_algebra(const QuadraticAlgebra& a,
                                     long monomial_budget = kDefaultMonomialBudget);

    uint32_t modulus() const { return p_; }
    size_t generators() const { return d_; }

    long dim(size_t n);
    const std::vector<MultiIndex>& basis(size_t n);
    std::vector<long> hilbert_prefix(size_t n_max);

    /// Coordinates of the coset of an arbitrary monomial over basis(degree).
    std::vector<uint32_t> reduce_monomial(const MultiIndex& m);
    /// Left action of generator v on a coordinate vector of degree n - 1.
    std::vector<uint32_t> act(uint8_t v, size_t n, const std::vector<uint32_t>& vec);
    /// Product of two coset-basis elements given by coordinate vectors.
    std::vector<uint32_t> mult(size_t deg_u, const std::vector<uint32_t>& u, size_t deg_v,
                               const std::vector<uint32_t>& v);

private:
    struct Level {
        std::vector<MultiIndex> basis;
        // For column (v, b) of V (x) A_{n-1}: either an index into basis (unit
        // coset) or a dense row rewriting it over basis.
        std::vector<long> unit;                         // d * a_{n-1}, -1 when pivot
        std::map<size_t, std::vector<uint32_t>> pivot;  // column -> row over basis
    };

    void ensure(size_t n);

    uint32_t p_;
    size_t d_;
    std::vector<NcPoly> forms_;
    long budget_;
    std::vector<Level> levels_;
};

/// dim A_n for the quadratic algebra.
long graded_dim(const QuadraticAlgebra& a, size_t n, long monomial_budget = kDefaultMonomialBudget);

/// [dim A_0, ..., dim A_nmax].
std::vector<long> hilbert_prefix(const QuadraticAlgebra& a, size_t n_max,
                                 long monomial_budget = kDefaultMonomialBudget);

/// Whether sum_{k<=n} (-1)^k h_b[k] h_a[n-k] = [n = 0] for all n <= n_max,
/// i.e. h_a(z) h_b(-z) = 1 through degree n_max.
bool series_reciprocal_check(const QuadraticAlgebra& a, const QuadraticAlgebra& b, size_t n_max,
                             long monomial_budget = kDefaultMonomialBudget);

}  // namespace koszul

#endif
