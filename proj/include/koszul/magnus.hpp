#ifndef KOSZUL_MAGNUS_HPP
#define KOSZUL_MAGNUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszul/graded.hpp"
#include "koszul/ncpoly.hpp"
#include "koszul/quad.hpp"
#include "koszul/word.hpp"

namespace koszul {

constexpr size_t kDefaultMagnusTruncation = 6;

/// Pro-p presentation by words; relators must lie in the Frattini subgroup
/// (zero degree-1 Magnus part), checked where it matters.
struct GroupPresentation {
    uint32_t p = 2;
    std::vector<std::string> generator_labels;
    std::vector<GroupWord> relators;

    size_t generator_count() const { return generator_labels.size(); }
    static std::vector<std::string> default_labels(size_t d);
};

/// Lowest-degree homogeneous part of mu(w) - 1.
struct InitialForm {
    size_t degree = 0;
    NcPoly poly;
};

/// Magnus morphism x_i -> 1 + X_i, multiplicative, truncated at degree N.
TruncSeries magnus_expand(const GroupWord& w, uint32_t p, size_t d, size_t trunc_degree,
                          long monomial_budget = kDefaultMonomialBudget);

/// Throws TruncationTooLow when mu(w) = 1 through the truncation.
InitialForm initial_form(const GroupWord& w, uint32_t p, size_t d, size_t trunc_degree,
                         long monomial_budget = kDefaultMonomialBudget);

/// All relator initial forms have degree two.
bool is_quadratic_presentation(const GroupPresentation& g,
                               size_t trunc_degree = kDefaultMagnusTruncation);

/// r written as prod x_i^{2 a_i} prod_{i<j} [x_i, x_j]^{b_ij} r' with r' deeper
/// in the filtration; a is only present for p = 2. Read off the degree-2
/// Magnus coefficients. Throws NotInFrattini when the degree-1 part is nonzero.
struct RelatorDecomposition {
    std::optional<std::vector<uint32_t>> a;  // p = 2 only, length d
    FpMatrix b;                              // strictly upper triangular, d x d
};

RelatorDecomposition relator_mod_s3(const GroupWord& w, uint32_t p, size_t d);

/// <f(r), chi_k (x) chi_l> = -b_kl (k < l), b_lk (k > l), and on the diagonal
/// -C(p,2) a_k, which is a_k for p = 2 and 0 for odd p.
FpScalar pairing_value(const GroupWord& w, size_t k, size_t l, uint32_t p, size_t d);

/// F_p<X> / (initial forms of the relators). Quadratic presentation gives a
/// QuadraticAlgebra; in general only the graded quotient with its dims, an
/// upper bound for gr F_p[[G]] that is exact in degrees 0, 1, 2 and exact in
/// all degrees for quadratically defined (e.g. strongly free) presentations.
struct GradedAlgebraCandidate {
    std::vector<InitialForm> forms;
    std::optional<QuadraticAlgebra> quadratic;  // set iff all forms degree 2
    GradedQuotient quotient;
};

GradedAlgebraCandidate graded_algebra_candidate(const GroupPresentation& g,
                                                size_t trunc_degree = kDefaultMagnusTruncation,
                                                long monomial_budget = kDefaultMonomialBudget);

/// Hilbert series of F_p<X>/(forms) equals 1/(1 - d z + sum z^{s_i}) through
/// degree N. The empty sequence is strongly free.
bool strongly_free_check(const std::vector<InitialForm>& forms, uint32_t p, size_t d, size_t n_max,
                         long monomial_budget = kDefaultMonomialBudget);

}  // namespace koszul

#endif
