#ifndef KOSZUL_ET_HPP
#define KOSZUL_ET_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszul/cobar.hpp"
#include "koszul/magnus.hpp"
#include "koszul/pbw.hpp"
#include "koszul/quad.hpp"

namespace koszul {

enum class DemushkinCase { I, II, III, IV };

/// Recipe AST for elementary-type and Pythagorean constructions.
/// S-expression grammar: (free d) | (demushkin d case q=.. / f=.. / f=inf) |
/// (freeprod r r) | (semidirect m r) | euclid | (pfr-freeprod r r) |
/// (pfr-semidirect m r).
struct EtRecipe {
    enum class Kind { Free, Demushkin, FreeProd, Semidirect, Euclid, PfrFreeProd, PfrSemidirect };

    Kind kind = Kind::Free;
    size_t d = 0;                          // Free, Demushkin
    DemushkinCase dcase = DemushkinCase::I;
    uint64_t q = 0;                        // case i; 0 means p^infinity
    std::optional<uint64_t> f;             // cases ii-iv; empty means infinity
    size_t m = 0;                          // Semidirect, PfrSemidirect
    std::vector<EtRecipe> children;

    static EtRecipe free_group(size_t d);
    static EtRecipe demushkin(size_t d, DemushkinCase c, uint64_t q_param,
                              std::optional<uint64_t> f_param);
    static EtRecipe freeprod(EtRecipe l, EtRecipe r);
    static EtRecipe semidirect(size_t m, EtRecipe base);
    static EtRecipe euclid();
    static EtRecipe pfr_freeprod(EtRecipe l, EtRecipe r);
    static EtRecipe pfr_semidirect(size_t m, EtRecipe base);

    size_t total_generators() const;
    size_t depth() const;
};

EtRecipe parse_recipe(const std::string& text);
std::string render_recipe(const EtRecipe& r);

constexpr size_t kMaxRecipeGenerators = 8;
constexpr size_t kMaxRecipeDepth = 4;

/// Throws InvalidDemushkinParams unless (d, case, q/f) satisfies the
/// classification constraints for the prime p.
void validate_demushkin(uint32_t p, size_t d, DemushkinCase c, uint64_t q,
                        std::optional<uint64_t> f);

/// The classified one-relator word; f absent means 2^infinity = 0 and the
/// corresponding power factor is omitted.
GroupWord demushkin_relator(size_t d, DemushkinCase c, uint64_t q, std::optional<uint64_t> f,
                            uint32_t p);

/// The degree-2 initial form displayed by the classification, one per case.
NcPoly demushkin_initial_form(uint32_t p, size_t d, DemushkinCase c);

/// H^*(G, F_p) of the recipe group: trivial algebras for free groups, cup
/// tables for Demushkin groups, direct sums for free products, skew tensor
/// with an exterior algebra for semidirect products, twisted extensions with
/// t = class of -1 on the Pythagorean side.
QuadraticAlgebra build_cohomology(const EtRecipe& r, uint32_t p);

/// gr F_p[[G]] = U(L(G)): tensor algebras, one-relator initial-form algebras
/// (checked against the Magnus expansion of the relator), free products, and
/// symmetric tensor with a polynomial algebra. Generator labels mirror
/// build_cohomology with '*' duals. Not defined for Pfr recipes.
QuadraticAlgebra build_group_side(const EtRecipe& r, uint32_t p);

enum class Theorem { A, B, C, D };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string recipe;
    Theorem theorem = Theorem::A;
    uint32_t p = 2;
    size_t degree = 5;
    bool pass = false;
    std::vector<CheckResult> checks;
    std::optional<QuadraticAlgebra> cohomology;
    std::optional<QuadraticAlgebra> group_side;  // the quadratic dual for A/D
    std::optional<PbwCertificate> cert_cohomology;
    std::optional<PbwCertificate> cert_group;
    BigradedTable cobar;
    long timing_ms = 0;
};

/// Runs the checks for the requested theorem at the given degree bound:
/// PBW certificates (A/D on cohomology, B/C on both sides), exact dual
/// equality (B/C), the nine twisted-extension critical families (D), plus
/// Hilbert reciprocity and cobar off-diagonal vanishing as corroboration.
VerificationReport verify_theorem(const EtRecipe& r, Theorem which, uint32_t p,
                                  size_t degree_bound,
                                  long monomial_budget = kDefaultMonomialBudget,
                                  size_t pbw_budget = kDefaultPbwBudget);

const char* theorem_name(Theorem t);

}  // namespace koszul

#endif
