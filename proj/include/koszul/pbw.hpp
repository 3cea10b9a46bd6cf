#ifndef KOSZUL_PBW_HPP
#define KOSZUL_PBW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/quad.hpp"

namespace koszul {

/// Degree-2 rewriting rules lead -> tail extracted from a normalized relator
/// basis: every lead has coefficient 1 and occurs in no other rule's lead or
/// tail, and tails are strictly smaller than their leads in the order.
struct RewritingSystem {
    uint32_t p = 2;
    size_t d = 0;
    DeglexOrder order;
    std::map<std::pair<uint8_t, uint8_t>, NcPoly> rules;

    bool is_lead(uint8_t a, uint8_t b) const { return rules.count({a, b}) != 0; }
    /// Rule leads sorted by the order.
    std::vector<std::pair<uint8_t, uint8_t>> leads_sorted() const;
};

/// Gaussian elimination over the d^2 monomial coordinates sorted descending by
/// the order; rule count = dim omega.
RewritingSystem normalize_basis(const Subspace& omega, const DeglexOrder& order);

/// All degree-3 words x_a x_b x_c whose both halves x_a x_b and x_b x_c are
/// rule leads, sorted by the order.
std::vector<MultiIndex> critical_monomials(const RewritingSystem& r);

/// Rewriting graph: vertices are the polynomials reached, edges single rule
/// applications. Vertex 0 is the start; terminals have no outgoing edge.
struct RewriteGraph {
    std::vector<NcPoly> vertices;
    std::vector<std::pair<size_t, size_t>> edges;
    std::vector<size_t> terminals;
};

constexpr size_t kDefaultRewriteSteps = 1u << 20;

/// Deterministic normal form: repeatedly rewrites the order-greatest reducible
/// term at its leftmost lead occurrence. The recorded graph is the path taken.
std::pair<NcPoly, RewriteGraph> rewrite(const RewritingSystem& r, const NcPoly& f,
                                        size_t max_steps = kDefaultRewriteSteps);

/// Exhaustive rewriting graph: every single-rule application from every vertex,
/// explored leftmost-first breadth-first with memoized vertices.
RewriteGraph explore_rewrites(const RewritingSystem& r, const NcPoly& f,
                              size_t max_steps = kDefaultRewriteSteps);

struct CriticalReport {
    MultiIndex monomial;
    RewriteGraph graph;
};

struct PbwCertificate {
    DeglexOrder order;
    RewritingSystem system;
    std::vector<CriticalReport> criticals;  // each graph has a unique terminal
};

struct ConfluenceCounterexample {
    MultiIndex monomial;
    std::vector<NcPoly> normal_forms;  // at least two
};

struct ConfluenceResult {
    bool confluent = false;
    std::optional<PbwCertificate> certificate;
    std::optional<ConfluenceCounterexample> counterexample;
};

ConfluenceResult is_confluent(const RewritingSystem& r);

constexpr size_t kDefaultPbwBudget = 5040;

/// Tries deglex orders over generator permutations: all d! when that count is
/// within budget, otherwise a deterministic pseudorandom sample seeded from
/// the algebra (or the explicit seed). No certificate does not prove non-PBW.
std::optional<PbwCertificate> pbw_search(const QuadraticAlgebra& a,
                                         size_t budget = kDefaultPbwBudget,
                                         std::optional<uint64_t> seed = std::nullopt);

/// Count of degree-n words containing no rule lead as a factor; equals the
/// graded dimension for confluent systems (Diamond Lemma).
long normal_word_count(const RewritingSystem& r, size_t n);

std::string render_certificate(const PbwCertificate& cert, const std::vector<std::string>& labels);

}  // namespace koszul

#endif
