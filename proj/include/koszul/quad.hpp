#ifndef KOSZUL_QUAD_HPP
#define KOSZUL_QUAD_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/ncpoly.hpp"

namespace koszul {

/// Quadratic algebra Q(V, Omega): d generators spanning V, relator subspace
/// Omega inside V (x) V in the monomial coordinates {x_i x_j}, row major
/// (index i*d + j). Canonical form of Omega is RREF, so two algebras over the
/// same generators are equal iff their relator matrices are identical.
class QuadraticAlgebra {
public:
    QuadraticAlgebra(uint32_t p, std::vector<std::string> generator_labels, Subspace relators,
                     std::optional<size_t> distinguished_t = std::nullopt);

    static QuadraticAlgebra tensor(uint32_t p, std::vector<std::string> labels);
    static QuadraticAlgebra trivial(uint32_t p, std::vector<std::string> labels);
    static QuadraticAlgebra symmetric(uint32_t p, std::vector<std::string> labels);
    static QuadraticAlgebra exterior(uint32_t p, std::vector<std::string> labels);
    /// Span of the given homogeneous degree-2 relators.
    static QuadraticAlgebra from_relator_polys(uint32_t p, std::vector<std::string> labels,
                                               const std::vector<NcPoly>& relators,
                                               std::optional<size_t> distinguished_t = std::nullopt);

    uint32_t modulus() const { return p_; }
    size_t generator_count() const { return labels_.size(); }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    const Subspace& relators() const { return relators_; }
    std::optional<size_t> distinguished_t() const { return t_; }

    std::vector<NcPoly> relator_polys() const;

    /// p, generator count and relator subspace agree (labels ignored).
    bool same_presentation(const QuadraticAlgebra& o) const {
        return p_ == o.p_ && labels_.size() == o.labels_.size() && relators_ == o.relators_;
    }
    /// Presentation equality including labels. The distinguished t is an
    /// annotation, not part of the presentation identity.
    bool operator==(const QuadraticAlgebra& o) const {
        return same_presentation(o) && labels_ == o.labels_;
    }

    QuadraticAlgebra with_labels(std::vector<std::string> labels) const;
    QuadraticAlgebra with_distinguished_t(std::optional<size_t> t) const;

private:
    uint32_t p_;
    std::vector<std::string> labels_;
    Subspace relators_;  // ambient dim d^2
    std::optional<size_t> t_;
};

/// Quadratic dual: relators are the annihilator of Omega under the coordinate
/// pairing (f (x) g)(u (x) v) = f(u) g(v); labels are toggled with a '*'
/// suffix so that the double dual returns the input exactly.
QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a);

std::string dual_label(const std::string& label);

enum class CombineMode { DirectSum, FreeProduct, SymTensor, SkewTensor };

/// The four binary constructions on quadratic algebras. Duplicate generator
/// names between the two sides are suffixed with '.L' / '.R'.
QuadraticAlgebra combine(const QuadraticAlgebra& a, const QuadraticAlgebra& b, CombineMode mode);

/// Twisted extension A[J;t]: appends m new generators that skew-commute with
/// everything, with x_j^2 = t x_j (t acts as 0 when p is odd, where 2t = 0
/// forces t = 0 and the extension degenerates to the skew tensor product with
/// an exterior algebra).
QuadraticAlgebra twisted_extension(const QuadraticAlgebra& a, size_t m);

/// Whether degree-2 graded commutativity relations hold: u v + v u in Omega
/// for all basis pairs, plus u^2 in Omega when p is odd.
bool is_graded_commutative_deg2(const QuadraticAlgebra& a);

/// Coordinates of a homogeneous degree-2 polynomial in the {x_i x_j} layout.
std::vector<uint32_t> degree2_coords(const NcPoly& f);
NcPoly degree2_poly(uint32_t p, size_t d, const std::vector<uint32_t>& coords);

/// Applies the linear substitution g_k -> sum_j M[k][j] g_j to both tensor
/// legs of every relator (M is d x d over F_p). Used to re-express an algebra
/// in a new basis of V.
Subspace substitute_relators(const Subspace& relators, const FpMatrix& m);

}  // namespace koszul

#endif
