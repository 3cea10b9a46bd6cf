#ifndef KOSZUL_GROUPTABLE_HPP
#define KOSZUL_GROUPTABLE_HPP

#include <set>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// Finite group by explicit multiplication table: table[g][h] = g h. The
/// group axioms are validated on construction.
class FiniteGroupTable {
public:
    FiniteGroupTable(std::vector<std::vector<size_t>> table, size_t identity);

    size_t order() const { return table_.size(); }
    size_t identity() const { return identity_; }
    size_t mul(size_t g, size_t h) const { return table_[g][h]; }
    size_t inv(size_t g) const { return inverse_[g]; }
    size_t pow(size_t g, uint64_t e) const;
    size_t commutator(size_t g, size_t h) const {
        return mul(mul(inv(g), inv(h)), mul(g, h));
    }

    static FiniteGroupTable cyclic(size_t n);
    static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
    static FiniteGroupTable dihedral8();
    static FiniteGroupTable quaternion8();
    static FiniteGroupTable heisenberg(size_t p);  // order p^3, exponent p for odd p

    /// CSV: header "identity,<index>", then order rows of indices.
    static FiniteGroupTable parse_csv(const std::string& text);
    std::string to_csv() const;

private:
    std::vector<std::vector<size_t>> table_;
    std::vector<size_t> inverse_;
    size_t identity_;
};

struct JenningsResult {
    std::vector<long> gr_dims;                          // dim I^n/I^{n+1}, n = 0..N
    std::vector<std::set<size_t>> dimension_subgroups;  // G_(n), n = 1..N
};

/// Group-algebra route: powers of the augmentation ideal of F_p[G];
/// G_(n) = {g : g - 1 in I^n}. Throws NotAPGroup unless |G| is a p-power.
JenningsResult jennings_oracle(const FiniteGroupTable& t, uint32_t p, size_t n_max);

/// Group-theoretic route: G_(n) = prod_{i p^h >= n} gamma_i(G)^{p^h} from the
/// lower central series; returns the same chain as the Zassenhaus recursion.
std::vector<std::set<size_t>> lazard_oracle(const FiniteGroupTable& t, uint32_t p, size_t n_max);

/// The Zassenhaus recursion itself: G_(n) = G_(ceil(n/p))^p prod [G_(i),G_(j)].
std::vector<std::set<size_t>> zassenhaus_recursion(const FiniteGroupTable& t, uint32_t p,
                                                   size_t n_max);

}  // namespace koszul

#endif
