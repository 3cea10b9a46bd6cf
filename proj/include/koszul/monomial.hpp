#ifndef KOSZUL_MONOMIAL_HPP
#define KOSZUL_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "koszul/error.hpp"

namespace koszul {

/// Word in the free monoid on generators 0..d-1; concatenation is the monoid
/// product, the empty word is neutral.
struct MultiIndex {
    std::vector<uint8_t> letters;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<uint8_t> ls) : letters(ls) {}
    explicit MultiIndex(std::vector<uint8_t> ls) : letters(std::move(ls)) {}

    size_t degree() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    MultiIndex concat(const MultiIndex& other) const {
        MultiIndex out;
        out.letters.reserve(degree() + other.degree());
        out.letters.insert(out.letters.end(), letters.begin(), letters.end());
        out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
        return out;
    }

    MultiIndex slice(size_t from, size_t len) const {
        return MultiIndex(std::vector<uint8_t>(letters.begin() + from, letters.begin() + from + len));
    }

    auto operator<=>(const MultiIndex&) const = default;
};

enum class Cmp { Less, Equal, Greater };

/// Degree-lexicographic admissible order attached to a total order on the
/// generators, given as a rank permutation: rank[g] is the position of
/// generator g, rank 0 smallest.
struct DeglexOrder {
    std::vector<uint8_t> rank;

    static DeglexOrder identity(size_t d) {
        DeglexOrder o;
        o.rank.resize(d);
        std::iota(o.rank.begin(), o.rank.end(), 0);
        return o;
    }

    /// perm[k] = generator with rank k (smallest first).
    static DeglexOrder from_permutation(const std::vector<uint8_t>& perm) {
        DeglexOrder o;
        o.rank.assign(perm.size(), 0);
        std::vector<bool> seen(perm.size(), false);
        for (size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] >= perm.size() || seen[perm[k]])
                fail(ErrorKind::InvalidArgument, "not a permutation");
            seen[perm[k]] = true;
            o.rank[perm[k]] = static_cast<uint8_t>(k);
        }
        return o;
    }

    size_t generators() const { return rank.size(); }

    /// Generators listed smallest-rank first.
    std::vector<uint8_t> permutation() const {
        std::vector<uint8_t> perm(rank.size());
        for (size_t g = 0; g < rank.size(); ++g) perm[rank[g]] = static_cast<uint8_t>(g);
        return perm;
    }

    DeglexOrder reversed() const {
        DeglexOrder o;
        o.rank.resize(rank.size());
        for (size_t g = 0; g < rank.size(); ++g)
            o.rank[g] = static_cast<uint8_t>(rank.size() - 1 - rank[g]);
        return o;
    }

    Cmp compare(const MultiIndex& a, const MultiIndex& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? Cmp::Less : Cmp::Greater;
        for (size_t i = 0; i < a.degree(); ++i) {
            uint8_t ra = rank[a.letters[i]], rb = rank[b.letters[i]];
            if (ra != rb) return ra < rb ? Cmp::Less : Cmp::Greater;
        }
        return Cmp::Equal;
    }

    bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) == Cmp::Less; }

    bool operator==(const DeglexOrder&) const = default;
};

/// Column index of a degree-n monomial in the radix (leftmost letter most
/// significant) coordinate layout used for all matrix pictures of V^{otimes n}.
inline size_t monomial_radix_index(const MultiIndex& m, size_t d) {
    size_t idx = 0;
    for (uint8_t l : m.letters) idx = idx * d + l;
    return idx;
}

inline MultiIndex monomial_from_radix_index(size_t idx, size_t d, size_t degree) {
    std::vector<uint8_t> ls(degree);
    for (size_t i = degree; i-- > 0;) {
        ls[i] = static_cast<uint8_t>(idx % d);
        idx /= d;
    }
    return MultiIndex(std::move(ls));
}

}  // namespace koszul

#endif
