#ifndef KOSZUL_COBAR_HPP
#define KOSZUL_COBAR_HPP

#include <map>

#include "koszul/graded.hpp"

namespace koszul {

/// dim Ext^{i,j}; entries(0,0) = 1 and entries(i,j) = 0 whenever j < i.
struct BigradedTable {
    size_t i_max = 0, j_max = 0;
    std::map<std::pair<size_t, size_t>, long> entries;

    long at(size_t i, size_t j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

/// Bigraded Ext dims of the ground field over a, from the normalized cobar
/// complex Cob^{i,j} = (+) over compositions (k_1..k_i) of j, k_s >= 1, of
/// A*_{k_1} (x) ... (x) A*_{k_i}, with differential the alternating sum of
/// comultiplications (the coordinate duals of multiplication in the coset
/// bases of the graded quotient). When sum_bound is given, only entries with
/// i + j <= sum_bound are computed.
BigradedTable cobar_ext_dims(const QuadraticAlgebra& a, size_t i_max, size_t j_max,
                             long monomial_budget = kDefaultMonomialBudget,
                             std::optional<size_t> sum_bound = std::nullopt);

}  // namespace koszul

#endif
