#include "koszul/cobar.hpp"

#include <algorithm>
#include <numeric>

namespace koszul {

namespace {

// Compositions of j into i parts >= 1, lexicographic.
void compositions_rec(size_t j, size_t i, std::vector<size_t>& cur,
                      std::vector<std::vector<size_t>>& out) {
    if (i == 1) {
        if (j >= 1) {
            cur.push_back(j);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (size_t k = 1; k + (i - 1) <= j; ++k) {
        cur.push_back(k);
        compositions_rec(j - k, i - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<size_t>> compositions(size_t j, size_t i) {
    std::vector<std::vector<size_t>> out;
    if (i == 0) return out;
    std::vector<size_t> cur;
    compositions_rec(j, i, cur, out);
    return out;
}

struct CobarSpace {
    std::vector<std::vector<size_t>> comps;
    std::vector<size_t> block_offset;  // per composition
    std::vector<size_t> block_size;
    size_t total = 0;
};

}  // namespace

BigradedTable cobar_ext_dims(const QuadraticAlgebra& a, size_t i_max, size_t j_max, long budget,
                             std::optional<size_t> sum_bound) {
    GradedQuotient q = GradedQuotient::of_algebra(a, budget);
    std::vector<long> adim = q.hilbert_prefix(j_max);

    // mult[r][s][u * a_s + v] = coordinates of (basis_r[u]) (basis_s[v]) over basis_{r+s}
    std::map<std::pair<size_t, size_t>, std::vector<std::vector<uint32_t>>> mult;
    for (size_t r = 1; r < j_max; ++r)
        for (size_t s = 1; r + s <= j_max; ++s) {
            if (adim[r] == 0 || adim[s] == 0) continue;
            std::vector<std::vector<uint32_t>> table;
            table.reserve(adim[r] * adim[s]);
            for (long u = 0; u < adim[r]; ++u) {
                std::vector<uint32_t> uvec(adim[r], 0);
                uvec[u] = 1;
                for (long v = 0; v < adim[s]; ++v) {
                    std::vector<uint32_t> vvec(adim[s], 0);
                    vvec[v] = 1;
                    table.push_back(q.mult(r, uvec, s, vvec));
                }
            }
            mult.emplace(std::make_pair(r, s), std::move(table));
        }

    auto build_space = [&](size_t i, size_t j) {
        CobarSpace sp;
        if (i == 0) {
            if (j == 0) sp.total = 1;
            return sp;
        }
        sp.comps = compositions(j, i);
        for (const auto& c : sp.comps) {
            size_t sz = 1;
            for (size_t k : c) sz *= static_cast<size_t>(adim[k]);
            sp.block_offset.push_back(sp.total);
            sp.block_size.push_back(sz);
            sp.total += sz;
        }
        if (sp.total > static_cast<size_t>(budget))
            fail(ErrorKind::BudgetExceeded, "cobar component too large");
        return sp;
    };

    std::map<size_t, std::vector<CobarSpace>> spaces_by_j;

    Fp fp(a.modulus());
    BigradedTable table;
    table.i_max = i_max;
    table.j_max = j_max;
    table.entries[{0, 0}] = 1;

    for (size_t j = 1; j <= j_max; ++j) {
        size_t i_limit = std::min(i_max, j);
        if (sum_bound) i_limit = std::min(i_limit, *sum_bound >= j ? *sum_bound - j : 0);
        if (i_limit == 0) continue;
        auto& sp = spaces_by_j[j];
        sp.resize(i_limit + 2);
        for (size_t i = 0; i < sp.size(); ++i) sp[i] = build_space(i, j);

        // ranks[i] = rank of d : Cob^{i,j} -> Cob^{i+1,j}
        std::vector<size_t> ranks(sp.size(), 0);
        for (size_t i = 1; i + 1 < sp.size(); ++i) {
            const CobarSpace& src = sp[i];
            const CobarSpace& tgt = sp[i + 1];
            if (src.total == 0 || tgt.total == 0) continue;
            EchelonBasis ech(a.modulus(), tgt.total);

            // index of target composition, for locating blocks after a split
            std::map<std::vector<size_t>, size_t> tgt_index;
            for (size_t cidx = 0; cidx < tgt.comps.size(); ++cidx)
                tgt_index[tgt.comps[cidx]] = cidx;

            for (size_t cidx = 0; cidx < src.comps.size(); ++cidx) {
                const auto& comp = src.comps[cidx];
                // strides for tuple indexing, leftmost factor most significant
                std::vector<size_t> stride(i, 1);
                for (size_t k = i; k-- > 1;)
                    stride[k - 1] = stride[k] * static_cast<size_t>(adim[comp[k]]);

                std::vector<size_t> tuple(i, 0);
                for (size_t flat = 0; flat < src.block_size[cidx]; ++flat) {
                    // decode tuple
                    size_t rem = flat;
                    for (size_t k = 0; k < i; ++k) {
                        tuple[k] = rem / stride[k];
                        rem %= stride[k];
                    }
                    std::vector<uint32_t> image(tgt.total, 0);
                    bool nonzero = false;
                    for (size_t k = 0; k < i; ++k) {
                        uint32_t sign_c = (k + 1) % 2 == 0 ? 1u : fp.neg(1);  // (-1)^{k+1} 1-based
                        size_t kk = comp[k];
                        for (size_t r = 1; r < kk; ++r) {
                            size_t s = kk - r;
                            auto mit = mult.find({r, s});
                            if (mit == mult.end()) continue;
                            std::vector<size_t> tcomp = comp;
                            tcomp[k] = r;
                            tcomp.insert(tcomp.begin() + k + 1, s);
                            auto tit = tgt_index.find(tcomp);
                            if (tit == tgt_index.end()) continue;
                            size_t tblock = tit->second;
                            // strides in the target block
                            std::vector<size_t> tstride(i + 1, 1);
                            for (size_t t = i + 1; t-- > 1;)
                                tstride[t - 1] = tstride[t] * static_cast<size_t>(adim[tgt.comps[tblock][t]]);
                            // base index from the untouched factors
                            size_t base = 0;
                            for (size_t t = 0; t < i; ++t) {
                                if (t < k) base += tuple[t] * tstride[t];
                                else if (t > k) base += tuple[t] * tstride[t + 1];
                            }
                            const auto& mt = mit->second;
                            for (long u = 0; u < adim[r]; ++u)
                                for (long v = 0; v < adim[s]; ++v) {
                                    uint32_t coeff = mt[u * adim[s] + v][tuple[k]];
                                    if (!coeff) continue;
                                    size_t idx = tgt.block_offset[tblock] + base +
                                                 static_cast<size_t>(u) * tstride[k] +
                                                 static_cast<size_t>(v) * tstride[k + 1];
                                    image[idx] = fp.add(image[idx], fp.mul(sign_c, coeff));
                                    nonzero = true;
                                }
                        }
                    }
                    if (nonzero) ech.insert(std::move(image));
                }
            }
            ranks[i] = ech.rank();
        }

        for (size_t i = 1; i <= i_limit; ++i) {
            long dim = static_cast<long>(sp[i].total) - static_cast<long>(ranks[i]) -
                       static_cast<long>(i >= 1 ? ranks[i - 1] : 0);
            if (dim != 0) table.entries[{i, j}] = dim;
        }
    }
    return table;
}

}  // namespace koszul
