#include "koszul/graded.hpp"

#include <algorithm>

namespace koszul {

GradedQuotient::GradedQuotient(uint32_t p, size_t d, std::vector<NcPoly> forms, long budget)
    : p_(p), d_(d), forms_(std::move(forms)), budget_(budget) {
    Fp check(p);
    (void)check;
    for (const auto& f : forms_) {
        if (f.modulus() != p || f.generators() != d)
            fail(ErrorKind::FieldMismatch, "form over wrong ring");
        if (f.is_zero() || !f.is_homogeneous() || f.max_degree() < 1)
            fail(ErrorKind::InvalidArgument, "forms must be nonzero homogeneous of degree >= 1");
    }
    levels_.resize(1);
    levels_[0].basis.push_back(MultiIndex{});
}

GradedQuotient GradedQuotient::of_algebra(const QuadraticAlgebra& a, long budget) {
    return GradedQuotient(a.modulus(), a.generator_count(), a.relator_polys(), budget);
}

void GradedQuotient::ensure(size_t n) {
    while (levels_.size() <= n) {
        size_t k = levels_.size();
        // budget is on the raw monomial count d^k of the degree
        double raw = 1;
        for (size_t i = 0; i < k; ++i) {
            raw *= static_cast<double>(d_);
            if (raw > static_cast<double>(budget_))
                fail(ErrorKind::BudgetExceeded,
                     "degree " + std::to_string(k) + " exceeds monomial budget");
        }

        const Level& prev = levels_[k - 1];
        size_t a_prev = prev.basis.size();
        size_t cols = d_ * a_prev;
        EchelonBasis ech(p_, cols);

        // relation rows: rho . b for each form rho of degree s and each coset
        // basis monomial b of degree k - s; the leftmost letter stays a free
        // coordinate, the rest is reduced through the known levels.
        for (const auto& rho : forms_) {
            size_t s = rho.max_degree();
            if (s > k) continue;
            size_t bdeg = k - s;
            size_t nb = levels_[bdeg].basis.size();
            for (size_t bi = 0; bi < nb; ++bi) {
                std::vector<uint32_t> row(cols, 0);
                Fp fp(p_);
                for (const auto& [w, c] : rho.terms()) {
                    // tail = (letters 1..s-1 of w) concat basis monomial
                    std::vector<uint32_t> vec(levels_[bdeg].basis.size(), 0);
                    vec[bi] = 1;
                    size_t deg = bdeg;
                    for (size_t li = w.degree(); li-- > 1;) {
                        vec = act(w.letters[li], deg + 1, vec);
                        ++deg;
                    }
                    // leading letter w.letters[0] stays unreduced
                    size_t v0 = w.letters[0];
                    for (size_t j = 0; j < vec.size(); ++j)
                        if (vec[j])
                            row[v0 * a_prev + j] =
                                fp.add(row[v0 * a_prev + j], fp.mul(c, vec[j]));
                }
                ech.insert(std::move(row));
            }
        }

        Level lvl;
        lvl.unit.assign(cols, -1);
        auto free_cols = ech.free_cols();
        lvl.basis.reserve(free_cols.size());
        for (size_t c : free_cols) {
            size_t v = c / a_prev, b = c % a_prev;
            lvl.unit[c] = static_cast<long>(lvl.basis.size());
            MultiIndex m;
            m.letters.push_back(static_cast<uint8_t>(v));
            const auto& tail = prev.basis[b].letters;
            m.letters.insert(m.letters.end(), tail.begin(), tail.end());
            lvl.basis.push_back(std::move(m));
        }
        Fp fp(p_);
        const auto& rows = ech.rows();
        const auto& pivots = ech.pivot_cols();
        for (size_t r = 0; r < rows.size(); ++r) {
            // pivot column = -(free part of the row) in the quotient
            std::vector<uint32_t> rewrite(lvl.basis.size(), 0);
            for (size_t idx = 0; idx < free_cols.size(); ++idx) {
                uint32_t cval = rows[r][free_cols[idx]];
                if (cval) rewrite[idx] = fp.neg(cval);
            }
            lvl.pivot.emplace(pivots[r], std::move(rewrite));
        }
        levels_.push_back(std::move(lvl));
    }
}

long GradedQuotient::dim(size_t n) {
    ensure(n);
    return static_cast<long>(levels_[n].basis.size());
}

const std::vector<MultiIndex>& GradedQuotient::basis(size_t n) {
    ensure(n);
    return levels_[n].basis;
}

std::vector<long> GradedQuotient::hilbert_prefix(size_t n_max) {
    std::vector<long> out;
    out.reserve(n_max + 1);
    for (size_t n = 0; n <= n_max; ++n) out.push_back(dim(n));
    return out;
}

std::vector<uint32_t> GradedQuotient::act(uint8_t v, size_t n, const std::vector<uint32_t>& vec) {
    ensure(n);
    const Level& lvl = levels_[n];
    size_t a_prev = levels_[n - 1].basis.size();
    if (vec.size() != a_prev) fail(ErrorKind::InvalidArgument, "act: coordinate size mismatch");
    Fp fp(p_);
    std::vector<uint32_t> out(lvl.basis.size(), 0);
    for (size_t b = 0; b < a_prev; ++b) {
        uint32_t c = vec[b];
        if (!c) continue;
        size_t col = static_cast<size_t>(v) * a_prev + b;
        if (lvl.unit[col] >= 0) {
            size_t idx = static_cast<size_t>(lvl.unit[col]);
            out[idx] = fp.add(out[idx], c);
        } else {
            const auto& row = lvl.pivot.at(col);
            for (size_t j = 0; j < row.size(); ++j)
                if (row[j]) out[j] = fp.add(out[j], fp.mul(c, row[j]));
        }
    }
    return out;
}

std::vector<uint32_t> GradedQuotient::reduce_monomial(const MultiIndex& m) {
    size_t n = m.degree();
    ensure(n);
    std::vector<uint32_t> vec{1};
    for (size_t li = m.degree(), deg = 0; li-- > 0; ++deg) vec = act(m.letters[li], deg + 1, vec);
    return vec;
}

std::vector<uint32_t> GradedQuotient::mult(size_t deg_u, const std::vector<uint32_t>& u,
                                           size_t deg_v, const std::vector<uint32_t>& v) {
    ensure(deg_u + deg_v);
    Fp fp(p_);
    std::vector<uint32_t> acc(levels_[deg_u + deg_v].basis.size(), 0);
    const auto& ubasis = levels_[deg_u].basis;
    for (size_t ui = 0; ui < u.size(); ++ui) {
        if (!u[ui]) continue;
        // apply the letters of the u basis monomial to v, right to left
        std::vector<uint32_t> vec = v;
        size_t deg = deg_v;
        const auto& letters = ubasis[ui].letters;
        for (size_t li = letters.size(); li-- > 0;) {
            vec = act(letters[li], deg + 1, vec);
            ++deg;
        }
        for (size_t j = 0; j < vec.size(); ++j)
            if (vec[j]) acc[j] = fp.add(acc[j], fp.mul(u[ui], vec[j]));
    }
    return acc;
}

long graded_dim(const QuadraticAlgebra& a, size_t n, long budget) {
    GradedQuotient q = GradedQuotient::of_algebra(a, budget);
    return q.dim(n);
}

std::vector<long> hilbert_prefix(const QuadraticAlgebra& a, size_t n_max, long budget) {
    GradedQuotient q = GradedQuotient::of_algebra(a, budget);
    return q.hilbert_prefix(n_max);
}

bool series_reciprocal_check(const QuadraticAlgebra& a, const QuadraticAlgebra& b, size_t n_max,
                             long budget) {
    if (a.modulus() != b.modulus()) fail(ErrorKind::FieldMismatch, "series check over different fields");
    auto ha = hilbert_prefix(a, n_max, budget);
    auto hb = hilbert_prefix(b, n_max, budget);
    for (size_t n = 0; n <= n_max; ++n) {
        long long acc = 0;
        for (size_t k = 0; k <= n; ++k) {
            long long term = static_cast<long long>(hb[k]) * ha[n - k];
            acc += (k % 2 == 0) ? term : -term;
        }
        if (acc != (n == 0 ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace koszul
