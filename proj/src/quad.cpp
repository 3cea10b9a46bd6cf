#include "koszul/quad.hpp"

#include <algorithm>
#include <set>

namespace koszul {

QuadraticAlgebra::QuadraticAlgebra(uint32_t p, std::vector<std::string> labels, Subspace relators,
                                   std::optional<size_t> t)
    : p_(p), labels_(std::move(labels)), relators_(std::move(relators)), t_(t) {
    Fp check(p);
    (void)check;
    size_t d = labels_.size();
    if (relators_.ambient_dim() != d * d)
        fail(ErrorKind::InvalidArgument, "relator subspace must live in V(x)V");
    if (relators_.modulus() != p) fail(ErrorKind::FieldMismatch, "relators over wrong field");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != d) fail(ErrorKind::InvalidArgument, "duplicate generator labels");
    if (t_ && *t_ >= d) fail(ErrorKind::InvalidArgument, "distinguished t out of range");
}

QuadraticAlgebra QuadraticAlgebra::tensor(uint32_t p, std::vector<std::string> labels) {
    size_t d = labels.size();
    return QuadraticAlgebra(p, std::move(labels), Subspace(p, d * d));
}

QuadraticAlgebra QuadraticAlgebra::trivial(uint32_t p, std::vector<std::string> labels) {
    size_t d = labels.size();
    return QuadraticAlgebra(p, std::move(labels), Subspace::full(p, d * d));
}

QuadraticAlgebra QuadraticAlgebra::symmetric(uint32_t p, std::vector<std::string> labels) {
    size_t d = labels.size();
    std::vector<NcPoly> rels;
    for (uint8_t i = 0; i < d; ++i)
        for (uint8_t j = i + 1; j < d; ++j) {
            NcPoly r(p, d);
            r.add_term(MultiIndex{i, j}, 1);
            r.add_term(MultiIndex{j, i}, -1);
            rels.push_back(r);
        }
    return from_relator_polys(p, std::move(labels), rels);
}

QuadraticAlgebra QuadraticAlgebra::exterior(uint32_t p, std::vector<std::string> labels) {
    size_t d = labels.size();
    std::vector<NcPoly> rels;
    for (uint8_t i = 0; i < d; ++i) {
        NcPoly sq(p, d);
        sq.add_term(MultiIndex{i, i}, 1);
        rels.push_back(sq);
        for (uint8_t j = static_cast<uint8_t>(i + 1); j < d; ++j) {
            NcPoly r(p, d);
            r.add_term(MultiIndex{i, j}, 1);
            r.add_term(MultiIndex{j, i}, 1);
            rels.push_back(r);
        }
    }
    return from_relator_polys(p, std::move(labels), rels);
}

std::vector<uint32_t> degree2_coords(const NcPoly& f) {
    size_t d = f.generators();
    std::vector<uint32_t> coords(d * d, 0);
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != 2) fail(ErrorKind::InvalidArgument, "relator not homogeneous of degree 2");
        coords[m.letters[0] * d + m.letters[1]] = c;
    }
    return coords;
}

NcPoly degree2_poly(uint32_t p, size_t d, const std::vector<uint32_t>& coords) {
    NcPoly f(p, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (coords[i * d + j])
                f.add_term(MultiIndex{static_cast<uint8_t>(i), static_cast<uint8_t>(j)}, coords[i * d + j]);
    return f;
}

QuadraticAlgebra QuadraticAlgebra::from_relator_polys(uint32_t p, std::vector<std::string> labels,
                                                      const std::vector<NcPoly>& relators,
                                                      std::optional<size_t> t) {
    size_t d = labels.size();
    FpMatrix rows(p, relators.size(), d * d);
    for (size_t r = 0; r < relators.size(); ++r) {
        if (relators[r].generators() != d || relators[r].modulus() != p)
            fail(ErrorKind::FieldMismatch, "relator over wrong ring");
        auto coords = degree2_coords(relators[r]);
        for (size_t c = 0; c < d * d; ++c) rows.set(r, c, coords[c]);
    }
    return QuadraticAlgebra(p, std::move(labels), Subspace::span(rows), t);
}

std::vector<NcPoly> QuadraticAlgebra::relator_polys() const {
    std::vector<NcPoly> out;
    size_t d = generator_count();
    for (size_t r = 0; r < relators_.dim(); ++r)
        out.push_back(degree2_poly(p_, d, relators_.basis().row_vec(r)));
    return out;
}

QuadraticAlgebra QuadraticAlgebra::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != labels_.size()) fail(ErrorKind::InvalidArgument, "label count mismatch");
    return QuadraticAlgebra(p_, std::move(labels), relators_, t_);
}

QuadraticAlgebra QuadraticAlgebra::with_distinguished_t(std::optional<size_t> t) const {
    return QuadraticAlgebra(p_, labels_, relators_, t);
}

std::string dual_label(const std::string& label) {
    if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
    return label + "*";
}

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a) {
    std::vector<std::string> labels;
    labels.reserve(a.generator_count());
    for (const auto& l : a.generator_labels()) labels.push_back(dual_label(l));
    return QuadraticAlgebra(a.modulus(), std::move(labels), annihilator(a.relators()),
                            a.distinguished_t());
}

namespace {

// Duplicate names across the two sides get side tags, re-tagged as often as
// needed to stay clear of names already present on either side.
std::pair<std::vector<std::string>, std::vector<std::string>> disambiguate(
    const std::vector<std::string>& la, const std::vector<std::string>& lb) {
    std::set<std::string> sa(la.begin(), la.end()), sb(lb.begin(), lb.end());
    std::vector<std::string> outa = la, outb = lb;
    std::set<std::string> taken;
    for (const auto& x : la)
        if (!sb.count(x)) taken.insert(x);
    for (const auto& x : lb)
        if (!sa.count(x)) taken.insert(x);
    auto retag = [&](std::string name, const char* side) {
        do name += side;
        while (taken.count(name));
        taken.insert(name);
        return name;
    };
    for (auto& x : outa)
        if (sb.count(x)) x = retag(x, ".L");
    for (auto& x : outb)
        if (sa.count(x)) x = retag(x, ".R");
    return {outa, outb};
}

}  // namespace

QuadraticAlgebra combine(const QuadraticAlgebra& a, const QuadraticAlgebra& b, CombineMode mode) {
    if (a.modulus() != b.modulus()) fail(ErrorKind::FieldMismatch, "combine over different fields");
    uint32_t p = a.modulus();
    size_t da = a.generator_count(), db = b.generator_count(), d = da + db;
    Fp fp(p);

    auto [la, lb] = disambiguate(a.generator_labels(), b.generator_labels());
    std::vector<std::string> labels = la;
    labels.insert(labels.end(), lb.begin(), lb.end());

    // Block embedding of a relator coordinate (i,j) of either side.
    auto pos = [&](size_t i, size_t j) { return i * d + j; };

    size_t extra = 0;
    switch (mode) {
        case CombineMode::DirectSum: extra = 2 * da * db; break;
        case CombineMode::FreeProduct: extra = 0; break;
        case CombineMode::SymTensor:
        case CombineMode::SkewTensor: extra = da * db; break;
    }
    FpMatrix rows(p, a.relators().dim() + b.relators().dim() + extra, d * d);
    size_t r = 0;
    for (size_t k = 0; k < a.relators().dim(); ++k, ++r)
        for (size_t i = 0; i < da; ++i)
            for (size_t j = 0; j < da; ++j)
                rows.set(r, pos(i, j), a.relators().basis().at(k, i * da + j));
    for (size_t k = 0; k < b.relators().dim(); ++k, ++r)
        for (size_t i = 0; i < db; ++i)
            for (size_t j = 0; j < db; ++j)
                rows.set(r, pos(da + i, da + j), b.relators().basis().at(k, i * db + j));

    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < db; ++j) {
            switch (mode) {
                case CombineMode::DirectSum:
                    rows.set(r++, pos(i, da + j), 1);
                    rows.set(r++, pos(da + j, i), 1);
                    break;
                case CombineMode::SymTensor:
                    rows.set(r, pos(i, da + j), 1);
                    rows.set(r++, pos(da + j, i), fp.neg(1));
                    break;
                case CombineMode::SkewTensor:
                    rows.set(r, pos(i, da + j), 1);
                    rows.set(r++, pos(da + j, i), 1);
                    break;
                case CombineMode::FreeProduct: break;
            }
        }

    return QuadraticAlgebra(p, std::move(labels), Subspace::span(rows));
}

QuadraticAlgebra twisted_extension(const QuadraticAlgebra& a, size_t m) {
    if (!a.distinguished_t())
        fail(ErrorKind::NoDistinguishedElement, "twisted extension needs a distinguished t");
    if (m == 0) return a;
    uint32_t p = a.modulus();
    Fp fp(p);
    size_t da = a.generator_count(), d = da + m;
    size_t t = *a.distinguished_t();

    std::vector<std::string> labels = a.generator_labels();
    {
        std::set<std::string> used(labels.begin(), labels.end());
        size_t k = 1;
        while (labels.size() < d) {
            std::string cand = "x" + std::to_string(k++);
            if (!used.count(cand)) labels.push_back(cand);
        }
    }

    auto pos = [&](size_t i, size_t j) { return i * d + j; };
    size_t base = a.relators().dim();
    size_t nrows = base + m * (m - 1) / 2 + m * da + m;
    FpMatrix rows(p, nrows, d * d);
    size_t r = 0;
    for (size_t k = 0; k < base; ++k, ++r)
        for (size_t i = 0; i < da; ++i)
            for (size_t j = 0; j < da; ++j)
                rows.set(r, pos(i, j), a.relators().basis().at(k, i * da + j));

    // x_i x_j + x_j x_i for i < j among the new generators
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            rows.set(r, pos(da + i, da + j), 1);
            rows.set(r++, pos(da + j, da + i), 1);
        }
    // x_j g + g x_j for every base generator g (including t)
    for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < da; ++k) {
            rows.set(r, pos(da + j, k), 1);
            rows.set(r++, pos(k, da + j), 1);
        }
    // x_j^2 - t x_j; for odd p the distinguished t acts as 0
    for (size_t j = 0; j < m; ++j) {
        rows.set(r, pos(da + j, da + j), 1);
        if (p == 2) rows.set(r, pos(t, da + j), fp.neg(1));
        ++r;
    }

    return QuadraticAlgebra(p, std::move(labels), Subspace::span(rows), a.distinguished_t());
}

bool is_graded_commutative_deg2(const QuadraticAlgebra& a) {
    size_t d = a.generator_count();
    uint32_t p = a.modulus();
    const Subspace& omega = a.relators();
    std::vector<uint32_t> v(d * d);
    for (size_t u = 0; u < d; ++u)
        for (size_t w = 0; w <= u; ++w) {
            std::fill(v.begin(), v.end(), 0);
            if (u == w) {
                if (p == 2) continue;
                v[u * d + u] = 1;  // u (x) u must vanish when p is odd
            } else {
                v[u * d + w] = 1;
                v[w * d + u] = Fp(p).add(v[w * d + u], 1);
            }
            if (!omega.contains(v)) return false;
        }
    return true;
}

Subspace substitute_relators(const Subspace& relators, const FpMatrix& m) {
    size_t d = m.rows();
    if (m.cols() != d || relators.ambient_dim() != d * d)
        fail(ErrorKind::InvalidArgument, "substitution shape mismatch");
    uint32_t p = relators.modulus();
    Fp fp(p);
    FpMatrix rows(p, relators.dim(), d * d);
    for (size_t r = 0; r < relators.dim(); ++r) {
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                uint32_t c = relators.basis().at(r, i * d + j);
                if (!c) continue;
                for (size_t a = 0; a < d; ++a) {
                    if (!m.at(i, a)) continue;
                    uint32_t ca = fp.mul(c, m.at(i, a));
                    for (size_t b = 0; b < d; ++b)
                        if (m.at(j, b))
                            rows.set(r, a * d + b,
                                     fp.add(rows.at(r, a * d + b), fp.mul(ca, m.at(j, b))));
                }
            }
    }
    return Subspace::span(rows);
}

}  // namespace koszul
