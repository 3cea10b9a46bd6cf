#include "koszul/magnus.hpp"

#include <algorithm>

namespace koszul {

std::vector<std::string> GroupPresentation::default_labels(size_t d) {
    std::vector<std::string> out;
    out.reserve(d);
    for (size_t i = 0; i < d; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

namespace {

void check_series_budget(size_t d, size_t n, long budget) {
    double raw = 1;
    for (size_t k = 0; k < n; ++k) {
        raw *= static_cast<double>(d);
        if (raw > static_cast<double>(budget))
            fail(ErrorKind::BudgetExceeded, "series truncation degree exceeds monomial budget");
    }
}

TruncSeries expand(const GroupWord& w, uint32_t p, size_t d, size_t n) {
    switch (w.kind()) {
        case GroupWord::Kind::Gen: {
            NcPoly f = NcPoly::constant(p, d, 1);
            f.add_term(MultiIndex{static_cast<uint8_t>(w.gen_index())}, 1);
            return TruncSeries(f, n);
        }
        case GroupWord::Kind::Inverse:
            return trunc_inverse(expand(w.children()[0], p, d, n));
        case GroupWord::Kind::Power: {
            TruncSeries base = expand(w.children()[0], p, d, n);
            long long e = w.exponent();
            if (e < 0) return trunc_inverse(base).pow(static_cast<uint64_t>(-e));
            return base.pow(static_cast<uint64_t>(e));
        }
        case GroupWord::Kind::Commutator: {
            TruncSeries a = expand(w.children()[0], p, d, n);
            TruncSeries b = expand(w.children()[1], p, d, n);
            return trunc_inverse(a) * trunc_inverse(b) * a * b;
        }
        case GroupWord::Kind::Product: {
            TruncSeries r = TruncSeries::one(p, d, n);
            for (const auto& c : w.children()) r = r * expand(c, p, d, n);
            return r;
        }
    }
    fail(ErrorKind::InternalInconsistency, "unreachable word kind");
}

}  // namespace

TruncSeries magnus_expand(const GroupWord& w, uint32_t p, size_t d, size_t n, long budget) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "truncation degree must be >= 1");
    check_series_budget(d, n, budget);
    return expand(w, p, d, n);
}

InitialForm initial_form(const GroupWord& w, uint32_t p, size_t d, size_t n, long budget) {
    TruncSeries s = magnus_expand(w, p, d, n, budget);
    NcPoly reduced = s.poly() - NcPoly::constant(p, d, 1);
    for (size_t deg = 1; deg <= n; ++deg) {
        NcPoly part = reduced.homogeneous_part(deg);
        if (!part.is_zero()) return {deg, part};
    }
    fail(ErrorKind::TruncationTooLow,
         "word expands to 1 through degree " + std::to_string(n) + "; raise N or the word is trivial");
}

bool is_quadratic_presentation(const GroupPresentation& g, size_t n) {
    for (const auto& r : g.relators)
        if (initial_form(r, g.p, g.generator_count(), n).degree != 2) return false;
    return true;
}

RelatorDecomposition relator_mod_s3(const GroupWord& w, uint32_t p, size_t d) {
    TruncSeries s = magnus_expand(w, p, d, 2);
    NcPoly reduced = s.poly() - NcPoly::constant(p, d, 1);
    if (!reduced.homogeneous_part(1).is_zero())
        fail(ErrorKind::NotInFrattini, "relator has nonzero degree-1 Magnus part");
    NcPoly deg2 = reduced.homogeneous_part(2);

    RelatorDecomposition out{std::nullopt, FpMatrix(p, d, d)};
    if (p == 2) {
        std::vector<uint32_t> a(d, 0);
        for (size_t i = 0; i < d; ++i)
            a[i] = deg2.coeff(MultiIndex{static_cast<uint8_t>(i), static_cast<uint8_t>(i)});
        out.a = std::move(a);
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            out.b.set(i, j, deg2.coeff(MultiIndex{static_cast<uint8_t>(i), static_cast<uint8_t>(j)}));
    return out;
}

FpScalar pairing_value(const GroupWord& w, size_t k, size_t l, uint32_t p, size_t d) {
    if (k >= d || l >= d) fail(ErrorKind::InvalidArgument, "pairing index out of range");
    RelatorDecomposition dec = relator_mod_s3(w, p, d);
    Fp fp(p);
    if (k < l) return FpScalar(fp.neg(dec.b.at(k, l)), p);
    if (k > l) return FpScalar(dec.b.at(l, k), p);
    if (p == 2) return FpScalar((*dec.a)[k], p);
    return FpScalar(0, p);  // -C(p,2) a_k = 0 mod p for odd p
}

GradedAlgebraCandidate graded_algebra_candidate(const GroupPresentation& g, size_t n, long budget) {
    uint32_t p = g.p;
    size_t d = g.generator_count();
    std::vector<InitialForm> forms;
    forms.reserve(g.relators.size());
    for (const auto& r : g.relators) forms.push_back(initial_form(r, p, d, n, budget));

    std::vector<NcPoly> polys;
    polys.reserve(forms.size());
    bool all_quadratic = true;
    for (const auto& f : forms) {
        polys.push_back(f.poly);
        if (f.degree != 2) all_quadratic = false;
    }

    std::optional<QuadraticAlgebra> quad;
    if (all_quadratic)
        quad = QuadraticAlgebra::from_relator_polys(p, GroupPresentation::default_labels(d), polys);

    return {std::move(forms), std::move(quad), GradedQuotient(p, d, std::move(polys), budget)};
}

bool strongly_free_check(const std::vector<InitialForm>& forms, uint32_t p, size_t d, size_t n_max,
                         long budget) {
    // target expansion of 1/(1 - d z + sum z^{s_i})
    std::vector<long long> target(n_max + 1, 0);
    target[0] = 1;
    for (size_t n = 1; n <= n_max; ++n) {
        long long v = static_cast<long long>(d) * target[n - 1];
        for (const auto& f : forms)
            if (f.degree <= n) v -= target[n - f.degree];
        target[n] = v;
    }

    std::vector<NcPoly> polys;
    polys.reserve(forms.size());
    for (const auto& f : forms) polys.push_back(f.poly);
    GradedQuotient q(p, d, std::move(polys), budget);
    for (size_t n = 0; n <= n_max; ++n)
        if (q.dim(n) != target[n]) return false;
    return true;
}

}  // namespace koszul
