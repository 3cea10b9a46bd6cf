#include "koszul/pbw.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace koszul {

std::vector<std::pair<uint8_t, uint8_t>> RewritingSystem::leads_sorted() const {
    std::vector<std::pair<uint8_t, uint8_t>> out;
    out.reserve(rules.size());
    for (const auto& [lead, tail] : rules) out.push_back(lead);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return order.less(MultiIndex{a.first, a.second}, MultiIndex{b.first, b.second});
    });
    return out;
}

RewritingSystem normalize_basis(const Subspace& omega, const DeglexOrder& order) {
    size_t d = order.generators();
    if (omega.ambient_dim() != d * d)
        fail(ErrorKind::InvalidArgument, "relator space is not degree 2 over d generators");
    uint32_t p = omega.modulus();

    // column order: descending in the admissible order, so the RREF pivot of
    // each row is its leading monomial
    std::vector<size_t> cols(d * d);
    std::iota(cols.begin(), cols.end(), 0);
    std::sort(cols.begin(), cols.end(), [&](size_t a, size_t b) {
        MultiIndex ma{static_cast<uint8_t>(a / d), static_cast<uint8_t>(a % d)};
        MultiIndex mb{static_cast<uint8_t>(b / d), static_cast<uint8_t>(b % d)};
        return order.less(mb, ma);
    });
    auto [red, pivots] = rref_in_column_order(omega.basis(), cols);

    RewritingSystem sys{p, d, order, {}};
    Fp fp(p);
    for (size_t r = 0; r < pivots.size(); ++r) {
        size_t lead_col = pivots[r];
        auto lead = std::make_pair(static_cast<uint8_t>(lead_col / d),
                                   static_cast<uint8_t>(lead_col % d));
        NcPoly tail(p, d);
        for (size_t c = 0; c < d * d; ++c) {
            if (c == lead_col || red.at(r, c) == 0) continue;
            tail.add_term(MultiIndex{static_cast<uint8_t>(c / d), static_cast<uint8_t>(c % d)},
                          -static_cast<int64_t>(red.at(r, c)));
        }
        sys.rules.emplace(lead, std::move(tail));
    }
    return sys;
}

std::vector<MultiIndex> critical_monomials(const RewritingSystem& r) {
    std::vector<MultiIndex> out;
    for (const auto& [ab, t1] : r.rules)
        for (const auto& [bc, t2] : r.rules)
            if (ab.second == bc.first)
                out.push_back(MultiIndex{ab.first, ab.second, bc.second});
    std::sort(out.begin(), out.end(),
              [&](const MultiIndex& a, const MultiIndex& b) { return r.order.less(a, b); });
    return out;
}

namespace {

// Replace the factor at [pos, pos+2) of monomial m by the rule tail.
NcPoly apply_rule_at(const RewritingSystem& r, const MultiIndex& m, uint32_t coeff, size_t pos,
                     const NcPoly& tail) {
    uint32_t p = r.p;
    NcPoly prefix = NcPoly::monomial(p, r.d, m.slice(0, pos), coeff);
    NcPoly suffix = NcPoly::monomial(p, r.d, m.slice(pos + 2, m.degree() - pos - 2));
    return prefix * tail * suffix;
}

struct Reduction {
    MultiIndex term;
    size_t pos;
};

// Lead occurrences in f: per term, left to right positions.
std::vector<Reduction> reducible_positions(const RewritingSystem& r, const NcPoly& f) {
    std::vector<Reduction> out;
    for (const auto& [m, c] : f.terms()) {
        for (size_t pos = 0; pos + 1 < m.degree(); ++pos)
            if (r.is_lead(m.letters[pos], m.letters[pos + 1])) out.push_back({m, pos});
    }
    return out;
}

std::string poly_key(const NcPoly& f) {
    std::ostringstream os;
    for (const auto& [m, c] : f.terms()) {
        os << c << ':';
        for (uint8_t l : m.letters) os << static_cast<int>(l) << ',';
        os << ';';
    }
    return os.str();
}

}  // namespace

std::pair<NcPoly, RewriteGraph> rewrite(const RewritingSystem& r, const NcPoly& f,
                                        size_t max_steps) {
    RewriteGraph g;
    g.vertices.push_back(f);
    NcPoly cur = f;
    size_t steps = 0;
    for (;;) {
        // order-greatest reducible term, then leftmost occurrence
        const MultiIndex* best = nullptr;
        size_t best_pos = 0;
        for (const auto& [m, c] : cur.terms()) {
            size_t pos = m.degree();
            for (size_t k = 0; k + 1 < m.degree(); ++k)
                if (r.is_lead(m.letters[k], m.letters[k + 1])) { pos = k; break; }
            if (pos == m.degree()) continue;
            if (!best || r.order.less(*best, m)) {
                best = &m;
                best_pos = pos;
            }
        }
        if (!best) break;
        if (++steps > max_steps)
            fail(ErrorKind::StepBudgetExceeded, "rewriting exceeded step budget");
        MultiIndex mon = *best;
        uint32_t coeff = cur.coeff(mon);
        const NcPoly& tail = r.rules.at({mon.letters[best_pos], mon.letters[best_pos + 1]});
        NcPoly replaced = apply_rule_at(r, mon, coeff, best_pos, tail);
        cur = (cur - NcPoly::monomial(r.p, r.d, mon, coeff)) + replaced;
        g.edges.emplace_back(g.vertices.size() - 1, g.vertices.size());
        g.vertices.push_back(cur);
    }
    g.terminals.push_back(g.vertices.size() - 1);
    return {cur, g};
}

RewriteGraph explore_rewrites(const RewritingSystem& r, const NcPoly& f, size_t max_steps) {
    RewriteGraph g;
    std::map<std::string, size_t> index;
    std::deque<size_t> queue;
    g.vertices.push_back(f);
    index[poly_key(f)] = 0;
    queue.push_back(0);
    size_t steps = 0;

    while (!queue.empty()) {
        size_t vi = queue.front();
        queue.pop_front();
        NcPoly cur = g.vertices[vi];
        auto reds = reducible_positions(r, cur);
        if (reds.empty()) {
            g.terminals.push_back(vi);
            continue;
        }
        for (const auto& red : reds) {
            if (++steps > max_steps)
                fail(ErrorKind::StepBudgetExceeded, "rewriting graph exceeded step budget");
            uint32_t coeff = cur.coeff(red.term);
            const NcPoly& tail = r.rules.at({red.term.letters[red.pos], red.term.letters[red.pos + 1]});
            NcPoly next = (cur - NcPoly::monomial(r.p, r.d, red.term, coeff)) +
                          apply_rule_at(r, red.term, coeff, red.pos, tail);
            auto key = poly_key(next);
            auto it = index.find(key);
            size_t ni;
            if (it == index.end()) {
                ni = g.vertices.size();
                g.vertices.push_back(next);
                index.emplace(std::move(key), ni);
                queue.push_back(ni);
            } else {
                ni = it->second;
            }
            g.edges.emplace_back(vi, ni);
        }
    }
    std::sort(g.terminals.begin(), g.terminals.end());
    return g;
}

ConfluenceResult is_confluent(const RewritingSystem& r) {
    ConfluenceResult res;
    PbwCertificate cert{r.order, r, {}};
    for (const auto& mon : critical_monomials(r)) {
        RewriteGraph g = explore_rewrites(r, NcPoly::monomial(r.p, r.d, mon));
        if (g.terminals.size() != 1) {
            ConfluenceCounterexample cex;
            cex.monomial = mon;
            for (size_t t : g.terminals) cex.normal_forms.push_back(g.vertices[t]);
            res.confluent = false;
            res.counterexample = std::move(cex);
            return res;
        }
        cert.criticals.push_back({mon, std::move(g)});
    }
    res.confluent = true;
    res.certificate = std::move(cert);
    return res;
}

namespace {

uint64_t algebra_fingerprint(const QuadraticAlgebra& a) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(a.modulus());
    mix(a.generator_count());
    const auto& b = a.relators().basis();
    for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) mix(b.at(r, c) + 0x9e3779b9ull * c);
    return h;
}

uint64_t splitmix(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::optional<PbwCertificate> pbw_search(const QuadraticAlgebra& a, size_t budget,
                                         std::optional<uint64_t> seed) {
    size_t d = a.generator_count();
    uint64_t factorial = 1;
    bool overflow = false;
    for (size_t k = 2; k <= d; ++k) {
        factorial *= k;
        if (factorial > budget) { overflow = true; break; }
    }

    auto try_perm = [&](const std::vector<uint8_t>& perm) -> std::optional<PbwCertificate> {
        DeglexOrder order = DeglexOrder::from_permutation(perm);
        auto sys = normalize_basis(a.relators(), order);
        auto res = is_confluent(sys);
        if (res.confluent) return std::move(res.certificate);
        return std::nullopt;
    };

    std::vector<uint8_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    if (!overflow) {
        do {
            if (auto cert = try_perm(perm)) return cert;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    }

    uint64_t state = seed.value_or(algebra_fingerprint(a));
    for (size_t trial = 0; trial < budget; ++trial) {
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t k = d; k > 1; --k) std::swap(perm[k - 1], perm[splitmix(state) % k]);
        if (auto cert = try_perm(perm)) return cert;
    }
    return std::nullopt;
}

long normal_word_count(const RewritingSystem& r, size_t n) {
    if (n == 0) return 1;
    size_t d = r.d;
    std::vector<long> cur(d, 1);  // words of length 1 ending at each letter
    for (size_t len = 2; len <= n; ++len) {
        std::vector<long> next(d, 0);
        for (size_t k = 0; k < d; ++k)
            for (size_t j = 0; j < d; ++j)
                if (!r.is_lead(static_cast<uint8_t>(j), static_cast<uint8_t>(k)))
                    next[k] += cur[j];
        cur = std::move(next);
    }
    return std::accumulate(cur.begin(), cur.end(), 0L);
}

std::string render_certificate(const PbwCertificate& cert, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "order:";
    for (uint8_t g : cert.order.permutation())
        os << ' ' << (g < labels.size() ? labels[g] : "X" + std::to_string(g + 1));
    os << '\n';
    for (const auto& lead : cert.system.leads_sorted()) {
        NcPoly lm = NcPoly::monomial(cert.system.p, cert.system.d,
                                     MultiIndex{lead.first, lead.second});
        os << "rule: " << render_poly(lm, labels) << " -> "
           << render_poly(cert.system.rules.at(lead), labels) << '\n';
    }
    for (const auto& cr : cert.criticals) {
        os << "critical: "
           << render_poly(NcPoly::monomial(cert.system.p, cert.system.d, cr.monomial), labels)
           << '\n';
        for (size_t v = 0; v < cr.graph.vertices.size(); ++v)
            os << "  vertex " << v << ": " << render_poly(cr.graph.vertices[v], labels) << '\n';
        for (const auto& [from, to] : cr.graph.edges)
            os << "  edge " << from << " -> " << to << '\n';
        os << "  terminal: " << cr.graph.terminals.front() << '\n';
    }
    return os.str();
}

}  // namespace koszul
