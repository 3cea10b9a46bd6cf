#include "koszul/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace koszul {

NcPoly NcPoly::constant(uint32_t p, size_t d, int64_t c) {
    NcPoly f(p, d);
    f.add_term(MultiIndex{}, c);
    return f;
}

NcPoly NcPoly::monomial(uint32_t p, size_t d, const MultiIndex& m, int64_t c) {
    for (uint8_t l : m.letters)
        if (l >= d) fail(ErrorKind::InvalidArgument, "generator index out of range");
    NcPoly f(p, d);
    f.add_term(m, c);
    return f;
}

void NcPoly::add_term(const MultiIndex& m, int64_t c) {
    Fp fp(p_);
    uint32_t cv = fp.reduce(c);
    if (cv == 0) return;
    auto [it, inserted] = terms_.emplace(m, cv);
    if (!inserted) {
        it->second = fp.add(it->second, cv);
        if (it->second == 0) terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    check_compatible(o);
    NcPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    check_compatible(o);
    NcPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -static_cast<int64_t>(c));
    return out;
}

NcPoly NcPoly::negate() const {
    NcPoly out(p_, d_);
    Fp fp(p_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, fp.neg(c));
    return out;
}

NcPoly NcPoly::scale(int64_t c) const {
    Fp fp(p_);
    uint32_t cv = fp.reduce(c);
    NcPoly out(p_, d_);
    if (cv == 0) return out;
    for (const auto& [m, co] : terms_) {
        uint32_t v = fp.mul(co, cv);
        if (v) out.terms_.emplace(m, v);
    }
    return out;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    check_compatible(o);
    NcPoly out(p_, d_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(ma.concat(mb), static_cast<int64_t>(ca) * cb);
    return out;
}

NcPoly NcPoly::homogeneous_part(size_t degree) const {
    NcPoly out(p_, d_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
}

size_t NcPoly::max_degree() const {
    size_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
    return deg;
}

bool NcPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    size_t deg = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree() == deg; });
}

NcPoly NcPoly::truncated(size_t n) const {
    NcPoly out(p_, d_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= n) out.terms_.emplace(m, c);
    return out;
}

std::pair<MultiIndex, FpScalar> leading_monomial(const NcPoly& f, const DeglexOrder& order) {
    if (f.is_zero()) fail(ErrorKind::EmptyPoly, "leading monomial of 0");
    const MultiIndex* best = nullptr;
    uint32_t best_c = 0;
    for (const auto& [m, c] : f.terms()) {
        if (!best || order.less(*best, m)) {
            best = &m;
            best_c = c;
        }
    }
    return {*best, FpScalar(best_c, f.modulus())};
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (n_ != o.n_) fail(ErrorKind::InvalidArgument, "truncation degree mismatch");
    NcPoly out(poly_.modulus(), poly_.generators());
    for (const auto& [ma, ca] : poly_.terms())
        for (const auto& [mb, cb] : o.poly_.terms()) {
            if (ma.degree() + mb.degree() > n_) continue;
            out.add_term(ma.concat(mb), static_cast<int64_t>(ca) * cb);
        }
    return TruncSeries(out, n_);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (n_ != o.n_) fail(ErrorKind::InvalidArgument, "truncation degree mismatch");
    return TruncSeries(poly_ + o.poly_, n_);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    if (n_ != o.n_) fail(ErrorKind::InvalidArgument, "truncation degree mismatch");
    return TruncSeries(poly_ - o.poly_, n_);
}

TruncSeries TruncSeries::pow(uint64_t e) const {
    TruncSeries r = TruncSeries::one(poly_.modulus(), poly_.generators(), n_);
    TruncSeries base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

TruncSeries trunc_inverse(const TruncSeries& s) {
    if (s.poly().coeff(MultiIndex{}) != 1)
        fail(ErrorKind::InvalidSeries, "series inverse needs constant term 1");
    uint32_t p = s.poly().modulus();
    size_t d = s.poly().generators(), n = s.truncation_degree();
    TruncSeries u = TruncSeries(NcPoly::constant(p, d, 1), n) - s;  // u = 1 - s, ord >= 1
    // sum_{k<=N} u^k by Horner
    TruncSeries inv = TruncSeries::one(p, d, n);
    for (size_t k = 0; k < n; ++k) inv = TruncSeries::one(p, d, n) + u * inv;
    return inv;
}

namespace {

std::string default_label(size_t i) { return "X" + std::to_string(i + 1); }

}  // namespace

std::string render_poly(const NcPoly& f, const std::vector<std::string>& labels) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) out << " + ";
        first = false;
        if (c != 1 || m.empty()) {
            out << c;
            if (!m.empty()) out << "*";
        }
        for (size_t i = 0; i < m.degree(); ++i) {
            if (i) out << "*";
            uint8_t g = m.letters[i];
            out << (g < labels.size() ? labels[g] : default_label(g));
        }
    }
    return out.str();
}

NcPoly parse_poly(const std::string& text, uint32_t p, const std::vector<std::string>& labels) {
    size_t d = labels.size();
    NcPoly out(p, d);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };

    // Labels may contain '*' and '.' (dual and side-tagged names), so factor
    // tokens are matched against the label set, longest match first.
    auto match_label = [&]() -> long {
        long best = -1;
        size_t best_len = 0;
        for (size_t g = 0; g < d; ++g) {
            const std::string& l = labels[g];
            if (l.size() > best_len && text.compare(i, l.size(), l) == 0) {
                best = static_cast<long>(g);
                best_len = l.size();
            }
        }
        if (best >= 0) i += best_len;
        return best;
    };

    skip_ws();
    if (text.compare(i, std::string::npos, "0") == 0) return out;

    int64_t sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+') { sign = 1; ++i; skip_ws(); }
        else if (text[i] == '-') { sign = -1; ++i; skip_ws(); }

        int64_t coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coeff = coeff * 10 + (text[i++] - '0');
            saw_coeff = true;
        }
        MultiIndex m;
        skip_ws();
        bool expect_factor = false;
        while (i < text.size() && (expect_factor || (text[i] != '+' && text[i] != '-'))) {
            if (text[i] == '*' && !expect_factor && (saw_coeff || !m.empty())) {
                // separator only when a factor can follow; else it belongs to a label
                size_t save = i;
                ++i;
                skip_ws();
                expect_factor = true;
                if (i >= text.size()) { i = save; break; }
                continue;
            }
            long g = match_label();
            if (g < 0) {
                if (expect_factor) fail(ErrorKind::FormatError, "expected generator at offset " + std::to_string(i));
                break;
            }
            m.letters.push_back(static_cast<uint8_t>(g));
            expect_factor = false;
            skip_ws();
        }
        if (m.empty() && !saw_coeff) fail(ErrorKind::FormatError, "empty term in polynomial");
        out.add_term(m, sign * coeff);
        sign = 1;
    }
    return out;
}

}  // namespace koszul
