#ifndef KOSZUL_NCPOLY_HPP
#define KOSZUL_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/fp.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

/// Element of F_p<X_1..X_d>: finitely many monomials with coefficients in
/// (0, p). Zero coefficients are never stored. Terms are kept in deglex order
/// for the identity generator ranking.
class NcPoly {
public:
    NcPoly(uint32_t p, size_t d) : p_(p), d_(d) { Fp check(p); (void)check; }

    static NcPoly zero(uint32_t p, size_t d) { return NcPoly(p, d); }
    static NcPoly constant(uint32_t p, size_t d, int64_t c);
    static NcPoly monomial(uint32_t p, size_t d, const MultiIndex& m, int64_t c = 1);
    static NcPoly generator(uint32_t p, size_t d, uint8_t g) { return monomial(p, d, MultiIndex{g}); }

    uint32_t modulus() const { return p_; }
    size_t generators() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const std::map<MultiIndex, uint32_t>& terms() const { return terms_; }
    uint32_t coeff(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const MultiIndex& m, int64_t c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly negate() const;
    NcPoly scale(int64_t c) const;

    bool operator==(const NcPoly& o) const {
        return p_ == o.p_ && d_ == o.d_ && terms_ == o.terms_;
    }

    /// Part of the given total degree.
    NcPoly homogeneous_part(size_t degree) const;
    /// Largest degree among stored terms; 0 for the zero polynomial.
    size_t max_degree() const;
    bool is_homogeneous() const;

    /// Drops all terms of degree > n.
    NcPoly truncated(size_t n) const;

private:
    void check_compatible(const NcPoly& o) const {
        if (p_ != o.p_ || d_ != o.d_)
            fail(ErrorKind::FieldMismatch, "polynomials over different F_p<X> rings");
    }

    uint32_t p_;
    size_t d_;
    std::map<MultiIndex, uint32_t> terms_;
};

/// Order-maximal multiindex of f with its coefficient. Throws EmptyPoly on 0.
std::pair<MultiIndex, FpScalar> leading_monomial(const NcPoly& f, const DeglexOrder& order);

/// Power series in F_p<<X>> truncated at total degree N: arithmetic discards
/// everything above the truncation degree.
class TruncSeries {
public:
    TruncSeries(NcPoly poly, size_t trunc_degree)
        : poly_(poly.truncated(trunc_degree)), n_(trunc_degree) {}
    static TruncSeries one(uint32_t p, size_t d, size_t n) {
        return TruncSeries(NcPoly::constant(p, d, 1), n);
    }

    const NcPoly& poly() const { return poly_; }
    size_t truncation_degree() const { return n_; }

    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries pow(uint64_t e) const;

    bool operator==(const TruncSeries& o) const { return n_ == o.n_ && poly_ == o.poly_; }

private:
    NcPoly poly_;
    size_t n_;
};

/// Multiplicative inverse modulo degree N+1 of a series with constant term 1,
/// via the geometric series in (1 - s). Throws InvalidSeries otherwise.
TruncSeries trunc_inverse(const TruncSeries& s);

/// Text form like "X1*X2 + 2*X2*X1"; labels default to X1..Xd.
std::string render_poly(const NcPoly& f, const std::vector<std::string>& labels = {});
NcPoly parse_poly(const std::string& text, uint32_t p, const std::vector<std::string>& labels);

}  // namespace koszul

#endif
