#include "koszul/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace koszul {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::InvalidSeries: return "InvalidSeries";
        case ErrorKind::EmptyPoly: return "EmptyPoly";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NoDistinguishedElement: return "NoDistinguishedElement";
        case ErrorKind::InvalidDemushkinParams: return "InvalidDemushkinParams";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::NotInFrattini: return "NotInFrattini";
        case ErrorKind::TruncationTooLow: return "TruncationTooLow";
        case ErrorKind::NotAPGroup: return "NotAPGroup";
    }
    return "Error";
}

std::vector<uint32_t> FpMatrix::apply(const std::vector<uint32_t>& v) const {
    if (v.size() != cols_) fail(ErrorKind::InvalidArgument, "matrix/vector size mismatch");
    Fp fp(p_);
    std::vector<uint32_t> out(rows_, 0);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const uint32_t* rp = row(r);
        for (size_t c = 0; c < cols_; ++c) {
            acc += static_cast<uint64_t>(rp[c]) * v[c];
            if (acc >= (uint64_t(1) << 62)) acc %= p_;
        }
        out[r] = static_cast<uint32_t>(acc % p_);
    }
    return out;
}

namespace {

// In-place subtract c * src from dst.
void axpy_sub(const Fp& fp, std::vector<uint32_t>& dst, const std::vector<uint32_t>& src, uint32_t c) {
    if (c == 0) return;
    uint32_t p = fp.modulus();
    uint32_t minus_c = p - c;
    for (size_t i = 0; i < dst.size(); ++i) {
        if (src[i])
            dst[i] = static_cast<uint32_t>((dst[i] + static_cast<uint64_t>(minus_c) * src[i]) % p);
    }
}

// Bit-packed GF(2) elimination: each row is a word array, column c at bit c%64
// of word c/64. Matters when degree-n components have d^n coordinates.
std::pair<FpMatrix, std::vector<size_t>> rref2(const FpMatrix& m, const std::vector<size_t>& col_order) {
    size_t rows = m.rows(), cols = m.cols();
    size_t words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> bits(rows, std::vector<uint64_t>(words, 0));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (m.at(r, c)) bits[r][c / 64] |= uint64_t(1) << (c % 64);

    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t oc = 0; oc < cols && next_row < rows; ++oc) {
        size_t c = col_order[oc];
        uint64_t mask = uint64_t(1) << (c % 64);
        size_t w = c / 64;
        size_t pivot = rows;
        for (size_t r = next_row; r < rows; ++r)
            if (bits[r][w] & mask) { pivot = r; break; }
        if (pivot == rows) continue;
        std::swap(bits[pivot], bits[next_row]);
        for (size_t r = 0; r < rows; ++r) {
            if (r != next_row && (bits[r][w] & mask)) {
                for (size_t k = 0; k < words; ++k) bits[r][k] ^= bits[next_row][k];
            }
        }
        pivots.push_back(c);
        ++next_row;
    }
    FpMatrix out(2, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (bits[r][c / 64] >> (c % 64) & 1) out.set(r, c, 1);
    return {out, pivots};
}

}  // namespace

std::pair<FpMatrix, std::vector<size_t>> rref_in_column_order(const FpMatrix& m,
                                                              const std::vector<size_t>& col_order) {
    if (col_order.size() != m.cols()) fail(ErrorKind::InvalidArgument, "column order size mismatch");
    if (m.modulus() == 2) return rref2(m, col_order);

    Fp fp(m.modulus());
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<uint32_t>> work(rows);
    for (size_t r = 0; r < rows; ++r) work[r] = m.row_vec(r);

    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t oc = 0; oc < cols && next_row < rows; ++oc) {
        size_t c = col_order[oc];
        size_t pivot = rows;
        for (size_t r = next_row; r < rows; ++r)
            if (work[r][c] != 0) { pivot = r; break; }
        if (pivot == rows) continue;
        std::swap(work[pivot], work[next_row]);
        uint32_t inv = fp.inv(work[next_row][c]);
        if (inv != 1)
            for (auto& x : work[next_row]) x = fp.mul(x, inv);
        for (size_t r = 0; r < rows; ++r)
            if (r != next_row && work[r][c] != 0) axpy_sub(fp, work[r], work[next_row], work[r][c]);
        pivots.push_back(c);
        ++next_row;
    }
    FpMatrix out(m.modulus(), rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) out.set(r, c, work[r][c]);
    return {out, pivots};
}

std::pair<FpMatrix, std::vector<size_t>> rref(const FpMatrix& m) {
    std::vector<size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    return rref_in_column_order(m, order);
}

Subspace Subspace::span(const FpMatrix& rows) {
    auto [red, piv] = rref(rows);
    Subspace s(rows.modulus(), rows.cols());
    FpMatrix basis(rows.modulus(), piv.size(), rows.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (size_t c = 0; c < rows.cols(); ++c) basis.set(r, c, red.at(r, c));
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(piv);
    return s;
}

Subspace Subspace::full(uint32_t p, size_t n) {
    FpMatrix id(p, n, n);
    for (size_t i = 0; i < n; ++i) id.set(i, i, 1);
    return span(id);
}

std::vector<uint32_t> Subspace::reduce(std::vector<uint32_t> v) const {
    if (v.size() != ambient_) fail(ErrorKind::InvalidArgument, "vector/ambient size mismatch");
    Fp fp(modulus());
    for (size_t r = 0; r < basis_.rows(); ++r) {
        uint32_t c = v[pivots_[r]];
        if (c != 0) {
            const uint32_t* src = basis_.row(r);
            uint32_t p = fp.modulus(), minus_c = p - c;
            for (size_t i = 0; i < ambient_; ++i)
                if (src[i]) v[i] = static_cast<uint32_t>((v[i] + static_cast<uint64_t>(minus_c) * src[i]) % p);
        }
    }
    return v;
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row_vec(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || modulus() != other.modulus())
        fail(ErrorKind::InvalidArgument, "subspace sum: ambient mismatch");
    FpMatrix all(modulus(), dim() + other.dim(), ambient_);
    for (size_t r = 0; r < dim(); ++r)
        for (size_t c = 0; c < ambient_; ++c) all.set(r, c, basis_.at(r, c));
    for (size_t r = 0; r < other.dim(); ++r)
        for (size_t c = 0; c < ambient_; ++c) all.set(dim() + r, c, other.basis_.at(r, c));
    return span(all);
}

Subspace kernel(const FpMatrix& m) {
    auto [red, piv] = rref(m);
    Fp fp(m.modulus());
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : piv) is_pivot[c] = true;

    FpMatrix gens(m.modulus(), n - piv.size(), n);
    size_t row = 0;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        gens.set(row, f, 1);
        for (size_t r = 0; r < piv.size(); ++r) gens.set(row, piv[r], fp.neg(red.at(r, f)));
        ++row;
    }
    return Subspace::span(gens);
}

Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.modulus(), s.ambient_dim());
    return kernel(s.basis());
}

bool EchelonBasis::insert(std::vector<uint32_t> row) {
    row = reduce(std::move(row));
    size_t lead = cols_;
    for (size_t c = 0; c < cols_; ++c)
        if (row[c] != 0) { lead = c; break; }
    if (lead == cols_) return false;

    uint32_t inv = fp_.inv(row[lead]);
    if (inv != 1)
        for (auto& x : row) x = fp_.mul(x, inv);
    for (auto& existing : rows_) axpy_sub(fp_, existing, row, existing[lead]);
    pivot_of_col_[lead] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    pivot_cols_.push_back(lead);
    return true;
}

std::vector<uint32_t> EchelonBasis::reduce(std::vector<uint32_t> row) const {
    if (row.size() != cols_) fail(ErrorKind::InvalidArgument, "row size mismatch");
    for (size_t c = 0; c < cols_; ++c) {
        if (row[c] != 0 && pivot_of_col_[c] >= 0)
            axpy_sub(fp_, row, rows_[pivot_of_col_[c]], row[c]);
    }
    return row;
}

std::vector<size_t> EchelonBasis::free_cols() const {
    std::vector<size_t> out;
    for (size_t c = 0; c < cols_; ++c)
        if (pivot_of_col_[c] < 0) out.push_back(c);
    return out;
}

}  // namespace koszul
