#ifndef KOSZUL_MATRIX_HPP
#define KOSZUL_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "koszul/fp.hpp"

namespace koszul {

/// Dense matrix over F_p, row major. All entries share the modulus.
class FpMatrix {
public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(uint32_t p, size_t rows, size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        Fp check(p);
        (void)check;
    }

    uint32_t modulus() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { data_[r * cols_ + c] = v % p_; }

    const uint32_t* row(size_t r) const { return data_.data() + r * cols_; }
    uint32_t* row(size_t r) { return data_.data() + r * cols_; }

    std::vector<uint32_t> row_vec(size_t r) const {
        return std::vector<uint32_t>(row(r), row(r) + cols_);
    }

    /// m . v for a column vector v.
    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;

    bool operator==(const FpMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

/// Reduced row echelon form and the pivot columns; rank = pivot count.
std::pair<FpMatrix, std::vector<size_t>> rref(const FpMatrix& m);

/// RREF with columns processed in the given order. Pivot columns are reported
/// in original indices, one per surviving row, in elimination order.
std::pair<FpMatrix, std::vector<size_t>> rref_in_column_order(const FpMatrix& m,
                                                              const std::vector<size_t>& col_order);

/// A linear subspace of F_p^n in canonical form: basis rows in RREF, no zero
/// rows. Two subspaces are equal iff their basis matrices are identical.
class Subspace {
public:
    Subspace(uint32_t p, size_t ambient_dim)
        : ambient_(ambient_dim), basis_(p, 0, ambient_dim) {}

    /// Canonicalizes arbitrary spanning rows.
    static Subspace span(const FpMatrix& rows);
    static Subspace full(uint32_t p, size_t ambient_dim);

    uint32_t modulus() const { return basis_.modulus(); }
    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<uint32_t>& v) const;
    bool contains(const Subspace& other) const;

    /// Reduces v modulo the subspace (eliminates pivot coordinates).
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    size_t ambient_;
    FpMatrix basis_;
    std::vector<size_t> pivots_;
};

/// Kernel {v : m v = 0}; dim = cols - rank.
Subspace kernel(const FpMatrix& m);

/// Annihilator under the standard dot-product pairing; dim s + dim result = n,
/// and annihilator(annihilator(s)) = s.
Subspace annihilator(const Subspace& s);

/// Incremental row-space builder kept in reduced echelon form. Rows inserted
/// one at a time; insert returns false when the row was already in the span.
class EchelonBasis {
public:
    EchelonBasis(uint32_t p, size_t cols) : fp_(p), cols_(cols), pivot_of_col_(cols, -1) {}

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }

    /// Pivot row index owning column c, or -1.
    long pivot_row(size_t c) const { return pivot_of_col_[c]; }
    const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }

    bool insert(std::vector<uint32_t> row);
    std::vector<uint32_t> reduce(std::vector<uint32_t> row) const;

    /// Ascending list of non-pivot columns.
    std::vector<size_t> free_cols() const;

private:
    Fp fp_;
    size_t cols_;
    std::vector<std::vector<uint32_t>> rows_;   // reduced, leading coeff 1
    std::vector<size_t> pivot_cols_;            // pivot column of rows_[i]
    std::vector<long> pivot_of_col_;
};

}  // namespace koszul

#endif
