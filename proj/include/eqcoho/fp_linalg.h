#pragma once

// Exact linear algebra over the prime field F_p.
//
// FpMatrix is the dense profile (row-major), SparseFpMatrix the sparse one
// (column-major, sorted rows, no stored zeros). The modulus lives in the
// matrix, not in the scalar type: entries are plain residues in [0, p).
// Elimination always picks the first usable pivot, so every basis returned
// here is reproducible.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "eqcoho/errors.h"

namespace eqcoho {

using Residue = std::uint32_t;

/// Prime modulus with residue arithmetic. Primality is checked by trial division.
class PrimeField {
public:
    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Residue reduce(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const { return (a + b) % p_; }
    Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
    Residue mul(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} * b) % p_); }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue inv(Residue a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class SparseFpMatrix;

class FpMatrix {
public:
    using Entry = std::uint16_t;

    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    static FpMatrix identity(std::uint32_t p, std::size_t n);
    /// Rows of integers, reduced mod p. All rows must have equal length.
    static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
    static FpMatrix from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    /// Column vectors, each of length `rows`.
    static FpMatrix from_columns(std::uint32_t p, std::size_t rows, const std::vector<std::vector<Residue>>& cols);

    const PrimeField& field() const { return field_; }
    std::uint32_t p() const { return field_.modulus(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = static_cast<Entry>(field_.reduce(v)); }
    std::span<const Entry> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Entry> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<Residue> column(std::size_t c) const;

    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;

    FpMatrix transpose() const;
    FpMatrix scaled(std::int64_t k) const;
    /// Columns [first, first + count).
    FpMatrix columns(std::size_t first, std::size_t count) const;

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    std::vector<Residue> apply(std::span<const Residue> v) const;

    bool operator==(const FpMatrix& o) const = default;

private:
    void check_same_shape(const FpMatrix& o, const char* op) const;

    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> data_;
};

/// [A | B]
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
/// Block-diagonal matrix; all blocks share the modulus.
FpMatrix block_diagonal(std::span<const FpMatrix> blocks, std::uint32_t p);

std::size_t rank(const FpMatrix& m);
/// Columns form the null-space basis read off the reduced row echelon form,
/// one vector per free column in increasing order.
FpMatrix kernel_basis(const FpMatrix& m);
/// Pivot columns of m (a basis of its column space, in column order).
FpMatrix image_basis(const FpMatrix& m);
/// Reduced row echelon form and its pivot columns.
struct RowEchelon {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const FpMatrix& m);

/// Column span of u is contained in the column span of v.
bool subspace_leq(const FpMatrix& u, const FpMatrix& v);
FpMatrix mat_pow(const FpMatrix& m, std::uint64_t k);

// ---------------------------------------------------------------------------
// Sparse profile

struct SparseEntry {
    std::uint32_t row;
    Residue value;
    bool operator==(const SparseEntry&) const = default;
};
using SparseColumn = std::vector<SparseEntry>;

/// out = a + scale * b over the field. Inputs sorted by row, output sorted.
SparseColumn axpy(const PrimeField& f, const SparseColumn& a, Residue scale, const SparseColumn& b);

class SparseFpMatrix {
public:
    SparseFpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static SparseFpMatrix from_dense(const FpMatrix& m);
    static SparseFpMatrix identity(std::uint32_t p, std::size_t n);
    FpMatrix to_dense() const;

    const PrimeField& field() const { return field_; }
    std::uint32_t p() const { return field_.modulus(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    std::size_t nonzeros() const;

    const SparseColumn& column(std::size_t c) const { return cols_[c]; }
    /// Replaces column c; entries are sorted, reduced, and zeros dropped.
    void set_column(std::size_t c, SparseColumn col);

    bool is_square() const { return rows_ == cols_.size(); }
    bool is_zero() const { return nonzeros() == 0; }
    bool is_identity() const;

    SparseColumn apply(const SparseColumn& v) const;
    SparseFpMatrix operator*(const SparseFpMatrix& o) const;
    SparseFpMatrix operator+(const SparseFpMatrix& o) const;
    SparseFpMatrix operator-(const SparseFpMatrix& o) const;
    SparseFpMatrix scaled(std::int64_t k) const;
    SparseFpMatrix transpose() const;

    bool operator==(const SparseFpMatrix& o) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::vector<SparseColumn> cols_;
};

/// Dense path for small inputs, pivot-by-lowest-row column reduction above
/// kDenseLimit in either dimension.
std::size_t rank(const SparseFpMatrix& m);
std::size_t rank_sparse_elimination(const SparseFpMatrix& m);
std::size_t rank_dense_elimination(const SparseFpMatrix& m);

inline constexpr std::size_t kDenseLimit = 512;

SparseFpMatrix mat_pow(const SparseFpMatrix& m, std::uint64_t k);
/// Dense profile (reduced echelon null space) up to kDenseLimit; above it the
/// kernel comes from column reduction with recorded combinations.
SparseFpMatrix kernel_basis(const SparseFpMatrix& m);
bool subspace_leq(const SparseFpMatrix& u, const SparseFpMatrix& v);

/// Incrementally built echelon basis keyed by the lowest (largest-row) nonzero
/// of each stored vector. Optionally records each stored vector as a
/// combination of the inserted inputs, which turns column reduction into a
/// kernel computation.
class LowEchelon {
public:
    LowEchelon(PrimeField field, std::size_t ambient_dim, bool track_combinations = false);

    struct InsertResult {
        std::optional<std::size_t> basis_index;  ///< set when the input was independent
        SparseColumn combination;                ///< input-index combination that reduces to zero (tracking only)
    };

    /// Reduces `v` (input index `id`) against the stored basis. Independent
    /// inputs are normalised to a unit low entry and stored.
    InsertResult insert(SparseColumn v, std::uint32_t id = 0);

    /// Reduces v to zero or to a vector whose low is not a stored pivot.
    /// `on_step(basis_index, coefficient)` sees each subtraction v -= c * basis[i].
    template <class F>
    SparseColumn reduce(SparseColumn v, F&& on_step) const
    {
        while (!v.empty()) {
            auto low = v.back();
            auto idx = pivot_of_row_[low.row];
            if (idx < 0)
                break;
            on_step(static_cast<std::size_t>(idx), low.value);
            v = axpy(field_, v, field_.neg(low.value), basis_[static_cast<std::size_t>(idx)]);
        }
        return v;
    }

    std::size_t size() const { return basis_.size(); }
    const SparseColumn& basis(std::size_t i) const { return basis_[i]; }
    std::optional<std::size_t> pivot_of_row(std::uint32_t row) const
    {
        auto idx = pivot_of_row_[row];
        return idx < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(idx));
    }
    std::size_t stored_nonzeros() const { return stored_nnz_; }

private:
    PrimeField field_;
    bool track_;
    std::vector<SparseColumn> basis_;
    std::vector<SparseColumn> combos_;
    std::vector<std::int64_t> pivot_of_row_;
    std::size_t stored_nnz_ = 0;
};

}  // namespace eqcoho
