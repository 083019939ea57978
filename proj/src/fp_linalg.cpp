#include "eqcoho/fp_linalg.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

namespace eqcoho {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= kMaxModulus)
        throw DomainError("modulus " + std::to_string(p) + " exceeds 2^16");
    if (!is_prime(p))
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

Residue PrimeField::inv(Residue a) const
{
    if (a % p_ == 0)
        throw DomainError("zero has no inverse");
    // Extended Euclid.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

// ---------------------------------------------------------------------------
// Dense kernels

namespace {

/// Multiply-shift reduction for x < 2^16 when p < 256.
struct SmallReducer {
    std::uint32_t p;
    std::uint64_t magic;
    explicit SmallReducer(std::uint32_t p_) : p(p_), magic((std::uint64_t{1} << 32) / p_ + 1) {}
    std::uint32_t operator()(std::uint32_t x) const
    {
        auto q = static_cast<std::uint32_t>((x * magic) >> 32);
        return x - q * p;
    }
};

/// dst[j] += f * src[j] for j in [from, to).
void axpy_row(FpMatrix::Entry* dst, const FpMatrix::Entry* src, std::size_t from, std::size_t to,
              std::uint32_t f, std::uint32_t p)
{
    if (p < 256) {
        SmallReducer red(p);
        for (std::size_t j = from; j < to; ++j)
            dst[j] = static_cast<FpMatrix::Entry>(red(dst[j] + f * src[j]));
    }
    else {
        for (std::size_t j = from; j < to; ++j)
            dst[j] = static_cast<FpMatrix::Entry>((dst[j] + std::uint64_t{f} * src[j]) % p);
    }
}

void scale_row(FpMatrix::Entry* row, std::size_t from, std::size_t to, std::uint32_t f, std::uint32_t p)
{
    for (std::size_t j = from; j < to; ++j)
        row[j] = static_cast<FpMatrix::Entry>((std::uint64_t{row[j]} * f) % p);
}

using Word = std::uint64_t;

/// Gaussian elimination over F_2 on bit-packed rows; returns the rank.
std::size_t rank_gf2(const FpMatrix& m)
{
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<Word> bits(m.rows() * words, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (row[c])
                bits[r * words + c / 64] |= Word{1} << (c % 64);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        const std::size_t w = c / 64;
        const Word mask = Word{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < m.rows() && !(bits[pivot * words + w] & mask))
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank)
            std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                             bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                             bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
        const Word* prow = &bits[rank * words];
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            Word* row = &bits[r * words];
            if (row[w] & mask)
                for (std::size_t k = w; k < words; ++k)
                    row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

/// In-place elimination. With `full`, produces the reduced row echelon form
/// (unit pivots, zeros above and below); otherwise only clears below pivots.
std::vector<std::size_t> eliminate(FpMatrix& a, bool full)
{
    const std::uint32_t p = a.p();
    const PrimeField& f = a.field();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a.at(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank) {
            auto x = a.row(pivot), y = a.row(rank);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        FpMatrix::Entry* prow = a.row(rank).data();
        if (full && prow[c] != 1)
            scale_row(prow, c, cols, f.inv(prow[c]), p);
        const Residue pinv = f.inv(prow[c]);
        for (std::size_t r = full ? 0 : rank + 1; r < rows; ++r) {
            if (r == rank)
                continue;
            Residue v = a.at(r, c);
            if (v == 0)
                continue;
            axpy_row(a.row(r).data(), prow, c, cols, f.neg(f.mul(v, pinv)), p);
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : FpMatrix(PrimeField(p), rows, cols) {}

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n)
{
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("ragged rows: row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                 " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c]);
    }
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    std::vector<std::vector<std::int64_t>> v;
    for (auto& r : rows)
        v.emplace_back(r);
    return from_rows(p, v);
}

FpMatrix FpMatrix::from_columns(std::uint32_t p, std::size_t rows, const std::vector<std::vector<Residue>>& cols)
{
    FpMatrix m(p, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m.set(r, c, cols[c][r]);
    }
    return m;
}

std::vector<Residue> FpMatrix::column(std::size_t c) const
{
    std::vector<Residue> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = at(r, c);
    return out;
}

bool FpMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Entry e) { return e == 0; });
}

bool FpMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1u : 0u))
                return false;
    return true;
}

std::size_t FpMatrix::nonzeros() const
{
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Entry e) { return e != 0; }));
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

FpMatrix FpMatrix::scaled(std::int64_t k) const
{
    FpMatrix out(*this);
    const Residue kr = field_.reduce(k);
    for (auto& e : out.data_)
        e = static_cast<Entry>(field_.mul(e, kr));
    return out;
}

FpMatrix FpMatrix::columns(std::size_t first, std::size_t count) const
{
    if (first + count > cols_)
        throw DimensionError("column range out of bounds");
    FpMatrix out(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_ + first), count,
                    out.data_.begin() + static_cast<std::ptrdiff_t>(r * count));
    return out;
}

void FpMatrix::check_same_shape(const FpMatrix& o, const char* op) const
{
    if (!(field_ == o.field_))
        throw DimensionError(std::string(op) + ": modulus mismatch");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError(std::string(op) + ": shape mismatch");
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const
{
    check_same_shape(o, "add");
    FpMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<Entry>(field_.add(data_[i], o.data_[i]));
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const
{
    check_same_shape(o, "subtract");
    FpMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<Entry>(field_.sub(data_[i], o.data_[i]));
    return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const
{
    if (!(field_ == o.field_))
        throw DimensionError("multiply: modulus mismatch");
    if (cols_ != o.rows_)
        throw DimensionError("multiply: inner dimensions differ");
    FpMatrix out(field_, rows_, o.cols_);
    const std::uint32_t p = field_.modulus();
    for (std::size_t r = 0; r < rows_; ++r) {
        Entry* dst = out.data_.data() + r * o.cols_;
        for (std::size_t k = 0; k < cols_; ++k) {
            Residue a = at(r, k);
            if (a != 0)
                axpy_row(dst, o.data_.data() + k * o.cols_, 0, o.cols_, a, p);
        }
    }
    return out;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> v) const
{
    if (v.size() != cols_)
        throw DimensionError("apply: vector length mismatch");
    std::vector<Residue> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc = (acc + std::uint64_t{at(r, c)} * v[c]) % p();
        out[r] = static_cast<Residue>(acc);
    }
    return out;
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b)
{
    if (!(a.field() == b.field()))
        throw DimensionError("hstack: modulus mismatch");
    if (a.rows() != b.rows())
        throw DimensionError("hstack: row counts differ");
    FpMatrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        std::copy(a.row(r).begin(), a.row(r).end(), dst.begin());
        std::copy(b.row(r).begin(), b.row(r).end(), dst.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    }
    return out;
}

FpMatrix block_diagonal(std::span<const FpMatrix> blocks, std::uint32_t p)
{
    std::size_t n = 0;
    for (auto& b : blocks) {
        if (b.p() != p)
            throw DimensionError("block_diagonal: modulus mismatch");
        if (!b.is_square())
            throw ShapeError("block_diagonal: blocks must be square");
        n += b.rows();
    }
    FpMatrix out(p, n, n);
    std::size_t off = 0;
    for (auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.set(off + r, off + c, b.at(r, c));
        off += b.rows();
    }
    return out;
}

std::size_t rank(const FpMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if (m.p() == 2)
        return rank_gf2(m);
    // Eliminate along the shorter dimension.
    FpMatrix work = m.rows() <= m.cols() ? m : m.transpose();
    return eliminate(work, false).size();
}

RowEchelon row_echelon(const FpMatrix& m)
{
    FpMatrix work = m;
    auto pivots = eliminate(work, true);
    return {std::move(work), std::move(pivots)};
}

FpMatrix kernel_basis(const FpMatrix& m)
{
    auto [rref, pivots] = row_echelon(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    FpMatrix basis(f, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.set(fc, k, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.set(pivots[i], k, f.neg(rref.at(i, fc)));
    }
    return basis;
}

FpMatrix image_basis(const FpMatrix& m)
{
    auto pivots = row_echelon(m).pivots;
    FpMatrix out(m.field(), m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r)
            out.set(r, k, m.at(r, pivots[k]));
    return out;
}

bool subspace_leq(const FpMatrix& u, const FpMatrix& v)
{
    if (u.p() != v.p())
        throw DimensionError("subspace_leq: modulus mismatch");
    if (u.rows() != v.rows())
        throw DimensionError("subspace_leq: ambient dimensions differ");
    return rank(v) == rank(hstack(v, u));
}

FpMatrix mat_pow(const FpMatrix& m, std::uint64_t k)
{
    if (!m.is_square())
        throw ShapeError("mat_pow: matrix is not square");
    FpMatrix result = FpMatrix::identity(m.p(), m.rows());
    FpMatrix base = m;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Sparse profile

SparseColumn axpy(const PrimeField& f, const SparseColumn& a, Residue scale, const SparseColumn& b)
{
    SparseColumn out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
            out.push_back(a[i++]);
        }
        else if (i == a.size() || b[j].row < a[i].row) {
            Residue v = f.mul(scale, b[j].value);
            if (v != 0)
                out.push_back({b[j].row, v});
            ++j;
        }
        else {
            Residue v = f.add(a[i].value, f.mul(scale, b[j].value));
            if (v != 0)
                out.push_back({a[i].row, v});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseFpMatrix::SparseFpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols)
{
}

SparseFpMatrix SparseFpMatrix::from_dense(const FpMatrix& m)
{
    SparseFpMatrix s(m.p(), m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (Residue v = m.at(r, c))
                s.cols_[c].push_back({static_cast<std::uint32_t>(r), v});
    return s;
}

FpMatrix SparseFpMatrix::to_dense() const
{
    FpMatrix m(field_, rows_, cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (auto& e : cols_[c])
            m.set(e.row, c, e.value);
    return m;
}

std::size_t SparseFpMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (auto& c : cols_)
        n += c.size();
    return n;
}

void SparseFpMatrix::set_column(std::size_t c, SparseColumn col)
{
    if (c >= cols_.size())
        throw DimensionError("set_column: column out of range");
    std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.row < b.row; });
    SparseColumn clean;
    for (auto& e : col) {
        if (e.row >= rows_)
            throw DimensionError("set_column: row out of range");
        Residue v = field_.reduce(e.value);
        if (!clean.empty() && clean.back().row == e.row) {
            clean.back().value = field_.add(clean.back().value, v);
            if (clean.back().value == 0)
                clean.pop_back();
        }
        else if (v != 0) {
            clean.push_back({e.row, v});
        }
    }
    cols_[c] = std::move(clean);
}

SparseColumn SparseFpMatrix::apply(const SparseColumn& v) const
{
    SparseColumn out;
    for (auto& e : v) {
        if (e.row >= cols_.size())
            throw DimensionError("apply: vector length mismatch");
        out = axpy(field_, out, e.value, cols_[e.row]);
    }
    return out;
}

SparseFpMatrix SparseFpMatrix::operator*(const SparseFpMatrix& o) const
{
    if (!(field_ == o.field_))
        throw DimensionError("multiply: modulus mismatch");
    if (cols_.size() != o.rows_)
        throw DimensionError("multiply: inner dimensions differ");
    SparseFpMatrix out(p(), rows_, o.cols());
    for (std::size_t c = 0; c < o.cols(); ++c)
        out.cols_[c] = apply(o.cols_[c]);
    return out;
}

SparseFpMatrix SparseFpMatrix::transpose() const
{
    SparseFpMatrix t(p(), cols_.size(), rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (auto& e : cols_[c])
            t.cols_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
    return t;
}

std::size_t rank_dense_elimination(const SparseFpMatrix& m) { return rank(m.to_dense()); }

std::size_t rank_sparse_elimination(const SparseFpMatrix& m)
{
    LowEchelon ech(m.field(), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        ech.insert(m.column(c), static_cast<std::uint32_t>(c));
    return ech.size();
}

std::size_t rank(const SparseFpMatrix& m)
{
    if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit)
        return rank_dense_elimination(m);
    return rank_sparse_elimination(m);
}

// ---------------------------------------------------------------------------
// LowEchelon

LowEchelon::LowEchelon(PrimeField field, std::size_t ambient_dim, bool track_combinations)
    : field_(field), track_(track_combinations), pivot_of_row_(ambient_dim, -1)
{
}

LowEchelon::InsertResult LowEchelon::insert(SparseColumn v, std::uint32_t id)
{
    InsertResult result;
    SparseColumn combo;
    if (track_)
        combo.push_back({id, 1});
    v = reduce(std::move(v), [&](std::size_t idx, Residue c) {
        if (track_)
            combo = axpy(field_, combo, field_.neg(c), combos_[idx]);
    });
    if (v.empty()) {
        if (track_)
            result.combination = std::move(combo);
        return result;
    }
    const Residue scale = field_.inv(v.back().value);
    if (scale != 1) {
        for (auto& e : v)
            e.value = field_.mul(e.value, scale);
        if (track_)
            for (auto& e : combo)
                e.value = field_.mul(e.value, scale);
    }
    pivot_of_row_[v.back().row] = static_cast<std::int64_t>(basis_.size());
    stored_nnz_ += v.size();
    result.basis_index = basis_.size();
    basis_.push_back(std::move(v));
    if (track_)
        combos_.push_back(std::move(combo));
    return result;
}

}  // namespace eqcoho

// ---------------------------------------------------------------------------
// Sparse arithmetic

namespace eqcoho {

SparseFpMatrix SparseFpMatrix::identity(std::uint32_t p, std::size_t n)
{
    SparseFpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.cols_[i].push_back({static_cast<std::uint32_t>(i), 1});
    return m;
}

bool SparseFpMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t c = 0; c < cols_.size(); ++c)
        if (cols_[c].size() != 1 || cols_[c][0].row != c || cols_[c][0].value != 1)
            return false;
    return true;
}

SparseFpMatrix SparseFpMatrix::operator+(const SparseFpMatrix& o) const
{
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols() != o.cols())
        throw DimensionError("add: shape or modulus mismatch");
    SparseFpMatrix out(p(), rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
        out.cols_[c] = axpy(field_, cols_[c], 1, o.cols_[c]);
    return out;
}

SparseFpMatrix SparseFpMatrix::operator-(const SparseFpMatrix& o) const
{
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols() != o.cols())
        throw DimensionError("subtract: shape or modulus mismatch");
    SparseFpMatrix out(p(), rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
        out.cols_[c] = axpy(field_, cols_[c], field_.neg(1), o.cols_[c]);
    return out;
}

SparseFpMatrix SparseFpMatrix::scaled(std::int64_t k) const
{
    SparseFpMatrix out(p(), rows_, cols());
    const Residue kr = field_.reduce(k);
    if (kr == 0)
        return out;
    for (std::size_t c = 0; c < cols(); ++c) {
        out.cols_[c] = cols_[c];
        for (auto& e : out.cols_[c])
            e.value = field_.mul(e.value, kr);
    }
    return out;
}

SparseFpMatrix mat_pow(const SparseFpMatrix& m, std::uint64_t k)
{
    if (!m.is_square())
        throw ShapeError("mat_pow: matrix is not square");
    SparseFpMatrix result = SparseFpMatrix::identity(m.p(), m.rows());
    SparseFpMatrix base = m;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

SparseFpMatrix kernel_basis(const SparseFpMatrix& m)
{
    if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit)
        return SparseFpMatrix::from_dense(kernel_basis(m.to_dense()));
    LowEchelon ech(m.field(), m.rows(), true);
    std::vector<SparseColumn> kernel;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto res = ech.insert(m.column(c), static_cast<std::uint32_t>(c));
        if (!res.basis_index)
            kernel.push_back(std::move(res.combination));
    }
    SparseFpMatrix out(m.p(), m.cols(), kernel.size());
    for (std::size_t k = 0; k < kernel.size(); ++k)
        out.set_column(k, std::move(kernel[k]));
    return out;
}

bool subspace_leq(const SparseFpMatrix& u, const SparseFpMatrix& v)
{
    if (u.p() != v.p())
        throw DimensionError("subspace_leq: modulus mismatch");
    if (u.rows() != v.rows())
        throw DimensionError("subspace_leq: ambient dimensions differ");
    if (u.rows() <= kDenseLimit && u.cols() + v.cols() <= kDenseLimit)
        return subspace_leq(u.to_dense(), v.to_dense());
    LowEchelon ech(v.field(), v.rows());
    for (std::size_t c = 0; c < v.cols(); ++c)
        ech.insert(v.column(c));
    for (std::size_t c = 0; c < u.cols(); ++c)
        if (!ech.reduce(u.column(c), [](std::size_t, Residue) {}).empty())
            return false;
    return true;
}

}  // namespace eqcoho
