#include <doctest.h>

#include <random>

#include "eqcoho/errors.h"
#include "eqcoho/fp_linalg.h"
#include "oracles.h"

using namespace eqcoho;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t rows, std::size_t cols, double density)
{
    FpMatrix m(p, rows, cols);
    std::bernoulli_distribution nz(density);
    std::uniform_int_distribution<std::int64_t> val(1, p - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (nz(rng))
                m.set(i, j, val(rng));
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic")
{
    const PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.neg(0) == 0);
    CHECK(f.reduce(-1) == 6);
    for (Residue a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(PrimeField(1), DomainError);
    CHECK_THROWS_AS(PrimeField(9), DomainError);
    CHECK_THROWS_AS(f.inv(0), DomainError);
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(65535));
}

TEST_CASE("rank examples")
{
    CHECK(rank(FpMatrix::identity(5, 3)) == 3);
    CHECK(rank(FpMatrix(2, 4, 7)) == 0);
    CHECK(rank(FpMatrix::from_rows(2, {{1, 1}, {1, 1}})) == 1);
    CHECK(rank(FpMatrix(3, 0, 5)) == 0);
}

TEST_CASE("kernel basis examples")
{
    CHECK(kernel_basis(FpMatrix::identity(3, 2)).cols() == 0);
    const auto z = kernel_basis(FpMatrix(3, 2, 2));
    CHECK(z == FpMatrix::identity(3, 2));
    const auto k = kernel_basis(FpMatrix::from_rows(2, {{1, 1}, {1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.column(0) == std::vector<Residue>{1, 1});
}

TEST_CASE("subspace containment examples")
{
    const auto e1 = FpMatrix::from_rows(2, {{1}, {0}});
    CHECK(subspace_leq(FpMatrix(2, 2, 1), FpMatrix::from_rows(2, {{1}, {1}})));
    CHECK(subspace_leq(e1, FpMatrix::identity(2, 2)));
    CHECK_FALSE(subspace_leq(e1, FpMatrix::from_rows(2, {{1}, {1}})));
    CHECK_THROWS_AS(subspace_leq(e1, FpMatrix::identity(2, 3)), DimensionError);
    CHECK_THROWS_AS(subspace_leq(e1, FpMatrix::identity(3, 2)), DimensionError);
}

TEST_CASE("matrix powers")
{
    const auto m = FpMatrix::from_rows(3, {{0, -1}, {1, -1}});
    CHECK(mat_pow(m, 0).is_identity());
    CHECK(mat_pow(m, 3).is_identity());
    CHECK_FALSE(mat_pow(m, 2).is_identity());
    CHECK(mat_pow(FpMatrix::from_rows(3, {{0, 1}, {1, 0}}), 2).is_identity());
    CHECK_THROWS_AS(mat_pow(FpMatrix(3, 2, 3), 2), ShapeError);
    CHECK_THROWS_AS(mat_pow(SparseFpMatrix(3, 2, 3), 2), ShapeError);
}

TEST_CASE("shape checks")
{
    CHECK_THROWS_AS(FpMatrix(3, 2, 2) * FpMatrix(3, 3, 3), DimensionError);
    CHECK_THROWS_AS(FpMatrix(3, 2, 2) + FpMatrix(5, 2, 2), DimensionError);
    CHECK_THROWS_AS(FpMatrix::from_rows(3, {{1, 2}, {3}}), DimensionError);
    CHECK_THROWS_AS(block_diagonal(std::vector<FpMatrix>{FpMatrix(3, 1, 2)}, 3), ShapeError);
}

TEST_CASE("rank agrees with the textbook oracle")
{
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 65521u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto rows = std::uniform_int_distribution<std::size_t>(0, 25)(rng);
            const auto cols = std::uniform_int_distribution<std::size_t>(0, 25)(rng);
            const auto m = random_matrix(rng, p, rows, cols, 0.3);
            const auto r = rank(m);
            CHECK(r == oracle::rank(oracle::to_rows(m), p));
            CHECK(r == rank(m.transpose()));
            const auto k = kernel_basis(m);
            CHECK(r + k.cols() == cols);
            CHECK((m * k).is_zero());
            CHECK(rank(k) == k.cols());
            CHECK(image_basis(m).cols() == r);
        }
    }
}

TEST_CASE("row echelon is reduced")
{
    std::mt19937_64 rng(5);
    const auto m = random_matrix(rng, 5, 8, 10, 0.5);
    const auto e = row_echelon(m);
    CHECK(e.pivots.size() == rank(m));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t r = 0; r < e.reduced.rows(); ++r)
            CHECK(e.reduced.at(r, e.pivots[i]) == (r == i ? 1u : 0u));
}

TEST_CASE("subspace containment is symmetric exactly for equal spans")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = random_matrix(rng, 3, 6, 3, 0.5);
        const auto mix = random_matrix(rng, 3, 3, 3, 0.7);
        const auto v = u * mix;
        const bool both = subspace_leq(u, v) && subspace_leq(v, u);
        CHECK(both == (rank(u) == rank(v) && rank(hstack(u, v)) == rank(u)));
        CHECK(subspace_leq(v, u));
    }
}

TEST_CASE("sparse and dense elimination agree up to 200x200")
{
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u, 13u}) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto rows = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
            const auto cols = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
            const double density = std::uniform_real_distribution<double>(0.005, 0.1)(rng);
            const auto s = SparseFpMatrix::from_dense(random_matrix(rng, p, rows, cols, density));
            const auto r = rank_dense_elimination(s);
            CHECK(rank_sparse_elimination(s) == r);
            CHECK(rank(s) == r);
            const auto k = kernel_basis(s);
            CHECK(r + k.cols() == cols);
            CHECK((s * k).is_zero());
        }
    }
}

TEST_CASE("sparse matrix algebra mirrors dense")
{
    std::mt19937_64 rng(29);
    const auto a = random_matrix(rng, 7, 12, 9, 0.3);
    const auto b = random_matrix(rng, 7, 9, 5, 0.3);
    const auto c = random_matrix(rng, 7, 12, 9, 0.3);
    const auto sa = SparseFpMatrix::from_dense(a);
    CHECK((sa * SparseFpMatrix::from_dense(b)).to_dense() == a * b);
    CHECK((sa + SparseFpMatrix::from_dense(c)).to_dense() == a + c);
    CHECK((sa - SparseFpMatrix::from_dense(c)).to_dense() == a - c);
    CHECK(sa.transpose().to_dense() == a.transpose());
    CHECK(sa.scaled(3).to_dense() == a.scaled(3));
    CHECK(SparseFpMatrix::identity(7, 4).is_identity());
    const auto sq = random_matrix(rng, 7, 6, 6, 0.4);
    CHECK(mat_pow(SparseFpMatrix::from_dense(sq), 5).to_dense() == mat_pow(sq, 5));
}

TEST_CASE("large sparse kernel uses the tracked echelon")
{
    // Path graph incidence over F_3: rank n - 1, kernel spanned by one vector.
    const std::size_t n = 700;
    SparseFpMatrix m(3, n - 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        SparseColumn col;
        if (j > 0)
            col.push_back({static_cast<std::uint32_t>(j - 1), 2});
        if (j + 1 < n)
            col.push_back({static_cast<std::uint32_t>(j), 1});
        m.set_column(j, col);
    }
    CHECK(rank(m) == n - 1);
    const auto k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
}

TEST_CASE("low echelon tracks combinations")
{
    const PrimeField f(5);
    const std::vector<SparseColumn> inputs{{{0, 1}, {2, 2}}, {{1, 3}}, {{0, 2}, {1, 3}, {2, 4}}};
    LowEchelon e(f, 3, true);
    CHECK(e.insert(inputs[0], 0).basis_index.has_value());
    CHECK(e.insert(inputs[1], 1).basis_index.has_value());
    const auto dep = e.insert(inputs[2], 2);
    CHECK_FALSE(dep.basis_index.has_value());
    CHECK(e.size() == 2);
    SparseColumn sum;
    for (auto [id, c] : dep.combination)
        sum = axpy(f, sum, c, inputs[id]);
    CHECK(sum.empty());
    CHECK(dep.combination.size() == 3);
}
