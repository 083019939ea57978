#include <doctest.h>

#include <array>
#include <random>

#include "eqcoho/borel_ss.h"
#include "eqcoho/cyclic_rep.h"
#include "eqcoho/errors.h"
#include "oracles.h"

using namespace eqcoho;

TEST_CASE("module constructors")
{
    CHECK(trivial_module(4, 2, 1).sigma_dense() == FpMatrix::from_rows(2, {{1}}));
    CHECK(regular_module(3, 3).sigma_dense() == FpMatrix::from_rows(3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(mat_pow(regular_module(2, 2).sigma(), 2).is_identity());
    CHECK_THROWS_AS(CyclicGroup(0), ArgumentError);
    CHECK_THROWS_AS(GModule(CyclicGroup(3), FpMatrix::from_rows(2, {{0, 1}, {1, 0}})), DomainError);
    CHECK_THROWS_AS(GModule(CyclicGroup(2), FpMatrix(2, 2, 3)), ShapeError);
}

TEST_CASE("direct sums")
{
    const auto zero = direct_sum(4, 2, {});
    CHECK(zero.dim() == 0);
    CHECK(group_cohomology_dim(zero, 3) == 0);
    const std::vector<GModule> parts{trivial_module(4, 2, 1), regular_module(4, 2)};
    const auto sum = direct_sum(4, 2, parts);
    CHECK(sum.dim() == 5);
    for (int k = 0; k < 6; ++k)
        CHECK(group_cohomology_dim(sum, k) == group_cohomology_dim(parts[0], k) + group_cohomology_dim(parts[1], k));
    const std::vector<GModule> mixed{trivial_module(4, 2, 1), trivial_module(2, 2, 1)};
    CHECK_THROWS_AS(direct_sum(4, 2, mixed), ArgumentError);
}

TEST_CASE("norm operator")
{
    CHECK(norm_operator(trivial_module(4, 2, 1)).is_zero());
    for (auto [n, p] : {std::pair{4, 2u}, {3, 3u}, {6, 3u}, {5, 7u}}) {
        const auto nrm = norm_operator(regular_module(n, p)).to_dense();
        CHECK(rank(nrm) == 1);
        for (std::size_t i = 0; i < nrm.rows(); ++i)
            for (std::size_t j = 0; j < nrm.cols(); ++j)
                CHECK(nrm.at(i, j) == 1);
    }
    CHECK(norm_operator(sigma_g_module(5, 5)).is_zero());
}

TEST_CASE("group cohomology examples")
{
    const auto t = trivial_module(6, 3, 1);
    for (int k = 0; k < 10; ++k)
        CHECK(group_cohomology_dim(t, k) == 1);
    const auto r = regular_module(4, 2);
    CHECK(group_cohomology_dim(r, 0) == 1);
    for (int k = 1; k < 10; ++k)
        CHECK(group_cohomology_dim(r, k) == 0);
    const auto a = sigma_g_module(5, 5);
    for (int k = 0; k < 10; ++k)
        CHECK(group_cohomology_dim(a, k) == 1);
    // p does not divide n: only invariants survive.
    const auto s = trivial_module(3, 2, 2);
    CHECK(s.semisimple_regime());
    CHECK(group_cohomology_dim(s, 0) == 2);
    CHECK(group_cohomology_dim(s, 1) == 0);
    CHECK(group_cohomology_dim(s, 2) == 0);
    CHECK(group_cohomology_dim(t, -1) == 0);
}

TEST_CASE("restriction")
{
    const auto r = restrict_module(regular_module(4, 2), 2);
    CHECK(r.n() == 2);
    CHECK(r.sigma_dense() == FpMatrix::from_rows(2, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    const auto m = sigma_g_module(6, 3);
    const auto same = restrict_module(m, 1);
    CHECK(same.n() == m.n());
    CHECK(same.sigma() == m.sigma());
    CHECK_THROWS_AS(restrict_module(m, 4), ArgumentError);
}

TEST_CASE("freeness hypotheses")
{
    CHECK(freeness_hypotheses(sigma_g_module(5, 5)) == FreenessHypotheses{true, true});
    CHECK(freeness_hypotheses(trivial_module(4, 2, 1)) == FreenessHypotheses{true, false});
    const GModule swap(CyclicGroup(4), FpMatrix::from_rows(2, {{0, 1}, {1, 0}}));
    CHECK(freeness_hypotheses(swap) == FreenessHypotheses{true, true});
    CHECK(freeness_hypotheses(regular_module(4, 2)).norm_zero == false);
}

TEST_CASE("kernel of sigma - 1 on the suspension module")
{
    // [1, 2, ..., n-2, -1] spans ker(A - I).
    for (auto [n, p] : {std::pair{5, 5u}, {6, 3u}, {7, 7u}, {8, 2u}}) {
        const auto m = sigma_g_module(n, p);
        const auto smi = sigma_minus_identity(m);
        const PrimeField f(p);
        SparseColumn v;
        for (int i = 1; i <= n - 2; ++i)
            if (f.reduce(i) != 0)
                v.push_back({static_cast<std::uint32_t>(i - 1), f.reduce(i)});
        v.push_back({static_cast<std::uint32_t>(n - 2), f.neg(1)});
        CHECK(smi.apply(v).empty());
        CHECK(kernel_basis(smi).cols() == 1);
    }
}

TEST_CASE("weighted sum operator")
{
    CHECK(weighted_sum_operator(trivial_module(3, 3, 1)).is_zero());
    CHECK(weighted_sum_operator(trivial_module(2, 2, 1)).is_identity());
    const auto m = regular_module(4, 2);
    const auto p1 = m.sigma();
    const auto p3 = mat_pow(p1, 3);
    CHECK(weighted_sum_operator(m) == p1 + p3);
}

TEST_CASE("json round trip and diagnostics")
{
    const auto m = sigma_g_module(4, 2);
    const auto back = gmodule_from_json(gmodule_to_json(m));
    CHECK(back.n() == 4);
    CHECK(back.sigma() == m.sigma());
    CHECK_THROWS_AS(gmodule_from_json("{\"n\": 2, \"p\": 2, \"dim\": 1}"), ParseError);
    CHECK_THROWS_AS(gmodule_from_json("{\"n\": 2, \"p\": 2, \"dim\": 2, \"sigma\": [[1]]}"), ParseError);
    try {
        gmodule_from_json("{\n  \"n\": 2,\n  \"p\": }");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
    }
}

TEST_CASE("cohomology formulas match the definition on random modules")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[trial % 4];
        const auto m = oracle::random_module(rng, n, p, 12);
        const auto rows = oracle::to_rows(m.sigma_dense());
        for (int k = 0; k < 5; ++k)
            CHECK(group_cohomology_dim(m, k) == oracle::group_cohomology(rows, n, p, k));
    }
}
