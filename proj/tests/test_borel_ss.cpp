#include <doctest.h>

#include "eqcoho/borel_ss.h"
#include "eqcoho/errors.h"
#include "eqcoho/lyndon.h"

using namespace eqcoho;

namespace {

std::vector<GModule> polygon_rows(int n, std::uint32_t p)
{
    const auto k = polygon_complex(n);
    const auto x = build_complex(k, p);
    auto a = rotation_action(x, k, 1);
    std::vector<GModule> rows;
    for (auto& m : a.homology_maps)
        rows.emplace_back(CyclicGroup(n), std::move(m));
    return rows;
}

std::vector<GModule> suspension_rows(int n, std::uint32_t p)
{
    return {trivial_module(n, p, 1), sigma_g_module(n, p)};
}

}  // namespace

TEST_CASE("E2 page of a point")
{
    const std::vector<GModule> rows{trivial_module(4, 2, 1)};
    const auto page = e2_page(rows, 5);
    CHECK(page.grid() == std::vector<std::vector<std::size_t>>{{1, 1, 1, 1, 1}});
    CHECK(page.at(3, 1) == 0);
    CHECK(page.antidiagonal(7) == 1);
}

TEST_CASE("E2 page of the suspension")
{
    const auto rows = suspension_rows(5, 5);
    const auto page = e2_page(rows);
    for (int k = 0; k < 8; ++k) {
        CHECK(page.at(k, 0) == 1);
        CHECK(page.at(k, 1) == 1);
        CHECK(page.at(k, 2) == 0);
    }
}

TEST_CASE("E2 page argument checks")
{
    CHECK_THROWS_AS(e2_page(std::vector<GModule>{}), ArgumentError);
    const std::vector<GModule> mixed{trivial_module(4, 2, 1), trivial_module(6, 2, 1)};
    CHECK_THROWS_AS(e2_page(mixed), ArgumentError);
    const auto rows = polygon_rows(4, 2);
    CHECK_THROWS_AS(e2_page(rows, 4), ArgumentError);
    CHECK_NOTHROW(e2_page(rows, 5));
}

TEST_CASE("localization accounting on polygons")
{
    struct Case {
        int n;
        std::uint32_t p;
        std::size_t rhs;
    };
    for (auto c : {Case{6, 3, 3}, Case{6, 2, 4}, Case{4, 2, 3}}) {
        const auto rows = polygon_rows(c.n, c.p);
        const auto page = e2_page(rows);
        const auto acc = polygon_localization_accounting(page);
        CHECK(acc.rhs == c.rhs);
        CHECK(acc.degenerate);
        for (auto [k, lhs] : acc.lhs) {
            CHECK(k > 2);
            CHECK(lhs == c.rhs);
        }
    }
    const auto page42 = e2_page(polygon_rows(4, 2));
    for (int k = 3; k < 8; ++k)
        CHECK(page42.antidiagonal(k) == 3);
    const auto acc = localization_accounting(page42, 2);
    CHECK_FALSE(acc.degenerate);
}

TEST_CASE("formality")
{
    CHECK(k_formality(2, 2));
    CHECK(k_formality(4, 4));
    CHECK_FALSE(k_formality(36, 4));
    const std::vector<Orbit> singletons{{1, 3, 0}, {1, 3, 7}};
    CHECK(g_formality(2, 2, singletons).g_formal);
    const std::vector<Orbit> pair{{1, 4, 0}, {1, 4, 15}, {2, 2, 5}};
    const auto r = g_formality(4, 4, pair);
    CHECK(r.k_formal);
    CHECK_FALSE(r.xk_g_formal);
    CHECK_FALSE(r.g_formal);
    CHECK_FALSE(g_formality(36, 8, singletons).g_formal);
    CHECK(g_formality(4, 4, singletons, false).status == Decision::Undecided);
}

TEST_CASE("P_G freeness verdicts")
{
    {
        const auto rows = suspension_rows(5, 5);
        const auto page = e2_page(rows);
        const auto acc = localization_accounting(page, 2);
        const auto r = pg_freeness(rows, page, acc);
        CHECK(r.verdict == PGVerdict::Free);
        CHECK(r.free_rank == std::optional<std::size_t>{4});
    }
    {
        const auto rows = polygon_rows(4, 2);
        const auto page = e2_page(rows);
        const auto r = pg_freeness(rows, page, polygon_localization_accounting(page), 4);
        CHECK(r.verdict == PGVerdict::Free);
    }
    {
        const auto rows = polygon_rows(5, 5);
        const auto page = e2_page(rows);
        const auto r = pg_freeness(rows, page, polygon_localization_accounting(page), 5);
        CHECK(r.verdict == PGVerdict::Torsion);
        CHECK(r.torsion_dim_degree1 == std::optional<std::size_t>{2});
    }
    {
        // Regular module: the norm does not vanish and no polygon count applies.
        const std::vector<GModule> rows{regular_module(4, 2)};
        const auto page = e2_page(rows);
        const auto r = pg_freeness(rows, page, localization_accounting(page, 0));
        CHECK(r.verdict == PGVerdict::Undecided);
    }
    CHECK(pg_verdict_from_string("TORSION") == PGVerdict::Torsion);
    CHECK_FALSE(pg_verdict_from_string("torsion").has_value());
}

TEST_CASE("fixed point dimensions")
{
    const auto x = build_complex(polygon_complex(6), 3);
    const auto f = fixed_subcomplex(x, 3);
    const auto orbits = orbit_decomposition(f.vertices, 6, 3);
    for (int k = 0; k < 5; ++k)
        CHECK(fixed_point_equivariant_dims(orbits, 6, 3, k) == 3);
    const auto x12 = build_complex(polygon_complex(12), 2);
    const auto f12 = fixed_subcomplex(x12, 2);
    CHECK(fixed_point_equivariant_dims(orbit_decomposition(f12.vertices, 12, 2), 12, 2, 3) == 14);
    const std::vector<Orbit> bad{{2, 1, 0}};
    CHECK_THROWS_AS(fixed_point_equivariant_dims(bad, 2, 2, 0), InvariantViolation);
}

TEST_CASE("suspension module")
{
    for (int n = 3; n <= 8; ++n) {
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            if (n % static_cast<int>(p) != 0)
                continue;
            const auto m = sigma_g_module(n, p);
            CHECK(m.dim() == static_cast<std::size_t>(n - 1));
            CHECK(freeness_hypotheses(m).norm_zero);
            // ker(A - 1) lies in im(A - 1) iff the p-part of n is at least 3.
            const bool two_part_only = p == 2 && n % 4 != 0;
            CHECK(freeness_hypotheses(m).kernel_in_image == !two_part_only);
            const std::vector<GModule> rows{trivial_module(n, p, 1), m};
            const auto page = e2_page(rows);
            const auto verdict = pg_freeness(rows, page, localization_accounting(page, 2)).verdict;
            CHECK(verdict == (two_part_only ? PGVerdict::Undecided : PGVerdict::Free));
            const auto restricted = restrict_module(m, n / static_cast<int>(p));
            CHECK(norm_operator(restricted).is_zero() == (n == static_cast<int>(p)));
        }
    }
    CHECK_THROWS_AS(sigma_g_module(1, 2), DomainError);
    CHECK_THROWS_AS(sigma_g_module(5, 2), DomainError);
}
