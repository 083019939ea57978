#include <doctest.h>

#include <tuple>

#include "eqcoho/classifying_ring.h"
#include "eqcoho/cyclic_rep.h"
#include "eqcoho/errors.h"

using namespace eqcoho;

TEST_CASE("ring shapes")
{
    CHECK(ring_of(2, 2).shape == RingShape::PolynomialT);
    CHECK(ring_of(6, 3).shape == RingShape::ExteriorTensorPoly);
    CHECK(ring_of(3, 2).shape == RingShape::Trivial);
    CHECK(to_string(RingShape::ExteriorTensorPoly) == "EXTERIOR_TENSOR_POLY");
    CHECK_THROWS_AS(ring_of(4, 4), DomainError);
    CHECK_THROWS_AS(ring_of(0, 2), ArgumentError);
}

TEST_CASE("Poincare series agree with the trivial module's cohomology")
{
    for (int n = 1; n <= 12; ++n) {
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            const auto ring = ring_of(n, p);
            const auto t = trivial_module(n, p, 1);
            for (int k = 0; k < 12; ++k) {
                CHECK(ring.dim(k) == group_cohomology_dim(t, k));
                const bool divides = n % static_cast<int>(p) == 0;
                CHECK(ring.polynomial_part_dim(k) == ((k % 2 == 0 && (divides || k == 0)) ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("restriction maps for C2 -> C4 -> C2")
{
    const auto j = RestrictionKind::SubgroupInclusion;
    const auto s = RestrictionKind::QuotientProjection;
    CHECK(restriction_rank(j, 4, 2, 2, 2) == 1);
    CHECK(restriction_rank(j, 4, 2, 2, 1) == 0);
    CHECK(restriction_rank(s, 4, 2, 2, 1) == 1);
    CHECK(restriction_rank(s, 4, 2, 2, 0) == 1);
    CHECK(restriction_rank(s, 4, 2, 2, 2) == 0);
    for (int k = 0; k < 8; ++k)
        CHECK(restriction_rank(j, 9, 3, 3, k) == (k % 2 == 0 ? 1u : 0u));
    CHECK_THROWS_AS(restriction_rank(j, 6, 3, 3, 1), DomainError);
    CHECK_THROWS_AS(restriction_rank(j, 6, 4, 2, 1), DomainError);
}

TEST_CASE("R_K over P_G is free of rank 2")
{
    for (auto [n, p, m] : {std::tuple{4, 2u, 2}, std::tuple{6, 3u, 3}, std::tuple{5, 5u, 5}, std::tuple{12, 2u, 4}}) {
        const auto s = rk_as_pg_module(n, p, m);
        CHECK(s.free_rank == 2);
        CHECK(s.torsion_dims.empty());
    }
    CHECK_THROWS_AS(rk_as_pg_module(6, 2, 3), DomainError);
}
