#include "eqcoho/classifying_ring.h"

#include <string>

#include "eqcoho/errors.h"
#include "eqcoho/fp_linalg.h"

namespace eqcoho {

std::string_view to_string(RingShape s)
{
    switch (s) {
    case RingShape::PolynomialT:
        return "POLYNOMIAL_T";
    case RingShape::ExteriorTensorPoly:
        return "EXTERIOR_TENSOR_POLY";
    case RingShape::Trivial:
        return "TRIVIAL";
    }
    return "?";
}

ClassifyingRing ring_of(int n, std::uint32_t p)
{
    if (n < 1)
        throw ArgumentError("group order must be positive");
    if (!is_prime(p))
        throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (n % static_cast<int>(p) != 0)
        return {n, p, RingShape::Trivial, {}};
    if (n == 2 && p == 2)
        return {n, p, RingShape::PolynomialT, {1}};
    return {n, p, RingShape::ExteriorTensorPoly, {1, 2}};
}

std::size_t ClassifyingRing::dim(int k) const
{
    if (k < 0)
        return 0;
    if (shape == RingShape::Trivial)
        return k == 0 ? 1 : 0;
    return 1;
}

std::size_t ClassifyingRing::polynomial_part_dim(int k) const
{
    if (k < 0 || k % 2 != 0)
        return 0;
    return shape == RingShape::Trivial ? (k == 0 ? 1 : 0) : 1;
}

std::size_t restriction_rank(RestrictionKind kind, int n, int m, std::uint32_t p, int k)
{
    const int ip = static_cast<int>(p);
    if (m < 1 || n % m != 0)
        throw DomainError("subgroup order must divide the group order");
    if (m % ip != 0 || (n / m) % ip != 0)
        throw DomainError("p must divide both the subgroup order and the quotient order");
    if (k < 0)
        return 0;
    switch (kind) {
    case RestrictionKind::SubgroupInclusion:
        // Kernel is the ideal generated by the degree-1 class.
        return k % 2 == 0 ? 1 : 0;
    case RestrictionKind::QuotientProjection:
        // Kernel is everything in degrees >= 2.
        return k <= 1 ? 1 : 0;
    }
    return 0;
}

PGModuleSummary rk_as_pg_module(int n, std::uint32_t p, int m)
{
    const int ip = static_cast<int>(p);
    if (m < 1 || n % m != 0 || m % ip != 0)
        throw DomainError("need p | m and m | n");
    return {2, {}};
}

}  // namespace eqcoho
