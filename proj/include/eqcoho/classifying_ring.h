#pragma once

// Structural descriptors of R_G = H*(BC_n; F_p) and its even-degree
// polynomial part P_G. Only dimensions, ranks and shapes are modelled.
//
//   p | n, (n, p) != (2, 2):  F_p[x, y] / (x^2),  |x| = 1, |y| = 2
//   n = p = 2:               F_2[t],             |t| = 1
//   p does not divide n:     F_p in degree 0

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace eqcoho {

enum class RingShape {
    PolynomialT,          ///< F_2[t], the n = p = 2 case
    ExteriorTensorPoly,   ///< Lambda[x] (x) F_p[y]
    Trivial,              ///< p does not divide n
};

std::string_view to_string(RingShape s);

struct ClassifyingRing {
    int n;
    std::uint32_t p;
    RingShape shape;
    std::vector<int> generator_degrees;

    /// dim H^k(BC_n; F_p).
    std::size_t dim(int k) const;
    /// dim P_G in degree k (one class in each even degree when p | n).
    std::size_t polynomial_part_dim(int k) const;
};

ClassifyingRing ring_of(int n, std::uint32_t p);

enum class RestrictionKind {
    SubgroupInclusion,   ///< j* : H*(BG) -> H*(BK) for K -> G
    QuotientProjection,  ///< s* : H*(BL) -> H*(BG) for G -> L = G/K
};

/// Rank of the induced map in degree k for the extension K -> G -> G/K
/// with |G| = n and |K| = m. Requires p to divide m and n/m.
std::size_t restriction_rank(RestrictionKind kind, int n, int m, std::uint32_t p, int k);

struct PGModuleSummary {
    std::size_t free_rank = 0;
    std::vector<std::size_t> torsion_dims;  ///< per degree, finitely supported
};

/// R_K as a module over P_G for K of order m inside C_n (p | m, m | n):
/// free on {1, x_K}.
PGModuleSummary rk_as_pg_module(int n, std::uint32_t p, int m);

}  // namespace eqcoho
