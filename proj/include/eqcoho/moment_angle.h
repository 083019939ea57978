#pragma once

// Cubical chain complexes of polyhedral products Z_K(D^1, S^0), their cyclic
// vertex-rotation symmetries, and pointwise fixed subcomplexes.
//
// A cell is a face sigma of K together with an endpoint choice (+1 or -1)
// for every coordinate outside sigma. Coordinates are 1-based vertices;
// vertex i is bit (i - 1) of a mask.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqcoho/fp_linalg.h"

namespace eqcoho {

using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 24;
inline constexpr int kDefaultSizeGuard = 12;

class SimplicialComplex {
public:
    /// Facets as 1-based vertex lists. Singletons not covered by a facet are added.
    SimplicialComplex(int n, std::vector<std::vector<int>> facets);

    int n() const { return n_; }
    /// Maximal faces, each sorted, listed in increasing mask order.
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    bool contains(VertexMask face) const;
    /// All faces including the empty one, ordered by size then mask.
    std::vector<VertexMask> faces() const;
    std::size_t face_count(int dim_plus_one) const;

private:
    int n_;
    std::vector<std::vector<int>> facets_;
    std::vector<VertexMask> facet_masks_;
};

/// Boundary of the n-gon: facets {i, i+1} and {1, n}.
SimplicialComplex polygon_complex(int n);

/// {"n": int, "facets": [[int]]} with 1-based vertices.
SimplicialComplex simplicial_complex_from_json(const std::string& text);

struct CubicalCell {
    VertexMask face = 0;   ///< coordinates where the cell spans the interval
    VertexMask signs = 0;  ///< bit set = endpoint +1; only bits outside `face` are used

    int dim() const;
    bool operator==(const CubicalCell&) const = default;
    auto operator<=>(const CubicalCell&) const = default;
};

class CubicalChainComplex {
public:
    /// Cells per dimension; must be closed under taking faces.
    CubicalChainComplex(std::uint32_t p, int n, std::vector<std::vector<CubicalCell>> cells);

    std::uint32_t p() const { return field_.modulus(); }
    const PrimeField& field() const { return field_; }
    int n() const { return n_; }
    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }

    std::size_t cell_count(int d) const;
    const std::vector<CubicalCell>& cells(int d) const { return cells_[static_cast<std::size_t>(d)]; }
    std::optional<std::uint32_t> index_of(const CubicalCell& c) const;

    /// Boundary C_d -> C_{d-1}; zero map for d = 0 or d > top_dim.
    const SparseFpMatrix& boundary(int d) const;
    std::int64_t euler_characteristic() const;

    /// Boundary of a single cell as (index in C_{d-1}, coefficient) pairs.
    SparseColumn cell_boundary(const CubicalCell& c) const;

private:
    static std::uint64_t key(const CubicalCell& c) { return (std::uint64_t{c.face} << 32) | c.signs; }

    PrimeField field_;
    int n_;
    std::vector<std::vector<CubicalCell>> cells_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<SparseFpMatrix> boundaries_;  // boundaries_[d] : C_d -> C_{d-1}
    SparseFpMatrix zero_;
};

/// Every cell of Z_K(D^1, S^0). Throws ArgumentError above the size guard.
CubicalChainComplex build_complex(const SimplicialComplex& k, std::uint32_t p, int size_guard = kDefaultSizeGuard);

struct BettiNumbers {
    std::vector<std::size_t> values;  ///< values[k] = dim H_k
    std::size_t total() const;
    std::size_t at(int k) const { return k >= 0 && static_cast<std::size_t>(k) < values.size() ? values[static_cast<std::size_t>(k)] : 0; }
};

BettiNumbers betti_numbers(const CubicalChainComplex& c);
std::size_t betti(const CubicalChainComplex& c, int k);

/// Genus of Z_{K_n}(D^1, S^0) for the n-gon, as a signed closed form: 1 + (n-4) 2^(n-3).
std::int64_t polygon_genus_formula(int n);

/// Deterministic basis of H_k(C; F_p) with coordinate extraction.
///
/// Cycle representatives come from reducing the boundary map out of degree k
/// column by column; the ones independent of the boundaries (after the
/// boundaries from degree k+1 are placed in the echelon) form the basis.
class HomologyBasis {
public:
    HomologyBasis(const CubicalChainComplex& c, int degree);

    int degree() const { return degree_; }
    std::size_t dim() const { return reps_.size(); }
    /// Reduced cycle representative of basis element i.
    const SparseColumn& representative(std::size_t i) const { return echelon_.basis(reps_[i]); }
    /// Coordinates of the homology class of `cycle`. Throws InvariantViolation
    /// if `cycle` is not a cycle.
    std::vector<Residue> coordinates(const SparseColumn& cycle) const;

private:
    int degree_;
    PrimeField field_;
    LowEchelon echelon_;
    std::vector<std::size_t> reps_;              // echelon indices of homology representatives
    std::vector<std::int64_t> homology_index_;   // echelon index -> basis position or -1
};

struct InducedAction {
    std::vector<int> vertex_permutation;          ///< 1-based images, index 0 unused
    std::vector<SparseFpMatrix> chain_maps;       ///< chain_maps[d] : C_d -> C_d (signed permutations)
    std::vector<SparseFpMatrix> homology_maps;    ///< homology_maps[k] : H_k -> H_k in HomologyBasis coordinates

    const SparseFpMatrix& matrix_on_h1() const { return homology_maps.at(1); }
};

/// Rotation i -> i + shift (mod n) acting on the complex built from `k`.
/// Throws SymmetryError if the rotation does not preserve `k`.
InducedAction rotation_action(const CubicalChainComplex& c, const SimplicialComplex& k, int shift);

/// Signed image of one cell under the rotation by `shift` of n coordinates.
std::pair<CubicalCell, int> rotate_cell(const CubicalCell& cell, int n, int shift);
VertexMask rotate_mask(VertexMask mask, int n, int shift);

struct FixedSubcomplex {
    CubicalChainComplex complex;
    int subgroup_order;
    int rotation_shift;                 ///< n / subgroup_order
    std::vector<VertexMask> vertices;   ///< sign masks of the fixed 0-cells
};

/// Cells fixed pointwise by the subgroup of order m generated by rotation by n/m.
FixedSubcomplex fixed_subcomplex(const CubicalChainComplex& c, int m);

struct Orbit {
    std::size_t size;
    std::size_t stabilizer_order;
    VertexMask representative;   ///< least sign mask in the orbit
    bool operator==(const Orbit&) const = default;
};

/// Orbits of the rotation by 1 (generator of G = C_n) on fixed vertices,
/// ordered by representative. Asserts that p divides every stabilizer order.
std::vector<Orbit> orbit_decomposition(const std::vector<VertexMask>& vertices, int n, std::uint32_t p);

}  // namespace eqcoho
