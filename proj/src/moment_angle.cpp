#include "eqcoho/moment_angle.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "json_util.h"

namespace eqcoho {

namespace {

VertexMask mask_of(const std::vector<int>& face)
{
    VertexMask m = 0;
    for (int v : face)
        m |= VertexMask{1} << (v - 1);
    return m;
}

VertexMask full_mask(int n) { return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

/// Position of bit i among the set bits of mask (0-based).
int position_in(VertexMask mask, int bit) { return std::popcount(mask & ((VertexMask{1} << bit) - 1)); }

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(int n, std::vector<std::vector<int>> facets) : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw ArgumentError("vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
    std::set<VertexMask> masks;
    for (auto& f : facets) {
        if (f.empty())
            continue;
        for (int v : f)
            if (v < 1 || v > n)
                throw ArgumentError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        masks.insert(mask_of(f));
    }
    for (int v = 1; v <= n; ++v)
        masks.insert(VertexMask{1} << (v - 1));
    // Keep maximal faces only.
    for (VertexMask m : masks) {
        bool maximal = std::none_of(masks.begin(), masks.end(), [m](VertexMask o) { return o != m && (o & m) == m; });
        if (maximal)
            facet_masks_.push_back(m);
    }
    for (VertexMask m : facet_masks_) {
        std::vector<int> f;
        for (int v = 1; v <= n; ++v)
            if (m & (VertexMask{1} << (v - 1)))
                f.push_back(v);
        facets_.push_back(std::move(f));
    }
}

bool SimplicialComplex::contains(VertexMask face) const
{
    if (face & ~full_mask(n_))
        return false;
    return std::any_of(facet_masks_.begin(), facet_masks_.end(), [face](VertexMask f) { return (f & face) == face; });
}

std::vector<VertexMask> SimplicialComplex::faces() const
{
    std::set<VertexMask> all;
    for (VertexMask f : facet_masks_) {
        // Enumerate submasks of f.
        VertexMask s = f;
        while (true) {
            all.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }
    std::vector<VertexMask> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(),
                     [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b); });
    return out;
}

std::size_t SimplicialComplex::face_count(int size) const
{
    auto all = faces();
    return static_cast<std::size_t>(
        std::count_if(all.begin(), all.end(), [size](VertexMask f) { return std::popcount(f) == size; }));
}

SimplicialComplex polygon_complex(int n)
{
    if (n < 3)
        throw ArgumentError("polygon needs at least 3 vertices, got " + std::to_string(n));
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < n; ++i)
        facets.push_back({i, i + 1});
    facets.push_back({1, n});
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex simplicial_complex_from_json(const std::string& text)
{
    auto j = detail::parse_json(text);
    auto n = detail::require<int>(j, "n");
    auto facets = detail::require<std::vector<std::vector<int>>>(j, "facets");
    return SimplicialComplex(n, std::move(facets));
}

// ---------------------------------------------------------------------------
// Cells and chain complex

int CubicalCell::dim() const { return std::popcount(face); }

CubicalChainComplex::CubicalChainComplex(std::uint32_t p, int n, std::vector<std::vector<CubicalCell>> cells)
    : field_(p), n_(n), cells_(std::move(cells)), zero_(p, 0, 0)
{
    if (cells_.empty())
        cells_.emplace_back();
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        for (std::size_t i = 0; i < cells_[d].size(); ++i) {
            auto c = cells_[d][i];
            if (static_cast<std::size_t>(c.dim()) != d)
                throw ArgumentError("cell listed under the wrong dimension");
            c.signs &= ~c.face;
            cells_[d][i] = c;
            if (!index_.emplace(key(c), static_cast<std::uint32_t>(i)).second)
                throw ArgumentError("duplicate cell");
        }
    }
    boundaries_.emplace_back(p, 0, cells_[0].size());
    for (std::size_t d = 1; d < cells_.size(); ++d) {
        SparseFpMatrix b(p, cells_[d - 1].size(), cells_[d].size());
        for (std::size_t i = 0; i < cells_[d].size(); ++i)
            b.set_column(i, cell_boundary(cells_[d][i]));
        boundaries_.push_back(std::move(b));
    }
    for (std::size_t d = 2; d < cells_.size(); ++d) {
        auto dd = boundaries_[d - 1] * boundaries_[d];
        ensure(dd.nonzeros() == 0, "boundary of a boundary is nonzero");
    }
}

std::size_t CubicalChainComplex::cell_count(int d) const
{
    if (d < 0 || d > top_dim())
        return 0;
    return cells_[static_cast<std::size_t>(d)].size();
}

std::optional<std::uint32_t> CubicalChainComplex::index_of(const CubicalCell& c) const
{
    CubicalCell norm{c.face, c.signs & ~c.face};
    if (norm.dim() > top_dim())
        return std::nullopt;
    auto it = index_.find(key(norm));
    if (it == index_.end() || cells_[static_cast<std::size_t>(norm.dim())][it->second] != norm)
        return std::nullopt;
    return it->second;
}

SparseColumn CubicalChainComplex::cell_boundary(const CubicalCell& c) const
{
    SparseColumn out;
    for (int bit = 0; bit < n_; ++bit) {
        const VertexMask b = VertexMask{1} << bit;
        if (!(c.face & b))
            continue;
        const std::int64_t sign = position_in(c.face, bit) % 2 == 0 ? 1 : -1;
        CubicalCell plus{c.face & ~b, c.signs | b};
        CubicalCell minus{c.face & ~b, c.signs & ~b};
        auto ip = index_of(plus), im = index_of(minus);
        if (!ip || !im)
            throw ArgumentError("cell list is not closed under faces");
        out.push_back({*ip, field_.reduce(sign)});
        out.push_back({*im, field_.reduce(-sign)});
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.row < b.row; });
    return out;
}

const SparseFpMatrix& CubicalChainComplex::boundary(int d) const
{
    if (d < 0 || d >= static_cast<int>(boundaries_.size()))
        return zero_;
    return boundaries_[static_cast<std::size_t>(d)];
}

std::int64_t CubicalChainComplex::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (int d = 0; d <= top_dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(cell_count(d));
    return chi;
}

CubicalChainComplex build_complex(const SimplicialComplex& k, std::uint32_t p, int size_guard)
{
    if (k.n() > size_guard)
        throw ArgumentError("n = " + std::to_string(k.n()) + " exceeds the size guard " + std::to_string(size_guard));
    const int n = k.n();
    std::vector<std::vector<CubicalCell>> cells;
    for (VertexMask face : k.faces()) {
        const auto d = static_cast<std::size_t>(std::popcount(face));
        if (cells.size() <= d)
            cells.resize(d + 1);
        // Enumerate endpoint choices on the complement, in increasing mask order.
        const VertexMask free = full_mask(n) & ~face;
        std::vector<VertexMask> signs;
        VertexMask s = 0;
        while (true) {
            signs.push_back(s);
            if (s == free)
                break;
            s = (s - free) & free;
        }
        for (VertexMask sg : signs)
            cells[d].push_back({face, sg});
    }
    return CubicalChainComplex(p, n, std::move(cells));
}

std::size_t BettiNumbers::total() const
{
    std::size_t t = 0;
    for (auto v : values)
        t += v;
    return t;
}

BettiNumbers betti_numbers(const CubicalChainComplex& c)
{
    std::vector<std::size_t> ranks(static_cast<std::size_t>(c.top_dim()) + 2, 0);
    for (int d = 1; d <= c.top_dim(); ++d)
        ranks[static_cast<std::size_t>(d)] = rank(c.boundary(d));
    BettiNumbers b;
    for (int d = 0; d <= c.top_dim(); ++d)
        b.values.push_back(c.cell_count(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1]);
    return b;
}

std::size_t betti(const CubicalChainComplex& c, int k)
{
    if (k < 0 || k > c.top_dim())
        return 0;
    const std::size_t out_rank = k == 0 ? 0 : rank(c.boundary(k));
    const std::size_t in_rank = rank(c.boundary(k + 1));
    return c.cell_count(k) - out_rank - in_rank;
}

std::int64_t polygon_genus_formula(int n) { return 1 + (std::int64_t{n} - 4) * (std::int64_t{1} << (n - 3)); }

// ---------------------------------------------------------------------------
// Homology basis

HomologyBasis::HomologyBasis(const CubicalChainComplex& c, int degree)
    : degree_(degree), field_(c.field()), echelon_(c.field(), c.cell_count(degree))
{
    const std::size_t cells = c.cell_count(degree);
    // Boundaries from degree + 1.
    const auto& in = c.boundary(degree + 1);
    for (std::size_t j = 0; j < in.cols() && degree + 1 <= c.top_dim(); ++j)
        echelon_.insert(in.column(j));
    const std::size_t boundary_rank = echelon_.size();

    // Cycles: kernel of the boundary out of degree, one per zero-reduced column.
    std::vector<SparseColumn> cycles;
    if (degree == 0) {
        for (std::uint32_t j = 0; j < cells; ++j)
            cycles.push_back({{j, 1}});
    }
    else {
        const auto& out = c.boundary(degree);
        LowEchelon kernel(c.field(), c.cell_count(degree - 1), true);
        for (std::uint32_t j = 0; j < cells; ++j) {
            auto res = kernel.insert(out.column(j), j);
            if (!res.basis_index)
                cycles.push_back(std::move(res.combination));
        }
    }
    for (auto& z : cycles) {
        auto res = echelon_.insert(std::move(z));
        if (res.basis_index)
            reps_.push_back(*res.basis_index);
    }
    homology_index_.assign(echelon_.size(), -1);
    for (std::size_t i = 0; i < reps_.size(); ++i)
        homology_index_[reps_[i]] = static_cast<std::int64_t>(i);
    ensure(echelon_.size() == boundary_rank + reps_.size(), "homology basis bookkeeping");
}

std::vector<Residue> HomologyBasis::coordinates(const SparseColumn& cycle) const
{
    std::vector<Residue> coords(reps_.size(), 0);
    auto rest = echelon_.reduce(cycle, [&](std::size_t idx, Residue coeff) {
        auto h = homology_index_[idx];
        if (h >= 0)
            coords[static_cast<std::size_t>(h)] = field_.add(coords[static_cast<std::size_t>(h)], coeff);
    });
    ensure(rest.empty(), "vector passed to HomologyBasis::coordinates is not a cycle");
    return coords;
}

// ---------------------------------------------------------------------------
// Symmetry

VertexMask rotate_mask(VertexMask mask, int n, int shift)
{
    shift = ((shift % n) + n) % n;
    VertexMask out = 0;
    for (int b = 0; b < n; ++b)
        if (mask & (VertexMask{1} << b))
            out |= VertexMask{1} << ((b + shift) % n);
    return out;
}

std::pair<CubicalCell, int> rotate_cell(const CubicalCell& cell, int n, int shift)
{
    CubicalCell image{rotate_mask(cell.face, n, shift), rotate_mask(cell.signs & ~cell.face, n, shift)};
    // Sign of the permutation taking the sorted coordinates of the face to the
    // sorted coordinates of its image.
    std::vector<int> targets;
    for (int b = 0; b < n; ++b)
        if (cell.face & (VertexMask{1} << b))
            targets.push_back((b + ((shift % n) + n) % n) % n);
    int inversions = 0;
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] > targets[j])
                ++inversions;
    return {image, inversions % 2 == 0 ? 1 : -1};
}

InducedAction rotation_action(const CubicalChainComplex& c, const SimplicialComplex& k, int shift)
{
    const int n = c.n();
    if (k.n() != n)
        throw ArgumentError("complex and simplicial complex disagree on the vertex count");
    for (auto& f : k.facets()) {
        VertexMask m = 0;
        for (int v : f)
            m |= VertexMask{1} << (v - 1);
        if (!k.contains(rotate_mask(m, n, shift)))
            throw SymmetryError("rotation by " + std::to_string(shift) + " does not preserve the simplicial complex");
    }

    InducedAction action;
    action.vertex_permutation.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        action.vertex_permutation[static_cast<std::size_t>(v)] = ((v - 1 + shift) % n + n) % n + 1;

    for (int d = 0; d <= c.top_dim(); ++d) {
        SparseFpMatrix map(c.p(), c.cell_count(d), c.cell_count(d));
        const auto& cells = c.cells(d);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto [image, sign] = rotate_cell(cells[i], n, shift);
            auto idx = c.index_of(image);
            ensure(idx.has_value(), "rotated cell missing from the complex");
            map.set_column(i, {{*idx, c.field().reduce(sign)}});
        }
        action.chain_maps.push_back(std::move(map));
    }
    for (int d = 1; d <= c.top_dim(); ++d) {
        const auto& bd = c.boundary(d);
        auto lhs = bd * action.chain_maps[static_cast<std::size_t>(d)];
        auto rhs = action.chain_maps[static_cast<std::size_t>(d) - 1] * bd;
        ensure(lhs == rhs, "rotation chain map does not commute with the boundary");
    }

    for (int k = 0; k <= c.top_dim(); ++k) {
        HomologyBasis h(c, k);
        const auto& f = action.chain_maps[static_cast<std::size_t>(k)];
        SparseFpMatrix m(c.p(), h.dim(), h.dim());
        for (std::size_t i = 0; i < h.dim(); ++i) {
            auto coords = h.coordinates(f.apply(h.representative(i)));
            SparseColumn col;
            for (std::size_t r = 0; r < coords.size(); ++r)
                if (coords[r] != 0)
                    col.push_back({static_cast<std::uint32_t>(r), coords[r]});
            m.set_column(i, std::move(col));
        }
        action.homology_maps.push_back(std::move(m));
    }
    if (c.top_dim() < 1)
        action.homology_maps.emplace_back(c.p(), 0, 0);
    return action;
}

FixedSubcomplex fixed_subcomplex(const CubicalChainComplex& c, int m)
{
    const int n = c.n();
    if (m < 1 || n % m != 0)
        throw ArgumentError("subgroup order " + std::to_string(m) + " does not divide n = " + std::to_string(n));
    const int shift = n / m;
    std::vector<std::vector<CubicalCell>> fixed;
    for (int d = 0; d <= c.top_dim(); ++d) {
        std::vector<CubicalCell> keep;
        for (auto& cell : c.cells(d)) {
            // Interval coordinates must be fixed points of the rotation; endpoint
            // coordinates must be constant along rotation orbits.
            if (rotate_mask(cell.face, n, shift) != cell.face)
                continue;
            bool face_pointwise = true;
            for (int b = 0; b < n; ++b)
                if ((cell.face & (VertexMask{1} << b)) && (b + shift) % n != b)
                    face_pointwise = false;
            if (!face_pointwise)
                continue;
            if (rotate_mask(cell.signs, n, shift) != cell.signs)
                continue;
            keep.push_back(cell);
        }
        if (keep.empty())
            break;
        fixed.push_back(std::move(keep));
    }
    std::vector<VertexMask> vertices;
    if (!fixed.empty())
        for (auto& v : fixed[0])
            vertices.push_back(v.signs);
    return FixedSubcomplex{CubicalChainComplex(c.p(), n, std::move(fixed)), m, shift, std::move(vertices)};
}

std::vector<Orbit> orbit_decomposition(const std::vector<VertexMask>& vertices, int n, std::uint32_t p)
{
    std::set<VertexMask> remaining(vertices.begin(), vertices.end());
    std::vector<Orbit> orbits;
    while (!remaining.empty()) {
        const VertexMask rep = *remaining.begin();
        std::size_t size = 0;
        VertexMask v = rep;
        do {
            ensure(remaining.erase(v) == 1, "vertex set is not closed under the rotation");
            ++size;
            v = rotate_mask(v, n, 1);
        } while (v != rep);
        const std::size_t stabilizer = static_cast<std::size_t>(n) / size;
        ensure(static_cast<std::size_t>(n) % size == 0, "orbit size does not divide the group order");
        ensure(stabilizer % p == 0, "stabilizer order not divisible by p");
        orbits.push_back({size, stabilizer, rep});
    }
    return orbits;
}

}  // namespace eqcoho
