#include "eqcoho/cyclic_rep.h"

#include "json_util.h"

namespace eqcoho {

CyclicGroup::CyclicGroup(int n) : n_(n)
{
    if (n < 1)
        throw ArgumentError("cyclic group order must be at least 1, got " + std::to_string(n));
}

namespace {

SparseColumn unit(std::size_t j) { return {{static_cast<std::uint32_t>(j), 1}}; }

/// Applies sum_{k=0}^{n-1} coeff(k) sigma^k column by column; stays sparse.
template <class Coeff>
SparseFpMatrix power_sum(const GModule& m, Coeff coeff)
{
    const auto& f = m.sigma().field();
    SparseFpMatrix out(m.p(), m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
        SparseColumn cur = unit(j), acc;
        for (int k = 0; k < m.n(); ++k) {
            if (k > 0)
                cur = m.sigma().apply(cur);
            Residue c = f.reduce(coeff(k));
            if (c != 0)
                acc = axpy(f, acc, c, cur);
        }
        out.set_column(j, std::move(acc));
    }
    return out;
}

}  // namespace

GModule::GModule(CyclicGroup group, SparseFpMatrix sigma) : group_(group), sigma_(std::move(sigma))
{
    if (!sigma_.is_square())
        throw ShapeError("generator matrix must be square");
    // sigma^n e_j = e_j for every j, which also makes sigma invertible.
    for (std::size_t j = 0; j < sigma_.cols(); ++j) {
        SparseColumn v = unit(j);
        for (int k = 0; k < group_.order(); ++k)
            v = sigma_.apply(v);
        if (v != unit(j))
            throw DomainError("generator matrix does not satisfy sigma^" + std::to_string(group_.order()) +
                              " = identity");
    }
}

GModule::GModule(CyclicGroup group, const FpMatrix& sigma) : GModule(group, SparseFpMatrix::from_dense(sigma)) {}

GModule trivial_module(int n, std::uint32_t p, std::size_t dim)
{
    return GModule(CyclicGroup(n), SparseFpMatrix::identity(p, dim));
}

GModule regular_module(int n, std::uint32_t p)
{
    CyclicGroup g(n);
    SparseFpMatrix s(p, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        s.set_column(static_cast<std::size_t>(i), unit(static_cast<std::size_t>((i + 1) % n)));
    return GModule(g, std::move(s));
}

GModule direct_sum(int n, std::uint32_t p, std::span<const GModule> summands)
{
    CyclicGroup g(n);
    std::size_t total = 0;
    for (auto& m : summands) {
        if (m.n() != n || m.p() != p)
            throw ArgumentError("direct_sum: summands must share the group order and modulus");
        total += m.dim();
    }
    SparseFpMatrix s(p, total, total);
    std::size_t off = 0;
    for (auto& m : summands) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            SparseColumn col = m.sigma().column(j);
            for (auto& e : col)
                e.row += static_cast<std::uint32_t>(off);
            s.set_column(off + j, std::move(col));
        }
        off += m.dim();
    }
    return GModule(g, std::move(s));
}

SparseFpMatrix sigma_minus_identity(const GModule& m)
{
    return m.sigma() - SparseFpMatrix::identity(m.p(), m.dim());
}

SparseFpMatrix norm_operator(const GModule& m)
{
    return power_sum(m, [](int) { return 1; });
}

SparseFpMatrix weighted_sum_operator(const GModule& m)
{
    return power_sum(m, [](int k) { return k; });
}

std::size_t CohomologyProfile::dim_at(int k) const
{
    if (k < 0)
        return 0;
    const std::size_t invariants = dim - rank_sigma_minus_identity;
    if (k == 0)
        return invariants;
    if (semisimple)
        return 0;
    if (k % 2 == 0)
        return invariants - rank_norm;
    return (dim - rank_norm) - rank_sigma_minus_identity;
}

CohomologyProfile cohomology_profile(const GModule& m)
{
    CohomologyProfile prof;
    prof.dim = m.dim();
    prof.semisimple = m.semisimple_regime();
    prof.rank_sigma_minus_identity = rank(sigma_minus_identity(m));
    prof.rank_norm = rank(norm_operator(m));
    // N M lies in the invariants and (sigma - 1) M lies in ker N.
    ensure(prof.rank_norm + prof.rank_sigma_minus_identity <= prof.dim, "norm image exceeds the invariants");
    return prof;
}

std::size_t group_cohomology_dim(const GModule& m, int k) { return cohomology_profile(m).dim_at(k); }

GModule restrict_module(const GModule& m, int index)
{
    if (index < 1 || m.n() % index != 0)
        throw ArgumentError("restriction index " + std::to_string(index) + " does not divide n = " +
                            std::to_string(m.n()));
    SparseFpMatrix s(m.p(), m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
        SparseColumn v = unit(j);
        for (int k = 0; k < index; ++k)
            v = m.sigma().apply(v);
        s.set_column(j, std::move(v));
    }
    return GModule(CyclicGroup(m.n() / index), std::move(s));
}

FreenessHypotheses freeness_hypotheses(const GModule& m)
{
    FreenessHypotheses h;
    h.norm_zero = norm_operator(m).is_zero();
    const auto a = sigma_minus_identity(m);
    h.kernel_in_image = subspace_leq(kernel_basis(a), a);
    return h;
}

GModule gmodule_from_json(const std::string& text)
{
    auto j = detail::parse_json(text);
    const int n = detail::require<int>(j, "n");
    const auto p = detail::require<std::int64_t>(j, "p");
    const auto dim = detail::require<std::int64_t>(j, "dim");
    const auto rows = detail::require<std::vector<std::vector<std::int64_t>>>(j, "sigma");
    if (p < 2 || p >= PrimeField::kMaxModulus)
        throw DomainError("modulus out of range");
    if (dim < 0 || rows.size() != static_cast<std::size_t>(dim))
        throw ParseError("\"sigma\" must have \"dim\" rows", 0, 0);
    for (auto& r : rows)
        if (r.size() != static_cast<std::size_t>(dim))
            throw ParseError("\"sigma\" must be dim x dim", 0, 0);
    auto sigma = dim == 0 ? FpMatrix(static_cast<std::uint32_t>(p), 0, 0)
                          : FpMatrix::from_rows(static_cast<std::uint32_t>(p), rows);
    return GModule(CyclicGroup(n), sigma);
}

std::string gmodule_to_json(const GModule& m)
{
    nlohmann::json j;
    j["n"] = m.n();
    j["p"] = m.p();
    j["dim"] = m.dim();
    auto dense = m.sigma_dense();
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < dense.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < dense.cols(); ++c)
            row.push_back(dense.at(r, c));
        rows.push_back(std::move(row));
    }
    j["sigma"] = std::move(rows);
    return j.dump();
}

}  // namespace eqcoho
