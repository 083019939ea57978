#include "eqcoho/borel_ss.h"

#include <algorithm>
#include <string>

#include "eqcoho/lyndon.h"

namespace eqcoho {

E2Page::E2Page(int n, std::uint32_t p, std::vector<CohomologyProfile> rows, int window)
    : n_(n), p_(p), rows_(std::move(rows)), window_(window)
{
    if (window_ < top_row() + 3)
        throw ArgumentError("E2 window " + std::to_string(window_) + " must be at least top row + 3 = " +
                            std::to_string(top_row() + 3));
}

std::size_t E2Page::at(int k, int q) const
{
    if (k < 0 || q < 0 || q > top_row())
        return 0;
    return rows_[static_cast<std::size_t>(q)].dim_at(k);
}

std::size_t E2Page::antidiagonal(int total) const
{
    std::size_t sum = 0;
    for (int q = 0; q <= top_row() && q <= total; ++q)
        sum += at(total - q, q);
    return sum;
}

std::vector<std::vector<std::size_t>> E2Page::grid() const
{
    std::vector<std::vector<std::size_t>> g;
    for (int q = 0; q <= top_row(); ++q) {
        std::vector<std::size_t> row;
        for (int k = 0; k < window_; ++k)
            row.push_back(at(k, q));
        g.push_back(std::move(row));
    }
    return g;
}

E2Page e2_page(std::span<const GModule> rows, int window)
{
    if (rows.empty())
        throw ArgumentError("E2 page needs at least one row");
    const int n = rows.front().n();
    const std::uint32_t p = rows.front().p();
    std::vector<CohomologyProfile> profiles;
    for (auto& m : rows) {
        if (m.n() != n || m.p() != p)
            throw ArgumentError("E2 rows must share the group order and modulus");
        profiles.push_back(cohomology_profile(m));
    }
    return E2Page(n, p, std::move(profiles), window);
}

LocalizationAccounting localization_accounting(const E2Page& page, std::size_t rhs)
{
    LocalizationAccounting acc;
    acc.rhs = rhs;
    acc.degenerate = true;
    for (int k = page.top_row() + 1; k < page.window(); ++k) {
        const std::size_t lhs = page.antidiagonal(k);
        acc.lhs.emplace_back(k, lhs);
        if (lhs != rhs)
            acc.degenerate = false;
    }
    return acc;
}

LocalizationAccounting polygon_localization_accounting(const E2Page& page)
{
    const int n = page.n();
    const int p = static_cast<int>(page.p());
    if (n % p != 0)
        throw DomainError("p must divide n");
    return localization_accounting(page, necklace_count(n / p));
}

bool k_formality(std::size_t b_x, std::size_t b_xk) { return b_x == b_xk; }

FormalityReport g_formality(std::size_t b_x, std::size_t b_xk, std::span<const Orbit> fixed_orbits,
                            bool fixed_set_discrete)
{
    FormalityReport r;
    r.b_x = b_x;
    r.b_xk = b_xk;
    r.k_formal = k_formality(b_x, b_xk);
    if (!fixed_set_discrete) {
        r.status = Decision::Undecided;
        return r;
    }
    r.xk_g_formal = std::all_of(fixed_orbits.begin(), fixed_orbits.end(), [](const Orbit& o) { return o.size == 1; });
    r.g_formal = r.k_formal && r.xk_g_formal;
    return r;
}

std::string_view to_string(PGVerdict v)
{
    switch (v) {
    case PGVerdict::Free:
        return "FREE";
    case PGVerdict::Torsion:
        return "TORSION";
    case PGVerdict::Undecided:
        return "UNDECIDED";
    }
    return "?";
}

std::optional<PGVerdict> pg_verdict_from_string(std::string_view s)
{
    for (auto v : {PGVerdict::Free, PGVerdict::Torsion, PGVerdict::Undecided})
        if (to_string(v) == s)
            return v;
    return std::nullopt;
}

PGFreenessReport pg_freeness(std::span<const GModule> rows, const E2Page& page,
                             const LocalizationAccounting& accounting, std::optional<int> polygon_n)
{
    PGFreenessReport r;
    r.degenerate_at_e2 = accounting.degenerate;
    bool all_pass = true;
    for (auto& m : rows) {
        RowHypotheses h;
        h.hypotheses = freeness_hypotheses(m);
        h.trivial_action = m.sigma().is_identity() && !m.semisimple_regime();
        all_pass = all_pass && h.passes();
        r.rows.push_back(h);
    }
    if (polygon_n)
        r.torsion_dim_degree1 = lyndon_plus_count(*polygon_n);

    if (all_pass && r.degenerate_at_e2) {
        r.verdict = PGVerdict::Free;
        // A free P_G-module has one generator per class in two consecutive
        // degrees once the antidiagonals are stable.
        const int last = page.window() - 1;
        r.free_rank = page.antidiagonal(last) + page.antidiagonal(last - 1);
        if (r.torsion_dim_degree1)
            ensure(*r.torsion_dim_degree1 == 0, "free verdict contradicts a positive torsion count");
    }
    else if (r.torsion_dim_degree1 && *r.torsion_dim_degree1 > 0) {
        r.verdict = PGVerdict::Torsion;
    }
    return r;
}

std::size_t fixed_point_equivariant_dims(std::span<const Orbit> orbits, int n, std::uint32_t p, int k)
{
    for (auto& o : orbits) {
        ensure(o.stabilizer_order * o.size == static_cast<std::size_t>(n), "orbit-stabilizer mismatch");
        ensure(o.stabilizer_order % p == 0, "stabilizer order not divisible by p");
    }
    return k < 0 ? 0 : orbits.size();
}

GModule sigma_g_module(int n, std::uint32_t p)
{
    if (n < 2)
        throw DomainError("suspension module needs n >= 2");
    if (n % static_cast<int>(p) != 0)
        throw DomainError("p must divide n");
    const std::size_t dim = static_cast<std::size_t>(n) - 1;
    const PrimeField f(p);
    SparseFpMatrix a(p, dim, dim);
    for (std::size_t i = 0; i + 1 < dim; ++i)
        a.set_column(i, {{static_cast<std::uint32_t>(i + 1), 1}});
    SparseColumn last;
    for (std::size_t j = 0; j < dim; ++j)
        last.push_back({static_cast<std::uint32_t>(j), f.neg(1)});
    a.set_column(dim - 1, std::move(last));
    return GModule(CyclicGroup(n), std::move(a));
}

}  // namespace eqcoho
