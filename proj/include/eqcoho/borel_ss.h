#pragma once

// E_2 pages of the Serre spectral sequence of X -> X_G -> BG for G = C_n,
// degeneration by dimension accounting against the fixed-point target, and
// the formality and P_G-freeness verdicts built on top of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eqcoho/cyclic_rep.h"
#include "eqcoho/moment_angle.h"

namespace eqcoho {

inline constexpr int kDefaultWindow = 8;

/// dims[k][q] = dim H^k(G; H^q(X)) for k in [0, window).
class E2Page {
public:
    E2Page(int n, std::uint32_t p, std::vector<CohomologyProfile> rows, int window);

    int n() const { return n_; }
    std::uint32_t p() const { return p_; }
    int window() const { return window_; }
    /// Highest q with a row (the dimension of X for the pages built here).
    int top_row() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<CohomologyProfile>& rows() const { return rows_; }

    /// Entry at (k, q); rows are 2-periodic for k >= 1, so any k >= 0 is valid.
    std::size_t at(int k, int q) const;
    /// sum_i dim E_2^{i, total - i}
    std::size_t antidiagonal(int total) const;
    /// The window as a grid indexed [q][k].
    std::vector<std::vector<std::size_t>> grid() const;

private:
    int n_;
    std::uint32_t p_;
    std::vector<CohomologyProfile> rows_;
    int window_;
};

/// Throws ArgumentError if the rows disagree on (n, p) or the window is
/// shorter than top row + 3.
E2Page e2_page(std::span<const GModule> rows, int window = kDefaultWindow);

struct LocalizationAccounting {
    std::vector<std::pair<int, std::size_t>> lhs;  ///< (k, antidiagonal dimension) for the tested degrees
    std::size_t rhs = 0;
    bool degenerate = false;
};

/// Compares the antidiagonals k in (top_row, window) with `rhs`, the
/// dimension of H^k_G(X^K) in those degrees.
LocalizationAccounting localization_accounting(const E2Page& page, std::size_t rhs);
/// Same with rhs = number of binary necklaces of length n/p.
LocalizationAccounting polygon_localization_accounting(const E2Page& page);

bool k_formality(std::size_t b_x, std::size_t b_xk);

enum class Decision { Decided, Undecided };

struct FormalityReport {
    std::size_t b_x = 0;
    std::size_t b_xk = 0;
    bool k_formal = false;
    bool xk_g_formal = false;
    bool g_formal = false;
    Decision status = Decision::Decided;
};

/// X^K must be discrete; G-formality of a finite G-set holds iff G acts trivially.
FormalityReport g_formality(std::size_t b_x, std::size_t b_xk, std::span<const Orbit> fixed_orbits,
                            bool fixed_set_discrete = true);

enum class PGVerdict { Free, Torsion, Undecided };
std::string_view to_string(PGVerdict v);
std::optional<PGVerdict> pg_verdict_from_string(std::string_view s);

struct RowHypotheses {
    FreenessHypotheses hypotheses;
    bool trivial_action = false;
    /// Row q of E_2 is a free P_G-module of the expected shape.
    bool passes() const { return hypotheses.norm_zero && (hypotheses.kernel_in_image || trivial_action); }
};

struct PGFreenessReport {
    std::vector<RowHypotheses> rows;
    bool degenerate_at_e2 = false;
    PGVerdict verdict = PGVerdict::Undecided;
    std::optional<std::size_t> free_rank;
    std::optional<std::size_t> torsion_dim_degree1;
};

/// FREE when every row passes and the accounting shows degeneration; for a
/// polygon of n vertices (polygon_n set), TORSION when the Lyndon torsion
/// count is positive; UNDECIDED otherwise.
PGFreenessReport pg_freeness(std::span<const GModule> rows, const E2Page& page,
                             const LocalizationAccounting& accounting, std::optional<int> polygon_n = std::nullopt);

/// dim H^k_G(X^K) for a discrete fixed set: one class per orbit in every degree.
std::size_t fixed_point_equivariant_dims(std::span<const Orbit> orbits, int n, std::uint32_t p, int k);

/// The (n-1)-dimensional action on H^1 of the suspension of C_n:
/// e_i -> e_{i+1} for i < n-1, e_{n-1} -> -(e_1 + ... + e_{n-1}).
GModule sigma_g_module(int n, std::uint32_t p);

}  // namespace eqcoho
