#pragma once

// End-to-end analysis of the rotation action of C_n on Z_{K_n}(D^1, S^0)
// for the n-gon K_n, and its renderings.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcoho/borel_ss.h"

namespace eqcoho {

struct LyndonSummary {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> lyndon_counts;  ///< (d, l_d) for d | n
    std::uint64_t single_block_count = 0;                                ///< Lyndon words of length n with one zero block
    std::vector<std::uint64_t> divisor_set;                              ///< { d | n : p | n/d }
    bool operator==(const LyndonSummary&) const = default;
};

struct PolygonReport {
    int n = 0;
    std::uint32_t p = 0;
    std::vector<std::size_t> betti;  ///< (b0, b1, b2)
    std::int64_t genus = 0;
    std::int64_t euler_characteristic = 0;
    std::size_t b_xk = 0;
    std::vector<std::pair<std::size_t, std::size_t>> fixed_orbit_profile;  ///< (orbit size, stabilizer order)
    bool k_formal = false;
    bool g_formal = false;
    std::vector<std::vector<std::size_t>> e2_window;  ///< [q][k]
    std::vector<std::pair<int, std::size_t>> localization_lhs;
    std::size_t localization_rhs = 0;
    bool degenerate = false;
    PGVerdict pg_verdict = PGVerdict::Undecided;
    std::size_t torsion_dim = 0;
    std::optional<std::size_t> free_rank;
    LyndonSummary lyndon_summary;

    bool operator==(const PolygonReport&) const = default;
};

struct AnalysisOptions {
    int window = kDefaultWindow;
    int size_guard = kDefaultSizeGuard;
};

/// Checks n >= 3, p prime, p | n; throws DomainError/ArgumentError otherwise.
void validate_polygon_input(int n, std::uint32_t p);

PolygonReport analyze_polygon(int n, std::uint32_t p, const AnalysisOptions& opts = {});

/// All (n, p) with 3 <= n <= max_n and p a prime divisor of n, sorted by n then p.
std::vector<std::pair<int, std::uint32_t>> sweep_pairs(int max_n);
/// Pairs are analysed concurrently; the result order matches sweep_pairs.
std::vector<PolygonReport> sweep(int max_n, const AnalysisOptions& opts = {});

std::string to_json(const PolygonReport& r, int indent = 2);
PolygonReport polygon_report_from_json(const std::string& text);
/// "key: value" lines, one per field, using the JSON key names.
std::string render_text(const PolygonReport& r);

std::string render_sweep_text(const std::vector<PolygonReport>& reports);
std::string render_sweep_json(const std::vector<PolygonReport>& reports, int indent = 2);

/// Grid indexed [q][k]; the rows are drawn with q increasing upwards.
std::string render_e2_ascii(const std::vector<std::vector<std::size_t>>& grid, const std::string& title);
/// Standalone LaTeX document with a TikZ chart of the same grid.
std::string render_e2_tikz(const std::vector<std::vector<std::size_t>>& grid, const std::string& title);

}  // namespace eqcoho
