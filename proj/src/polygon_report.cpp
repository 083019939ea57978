#include "eqcoho/polygon_report.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include "eqcoho/lyndon.h"
#include "json_util.h"

namespace eqcoho {

void validate_polygon_input(int n, std::uint32_t p)
{
    if (n < 3)
        throw ArgumentError("n must be at least 3, got " + std::to_string(n));
    if (!is_prime(p))
        throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (n % static_cast<int>(p) != 0)
        throw DomainError("p = " + std::to_string(p) + " does not divide n = " + std::to_string(n));
}

PolygonReport analyze_polygon(int n, std::uint32_t p, const AnalysisOptions& opts)
{
    validate_polygon_input(n, p);
    const auto k = polygon_complex(n);
    const auto x = build_complex(k, p, opts.size_guard);

    PolygonReport r;
    r.n = n;
    r.p = p;
    const auto b = betti_numbers(x);
    r.betti = {b.at(0), b.at(1), b.at(2)};
    r.euler_characteristic = x.euler_characteristic();
    ensure(b.at(1) % 2 == 0, "odd first Betti number for a closed orientable surface");
    r.genus = static_cast<std::int64_t>(b.at(1) / 2);

    // Rows of E_2: the generator acting on each homology group.
    const auto action = rotation_action(x, k, 1);
    std::vector<GModule> rows;
    for (int q = 0; q <= x.top_dim(); ++q)
        rows.emplace_back(CyclicGroup(n), action.homology_maps[static_cast<std::size_t>(q)]);

    const auto fixed = fixed_subcomplex(x, static_cast<int>(p));
    const bool discrete = fixed.complex.top_dim() == 0;
    r.b_xk = betti_numbers(fixed.complex).total();
    const auto orbits = orbit_decomposition(fixed.vertices, n, p);
    for (auto& o : orbits)
        r.fixed_orbit_profile.emplace_back(o.size, o.stabilizer_order);

    const auto formality = g_formality(b.total(), r.b_xk, orbits, discrete);
    r.k_formal = formality.k_formal;
    r.g_formal = formality.g_formal;

    const auto page = e2_page(rows, opts.window);
    r.e2_window = page.grid();
    const auto accounting = polygon_localization_accounting(page);
    ensure(accounting.rhs == fixed_point_equivariant_dims(orbits, n, p, 0),
           "necklace count disagrees with the fixed-point orbit count");
    r.localization_lhs = accounting.lhs;
    r.localization_rhs = accounting.rhs;
    r.degenerate = accounting.degenerate;

    const auto freeness = pg_freeness(rows, page, accounting, n);
    r.pg_verdict = freeness.verdict;
    r.torsion_dim = freeness.verdict == PGVerdict::Free ? 0 : freeness.torsion_dim_degree1.value_or(0);
    r.free_rank = freeness.free_rank;

    for (auto d : divisors(static_cast<std::uint64_t>(n)))
        r.lyndon_summary.lyndon_counts.emplace_back(d, lyndon_count(static_cast<int>(d)));
    r.lyndon_summary.single_block_count = lyndon_count_with_zero_blocks(n, 1);
    r.lyndon_summary.divisor_set = divisors_with_p_cofactor(static_cast<std::uint64_t>(n), p);
    return r;
}

std::vector<std::pair<int, std::uint32_t>> sweep_pairs(int max_n)
{
    std::vector<std::pair<int, std::uint32_t>> pairs;
    for (int n = 3; n <= max_n; ++n)
        for (std::uint32_t p = 2; p <= static_cast<std::uint32_t>(n); ++p)
            if (is_prime(p) && n % static_cast<int>(p) == 0)
                pairs.emplace_back(n, p);
    return pairs;
}

std::vector<PolygonReport> sweep(int max_n, const AnalysisOptions& opts)
{
    const auto pairs = sweep_pairs(max_n);
    std::vector<std::optional<PolygonReport>> results(pairs.size());
    std::vector<std::exception_ptr> errors(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            try {
                results[i] = analyze_polygon(pairs[i].first, pairs[i].second, opts);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(pairs.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    std::vector<PolygonReport> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*results[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json report_json(const PolygonReport& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["betti"] = r.betti;
    j["genus"] = r.genus;
    j["euler_characteristic"] = r.euler_characteristic;
    j["b_xk"] = r.b_xk;
    auto orbits = nlohmann::json::array();
    for (auto [size, stab] : r.fixed_orbit_profile)
        orbits.push_back({{"size", size}, {"stabilizer", stab}});
    j["fixed_orbit_profile"] = std::move(orbits);
    j["k_formal"] = r.k_formal;
    j["g_formal"] = r.g_formal;
    j["e2_window"] = r.e2_window;
    auto lhs = nlohmann::json::array();
    for (auto [k, v] : r.localization_lhs)
        lhs.push_back({{"k", k}, {"dim", v}});
    j["localization_lhs"] = std::move(lhs);
    j["localization_rhs"] = r.localization_rhs;
    j["degenerate"] = r.degenerate;
    j["pg_verdict"] = std::string(to_string(r.pg_verdict));
    j["torsion_dim"] = r.torsion_dim;
    j["free_rank"] = r.free_rank ? nlohmann::json(*r.free_rank) : nlohmann::json(nullptr);
    auto counts = nlohmann::json::array();
    for (auto [d, l] : r.lyndon_summary.lyndon_counts)
        counts.push_back({{"d", d}, {"count", l}});
    j["lyndon_summary"] = {{"lyndon_counts", std::move(counts)},
                           {"single_block_count", r.lyndon_summary.single_block_count},
                           {"divisor_set", r.lyndon_summary.divisor_set}};
    return j;
}

PolygonReport report_from(const nlohmann::json& j)
{
    using detail::require;
    PolygonReport r;
    r.n = require<int>(j, "n");
    r.p = require<std::uint32_t>(j, "p");
    r.betti = require<std::vector<std::size_t>>(j, "betti");
    r.genus = require<std::int64_t>(j, "genus");
    r.euler_characteristic = require<std::int64_t>(j, "euler_characteristic");
    r.b_xk = require<std::size_t>(j, "b_xk");
    for (auto& o : require<nlohmann::json>(j, "fixed_orbit_profile"))
        r.fixed_orbit_profile.emplace_back(require<std::size_t>(o, "size"), require<std::size_t>(o, "stabilizer"));
    r.k_formal = require<bool>(j, "k_formal");
    r.g_formal = require<bool>(j, "g_formal");
    r.e2_window = require<std::vector<std::vector<std::size_t>>>(j, "e2_window");
    for (auto& e : require<nlohmann::json>(j, "localization_lhs"))
        r.localization_lhs.emplace_back(require<int>(e, "k"), require<std::size_t>(e, "dim"));
    r.localization_rhs = require<std::size_t>(j, "localization_rhs");
    r.degenerate = require<bool>(j, "degenerate");
    auto verdict = pg_verdict_from_string(require<std::string>(j, "pg_verdict"));
    if (!verdict)
        throw ParseError("unknown pg_verdict", 0, 0);
    r.pg_verdict = *verdict;
    r.torsion_dim = require<std::size_t>(j, "torsion_dim");
    if (j.contains("free_rank") && !j["free_rank"].is_null())
        r.free_rank = require<std::size_t>(j, "free_rank");
    const auto& ls = require<nlohmann::json>(j, "lyndon_summary");
    for (auto& e : require<nlohmann::json>(ls, "lyndon_counts"))
        r.lyndon_summary.lyndon_counts.emplace_back(require<std::uint64_t>(e, "d"), require<std::uint64_t>(e, "count"));
    r.lyndon_summary.single_block_count = require<std::uint64_t>(ls, "single_block_count");
    r.lyndon_summary.divisor_set = require<std::vector<std::uint64_t>>(ls, "divisor_set");
    return r;
}

template <class Seq>
std::string join(const Seq& seq, const char* sep = " ")
{
    std::ostringstream os;
    bool first = true;
    for (auto& v : seq) {
        if (!first)
            os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_json(const PolygonReport& r, int indent) { return report_json(r).dump(indent); }

PolygonReport polygon_report_from_json(const std::string& text) { return report_from(detail::parse_json(text)); }

std::string render_text(const PolygonReport& r)
{
    std::ostringstream os;
    os << "n: " << r.n << "\n";
    os << "p: " << r.p << "\n";
    os << "betti: " << join(r.betti) << "\n";
    os << "genus: " << r.genus << "\n";
    os << "euler_characteristic: " << r.euler_characteristic << "\n";
    os << "b_xk: " << r.b_xk << "\n";
    os << "fixed_orbit_profile:";
    for (auto [size, stab] : r.fixed_orbit_profile)
        os << " " << size << "/" << stab;
    os << "\n";
    os << "k_formal: " << yes_no(r.k_formal) << "\n";
    os << "g_formal: " << yes_no(r.g_formal) << "\n";
    for (std::size_t q = 0; q < r.e2_window.size(); ++q)
        os << "e2_window[q=" << q << "]: " << join(r.e2_window[q]) << "\n";
    os << "localization_lhs:";
    for (auto [k, v] : r.localization_lhs)
        os << " " << k << "=" << v;
    os << "\n";
    os << "localization_rhs: " << r.localization_rhs << "\n";
    os << "degenerate: " << yes_no(r.degenerate) << "\n";
    os << "pg_verdict: " << to_string(r.pg_verdict) << "\n";
    os << "torsion_dim: " << r.torsion_dim << "\n";
    os << "free_rank: " << (r.free_rank ? std::to_string(*r.free_rank) : std::string("-")) << "\n";
    os << "lyndon_counts:";
    for (auto [d, l] : r.lyndon_summary.lyndon_counts)
        os << " " << d << "=" << l;
    os << "\n";
    os << "single_block_count: " << r.lyndon_summary.single_block_count << "\n";
    os << "divisor_set: " << join(r.lyndon_summary.divisor_set) << "\n";
    return os.str();
}

std::string render_sweep_text(const std::vector<PolygonReport>& reports)
{
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(5) << "p" << std::setw(10) << "k_formal" << std::setw(10)
       << "g_formal" << std::setw(12) << "pg_verdict"
       << "torsion_dim\n";
    for (auto& r : reports)
        os << std::left << std::setw(5) << r.n << std::setw(5) << r.p << std::setw(10) << yes_no(r.k_formal)
           << std::setw(10) << yes_no(r.g_formal) << std::setw(12) << to_string(r.pg_verdict) << r.torsion_dim << "\n";
    return os.str();
}

std::string render_sweep_json(const std::vector<PolygonReport>& reports, int indent)
{
    auto rows = nlohmann::json::array();
    for (auto& r : reports)
        rows.push_back({{"n", r.n},
                        {"p", r.p},
                        {"k_formal", r.k_formal},
                        {"g_formal", r.g_formal},
                        {"pg_verdict", std::string(to_string(r.pg_verdict))},
                        {"torsion_dim", r.torsion_dim}});
    return rows.dump(indent);
}

// ---------------------------------------------------------------------------
// Charts

std::string render_e2_ascii(const std::vector<std::vector<std::size_t>>& grid, const std::string& title)
{
    std::size_t width = 1;
    std::size_t cols = 0;
    for (auto& row : grid) {
        cols = std::max(cols, row.size());
        for (auto v : row)
            width = std::max(width, std::to_string(v).size());
    }
    width = std::max<std::size_t>(width, std::to_string(cols == 0 ? 0 : cols - 1).size()) + 1;
    std::ostringstream os;
    os << title << "\n";
    for (std::size_t q = grid.size(); q-- > 0;) {
        os << "q=" << std::setw(2) << std::left << q << " |";
        for (auto v : grid[q])
            os << std::setw(static_cast<int>(width)) << std::right << v;
        os << "\n";
    }
    os << "      +" << std::string(cols * width, '-') << "\n";
    os << "    k  ";
    for (std::size_t k = 0; k < cols; ++k)
        os << std::setw(static_cast<int>(width)) << std::right << k;
    os << "\n";
    return os.str();
}

std::string render_e2_tikz(const std::vector<std::vector<std::size_t>>& grid, const std::string& title)
{
    std::size_t cols = 0;
    for (auto& row : grid)
        cols = std::max(cols, row.size());
    const std::size_t rows = grid.size();
    std::ostringstream os;
    os << "\\documentclass[tikz,border=4pt]{standalone}\n";
    os << "\\begin{document}\n";
    os << "\\begin{tikzpicture}[x=1cm,y=1cm]\n";
    os << "  % " << title << "\n";
    os << "  \\draw[gray!40, very thin] (0,0) grid (" << cols << "," << rows << ");\n";
    os << "  \\draw[->] (0,0) -- (" << cols + 0.5 << ",0) node[right] {$k$};\n";
    os << "  \\draw[->] (0,0) -- (0," << rows + 0.5 << ") node[above] {$q$};\n";
    for (std::size_t k = 0; k < cols; ++k)
        os << "  \\node[below] at (" << k + 0.5 << ",0) {$" << k << "$};\n";
    for (std::size_t q = 0; q < rows; ++q)
        os << "  \\node[left] at (0," << q + 0.5 << ") {$" << q << "$};\n";
    for (std::size_t q = 0; q < rows; ++q) {
        for (std::size_t k = 0; k < grid[q].size(); ++k) {
            const auto v = grid[q][k];
            if (v == 0)
                os << "  \\node[gray] at (" << k + 0.5 << "," << q + 0.5 << ") {$0$};\n";
            else
                os << "  \\fill (" << k + 0.5 << "," << q + 0.5 << ") circle (1.5pt) node[above right, font=\\scriptsize] {$"
                   << v << "$};\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    os << "\\end{document}\n";
    return os.str();
}

}  // namespace eqcoho
