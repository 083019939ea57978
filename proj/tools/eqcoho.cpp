#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "eqcoho/borel_ss.h"
#include "eqcoho/errors.h"
#include "eqcoho/lyndon.h"
#include "eqcoho/polygon_report.h"

namespace {

using namespace eqcoho;

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int size_guard()
{
    if (const char* env = std::getenv("EQCOHO_MAX_N")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v >= 3)
                return v;
        }
        catch (const std::exception&) {
        }
        throw ArgumentError(std::string("EQCOHO_MAX_N must be an integer >= 3, got '") + env + "'");
    }
    return kDefaultSizeGuard;
}

std::pair<int, int> parse_degrees(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw ArgumentError("degree range must look like A..B, got '" + s + "'");
    try {
        std::size_t ua = 0, ub = 0;
        const auto a_text = s.substr(0, dots);
        const auto b_text = s.substr(dots + 2);
        const int a = std::stoi(a_text, &ua);
        const int b = std::stoi(b_text, &ub);
        if (ua != a_text.size() || ub != b_text.size())
            throw std::invalid_argument("trailing characters");
        if (a < 0 || b < a)
            throw ArgumentError("degree range must satisfy 0 <= A <= B, got '" + s + "'");
        return {a, b};
    }
    catch (const std::logic_error&) {
        throw ArgumentError("degree range must look like A..B, got '" + s + "'");
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

void cmd_report(int n, std::uint32_t p, bool json)
{
    const auto r = analyze_polygon(n, p, {.window = kDefaultWindow, .size_guard = size_guard()});
    std::cout << (json ? to_json(r) + "\n" : render_text(r));
}

void cmd_sweep(int max_n, bool json, bool force)
{
    const int guard = size_guard();
    if (max_n > guard && !force)
        throw ArgumentError("max-n = " + std::to_string(max_n) + " exceeds the size guard " + std::to_string(guard) +
                            "; pass --force or set EQCOHO_MAX_N");
    const auto reports = sweep(max_n, {.window = kDefaultWindow, .size_guard = std::max(guard, max_n)});
    std::cout << (json ? render_sweep_json(reports) + "\n" : render_sweep_text(reports));
}

void cmd_e2(int n, std::uint32_t p, int cols, const std::string& render, const std::string& space)
{
    if (cols < 1)
        throw ArgumentError("cols must be positive");
    std::vector<GModule> rows;
    std::string title;
    if (space == "polygon") {
        validate_polygon_input(n, p);
        const auto k = polygon_complex(n);
        const auto x = build_complex(k, p, size_guard());
        auto action = rotation_action(x, k, 1);
        for (auto& m : action.homology_maps)
            rows.emplace_back(CyclicGroup(n), std::move(m));
        title = "E2 page, polygon n=" + std::to_string(n) + ", p=" + std::to_string(p);
    }
    else {
        if (!is_prime(p))
            throw DomainError("p = " + std::to_string(p) + " is not prime");
        rows = {trivial_module(n, p, 1), sigma_g_module(n, p), trivial_module(n, p, 0)};
        title = "E2 page, suspension n=" + std::to_string(n) + ", p=" + std::to_string(p);
    }
    const int top = static_cast<int>(rows.size()) - 1;
    const auto page = e2_page(rows, std::max(cols, top + 3));
    auto grid = page.grid();
    for (auto& row : grid)
        row.resize(static_cast<std::size_t>(cols));
    if (render == "tikz") {
        std::cout << render_e2_tikz(grid, title);
        return;
    }
    std::cout << render_e2_ascii(grid, title);
    std::cout << "antidiagonal:";
    for (int t = 0; t < cols; ++t)
        std::cout << " " << page.antidiagonal(t);
    std::cout << "\n";
}

void cmd_lyndon(int length, bool by_blocks)
{
    if (length < 1)
        throw ArgumentError("length must be positive");
    const auto table = lyndon_words(length);
    std::cout << "length: " << length << "\n";
    std::cout << "total: " << table.words.size() << "\n";
    if (by_blocks) {
        for (auto [blocks, count] : zero_block_histogram(length))
            std::cout << "blocks " << blocks << ": " << count << "\n";
        return;
    }
    for (auto& w : table.words)
        std::cout << w.str() << "\n";
}

void cmd_betti(int n, std::uint32_t p)
{
    if (n < 3)
        throw ArgumentError("n must be at least 3, got " + std::to_string(n));
    const auto x = build_complex(polygon_complex(n), PrimeField(p).modulus(), size_guard());
    const auto b = betti_numbers(x);
    std::cout << "betti: " << b.at(0) << " " << b.at(1) << " " << b.at(2) << "\n";
}

void cmd_module_cohomology(const std::string& path, const std::string& degrees)
{
    const auto [a, b] = parse_degrees(degrees);
    const auto m = gmodule_from_json(read_file(path));
    const auto profile = cohomology_profile(m);
    const auto h = freeness_hypotheses(m);
    std::cout << "n: " << m.n() << "\np: " << m.p() << "\ndim: " << m.dim() << "\n";
    for (int k = a; k <= b; ++k)
        std::cout << "H^" << k << ": " << profile.dim_at(k) << "\n";
    std::cout << "norm_zero: " << flag(h.norm_zero) << "\n";
    std::cout << "kernel_in_image: " << flag(h.kernel_in_image) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant cohomology of cyclic actions on polyhedral products"};
    app.require_subcommand(1);

    int n = 0;
    std::uint32_t p = 0;
    bool json = false;

    auto* report = app.add_subcommand("report", "Full analysis of the rotation action on the n-gon surface");
    report->add_option("--n", n, "Number of polygon vertices")->required();
    report->add_option("--p", p, "Prime dividing n")->required();
    report->add_flag("--json", json, "Emit JSON");

    int max_n = 0;
    bool force = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verdict table for all (n, p) with 3 <= n <= max-n and p | n");
    sweep_cmd->add_option("--max-n", max_n, "Largest n")->required();
    sweep_cmd->add_flag("--json", json, "Emit JSON");
    sweep_cmd->add_flag("--force", force, "Ignore the size guard");

    int cols = 0;
    std::string render = "ascii";
    std::string space = "polygon";
    auto* e2 = app.add_subcommand("e2", "Chart of the E2 page");
    e2->add_option("--n", n, "Group order")->required();
    e2->add_option("--p", p, "Prime dividing n")->required();
    e2->add_option("--cols", cols, "Number of columns")->required();
    e2->add_option("--render", render, "ascii or tikz")->check(CLI::IsMember({"ascii", "tikz"}));
    e2->add_option("--space", space, "polygon or suspension")->check(CLI::IsMember({"polygon", "suspension"}));

    int length = 0;
    bool by_blocks = false;
    auto* lyndon = app.add_subcommand("lyndon", "Binary Lyndon words of a given length");
    lyndon->add_option("--length", length, "Word length")->required();
    lyndon->add_flag("--by-blocks", by_blocks, "Histogram by number of zero blocks");

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the n-gon surface over F_p");
    betti_cmd->add_option("--n", n, "Number of polygon vertices")->required();
    betti_cmd->add_option("--p", p, "Prime")->required();

    std::string file;
    std::string degrees;
    auto* modcoh = app.add_subcommand("module-cohomology", "Group cohomology of a module given as JSON");
    modcoh->add_option("--file", file, "Module JSON file")->required();
    modcoh->add_option("--degrees", degrees, "Degree range A..B")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*report)
            cmd_report(n, p, json);
        else if (*sweep_cmd)
            cmd_sweep(max_n, json, force);
        else if (*e2)
            cmd_e2(n, p, cols, render, space);
        else if (*lyndon)
            cmd_lyndon(length, by_blocks);
        else if (*betti_cmd)
            cmd_betti(n, p);
        else if (*modcoh)
            cmd_module_cohomology(file, degrees);
    }
    catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
