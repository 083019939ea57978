#include <doctest.h>

#include <json.hpp>
#include <map>
#include <sstream>

#include "eqcoho/errors.h"
#include "eqcoho/polygon_report.h"

using namespace eqcoho;

namespace {

/// Parses "key: value" lines into a map.
std::map<std::string, std::string> text_fields(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(": ");
        if (colon != std::string::npos)
            out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

}  // namespace

TEST_CASE("report examples")
{
    const auto r33 = analyze_polygon(3, 3);
    CHECK(r33.g_formal);
    CHECK(r33.pg_verdict == PGVerdict::Free);
    CHECK(r33.betti == std::vector<std::size_t>{1, 0, 1});
    CHECK(r33.genus == 0);

    const auto r42 = analyze_polygon(4, 2);
    CHECK(r42.k_formal);
    CHECK_FALSE(r42.g_formal);
    CHECK(r42.pg_verdict == PGVerdict::Free);

    const auto r55 = analyze_polygon(5, 5);
    CHECK(r55.pg_verdict == PGVerdict::Torsion);
    CHECK(r55.torsion_dim == 2);
    CHECK(r55.lyndon_summary.single_block_count == 4);
    CHECK(r55.lyndon_summary.divisor_set == std::vector<std::uint64_t>{1});
    CHECK(r55.lyndon_summary.lyndon_counts ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {5, 6}});
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(analyze_polygon(6, 4), DomainError);
    CHECK_THROWS_AS(analyze_polygon(5, 2), DomainError);
    CHECK_THROWS_AS(analyze_polygon(2, 2), ArgumentError);
    CHECK_THROWS_AS(analyze_polygon(14, 2), ArgumentError);
    CHECK_NOTHROW(validate_polygon_input(12, 3));
}

TEST_CASE("sweep order is deterministic")
{
    const auto pairs = sweep_pairs(6);
    CHECK(pairs == std::vector<std::pair<int, std::uint32_t>>{{3, 3}, {4, 2}, {5, 5}, {6, 2}, {6, 3}});
    const auto reports = sweep(8);
    const auto expected = sweep_pairs(8);
    REQUIRE(reports.size() == expected.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].n == expected[i].first);
        CHECK(reports[i].p == expected[i].second);
        CHECK(reports[i] == analyze_polygon(expected[i].first, expected[i].second));
    }
    CHECK_FALSE(reports[3].k_formal);  // (6, 2)
    CHECK(reports[4].pg_verdict == PGVerdict::Torsion);  // (6, 3)
}

TEST_CASE("JSON round trip")
{
    for (auto [n, p] : sweep_pairs(8)) {
        const auto r = analyze_polygon(n, p);
        CHECK(polygon_report_from_json(to_json(r)) == r);
        CHECK(polygon_report_from_json(to_json(r, -1)) == r);
    }
    CHECK_THROWS_AS(polygon_report_from_json("{}"), ParseError);
    CHECK_THROWS_AS(polygon_report_from_json("[1, 2"), ParseError);
}

TEST_CASE("JSON keys are snake_case field names")
{
    const auto j = nlohmann::json::parse(to_json(analyze_polygon(4, 2)));
    for (const char* key : {"n", "p", "betti", "genus", "euler_characteristic", "b_xk", "fixed_orbit_profile",
                            "k_formal", "g_formal", "e2_window", "localization_lhs", "localization_rhs",
                            "degenerate", "pg_verdict", "torsion_dim", "free_rank", "lyndon_summary"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["pg_verdict"] == "FREE");
}

TEST_CASE("text and JSON agree on numeric fields")
{
    for (auto [n, p] : sweep_pairs(7)) {
        const auto r = analyze_polygon(n, p);
        const auto j = nlohmann::json::parse(to_json(r));
        const auto t = text_fields(render_text(r));
        for (const char* key : {"n", "p", "genus", "euler_characteristic", "b_xk", "localization_rhs", "torsion_dim"})
            CHECK(t.at(key) == j[key].dump());
        CHECK(t.at("k_formal") == j["k_formal"].dump());
        CHECK(t.at("g_formal") == j["g_formal"].dump());
        CHECK(t.at("degenerate") == j["degenerate"].dump());
        CHECK(t.at("pg_verdict") == j["pg_verdict"].get<std::string>());
        std::string betti;
        for (auto& b : j["betti"])
            betti += (betti.empty() ? "" : " ") + b.dump();
        CHECK(t.at("betti") == betti);
        for (std::size_t q = 0; q < r.e2_window.size(); ++q) {
            std::string row;
            for (auto& v : j["e2_window"][q])
                row += (row.empty() ? "" : " ") + v.dump();
            CHECK(t.at("e2_window[q=" + std::to_string(q) + "]") == row);
        }
    }
}

TEST_CASE("sweep renderings")
{
    const auto reports = sweep(6);
    const auto text = render_sweep_text(reports);
    CHECK(text.find("pg_verdict") != std::string::npos);
    std::istringstream in(text);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line))
        ++lines;
    CHECK(lines == reports.size() + 1);
    const auto j = nlohmann::json::parse(render_sweep_json(reports));
    REQUIRE(j.size() == reports.size());
    CHECK(j[0]["g_formal"] == true);
    CHECK(j[2]["torsion_dim"] == 2);
}

TEST_CASE("E2 charts")
{
    const std::vector<std::vector<std::size_t>> grid{{1, 1, 1, 1}, {0, 0, 0, 0}, {1, 1, 1, 1}};
    const auto ascii = render_e2_ascii(grid, "title");
    CHECK(ascii.rfind("title\n", 0) == 0);
    CHECK(ascii.find("q=1  | 0 0 0 0") != std::string::npos);
    CHECK(ascii.find("q=2") < ascii.find("q=0"));
    const auto tikz = render_e2_tikz(grid, "title");
    CHECK(tikz.rfind("\\documentclass", 0) == 0);
    CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(tikz.find("\\end{document}") != std::string::npos);
    CHECK(tikz.find("grid (4,3)") != std::string::npos);
}
