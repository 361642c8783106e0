#pragma once
// Plain-text report tables. Columns are space-aligned; row order is fixed by
// the schema enums so output is deterministic.

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "nobelgraph/community.hpp"
#include "nobelgraph/graph.hpp"
#include "nobelgraph/metrics.hpp"
#include "nobelgraph/projection.hpp"

namespace nobelgraph {

namespace detail {

inline std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

inline std::string growth_percent(std::size_t original, std::size_t final_count) {
    if (original == 0) return "n/a";
    double pct = 100.0 * (static_cast<double>(final_count) - static_cast<double>(original)) /
                 static_cast<double>(original);
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << (pct >= 0 ? "+" : "") << pct << "%";
    return os.str();
}

inline std::string fixed(double value, int places) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(places) << value;
    return os.str();
}

} // namespace detail

// Node/edge counts split by source, with growth of the enriched store over
// the original rows.
inline std::string render_growth_table(const GraphStats& s) {
    auto at = [](const auto& m, auto key) -> std::size_t {
        auto it = m.find(key);
        return it == m.end() ? 0 : it->second;
    };
    std::size_t n_orig = at(s.nodes_by_source, Source::original);
    std::size_t e_orig = at(s.edges_by_source, Source::original);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"", "Original", "Added", "Final", "Growth"});
    rows.push_back({"Nodes", std::to_string(n_orig), std::to_string(s.nodes_total - n_orig),
                    std::to_string(s.nodes_total),
                    detail::growth_percent(n_orig, s.nodes_total)});
    rows.push_back({"Edges", std::to_string(e_orig), std::to_string(s.edges_total - e_orig),
                    std::to_string(s.edges_total),
                    detail::growth_percent(e_orig, s.edges_total)});
    std::string out = detail::format_table(rows);
    out += '\n';

    rows.clear();
    rows.push_back({"Label", "Count"});
    for (const auto& [label, count] : s.nodes_by_label)
        rows.push_back({std::string(to_string(label)), std::to_string(count)});
    out += detail::format_table(rows);
    out += '\n';

    rows.clear();
    rows.push_back({"Relation", "Count"});
    for (const auto& [rel, count] : s.edges_by_type)
        rows.push_back({std::string(to_string(rel)), std::to_string(count)});
    out += detail::format_table(rows);
    return out;
}

// Target-versus-random comparison of the small-world metrics, one row per
// metric, plus the verdict and the baseline parameters.
inline std::string render_small_world_table(const SmallWorldReport& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Metric", "Target", "Random", "Ratio (Target/Random)"});
    rows.push_back({"Average Shortest Path Length (L)", detail::fixed(r.L, 4),
                    detail::fixed(r.L_rand, 4), detail::fixed(r.ratio_L, 4)});
    rows.push_back({"Average Clustering Coefficient (C)", detail::fixed(r.C, 4),
                    detail::fixed(r.C_rand, 4), detail::fixed(r.ratio_C, 4)});
    std::string out = detail::format_table(rows);
    out += "small-world: ";
    out += r.small_world ? "yes" : "no";
    out += " (requires C ratio >= " + detail::fixed(r.thresholds.c_ratio, 2) +
           " and L ratio <= " + detail::fixed(r.thresholds.l_ratio, 2) + ")\n";
    out += "baseline: G(n, m) with n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) +
           " seed=" + std::to_string(r.rng_seed) + "\n";
    return out;
}

// Top-k vertices per centrality measure; `names[i]` labels vertex i of the
// graph the table was computed on.
inline std::string render_centrality_table(const CentralityTable& t,
                                           const std::vector<std::string>& names,
                                           std::size_t top_k = 3) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Measure", "Rank", "Node", "Score"});
    auto section = [&](const std::string& measure, const std::vector<double>& scores,
                       const std::vector<std::uint32_t>& ranking) {
        std::size_t k = std::min(top_k, ranking.size());
        for (std::size_t r = 0; r < k; ++r) {
            std::uint32_t v = ranking[r];
            rows.push_back({measure, std::to_string(r + 1), names.at(v),
                            detail::fixed(scores[v], 4)});
        }
    };
    section("PageRank", t.pagerank, t.pagerank_ranking);
    section("Degree Centrality", t.degree, t.degree_ranking);
    section("Betweenness Centrality", t.betweenness, t.betweenness_ranking);
    return detail::format_table(rows);
}

// One `community<TAB>name` line per vertex, sorted by (community, name,
// vertex index) so the listing is stable and diffable.
inline std::string render_membership(const ProjectionGraph& g, const Partition& p) {
    if (p.assignment.size() != g.size())
        throw InvalidInput("partition does not cover the projection graph");
    std::vector<std::uint32_t> order(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (p.assignment[a] != p.assignment[b]) return p.assignment[a] < p.assignment[b];
        if (g.vertex(a).name != g.vertex(b).name) return g.vertex(a).name < g.vertex(b).name;
        return a < b;
    });
    std::string out;
    for (std::uint32_t v : order) {
        out += std::to_string(p.assignment[v]);
        out += '\t';
        out += g.vertex(v).name;
        out += '\n';
    }
    return out;
}

// Per-community size, density, dominant fields/countries, and exemplars,
// preceded by the partition's headline numbers.
inline std::string render_community_profiles(const std::vector<CommunityProfile>& profiles,
                                             const Partition& p, std::size_t top_terms = 3) {
    auto join_counts = [&](const std::vector<std::pair<std::string, std::size_t>>& terms) {
        std::string out;
        std::size_t k = std::min(top_terms, terms.size());
        for (std::size_t i = 0; i < k; ++i) {
            if (i) out += "; ";
            out += terms[i].first + " (" + std::to_string(terms[i].second) + ")";
        }
        return out.empty() ? std::string("-") : out;
    };
    std::string out = "communities: " + std::to_string(profiles.size()) +
                      "  Q=" + detail::fixed(p.Q, 4) + "  passes=" +
                      std::to_string(p.pass_count) + "  seed=" + std::to_string(p.rng_seed) +
                      "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Community", "Size", "Density", "Fields", "Countries", "Exemplars"});
    for (const CommunityProfile& c : profiles) {
        std::string exemplars;
        for (std::size_t i = 0; i < c.exemplars.size(); ++i) {
            if (i) exemplars += "; ";
            exemplars += c.exemplars[i];
        }
        rows.push_back({std::to_string(c.id), std::to_string(c.size),
                        detail::fixed(c.internal_density, 4), join_counts(c.fields),
                        join_counts(c.countries), exemplars.empty() ? "-" : exemplars});
    }
    out += detail::format_table(rows);
    return out;
}

} // namespace nobelgraph
