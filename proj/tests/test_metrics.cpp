#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <nobelgraph/metrics.hpp>
#include <nobelgraph/projection.hpp>

#include "support/oracles.hpp"

using namespace nobelgraph;
using metrics::UGraph;
using Catch::Matchers::WithinAbs;

namespace {

UGraph make_graph(std::size_t n,
                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    UGraph g(n);
    for (auto [a, b] : edges) {
        g[a].push_back(b);
        g[b].push_back(a);
    }
    for (auto& nbrs : g) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

UGraph path_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, edges);
}

UGraph cycle_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
    return make_graph(n, edges);
}

UGraph complete_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

// star with the hub at index 0
UGraph star_graph(std::size_t leaves) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make_graph(leaves + 1, edges);
}

ProjectionGraph weighted_graph(
    std::size_t n, const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& edges) {
    std::vector<ProjectionVertex> vertices;
    for (std::uint32_t i = 0; i < n; ++i)
        vertices.push_back({static_cast<NodeId>(i + 1), "V" + std::to_string(i)});
    return ProjectionGraph::build(std::move(vertices), {"Organization"}, edges);
}

UGraph permute_graph(const UGraph& g, const std::vector<std::uint32_t>& perm) {
    UGraph out(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v)
        for (std::uint32_t u : g[v]) out[perm[v]].push_back(perm[u]);
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

} // namespace

TEST_CASE("average shortest path on fixed graphs", "[metrics]") {
    CHECK(metrics::avg_shortest_path(complete_graph(3)) == 1.0);
    CHECK(metrics::avg_shortest_path(make_graph(2, {{0, 1}})) == 1.0);
    // path a-b-c: distances 1,1,2 over each direction -> mean 4/3
    CHECK_THAT(metrics::avg_shortest_path(path_graph(3)), WithinAbs(4.0 / 3.0, 1e-15));
    // path of 5: sum over ordered pairs = 2*(4*1+3*2+2*3+1*4) = 40, over 20 pairs
    CHECK_THAT(metrics::avg_shortest_path(path_graph(5)), WithinAbs(2.0, 1e-15));

    CHECK_THROWS_AS(metrics::avg_shortest_path(UGraph{}), InvalidInput);
    CHECK_THROWS_AS(metrics::avg_shortest_path(UGraph(1)), InvalidInput);
    // two components
    CHECK_THROWS_AS(metrics::avg_shortest_path(make_graph(4, {{0, 1}, {2, 3}})), InvalidInput);
}

TEST_CASE("average clustering on fixed graphs", "[metrics]") {
    CHECK(metrics::avg_clustering(complete_graph(3)) == 1.0);
    CHECK(metrics::avg_clustering(complete_graph(6)) == 1.0);
    CHECK(metrics::avg_clustering(path_graph(4)) == 0.0);
    CHECK(metrics::avg_clustering(star_graph(5)) == 0.0);
    CHECK(metrics::avg_clustering(UGraph{}) == 0.0);

    // triangle 0-1-2 plus a pendant 3 on vertex 0:
    // c0 = 1/3, c1 = c2 = 1, c3 = 0 -> mean 7/12
    UGraph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    CHECK_THAT(metrics::avg_clustering(g), WithinAbs(7.0 / 12.0, 1e-15));
}

TEST_CASE("path length and clustering match the oracles", "[metrics]") {
    SplitMix64 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 3 + rng.bounded(98);
        double p = 0.05 + 0.3 * static_cast<double>(rng.bounded(1000)) / 1000.0;

        UGraph connected = oracles::random_connected_ugraph(rng, n, p);
        CHECK_THAT(metrics::avg_shortest_path(connected),
                   WithinAbs(oracles::floyd_warshall_avg_path(connected), 1e-12));
        CHECK_THAT(metrics::avg_clustering(connected),
                   WithinAbs(oracles::triple_count_clustering(connected), 1e-12));

        // clustering is defined for disconnected graphs too
        UGraph loose = oracles::random_ugraph(rng, n, p / 3.0);
        CHECK_THAT(metrics::avg_clustering(loose),
                   WithinAbs(oracles::triple_count_clustering(loose), 1e-12));
    }
}

TEST_CASE("karate club statistics agree with the oracles", "[metrics]") {
    // Zachary's karate club, the classic 34-member friendship network
    UGraph g = make_graph(
        34, {{0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
             {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
             {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
             {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
             {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
             {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
             {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
             {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
             {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
             {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33}});
    REQUIRE(metrics::edge_count(g) == 78);
    REQUIRE(g[0].size() == 16);  // the instructor
    REQUIRE(g[33].size() == 17); // the president

    double c = metrics::avg_clustering(g);
    CHECK_THAT(c, WithinAbs(oracles::triple_count_clustering(g), 1e-12));
    CHECK_THAT(c, WithinAbs(0.5706, 1e-3));

    double l = metrics::avg_shortest_path(g);
    CHECK_THAT(l, WithinAbs(oracles::floyd_warshall_avg_path(g), 1e-12));
    CHECK_THAT(l, WithinAbs(2.408, 1e-3));
}

TEST_CASE("random baseline samples simple graphs of the requested size", "[metrics]") {
    SECTION("edge count, simplicity, and determinism") {
        for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
            UGraph g = metrics::random_baseline(12, 30, seed);
            REQUIRE(g.size() == 12);
            CHECK(metrics::edge_count(g) == 30);
            for (std::uint32_t v = 0; v < g.size(); ++v) {
                CHECK(std::is_sorted(g[v].begin(), g[v].end()));
                CHECK(std::adjacent_find(g[v].begin(), g[v].end()) == g[v].end());
                CHECK(!std::binary_search(g[v].begin(), g[v].end(), v));
            }
            CHECK(metrics::random_baseline(12, 30, seed) == g);
        }
        CHECK(metrics::random_baseline(12, 30, 1) != metrics::random_baseline(12, 30, 2));
    }
    SECTION("forced extremes") {
        CHECK(metrics::random_baseline(4, 0, 9) == UGraph(4));
        CHECK(metrics::random_baseline(3, 3, 9) == complete_graph(3));
        CHECK(metrics::random_baseline(10, 45, 9) == complete_graph(10));
        CHECK_THROWS_AS(metrics::random_baseline(4, 7, 9), InvalidInput);
    }
    SECTION("every slot is reachable") {
        // m = 1 over many seeds should eventually produce every pair of K4
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            UGraph g = metrics::random_baseline(4, 1, seed);
            for (std::uint32_t v = 0; v < 4; ++v)
                for (std::uint32_t u : g[v])
                    if (v < u) seen.emplace(v, u);
        }
        CHECK(seen.size() == 6);
    }
}

TEST_CASE("small-world report flags a rewired lattice", "[metrics]") {
    // a quarter of the lattice edges rewired: clustering stays lattice-like
    // while paths shorten to near-random length
    UGraph ws = oracles::watts_strogatz(1000, 10, 0.25, 42);
    auto rep = metrics::small_world_report(ws, 42);

    CHECK(rep.n == 1000);
    CHECK(rep.m == 5000);
    CHECK(rep.L == metrics::avg_shortest_path(ws));
    CHECK(rep.C == metrics::avg_clustering(ws));
    CHECK(rep.ratio_C >= 1.2);
    CHECK(rep.ratio_L <= 1.2);
    CHECK(rep.small_world);
}

TEST_CASE("small-world report stays honest on non-small-world graphs", "[metrics]") {
    SECTION("complete graph equals its own baseline") {
        auto rep = metrics::small_world_report(complete_graph(10), 7);
        CHECK(rep.ratio_L == 1.0);
        CHECK(rep.ratio_C == 1.0);
        CHECK_FALSE(rep.small_world); // C barely matches C_rand, no clustering excess
    }
    SECTION("pure ring lattice fails the path-length side") {
        UGraph lattice = oracles::watts_strogatz(60, 6, 0.0, 1);
        auto rep = metrics::small_world_report(lattice, 1);
        CHECK(rep.ratio_C >= 1.2); // heavy clustering
        CHECK(rep.ratio_L > 1.2);  // but paths stay long
        CHECK_FALSE(rep.small_world);
    }
    SECTION("triangle-free graph never qualifies") {
        auto rep = metrics::small_world_report(star_graph(9), 3);
        CHECK(rep.C == 0.0);
        CHECK_FALSE(rep.small_world);
    }
}

TEST_CASE("pagerank is uniform on vertex-transitive graphs", "[metrics]") {
    for (const UGraph& g : {cycle_graph(7), complete_graph(6)}) {
        auto pr = metrics::pagerank(g);
        REQUIRE(pr.size() == g.size());
        double sum = std::accumulate(pr.begin(), pr.end(), 0.0);
        CHECK_THAT(sum, WithinAbs(1.0, 1e-9));
        for (double v : pr) CHECK_THAT(v, WithinAbs(1.0 / static_cast<double>(g.size()), 1e-9));
    }
}

TEST_CASE("pagerank matches the closed form on a star", "[metrics]") {
    // hub h and 4 leaves l: h = (1-d)/5 + 4 d l, l = (1-d)/5 + d h / 4
    // => h = (1 + 4d) / (5 (1 + d))
    const double d = 0.85;
    const double hub = (1.0 + 4.0 * d) / (5.0 * (1.0 + d));
    const double leaf = (1.0 - hub) / 4.0;
    auto pr = metrics::pagerank(star_graph(4));
    CHECK_THAT(pr[0], WithinAbs(hub, 1e-8));
    for (int i = 1; i <= 4; ++i) CHECK_THAT(pr[i], WithinAbs(leaf, 1e-8));
}

TEST_CASE("pagerank matches a dense linear solve", "[metrics]") {
    SplitMix64 rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.bounded(49);
        double p = 0.04 + 0.3 * static_cast<double>(rng.bounded(1000)) / 1000.0;
        UGraph g = oracles::random_ugraph(rng, n, p); // may hold isolated vertices

        auto pr = metrics::pagerank(g);
        auto exact = oracles::dense_pagerank(g, 0.85);
        REQUIRE(pr.size() == exact.size());
        CHECK_THAT(std::accumulate(pr.begin(), pr.end(), 0.0), WithinAbs(1.0, 1e-9));
        for (std::size_t v = 0; v < n; ++v) CHECK_THAT(pr[v], WithinAbs(exact[v], 1e-8));
    }
}

TEST_CASE("pagerank keeps isolated vertices in the distribution", "[metrics]") {
    // an edge plus two isolated vertices: mass must not leak
    UGraph g = make_graph(4, {{0, 1}});
    auto pr = metrics::pagerank(g);
    CHECK_THAT(std::accumulate(pr.begin(), pr.end(), 0.0), WithinAbs(1.0, 1e-9));
    CHECK(pr[2] == pr[3]);
    CHECK(pr[0] > pr[2]);
    auto exact = oracles::dense_pagerank(g, 0.85);
    for (std::size_t v = 0; v < 4; ++v) CHECK_THAT(pr[v], WithinAbs(exact[v], 1e-8));
}

TEST_CASE("pagerank reports non-convergence with its last iterate", "[metrics]") {
    metrics::PageRankOptions opts;
    opts.max_iter = 1;
    try {
        metrics::pagerank(star_graph(4), opts);
        FAIL("expected ConvergenceError");
    } catch (const metrics::ConvergenceError& e) {
        REQUIRE(e.last_iterate().size() == 5);
        double sum = std::accumulate(e.last_iterate().begin(), e.last_iterate().end(), 0.0);
        CHECK_THAT(sum, WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("pagerank validates its inputs", "[metrics]") {
    CHECK_THROWS_AS(metrics::pagerank(UGraph{}), InvalidInput);
    metrics::PageRankOptions opts;
    opts.damping = 1.0;
    CHECK_THROWS_AS(metrics::pagerank(cycle_graph(3), opts), InvalidInput);
    opts.damping = -0.1;
    CHECK_THROWS_AS(metrics::pagerank(cycle_graph(3), opts), InvalidInput);
}

TEST_CASE("weighted pagerank follows edge weights", "[metrics]") {
    // path A - B - C with a heavier A-B edge
    auto heavy = weighted_graph(3, {{0, 1, 3.0}, {1, 2, 1.0}});
    metrics::PageRankOptions weighted;
    weighted.weighted = true;

    auto pr = metrics::pagerank(heavy, weighted);
    CHECK_THAT(std::accumulate(pr.begin(), pr.end(), 0.0), WithinAbs(1.0, 1e-9));
    CHECK(pr[1] > pr[0]); // the middle still dominates
    CHECK(pr[0] > pr[2]); // but the heavy edge tilts A above C

    // uniform weights reduce to the unweighted result
    auto flat = weighted_graph(3, {{0, 1, 2.0}, {1, 2, 2.0}});
    auto pr_flat = metrics::pagerank(flat, weighted);
    auto pr_simple = metrics::pagerank(flat); // weighted=false path
    for (std::size_t v = 0; v < 3; ++v) CHECK_THAT(pr_flat[v], WithinAbs(pr_simple[v], 1e-12));

    // global weight scaling cancels out of the transition matrix
    auto scaled = weighted_graph(3, {{0, 1, 6.0}, {1, 2, 2.0}});
    auto pr_scaled = metrics::pagerank(scaled, weighted);
    for (std::size_t v = 0; v < 3; ++v) CHECK_THAT(pr_scaled[v], WithinAbs(pr[v], 1e-12));
}

TEST_CASE("degree centrality divides by N-1", "[metrics]") {
    auto path = metrics::degree_centrality(path_graph(3));
    CHECK(path == std::vector<double>{0.5, 1.0, 0.5});
    auto full = metrics::degree_centrality(complete_graph(5));
    CHECK(full == std::vector<double>(5, 1.0));
    CHECK_THROWS_AS(metrics::degree_centrality(UGraph(1)), InvalidInput);
}

TEST_CASE("betweenness on fixed graphs", "[metrics]") {
    // path of 3: only the middle vertex lies between the single outer pair
    CHECK(metrics::betweenness(path_graph(3)) == std::vector<double>{0.0, 1.0, 0.0});
    // path of 5: raw pair counts 0, 3, 4, 3, 0 over (n-1)(n-2)/2 = 6
    auto p5 = metrics::betweenness(path_graph(5));
    CHECK_THAT(p5[1], WithinAbs(0.5, 1e-15));
    CHECK_THAT(p5[2], WithinAbs(2.0 / 3.0, 1e-15));
    CHECK(p5[0] == 0.0);
    // cycle of 4: each opposite pair splits over two midpoints -> 0.5/3 each
    auto c4 = metrics::betweenness(cycle_graph(4));
    for (double v : c4) CHECK_THAT(v, WithinAbs(1.0 / 6.0, 1e-15));
    // no shortest path has interior vertices in a complete graph
    auto k4 = metrics::betweenness(complete_graph(4));
    CHECK(k4 == std::vector<double>(4, 0.0));
    // n <= 2 has no interior pairs at all
    CHECK(metrics::betweenness(make_graph(2, {{0, 1}})) == std::vector<double>(2, 0.0));
}

TEST_CASE("betweenness matches exhaustive path enumeration", "[metrics]") {
    SplitMix64 rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 4 + rng.bounded(27);
        double p = 0.1 + 0.3 * static_cast<double>(rng.bounded(1000)) / 1000.0;
        UGraph g = oracles::random_ugraph(rng, n, p);
        auto fast = metrics::betweenness(g);
        auto slow = oracles::enumerate_betweenness(g);
        REQUIRE(fast.size() == slow.size());
        // agreement up to summation-order roundoff; any algorithmic defect at
        // n <= 30 shows up at 1e-5 or larger
        for (std::size_t v = 0; v < n; ++v) CHECK_THAT(fast[v], WithinAbs(slow[v], 1e-15));
    }
}

TEST_CASE("centrality scores are permutation equivariant", "[metrics]") {
    SplitMix64 rng(1234);
    UGraph g = oracles::random_connected_ugraph(rng, 25, 0.15);
    std::vector<std::uint32_t> perm(25);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = perm.size(); i-- > 1;) std::swap(perm[i], perm[rng.bounded(i + 1)]);
    UGraph h = permute_graph(g, perm);

    auto pr_g = metrics::pagerank(g), pr_h = metrics::pagerank(h);
    auto dc_g = metrics::degree_centrality(g), dc_h = metrics::degree_centrality(h);
    auto bc_g = metrics::betweenness(g), bc_h = metrics::betweenness(h);
    for (std::uint32_t v = 0; v < 25; ++v) {
        CHECK_THAT(pr_h[perm[v]], WithinAbs(pr_g[v], 1e-10));
        CHECK(dc_h[perm[v]] == dc_g[v]);
        CHECK_THAT(bc_h[perm[v]], WithinAbs(bc_g[v], 1e-10));
    }
}

TEST_CASE("rankings sort by descending score with index tie-break", "[metrics]") {
    std::vector<double> scores{0.2, 0.5, 0.2, 0.7};
    CHECK(metrics::ranking_of(scores) == std::vector<std::uint32_t>{3, 1, 0, 2});
    CHECK(metrics::ranking_of({}) == std::vector<std::uint32_t>{});
    CHECK(metrics::ranking_of({1.0, 1.0, 1.0}) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("centrality table lines up with its inputs", "[metrics]") {
    UGraph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    auto table = metrics::compute_centralities(g);
    REQUIRE(table.pagerank.size() == 6);
    REQUIRE(table.degree.size() == 6);
    REQUIRE(table.betweenness.size() == 6);
    CHECK(table.pagerank == metrics::pagerank(g));
    CHECK(table.degree == metrics::degree_centrality(g));
    CHECK(table.betweenness == metrics::betweenness(g));
    CHECK(table.pagerank_ranking == metrics::ranking_of(table.pagerank));
    // the chord endpoints 0 and 3 carry the highest degree and betweenness;
    // their betweenness scores tie only up to roundoff, so compare as a set
    CHECK(table.degree_ranking[0] == 0);
    CHECK(table.degree_ranking[1] == 3);
    std::set<std::uint32_t> top_between{table.betweenness_ranking[0],
                                        table.betweenness_ranking[1]};
    CHECK(top_between == std::set<std::uint32_t>{0, 3});
}

TEST_CASE("largest component extraction keeps adjacency intact", "[metrics]") {
    // triangle 0-1-2, pair 3-4, isolate 5
    UGraph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    UGraph lcc = metrics::largest_component_of(g);
    REQUIRE(lcc.size() == 3);
    CHECK(metrics::edge_count(lcc) == 3);
    CHECK(metrics::avg_shortest_path(lcc) == 1.0);
    // connected input comes back unchanged
    CHECK(metrics::largest_component_of(cycle_graph(5)) == cycle_graph(5));
}
