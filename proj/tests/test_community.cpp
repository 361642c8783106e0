#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <nobelgraph/community.hpp>
#include <nobelgraph/graph.hpp>
#include <nobelgraph/projection.hpp>

#include "support/oracles.hpp"

using namespace nobelgraph;
using Catch::Matchers::WithinAbs;

namespace {

ProjectionGraph weighted_graph(
    std::size_t n, const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& edges) {
    std::vector<ProjectionVertex> vertices;
    for (std::uint32_t i = 0; i < n; ++i)
        vertices.push_back({static_cast<NodeId>(i + 1), "V" + std::to_string(i)});
    return ProjectionGraph::build(std::move(vertices), {"Organization"}, edges);
}

// two unit-weight 4-cliques joined by a single bridge edge 3-4
ProjectionGraph barbell8() {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = i + 1; j < 4; ++j) {
            edges.emplace_back(i, j, 1.0);
            edges.emplace_back(i + 4, j + 4, 1.0);
        }
    edges.emplace_back(3, 4, 1.0);
    return weighted_graph(8, edges);
}

ProjectionGraph complete_graph(std::size_t n) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j, 1.0);
    return weighted_graph(n, edges);
}

ProjectionGraph random_weighted_graph(SplitMix64& rng, std::size_t n, double p) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.unit() < p)
                edges.emplace_back(i, j, static_cast<double>(1 + rng.bounded(4)));
    return weighted_graph(n, edges);
}

std::vector<std::uint32_t> random_order(SplitMix64& rng, std::size_t n) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = order.size(); i-- > 1;) std::swap(order[i], order[rng.bounded(i + 1)]);
    return order;
}

bool contiguous_first_appearance(const std::vector<std::uint32_t>& a) {
    std::uint32_t next = 0;
    for (std::uint32_t c : a) {
        if (c > next) return false;
        if (c == next) ++next;
    }
    return next > 0 || a.empty();
}

} // namespace

TEST_CASE("modularity of reference partitions", "[community]") {
    ProjectionGraph barbell = barbell8();
    const std::vector<std::uint32_t> one(8, 0);

    SECTION("all vertices in one community give exactly zero") {
        CHECK(community::modularity(barbell, one) == 0.0);
        CHECK(community::modularity(complete_graph(6), std::vector<std::uint32_t>(6, 0)) == 0.0);
    }
    SECTION("singleton partition on a unit path of three") {
        auto path = weighted_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
        // -(k0² + k1² + k2²)/(2m)² = -(1 + 4 + 1)/16
        CHECK_THAT(community::modularity(path, {0, 1, 2}), WithinAbs(-0.375, 1e-15));
    }
    SECTION("two triangles with a bridge, split at the bridge") {
        auto bridge = weighted_graph(6, {{0, 1, 1.0},
                                         {0, 2, 1.0},
                                         {1, 2, 1.0},
                                         {3, 4, 1.0},
                                         {3, 5, 1.0},
                                         {4, 5, 1.0},
                                         {2, 3, 1.0}});
        std::vector<std::uint32_t> split{0, 0, 0, 1, 1, 1};
        // per community: in = 3, tot = 7, m = 7 -> 2·(3/7 − 1/4) = 5/14
        CHECK_THAT(community::modularity(bridge, split), WithinAbs(5.0 / 14.0, 1e-15));
        CHECK_THAT(community::modularity(bridge, split),
                   WithinAbs(oracles::pairwise_modularity(bridge, split), 1e-12));
    }
    SECTION("resolution scales the null-model term") {
        CHECK(community::modularity(barbell, one, 2.0) == -1.0); // 1 − γ
    }
    SECTION("weightless graph has Q zero by definition") {
        auto bare = weighted_graph(3, {});
        CHECK(community::modularity(bare, {0, 1, 2}) == 0.0);
    }
    SECTION("partial assignment is rejected") {
        CHECK_THROWS_AS(community::modularity(barbell, std::vector<std::uint32_t>(7, 0)),
                        InvalidInput);
        CHECK_THROWS_AS(community::modularity(barbell, std::vector<std::uint32_t>(9, 0)),
                        InvalidInput);
    }
}

TEST_CASE("louvain recovers the cliques of a barbell", "[community]") {
    ProjectionGraph g = barbell8();
    auto [best_q, best_a] = oracles::best_partition(g);

    for (std::uint64_t seed : {0ull, 1ull, 7ull, 42ull}) {
        auto p = community::louvain(g, seed);
        INFO("seed " << seed);
        REQUIRE(p.assignment.size() == 8);
        // canonical ids: the clique of vertex 0 is community 0
        CHECK(p.assignment == std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 1, 1});
        CHECK_THAT(p.Q, WithinAbs(best_q, 1e-12));
        CHECK(community::modularity(g, p.assignment) == p.Q);
        CHECK(p.pass_count >= 1);
        CHECK(static_cast<std::size_t>(p.pass_count) == p.pass_q.size());
    }
    // the exhaustive search agrees that the cliques are the best split
    std::vector<std::uint32_t> canonical = best_a;
    community::detail::renumber_along(canonical, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(canonical == std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 1, 1});
}

TEST_CASE("louvain keeps a complete graph together", "[community]") {
    auto p = community::louvain(complete_graph(6), 42);
    CHECK(p.assignment == std::vector<std::uint32_t>(6, 0));
    CHECK(p.Q == 0.0);
}

TEST_CASE("louvain on an edgeless graph returns singletons", "[community]") {
    auto p = community::louvain(weighted_graph(4, {}), 5);
    CHECK(p.assignment == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(p.Q == 0.0);
    CHECK(p.pass_count == 1);

    CHECK_THROWS_AS(community::louvain(weighted_graph(0, {}), 5), InvalidInput);
}

TEST_CASE("resolution controls the granularity", "[community]") {
    ProjectionGraph k6 = complete_graph(6);
    CHECK(community::louvain(k6, 3, 1.0).assignment == std::vector<std::uint32_t>(6, 0));
    // a high resolution makes every merge lose modularity
    CHECK(community::louvain(k6, 3, 8.0).assignment ==
          std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("stored Q is faithful and never below the singleton baseline", "[community]") {
    SplitMix64 rng(909);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng.bounded(29);
        double p = 0.08 + 0.4 * static_cast<double>(rng.bounded(1000)) / 1000.0;
        ProjectionGraph g = random_weighted_graph(rng, n, p);
        auto part = community::louvain(g, 1000 + static_cast<std::uint64_t>(trial));
        INFO("trial " << trial << " n=" << n);

        REQUIRE(part.assignment.size() == n);
        CHECK(contiguous_first_appearance(part.assignment));
        CHECK(community::modularity(g, part.assignment) == part.Q);
        CHECK_THAT(part.Q, WithinAbs(oracles::pairwise_modularity(g, part.assignment), 1e-12));

        std::vector<std::uint32_t> singletons(n);
        std::iota(singletons.begin(), singletons.end(), 0u);
        CHECK(part.Q >= community::modularity(g, singletons));

        for (std::size_t i = 0; i + 1 < part.pass_q.size(); ++i)
            CHECK(part.pass_q[i + 1] >= part.pass_q[i] - 1e-12);
    }
}

TEST_CASE("louvain stays within reach of the exhaustive optimum", "[community]") {
    SplitMix64 rng(414);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.bounded(7); // Bell(8) = 4140 partitions at most
        ProjectionGraph g = random_weighted_graph(rng, n, 0.45);
        auto part = community::louvain(g, static_cast<std::uint64_t>(trial));
        auto [best_q, best_a] = oracles::best_partition(g);
        CHECK(part.Q <= best_q + 1e-12);
        CHECK(part.Q >= community::modularity(g, std::vector<std::uint32_t>(n, 0)) - 1e-12);
    }
}

TEST_CASE("louvain is deterministic for a fixed seed", "[community]") {
    SplitMix64 rng(77);
    ProjectionGraph g = random_weighted_graph(rng, 40, 0.15);
    auto a = community::louvain(g, 42);
    auto b = community::louvain(g, 42);
    CHECK(a.assignment == b.assignment);
    CHECK(a.Q == b.Q);
    CHECK(a.pass_count == b.pass_count);

    auto order = random_order(rng, 40);
    auto c = community::louvain(g, 42, 1.0, order);
    auto d = community::louvain(g, 42, 1.0, order);
    CHECK(c.assignment == d.assignment);
    CHECK(c.Q == d.Q);
}

TEST_CASE("louvain rejects malformed visit orders", "[community]") {
    ProjectionGraph g = complete_graph(3);
    CHECK_THROWS_AS(community::louvain(g, 1, 1.0, {0, 1}), InvalidInput);
    CHECK_THROWS_AS(community::louvain(g, 1, 1.0, {0, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(community::louvain(g, 1, 1.0, {0, 1, 3}), InvalidInput);
}

TEST_CASE("relabeling vertices permutes the partition", "[community]") {
    SplitMix64 rng(2025);
    const std::size_t n = 20;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.unit() < 0.2) edges.emplace_back(i, j, static_cast<double>(1 + rng.bounded(3)));

    std::vector<ProjectionVertex> verts;
    for (std::uint32_t i = 0; i < n; ++i)
        verts.push_back({static_cast<NodeId>(i + 1), "V" + std::to_string(i)});
    ProjectionGraph g = ProjectionGraph::build(verts, {"Organization"}, edges);

    auto perm = random_order(rng, n);
    std::vector<ProjectionVertex> pverts(n);
    for (std::uint32_t v = 0; v < n; ++v) pverts[perm[v]] = verts[v];
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> pedges;
    for (const auto& [i, j, w] : edges) pedges.emplace_back(perm[i], perm[j], w);
    ProjectionGraph h = ProjectionGraph::build(pverts, {"Organization"}, pedges);

    auto order = random_order(rng, n);
    std::vector<std::uint32_t> porder(n);
    for (std::uint32_t i = 0; i < n; ++i) porder[i] = perm[order[i]];

    auto pg = community::louvain(g, 9, 1.0, order);
    auto ph = community::louvain(h, 9, 1.0, porder);

    std::vector<std::uint32_t> expected(n);
    for (std::uint32_t v = 0; v < n; ++v) expected[perm[v]] = pg.assignment[v];
    std::vector<std::uint32_t> ident(n);
    std::iota(ident.begin(), ident.end(), 0u);
    community::detail::renumber_along(expected, ident);

    CHECK(ph.assignment == expected);
    CHECK(ph.Q == pg.Q);
}

TEST_CASE("profiles summarize size, density, and store attributes", "[community]") {
    PropertyGraph store;
    NodeId p1 = store.upsert_node(EntityLabel::Person, "P1", {}).id;
    NodeId p2 = store.upsert_node(EntityLabel::Person, "P2", {}).id;
    NodeId p3 = store.upsert_node(EntityLabel::Person, "P3", {}).id;
    NodeId p4 = store.upsert_node(EntityLabel::Person, "P4", {}).id;
    NodeId p5 = store.upsert_node(EntityLabel::Person, "P5", {}).id;
    NodeId physics = store.upsert_node(EntityLabel::Field, "Physics", {}).id;
    NodeId chemistry = store.upsert_node(EntityLabel::Field, "Chemistry", {}).id;
    NodeId germany = store.upsert_node(EntityLabel::Country, "Germany", {}).id;
    NodeId japan = store.upsert_node(EntityLabel::Country, "Japan", {}).id;
    for (NodeId p : {p1, p2, p3}) store.upsert_edge(p, physics, RelationType::WORKS_IN_FIELD);
    store.upsert_edge(p4, chemistry, RelationType::WORKS_IN_FIELD);
    for (NodeId p : {p1, p2}) store.upsert_edge(p, germany, RelationType::IS_CITIZEN_OF);
    for (NodeId p : {p4, p5}) store.upsert_edge(p, japan, RelationType::IS_CITIZEN_OF);

    ProjectionGraph g = ProjectionGraph::build(
        {{p1, "P1"}, {p2, "P2"}, {p3, "P3"}, {p4, "P4"}, {p5, "P5"}}, {"Field", "Country"},
        {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 2.0}});

    community::Partition part;
    part.assignment = {0, 0, 0, 1, 1};
    auto profiles = community::profile_communities(store, g, part);
    REQUIRE(profiles.size() == 2);

    CHECK(profiles[0].id == 0);
    CHECK(profiles[0].size == 3);
    // two internal edges over three possible pairs
    CHECK_THAT(profiles[0].internal_density, WithinAbs(2.0 / 3.0, 1e-15));
    CHECK(profiles[0].fields ==
          std::vector<std::pair<std::string, std::size_t>>{{"Physics", 3}});
    CHECK(profiles[0].countries ==
          std::vector<std::pair<std::string, std::size_t>>{{"Germany", 2}});
    // strengths: P1=1, P2=2, P3=2 -> ties resolve to the earlier vertex
    CHECK(profiles[0].exemplars == std::vector<std::string>{"P2", "P3", "P1"});

    CHECK(profiles[1].size == 2);
    CHECK(profiles[1].internal_density == 1.0);
    CHECK(profiles[1].fields ==
          std::vector<std::pair<std::string, std::size_t>>{{"Chemistry", 1}});
    CHECK(profiles[1].countries ==
          std::vector<std::pair<std::string, std::size_t>>{{"Japan", 2}});
    CHECK(profiles[1].exemplars == std::vector<std::string>{"P4", "P5"});

    CHECK(profiles[0].size + profiles[1].size == g.size());

    SECTION("a singleton community has density zero") {
        community::Partition solo;
        solo.assignment = {0, 0, 0, 1, 2};
        auto three = community::profile_communities(store, g, solo);
        REQUIRE(three.size() == 3);
        CHECK(three[2].size == 1);
        CHECK(three[2].internal_density == 0.0);
        CHECK(three[2].exemplars == std::vector<std::string>{"P5"});
    }
    SECTION("a partition of the wrong size is rejected") {
        community::Partition bad;
        bad.assignment = {0, 0, 0};
        CHECK_THROWS_AS(community::profile_communities(store, g, bad), InvalidInput);
    }
}

TEST_CASE("histogram ordering is by count then name", "[community]") {
    PropertyGraph store;
    NodeId a = store.upsert_node(EntityLabel::Person, "A", {}).id;
    NodeId b = store.upsert_node(EntityLabel::Person, "B", {}).id;
    NodeId c = store.upsert_node(EntityLabel::Person, "C", {}).id;
    NodeId x = store.upsert_node(EntityLabel::Field, "Zoology", {}).id;
    NodeId y = store.upsert_node(EntityLabel::Field, "Botany", {}).id;
    store.upsert_edge(a, x, RelationType::WORKS_IN_FIELD);
    store.upsert_edge(b, y, RelationType::WORKS_IN_FIELD);
    store.upsert_edge(c, y, RelationType::WORKS_IN_FIELD);

    ProjectionGraph g = ProjectionGraph::build({{a, "A"}, {b, "B"}, {c, "C"}}, {"Field"},
                                               {{0, 1, 1.0}, {1, 2, 1.0}});
    community::Partition part;
    part.assignment = {0, 0, 0};
    auto profiles = community::profile_communities(store, g, part);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].fields == std::vector<std::pair<std::string, std::size_t>>{
                                    {"Botany", 2}, {"Zoology", 1}});
}
