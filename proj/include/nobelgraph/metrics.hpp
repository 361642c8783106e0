#pragma once
// Small-world statistics and centrality measures over the projection graph.
// All path-based quantities treat edges as unweighted hops.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/projection.hpp"
#include "nobelgraph/rng.hpp"

namespace nobelgraph::metrics {

// undirected simple graph: adjacency lists, each sorted ascending
using UGraph = std::vector<std::vector<std::uint32_t>>;

inline UGraph simple_graph(const ProjectionGraph& g) { return g.to_simple(); }

inline std::size_t edge_count(const UGraph& g) {
    std::size_t twice = 0;
    for (const auto& nbrs : g) twice += nbrs.size();
    return twice / 2;
}

namespace detail {

inline std::vector<std::int32_t> bfs_distances(const UGraph& g, std::uint32_t src) {
    std::vector<std::int32_t> dist(g.size(), -1);
    std::vector<std::uint32_t> frontier{src}, next;
    dist[src] = 0;
    std::int32_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (std::uint32_t v : frontier)
            for (std::uint32_t u : g[v])
                if (dist[u] < 0) {
                    dist[u] = d;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

} // namespace detail

// Mean BFS distance over all ordered pairs i != j.
inline double avg_shortest_path(const UGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw InvalidInput("average shortest path is undefined for fewer than 2 vertices");
    long double total = 0.0L;
    for (std::uint32_t s = 0; s < n; ++s) {
        auto dist = detail::bfs_distances(g, s);
        for (std::uint32_t t = 0; t < n; ++t) {
            if (t == s) continue;
            if (dist[t] < 0)
                throw InvalidInput(
                    "graph is disconnected; take the largest component before measuring paths");
            total += dist[t];
        }
    }
    return static_cast<double>(total / (static_cast<long double>(n) * (n - 1)));
}

// Mean over all vertices of 2·e_i / (k_i·(k_i−1)); degree < 2 contributes 0.
inline double avg_clustering(const UGraph& g) {
    if (g.empty()) return 0.0;
    long double total = 0.0L;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        const auto& nbrs = g[v];
        const std::size_t k = nbrs.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < k; ++a) {
            // sorted-list intersection counts each neighbor pair edge once
            const auto& na = g[nbrs[a]];
            for (std::size_t b = a + 1; b < k; ++b)
                links += std::binary_search(na.begin(), na.end(), nbrs[b]) ? 1 : 0;
        }
        total += 2.0L * static_cast<long double>(links) /
                 (static_cast<long double>(k) * static_cast<long double>(k - 1));
    }
    return static_cast<double>(total / static_cast<long double>(g.size()));
}

// Uniform G(n, m): every simple graph with exactly m edges equally likely.
// Floyd's sampling picks an m-subset of the n(n-1)/2 pair slots.
inline UGraph random_baseline(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > slots) throw InvalidInput("m exceeds the number of vertex pairs");
    SplitMix64 rng(seed);

    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    for (std::uint64_t j = slots - m; j < slots; ++j) {
        std::uint64_t t = rng.bounded(j + 1);
        chosen.insert(chosen.count(t) ? j : t);
    }

    UGraph g(n);
    for (std::uint64_t k : chosen) {
        // decode slot k to the pair (i, j), i < j, slots ordered by j then i
        auto j = static_cast<std::uint64_t>(
            (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
        while (j * (j - 1) / 2 > k) --j;
        while ((j + 1) * j / 2 <= k) ++j;
        std::uint64_t i = k - j * (j - 1) / 2;
        g[i].push_back(static_cast<std::uint32_t>(j));
        g[j].push_back(static_cast<std::uint32_t>(i));
    }
    for (auto& nbrs : g) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

// Vertices of the largest connected component, ascending. Ties between
// equal-sized components go to the one discovered first.
inline std::vector<std::uint32_t> largest_component_members(const UGraph& g) {
    std::vector<std::int32_t> comp(g.size(), -1);
    std::int32_t count = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t u : g[v])
                if (comp[u] < 0) {
                    comp[u] = count;
                    stack.push_back(u);
                }
        }
        ++count;
    }
    std::vector<std::size_t> size(static_cast<std::size_t>(std::max(count, 1)), 0);
    for (auto c : comp) ++size[static_cast<std::size_t>(c)];
    std::int32_t best =
        static_cast<std::int32_t>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (comp[v] == best) members.push_back(v);
    return members;
}

// Subgraph over `members` (ascending vertex indices), reindexed densely in
// that order. Edges leaving the member set are dropped.
inline UGraph induced_subgraph(const UGraph& g, const std::vector<std::uint32_t>& members) {
    std::vector<std::int64_t> remap(g.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        remap[members[i]] = static_cast<std::int64_t>(i);
    UGraph out(members.size());
    for (std::uint32_t v : members) {
        for (std::uint32_t u : g[v])
            if (remap[u] >= 0)
                out[static_cast<std::size_t>(remap[v])].push_back(
                    static_cast<std::uint32_t>(remap[u]));
    }
    for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

inline UGraph largest_component_of(const UGraph& g) {
    std::vector<std::uint32_t> members = largest_component_members(g);
    if (members.size() == g.size()) return g;
    return induced_subgraph(g, members);
}

struct SmallWorldThresholds {
    double c_ratio = 1.2; // C/C_rand must reach this
    double l_ratio = 1.2; // L/L_rand must stay within this
};

struct SmallWorldReport {
    double L = 0.0, C = 0.0;
    double L_rand = 0.0, C_rand = 0.0;
    double ratio_L = 0.0, ratio_C = 0.0; // infinity when the denominator is 0
    std::size_t n = 0, m = 0;
    std::uint64_t rng_seed = 0;
    SmallWorldThresholds thresholds;
    bool small_world = false;
};

// L and C of g against a G(n, m) baseline of the same size. The random graph
// may be disconnected; its L is measured on its largest component.
inline SmallWorldReport small_world_report(const UGraph& g, std::uint64_t seed,
                                           SmallWorldThresholds thresholds = {}) {
    SmallWorldReport rep;
    rep.n = g.size();
    rep.m = edge_count(g);
    rep.rng_seed = seed;
    rep.thresholds = thresholds;
    rep.L = avg_shortest_path(g);
    rep.C = avg_clustering(g);

    UGraph rand = random_baseline(rep.n, rep.m, seed);
    rep.C_rand = avg_clustering(rand);
    UGraph rand_lcc = largest_component_of(rand);
    if (rand_lcc.size() < 2)
        throw InvalidInput("random baseline has no measurable component; graph too sparse");
    rep.L_rand = avg_shortest_path(rand_lcc);

    rep.ratio_L = rep.L_rand > 0 ? rep.L / rep.L_rand
                                 : std::numeric_limits<double>::infinity();
    rep.ratio_C = rep.C_rand > 0 ? rep.C / rep.C_rand
                                 : std::numeric_limits<double>::infinity();
    // multiplication avoids the division corner cases; C must be positive for
    // the clustering side to count
    rep.small_world = rep.C > 0.0 && rep.C >= thresholds.c_ratio * rep.C_rand &&
                      rep.L <= thresholds.l_ratio * rep.L_rand;
    return rep;
}

struct PageRankOptions {
    double damping = 0.85;
    double tol = 1e-8; // L1 change between iterations
    // Bipartite structures (stars, trees) carry a walk mode that decays at
    // exactly the damping rate, so the L1 change first dips under 1e-8 near
    // iteration 115; 200 leaves headroom.
    int max_iter = 200;
    bool weighted = false; // distribute along shared-attribute weights instead of degree
};

class ConvergenceError : public Error {
  public:
    ConvergenceError(std::string msg, std::vector<double> last)
        : Error(std::move(msg)), last_iterate_(std::move(last)) {}
    const std::vector<double>& last_iterate() const { return last_iterate_; }

  private:
    std::vector<double> last_iterate_;
};

namespace detail {

// Power iteration on the weighted transition matrix. Vertices without any
// outgoing mass (isolated here, since edges are bidirectional) would leak
// score and break the sum-to-1 invariant, so their mass is redistributed
// uniformly, the standard dangling-node treatment.
inline std::vector<double> pagerank_impl(const std::vector<std::vector<ProjectionGraph::Neighbor>>& adj,
                                         const PageRankOptions& opts) {
    const std::size_t n = adj.size();
    if (n == 0) throw InvalidInput("pagerank requires a non-empty graph");
    if (!(opts.damping > 0.0 && opts.damping < 1.0))
        throw InvalidInput("damping must lie in (0, 1)");

    std::vector<double> strength(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& [u, w] : adj[v]) strength[v] += w;

    std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);
    const double base = (1.0 - opts.damping) / static_cast<double>(n);
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (strength[v] == 0.0) dangling += x[v];
        const double spread = base + opts.damping * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), spread);
        for (std::size_t v = 0; v < n; ++v) {
            if (strength[v] == 0.0) continue;
            const double share = opts.damping * x[v] / strength[v];
            for (const auto& [u, w] : adj[v]) next[u] += share * w;
        }
        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) delta += std::abs(next[v] - x[v]);
        x.swap(next);
        if (delta < opts.tol) return x;
    }
    throw ConvergenceError("pagerank did not converge within " +
                               std::to_string(opts.max_iter) + " iterations",
                           std::move(x));
}

inline std::vector<std::vector<ProjectionGraph::Neighbor>> unit_adjacency(const UGraph& g) {
    std::vector<std::vector<ProjectionGraph::Neighbor>> adj(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::uint32_t u : g[v]) adj[v].emplace_back(u, 1.0);
    return adj;
}

} // namespace detail

inline std::vector<double> pagerank(const UGraph& g, const PageRankOptions& opts = {}) {
    return detail::pagerank_impl(detail::unit_adjacency(g), opts);
}

inline std::vector<double> pagerank(const ProjectionGraph& g, const PageRankOptions& opts = {}) {
    if (!opts.weighted) return pagerank(g.to_simple(), opts);
    std::vector<std::vector<ProjectionGraph::Neighbor>> adj(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v);
    return detail::pagerank_impl(adj, opts);
}

// deg(i) / (N−1)
inline std::vector<double> degree_centrality(const UGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw InvalidInput("degree centrality is undefined for fewer than 2 vertices");
    std::vector<double> scores(n);
    for (std::size_t v = 0; v < n; ++v)
        scores[v] = static_cast<double>(g[v].size()) / static_cast<double>(n - 1);
    return scores;
}

// Brandes betweenness, endpoints excluded, each unordered pair counted once,
// normalized by (N−1)(N−2)/2.
inline std::vector<double> betweenness(const UGraph& g) {
    const std::size_t n = g.size();
    std::vector<double> scores(n, 0.0);
    if (n <= 2) return scores;

    std::vector<std::uint32_t> order;
    std::vector<std::vector<std::uint32_t>> preds(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::int32_t> dist(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        order.clear();
        for (auto& p : preds) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        sigma[s] = 1.0;
        dist[s] = 0;
        std::size_t head = 0;
        order.push_back(s);
        while (head < order.size()) {
            std::uint32_t v = order[head++];
            for (std::uint32_t u : g[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    order.push_back(u);
                }
                if (dist[u] == dist[v] + 1) {
                    sigma[u] += sigma[v];
                    preds[u].push_back(v);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (std::size_t i = order.size(); i-- > 1;) { // skip s itself
            std::uint32_t v = order[i];
            for (std::uint32_t p : preds[v])
                delta[p] += sigma[p] / sigma[v] * (1.0 + delta[v]);
            scores[v] += delta[v];
        }
    }
    // undirected: each pair was accumulated from both endpoints
    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (double& s : scores) s = s / 2.0 / norm;
    return scores;
}

struct CentralityTable {
    std::vector<double> pagerank, degree, betweenness;
    // vertex indices by descending score; ties broken by ascending index
    std::vector<std::uint32_t> pagerank_ranking, degree_ranking, betweenness_ranking;
};

inline std::vector<std::uint32_t> ranking_of(const std::vector<double>& scores) {
    std::vector<std::uint32_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return scores[a] > scores[b]; });
    return idx;
}

inline CentralityTable compute_centralities(const UGraph& g, const PageRankOptions& opts = {}) {
    CentralityTable t;
    t.pagerank = pagerank(g, opts);
    t.degree = degree_centrality(g);
    t.betweenness = betweenness(g);
    t.pagerank_ranking = ranking_of(t.pagerank);
    t.degree_ranking = ranking_of(t.degree);
    t.betweenness_ranking = ranking_of(t.betweenness);
    return t;
}

} // namespace nobelgraph::metrics
