#pragma once
// Louvain community detection over the weighted projection graph, plus
// per-community profiling against the backing store.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/graph.hpp"
#include "nobelgraph/projection.hpp"
#include "nobelgraph/rng.hpp"

namespace nobelgraph::community {

struct Partition {
    std::vector<std::uint32_t> assignment; // vertex -> community id, dense from 0
    double Q = 0.0;
    std::uint64_t rng_seed = 0;
    int pass_count = 0;
    std::vector<double> pass_q; // Q on the input graph after each pass
};

// Exact evaluation of Q = Σ_c [ in_c/m − γ (tot_c/2m)² ] with weighted
// adjacency, m = total edge weight, k_i = weighted degree. Q := 0 when the
// graph has no edge weight at all.
inline double modularity(const ProjectionGraph& g, const std::vector<std::uint32_t>& assignment,
                         double resolution = 1.0) {
    if (assignment.size() != g.size())
        throw InvalidInput("assignment must cover every vertex exactly once");
    const double m = g.total_weight();
    if (m == 0.0) return 0.0;

    std::map<std::uint32_t, double> in, tot;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        double strength = 0.0;
        for (const auto& [u, w] : g.neighbors(v)) strength += w;
        tot[assignment[v]] += strength;
    }
    for (const auto& [i, j, w] : g.edge_list())
        if (assignment[i] == assignment[j]) in[assignment[i]] += w;

    long double q = 0.0L;
    for (const auto& [c, t] : tot) {
        auto it = in.find(c);
        if (it != in.end()) q += static_cast<long double>(it->second) / m;
        const long double share = static_cast<long double>(t) / (2.0L * m);
        q -= static_cast<long double>(resolution) * share * share;
    }
    return static_cast<double>(q);
}

namespace detail {

// one level of the aggregation hierarchy; adjacency holds no self entries
struct LevelGraph {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
    std::vector<double> self_weight; // collapsed intra weight, each edge once
    std::vector<double> k;           // weighted degree incl. 2 * self_weight
    double two_m = 0.0;

    std::size_t size() const { return adj.size(); }
};

inline LevelGraph level_from(const ProjectionGraph& g) {
    LevelGraph lvl;
    lvl.adj.resize(g.size());
    lvl.self_weight.assign(g.size(), 0.0);
    lvl.k.assign(g.size(), 0.0);
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        lvl.adj[v] = g.neighbors(v);
        for (const auto& [u, w] : lvl.adj[v]) lvl.k[v] += w;
        lvl.two_m += lvl.k[v];
    }
    return lvl;
}

// One local-moving phase; comm is modified in place. Returns whether any
// vertex changed community. Among equal-gain targets the lowest community id
// wins; a move needs a gain more than 1e-9 over staying put.
inline bool local_move(const LevelGraph& lvl, std::vector<std::uint32_t>& comm,
                       const std::vector<std::uint32_t>& order, double resolution) {
    if (lvl.two_m == 0.0) return false; // nothing to gain without edge weight
    const std::size_t n = lvl.size();
    std::vector<double> sigma_tot(n, 0.0);
    for (std::uint32_t v = 0; v < n; ++v) sigma_tot[comm[v]] += lvl.k[v];

    std::vector<double> comm_w(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::uint32_t v : order) {
            const std::uint32_t cur = comm[v];
            touched.clear();
            for (const auto& [u, w] : lvl.adj[v]) {
                const std::uint32_t c = comm[u];
                if (comm_w[c] == 0.0) touched.push_back(c);
                comm_w[c] += w;
            }
            sigma_tot[cur] -= lvl.k[v];

            const double scale = resolution * lvl.k[v] / lvl.two_m;
            double best_gain = comm_w[cur] - scale * sigma_tot[cur];
            const double stay_gain = best_gain;
            std::uint32_t best = cur;
            for (std::uint32_t c : touched) {
                if (c == cur) continue;
                const double gain = comm_w[c] - scale * sigma_tot[c];
                if (gain > best_gain || (gain == best_gain && c < best)) {
                    best_gain = gain;
                    best = c;
                }
            }
            for (std::uint32_t c : touched) comm_w[c] = 0.0;

            if (best != cur && best_gain > stay_gain + 1e-9) {
                comm[v] = best;
                sigma_tot[best] += lvl.k[v];
                moved = true;
                any_move = true;
            } else {
                sigma_tot[cur] += lvl.k[v];
            }
        }
    }
    return any_move;
}

// Renumber communities densely by first appearance along the visit order, so
// a relabeled run with the matching order produces the identical hierarchy.
inline std::uint32_t renumber_along(std::vector<std::uint32_t>& comm,
                                    const std::vector<std::uint32_t>& order) {
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> remap(comm.size(), kUnset);
    std::uint32_t next = 0;
    for (std::uint32_t v : order)
        if (remap[comm[v]] == kUnset) remap[comm[v]] = next++;
    for (auto& c : comm) c = remap[c];
    return next;
}

inline LevelGraph aggregate(const LevelGraph& lvl, const std::vector<std::uint32_t>& comm,
                            std::uint32_t n_comms) {
    std::vector<std::vector<std::uint32_t>> members(n_comms);
    for (std::uint32_t v = 0; v < lvl.size(); ++v) members[comm[v]].push_back(v);

    LevelGraph out;
    out.adj.resize(n_comms);
    out.self_weight.assign(n_comms, 0.0);
    out.k.assign(n_comms, 0.0);
    out.two_m = lvl.two_m;

    std::vector<double> acc(n_comms, 0.0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t c = 0; c < n_comms; ++c) {
        touched.clear();
        double intra = 0.0; // counts every internal edge from both ends
        for (std::uint32_t v : members[c]) {
            out.self_weight[c] += lvl.self_weight[v];
            out.k[c] += lvl.k[v];
            for (const auto& [u, w] : lvl.adj[v]) {
                const std::uint32_t cu = comm[u];
                if (cu == c) {
                    intra += w;
                } else {
                    if (acc[cu] == 0.0) touched.push_back(cu);
                    acc[cu] += w;
                }
            }
        }
        out.self_weight[c] += intra / 2.0;
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t cu : touched) {
            out.adj[c].emplace_back(cu, acc[cu]);
            acc[cu] = 0.0;
        }
    }
    return out;
}

} // namespace detail

// Standard two-phase Louvain: local moving then aggregation, repeated until a
// phase moves nothing. The vertex visit order of each pass is shuffled from
// the seed; a non-empty visit_order overrides the first pass, which makes
// relabeling experiments reproducible.
inline Partition louvain(const ProjectionGraph& g, std::uint64_t seed, double resolution = 1.0,
                         std::vector<std::uint32_t> visit_order = {}) {
    const std::size_t n = g.size();
    if (n == 0) throw InvalidInput("louvain requires a non-empty graph");
    if (!visit_order.empty()) {
        std::vector<bool> seen(n, false);
        if (visit_order.size() != n) throw InvalidInput("visit_order must list every vertex once");
        for (std::uint32_t v : visit_order) {
            if (v >= n || seen[v]) throw InvalidInput("visit_order must list every vertex once");
            seen[v] = true;
        }
    }

    Partition p;
    p.rng_seed = seed;
    SplitMix64 rng(seed);

    detail::LevelGraph lvl = detail::level_from(g);
    std::vector<std::uint32_t> vert2comm(n);
    std::iota(vert2comm.begin(), vert2comm.end(), 0u);

    bool first_pass = true;
    while (true) {
        std::vector<std::uint32_t> order;
        if (first_pass && !visit_order.empty()) {
            order = visit_order;
        } else {
            order.resize(lvl.size());
            std::iota(order.begin(), order.end(), 0u);
            for (std::size_t i = order.size(); i-- > 1;)
                std::swap(order[i], order[rng.bounded(i + 1)]);
        }

        std::vector<std::uint32_t> comm(lvl.size());
        std::iota(comm.begin(), comm.end(), 0u);
        const bool any = detail::local_move(lvl, comm, order, resolution);
        const std::uint32_t n_comms = detail::renumber_along(comm, order);

        for (auto& c : vert2comm) c = comm[c];
        ++p.pass_count;
        p.pass_q.push_back(modularity(g, vert2comm, resolution));
        first_pass = false;

        if (!any || n_comms == lvl.size()) break;
        lvl = detail::aggregate(lvl, comm, n_comms);
    }

    // canonical output ids: first appearance in vertex order
    std::vector<std::uint32_t> ident(n);
    std::iota(ident.begin(), ident.end(), 0u);
    detail::renumber_along(vert2comm, ident);
    p.assignment = std::move(vert2comm);
    p.Q = modularity(g, p.assignment, resolution);
    return p;
}

struct CommunityProfile {
    std::uint32_t id = 0;
    std::size_t size = 0;
    double internal_density = 0.0; // internal edge count over size·(size−1)/2
    std::vector<std::pair<std::string, std::size_t>> fields;
    std::vector<std::pair<std::string, std::size_t>> countries;
    std::vector<std::string> exemplars; // top members by weighted degree
};

namespace detail {

inline std::vector<std::pair<std::string, std::size_t>> histogram_desc(
    const std::map<std::string, std::size_t>& counts) {
    std::vector<std::pair<std::string, std::size_t>> out(counts.begin(), counts.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

} // namespace detail

// Size, internal density, and store-joined attribute histograms per
// community, ordered by community id. Exemplars are the up-to-three members
// with the highest weighted degree (ties to the earlier vertex).
inline std::vector<CommunityProfile> profile_communities(const PropertyGraph& store,
                                                         const ProjectionGraph& g,
                                                         const Partition& partition) {
    const std::size_t n = g.size();
    if (partition.assignment.size() != n)
        throw InvalidInput("partition does not cover the projection graph");
    std::uint32_t n_comms = 0;
    for (std::uint32_t c : partition.assignment) n_comms = std::max(n_comms, c + 1);

    std::vector<CommunityProfile> profiles(n_comms);
    std::vector<std::vector<std::uint32_t>> members(n_comms);
    for (std::uint32_t v = 0; v < n; ++v) members[partition.assignment[v]].push_back(v);

    for (std::uint32_t c = 0; c < n_comms; ++c) {
        CommunityProfile& prof = profiles[c];
        prof.id = c;
        prof.size = members[c].size();

        std::size_t internal = 0;
        std::map<std::string, std::size_t> fields, countries;
        std::vector<std::pair<double, std::uint32_t>> by_strength;
        for (std::uint32_t v : members[c]) {
            double strength = 0.0;
            for (const auto& [u, w] : g.neighbors(v)) {
                strength += w;
                if (u > v && partition.assignment[u] == c) ++internal;
            }
            by_strength.emplace_back(strength, v);

            for (std::uint32_t ei : store.out_edges(g.vertex(v).id)) {
                const Edge& e = store.edges()[ei];
                if (e.rel == RelationType::WORKS_IN_FIELD)
                    ++fields[store.node(e.dst).canonical_name];
                else if (e.rel == RelationType::IS_CITIZEN_OF)
                    ++countries[store.node(e.dst).canonical_name];
            }
        }
        if (prof.size > 1) {
            const double pairs = static_cast<double>(prof.size) *
                                 static_cast<double>(prof.size - 1) / 2.0;
            prof.internal_density = static_cast<double>(internal) / pairs;
        }
        prof.fields = detail::histogram_desc(fields);
        prof.countries = detail::histogram_desc(countries);

        std::stable_sort(by_strength.begin(), by_strength.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t i = 0; i < by_strength.size() && i < 3; ++i)
            prof.exemplars.push_back(g.vertex(by_strength[i].second).name);
    }
    return profiles;
}

} // namespace nobelgraph::community
