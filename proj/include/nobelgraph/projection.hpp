#pragma once
// Shared-attribute projection: the undirected weighted social graph over
// laureates and organizations. Edge weight = number of attribute categories
// (organization, field, country, award statement) whose value sets intersect.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/normalize.hpp"

namespace nobelgraph {

struct ProjectionVertex {
    NodeId id = 0;
    std::string name;
};

class ProjectionGraph {
  public:
    using Neighbor = std::pair<std::uint32_t, double>; // (vertex index, weight)

    std::size_t size() const { return vertices_.size(); }
    const std::vector<ProjectionVertex>& vertices() const { return vertices_; }
    const ProjectionVertex& vertex(std::uint32_t i) const { return vertices_.at(i); }
    const std::vector<Neighbor>& neighbors(std::uint32_t i) const { return adj_.at(i); }
    const std::vector<std::string>& attribute_set() const { return attribute_set_; }

    std::optional<std::uint32_t> index_of(NodeId id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    double weight(std::uint32_t i, std::uint32_t j) const {
        for (const auto& [k, w] : adj_.at(i))
            if (k == j) return w;
        return 0.0;
    }

    std::size_t edge_count() const { return edge_count_; }

    double total_weight() const { // sum over unordered pairs
        double m = 0.0;
        for (const auto& nbrs : adj_)
            for (const auto& [j, w] : nbrs) m += w;
        return m / 2.0;
    }

    // (i, j, w) with i < j, ordered by (i, j)
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edge_list() const {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> out;
        out.reserve(edge_count_);
        for (std::uint32_t i = 0; i < adj_.size(); ++i)
            for (const auto& [j, w] : adj_[i])
                if (i < j) out.emplace_back(i, j, w);
        return out;
    }

    // unweighted adjacency, neighbor lists sorted (input shape for metrics)
    std::vector<std::vector<std::uint32_t>> to_simple() const {
        std::vector<std::vector<std::uint32_t>> simple(adj_.size());
        for (std::uint32_t i = 0; i < adj_.size(); ++i) {
            simple[i].reserve(adj_[i].size());
            for (const auto& [j, w] : adj_[i]) simple[i].push_back(j);
        }
        return simple;
    }

    static ProjectionGraph build(std::vector<ProjectionVertex> vertices,
                                 std::vector<std::string> attribute_set,
                                 const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& edges) {
        ProjectionGraph g;
        g.vertices_ = std::move(vertices);
        g.attribute_set_ = std::move(attribute_set);
        g.adj_.resize(g.vertices_.size());
        for (std::size_t i = 0; i < g.vertices_.size(); ++i)
            g.index_[g.vertices_[i].id] = static_cast<std::uint32_t>(i);
        for (const auto& [i, j, w] : edges) {
            g.adj_.at(i).emplace_back(j, w);
            g.adj_.at(j).emplace_back(i, w);
            ++g.edge_count_;
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

  private:
    std::vector<ProjectionVertex> vertices_;
    std::vector<std::vector<Neighbor>> adj_;
    std::unordered_map<NodeId, std::uint32_t> index_;
    std::vector<std::string> attribute_set_;
    std::size_t edge_count_ = 0;
};

// Maps a vertex to its value set for one attribute category. Values are
// opaque keys; equality is exact.
struct AttributeExtractor {
    std::string name;
    std::function<std::vector<std::string>(const PropertyGraph&, NodeId)> values;
};

namespace detail {

// attribute value for "being associated with this node"
inline std::string node_value(const PropertyGraph& g, NodeId id) {
    const Node& n = g.node(id);
    return PropertyGraph::identity_key(n.label, n.canonical_name);
}

// normalized comparison key for free-text attribute values
inline std::string text_value(std::string_view raw) {
    auto norm = normalize_free_text(raw);
    return norm ? *norm : std::string();
}

inline std::vector<std::string> out_neighbor_values(const PropertyGraph& g, NodeId id,
                                                    std::initializer_list<RelationType> rels) {
    std::vector<std::string> out;
    for (std::uint32_t e : g.out_edges(id)) {
        const Edge& edge = g.edges()[e];
        for (RelationType r : rels)
            if (edge.rel == r) out.push_back(node_value(g, edge.dst));
    }
    return out;
}

} // namespace detail

// The four categories of Eq. 1.
inline std::vector<AttributeExtractor> default_attribute_extractors() {
    std::vector<AttributeExtractor> out;
    out.push_back({"Organization", [](const PropertyGraph& g, NodeId id) {
                       auto vals = detail::out_neighbor_values(
                           g, id, {RelationType::EMPLOYED_BY, RelationType::EDUCATED_AT});
                       // an organization belongs to itself
                       if (g.node(id).label == EntityLabel::Organization)
                           vals.push_back(detail::node_value(g, id));
                       return vals;
                   }});
    out.push_back({"Field", [](const PropertyGraph& g, NodeId id) {
                       return detail::out_neighbor_values(g, id,
                                                          {RelationType::WORKS_IN_FIELD});
                   }});
    out.push_back({"Country", [](const PropertyGraph& g, NodeId id) {
                       return detail::out_neighbor_values(g, id, {RelationType::IS_CITIZEN_OF});
                   }});
    out.push_back({"AwardStatement", [](const PropertyGraph& g, NodeId id) {
                       std::vector<std::string> vals;
                       for (std::uint32_t e : g.out_edges(id)) {
                           const Edge& edge = g.edges()[e];
                           if (edge.rel != RelationType::RECEIVED) continue;
                           auto it = edge.props.find("motivation");
                           if (it == edge.props.end()) continue;
                           std::string key = detail::text_value(it->second);
                           if (!key.empty()) vals.push_back(std::move(key));
                       }
                       return vals;
                   }});
    return out;
}

// Eq. 1 over all Person and Organization nodes. Inverted-index construction:
// per category, bucket vertices by attribute value and connect each bucket
// pairwise, at most once per category.
inline ProjectionGraph build_projection(const PropertyGraph& store,
                                        const std::vector<AttributeExtractor>& attributes) {
    if (attributes.empty()) throw InvalidInput("attribute list must be non-empty");

    std::vector<ProjectionVertex> vertices;
    for (EntityLabel l : {EntityLabel::Person, EntityLabel::Organization})
        for (NodeId id : store.nodes_with_label(l))
            vertices.push_back({id, store.node(id).canonical_name});
    std::sort(vertices.begin(), vertices.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });

    auto pack = [](std::uint32_t i, std::uint32_t j) {
        if (i > j) std::swap(i, j);
        return (static_cast<std::uint64_t>(i) << 32) | j;
    };

    std::unordered_map<std::uint64_t, double> weights;
    std::vector<std::string> attribute_set;
    for (const AttributeExtractor& attr : attributes) {
        attribute_set.push_back(attr.name);
        std::unordered_map<std::string, std::vector<std::uint32_t>> buckets;
        for (std::uint32_t v = 0; v < vertices.size(); ++v) {
            std::vector<std::string> vals = attr.values(store, vertices[v].id);
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            for (std::string& val : vals) buckets[std::move(val)].push_back(v);
        }
        // a pair may share several values within one category; the indicator
        // still contributes exactly 1
        std::unordered_set<std::uint64_t> seen;
        for (const auto& [val, members] : buckets)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (seen.insert(pack(members[a], members[b])).second)
                        weights[pack(members[a], members[b])] += 1.0;
    }

    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    edges.reserve(weights.size());
    for (const auto& [key, w] : weights)
        edges.emplace_back(static_cast<std::uint32_t>(key >> 32),
                           static_cast<std::uint32_t>(key & 0xFFFFFFFFu), w);
    std::sort(edges.begin(), edges.end());
    return ProjectionGraph::build(std::move(vertices), std::move(attribute_set), edges);
}

// Vertex-induced subgraph on the largest connected component; ties prefer the
// component containing the smallest NodeId.
inline ProjectionGraph largest_component(const ProjectionGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::int32_t> comp(n, -1);
    std::vector<std::uint32_t> queue;
    std::int32_t comp_count = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = comp_count;
        queue.assign(1, s);
        while (!queue.empty()) {
            std::uint32_t v = queue.back();
            queue.pop_back();
            for (const auto& [u, w] : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = comp_count;
                    queue.push_back(u);
                }
        }
        ++comp_count;
    }

    // pick by (size desc, min NodeId asc); vertices_ are in NodeId order, so
    // the first vertex of a component has its minimum NodeId
    std::vector<std::size_t> size(static_cast<std::size_t>(comp_count), 0);
    std::vector<std::uint32_t> first(static_cast<std::size_t>(comp_count), 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        auto c = static_cast<std::size_t>(comp[v]);
        if (size[c] == 0) first[c] = v;
        ++size[c];
    }
    std::int32_t best = -1;
    for (std::int32_t c = 0; c < comp_count; ++c) {
        if (best < 0 || size[c] > size[best] ||
            (size[c] == size[best] &&
             g.vertex(first[c]).id < g.vertex(first[static_cast<std::size_t>(best)]).id))
            best = c;
    }
    if (best < 0) return g; // empty graph

    std::vector<ProjectionVertex> vertices;
    std::vector<std::int64_t> remap(n, -1);
    for (std::uint32_t v = 0; v < n; ++v)
        if (comp[v] == best) {
            remap[v] = static_cast<std::int64_t>(vertices.size());
            vertices.push_back(g.vertex(v));
        }
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (const auto& [i, j, w] : g.edge_list())
        if (comp[i] == best && comp[j] == best)
            edges.emplace_back(static_cast<std::uint32_t>(remap[i]),
                               static_cast<std::uint32_t>(remap[j]), w);
    return ProjectionGraph::build(std::move(vertices), g.attribute_set(), edges);
}

// TSV edge list: name_i<TAB>name_j<TAB>w, names sorted within a line, lines
// sorted lexicographically.
inline void export_edge_list(const ProjectionGraph& g, std::ostream& out) {
    std::vector<std::string> lines;
    for (const auto& [i, j, w] : g.edge_list()) {
        std::string a = g.vertex(i).name, b = g.vertex(j).name;
        if (b < a) std::swap(a, b);
        lines.push_back(a + "\t" + b + "\t" + std::to_string(static_cast<long long>(w + 0.5)));
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) out << line << "\n";
}

} // namespace nobelgraph
