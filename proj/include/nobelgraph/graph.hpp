#pragma once
// In-memory property graph: labeled nodes, typed edges, property maps, and
// the identity constraints ((label, canonical_name) unique graph-wide,
// case-insensitive; qid unique graph-wide). Mutation is additive only --
// nothing is ever overwritten or deleted.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/schema.hpp"
#include "nobelgraph/unicode.hpp"

namespace nobelgraph {

using NodeId = std::uint64_t;
using PropertyMap = std::map<std::string, std::string>;

enum class Source : std::uint8_t { original, enriched };

inline std::string_view to_string(Source s) {
    return s == Source::original ? "original" : "enriched";
}

struct Node {
    NodeId id = 0;
    EntityLabel label = EntityLabel::Person;
    std::string canonical_name;
    Source source = Source::original;
    PropertyMap props;
    // Conflicting incoming values, newest last; existing values always win.
    std::vector<std::string> provenance;

    std::string_view qid() const {
        auto it = props.find("qid");
        return it == props.end() ? std::string_view{} : std::string_view(it->second);
    }
};

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    RelationType rel = RelationType::RECEIVED;
    Source source = Source::original;
    PropertyMap props;
};

// qid and (label, canonical_name) resolving to different nodes; never merged
// automatically, surfaced to the caller instead.
class IdentityConflictError : public UserError {
public:
    IdentityConflictError(NodeId by_qid, NodeId by_name, std::string qid, std::string name)
        : UserError("identity conflict: qid '" + qid + "' resolves to node " +
                    std::to_string(by_qid) + " but (label, name '" + name +
                    "') resolves to node " + std::to_string(by_name)),
          by_qid_(by_qid),
          by_name_(by_name) {}

    NodeId node_by_qid() const { return by_qid_; }
    NodeId node_by_name() const { return by_name_; }

private:
    NodeId by_qid_;
    NodeId by_name_;
};

struct UpsertNodeResult {
    NodeId id;
    bool created;
    bool had_conflicting_props; // provenance grew
};

struct GraphStats {
    std::size_t nodes_total = 0;
    std::size_t edges_total = 0;
    std::map<EntityLabel, std::size_t> nodes_by_label;
    std::map<RelationType, std::size_t> edges_by_type;
    std::map<Source, std::size_t> nodes_by_source;
    std::map<Source, std::size_t> edges_by_source;
};

class PropertyGraph {
public:
    PropertyGraph() = default;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }

    const std::vector<std::uint32_t>& out_edges(NodeId id) const { return out_.at(id); }
    const std::vector<std::uint32_t>& in_edges(NodeId id) const { return in_.at(id); }
    const std::vector<NodeId>& nodes_with_label(EntityLabel l) const {
        return by_label_[static_cast<std::size_t>(l)];
    }

    static std::string identity_key(EntityLabel label, std::string_view canonical_name) {
        std::string key = std::string(to_string(label));
        key.push_back('\x1f');
        key += unicode::fold_lower(canonical_name);
        return key;
    }

    std::optional<NodeId> find_node(EntityLabel label, std::string_view canonical_name) const {
        auto it = name_index_.find(identity_key(label, canonical_name));
        if (it == name_index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<NodeId> find_by_qid(std::string_view qid) const {
        auto it = qid_index_.find(std::string(qid));
        if (it == qid_index_.end()) return std::nullopt;
        return it->second;
    }

    // Additive upsert. A node matched by qid or by (label, canonical_name)
    // gains only properties it does not already have; conflicting incoming
    // values land in the provenance list. Throws IdentityConflictError when
    // qid and name resolve to different nodes.
    UpsertNodeResult upsert_node(EntityLabel label, std::string_view canonical_name,
                                 const PropertyMap& props, Source source = Source::enriched) {
        if (canonical_name.empty()) throw InvalidInput("canonical_name must be non-empty");
        if (canonical_name.find('\t') != std::string_view::npos ||
            canonical_name.find('\n') != std::string_view::npos)
            throw InvalidInput("canonical_name must not contain tab or newline");
        check_reserved(props);

        std::string_view qid;
        if (auto it = props.find("qid"); it != props.end()) qid = it->second;

        std::optional<NodeId> by_qid = qid.empty() ? std::nullopt : find_by_qid(qid);
        std::optional<NodeId> by_name = find_node(label, canonical_name);
        if (by_qid && by_name && *by_qid != *by_name)
            throw IdentityConflictError(*by_qid, *by_name, std::string(qid),
                                        std::string(canonical_name));

        if (by_qid || by_name) {
            NodeId id = by_qid ? *by_qid : *by_name;
            Node& n = nodes_[id];
            // dedup keeps repeat ingestion of the same file a no-op
            auto record_conflict = [&n](std::string entry) {
                for (const std::string& seen : n.provenance)
                    if (seen == entry) return false;
                n.provenance.push_back(std::move(entry));
                return true;
            };
            bool conflicts = false;
            if (by_qid && n.label != label)
                conflicts |= record_conflict("label=" + std::string(to_string(label)));
            for (const auto& [k, v] : props) {
                auto it = n.props.find(k);
                if (it == n.props.end()) {
                    if (k == "qid") {
                        if (auto other = find_by_qid(v); other && *other != id)
                            throw IdentityConflictError(*other, id, v, n.canonical_name);
                        qid_index_.emplace(v, id);
                    }
                    n.props.emplace(k, v);
                } else if (it->second != v) {
                    conflicts |= record_conflict(k + "=" + v);
                }
            }
            return {id, false, conflicts};
        }

        NodeId id = nodes_.size();
        Node n;
        n.id = id;
        n.label = label;
        n.canonical_name = std::string(canonical_name);
        n.source = source;
        n.props = props;
        nodes_.push_back(std::move(n));
        out_.emplace_back();
        in_.emplace_back();
        by_label_[static_cast<std::size_t>(label)].push_back(id);
        name_index_.emplace(identity_key(label, canonical_name), id);
        if (!qid.empty()) qid_index_.emplace(std::string(qid), id);
        return {id, true, false};
    }

    // Inserts unless an edge with the same (src, dst, rel) triple exists;
    // returns whether anything changed.
    bool upsert_edge(NodeId src, NodeId dst, RelationType rel, const PropertyMap& props = {},
                     Source source = Source::enriched) {
        if (src >= nodes_.size() || dst >= nodes_.size())
            throw InvalidInput("edge references unknown node id");
        check_reserved(props);
        EdgeKey key{src, dst, rel};
        if (edge_keys_.count(key)) return false;
        std::uint32_t idx = static_cast<std::uint32_t>(edges_.size());
        edges_.push_back(Edge{src, dst, rel, source, props});
        edge_keys_.insert(key);
        out_[src].push_back(idx);
        in_[dst].push_back(idx);
        return true;
    }

    bool has_edge(NodeId src, NodeId dst, RelationType rel) const {
        return edge_keys_.count(EdgeKey{src, dst, rel}) > 0;
    }

    // Snapshot loading only: provenance is otherwise append-only via upserts.
    void restore_provenance(NodeId id, std::vector<std::string> provenance) {
        nodes_.at(id).provenance = std::move(provenance);
    }

    GraphStats stats() const {
        GraphStats s;
        s.nodes_total = nodes_.size();
        s.edges_total = edges_.size();
        for (const Node& n : nodes_) {
            ++s.nodes_by_label[n.label];
            ++s.nodes_by_source[n.source];
        }
        for (const Edge& e : edges_) {
            ++s.edges_by_type[e.rel];
            ++s.edges_by_source[e.source];
        }
        return s;
    }

private:
    struct EdgeKey {
        NodeId src, dst;
        RelationType rel;
        bool operator==(const EdgeKey&) const = default;
    };
    struct EdgeKeyHash {
        std::size_t operator()(const EdgeKey& k) const {
            std::uint64_t h = k.src * 0x9E3779B97F4A7C15ull;
            h ^= k.dst + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h ^= static_cast<std::uint64_t>(k.rel) + (h << 12);
            return static_cast<std::size_t>(h);
        }
    };

    static void check_reserved(const PropertyMap& props) {
        for (const auto& [k, v] : props) {
            if (k.rfind("__", 0) == 0)
                throw InvalidInput("property keys starting with '__' are reserved: " + k);
            if (k.empty()) throw InvalidInput("property keys must be non-empty");
        }
    }

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::vector<std::uint32_t>> in_;
    std::array<std::vector<NodeId>, kEntityLabelCount> by_label_;
    std::unordered_map<std::string, NodeId> name_index_;
    std::unordered_map<std::string, NodeId> qid_index_;
    std::unordered_set<EdgeKey, EdgeKeyHash> edge_keys_;
};

// Node/edge-set equality up to NodeId renaming; used by tests and the
// idempotence checks. Keys nodes by (label, folded name).
inline bool structural_equal(const PropertyGraph& a, const PropertyGraph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;

    auto node_repr = [](const PropertyGraph& g, const Node& n) {
        std::string r = PropertyGraph::identity_key(n.label, n.canonical_name);
        r += '\x1e';
        r += n.canonical_name;
        r += '\x1e';
        r += to_string(n.source);
        for (const auto& [k, v] : n.props) {
            r += '\x1e';
            r += k;
            r += '=';
            r += v;
        }
        for (const auto& p : n.provenance) {
            r += '\x1d';
            r += p;
        }
        (void)g;
        return r;
    };
    std::multiset<std::string> na, nb;
    for (const Node& n : a.nodes()) na.insert(node_repr(a, n));
    for (const Node& n : b.nodes()) nb.insert(node_repr(b, n));
    if (na != nb) return false;

    auto edge_repr = [](const PropertyGraph& g, const Edge& e) {
        std::string r = PropertyGraph::identity_key(g.node(e.src).label, g.node(e.src).canonical_name);
        r += '\x1e';
        r += to_string(e.rel);
        r += '\x1e';
        r += PropertyGraph::identity_key(g.node(e.dst).label, g.node(e.dst).canonical_name);
        r += '\x1e';
        r += to_string(e.source);
        for (const auto& [k, v] : e.props) {
            r += '\x1e';
            r += k;
            r += '=';
            r += v;
        }
        return r;
    };
    std::multiset<std::string> ea, eb;
    for (const Edge& e : a.edges()) ea.insert(edge_repr(a, e));
    for (const Edge& e : b.edges()) eb.insert(edge_repr(b, e));
    return ea == eb;
}

} // namespace nobelgraph
