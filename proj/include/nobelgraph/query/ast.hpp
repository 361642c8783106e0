#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nobelgraph/schema.hpp"

namespace nobelgraph::query {

enum class Direction : std::uint8_t { right, left, undirected };

// Inline property constraints keep source order so render() reproduces the
// query as written.
using PropertyConstraints = std::vector<std::pair<std::string, std::string>>;

struct NodePattern {
    std::string variable; // empty = anonymous
    std::optional<EntityLabel> label;
    PropertyConstraints props;

    bool operator==(const NodePattern&) const = default;
};

struct RelPattern {
    std::optional<RelationType> type; // empty = any type
    Direction dir = Direction::right;

    bool operator==(const RelPattern&) const = default;
};

// nodes.size() == rels.size() + 1; a bare node pattern has no rels.
struct PathPattern {
    std::vector<NodePattern> nodes;
    std::vector<RelPattern> rels;

    bool operator==(const PathPattern&) const = default;
};

enum class Cmp : std::uint8_t { eq, ne, lt, gt, contains };

struct Condition {
    std::string variable;
    std::string prop;
    Cmp op = Cmp::eq;
    std::string value;
    bool value_is_number = false; // literal was written unquoted

    bool operator==(const Condition&) const = default;
};

struct Projection {
    enum class Kind : std::uint8_t { variable, property, count } kind = Kind::variable;
    std::string variable; // "*" for count(*)
    std::string prop;     // property projections only

    bool operator==(const Projection&) const = default;
};

struct OrderKey {
    std::string variable;
    std::string prop;
    bool descending = false;

    bool operator==(const OrderKey&) const = default;
};

struct QueryAst {
    std::vector<PathPattern> matches; // one entry per comma-separated pattern
    std::vector<Condition> where;     // conjunction
    bool distinct = false;
    std::vector<Projection> returns;
    std::vector<OrderKey> order_by;
    std::optional<std::uint64_t> limit;

    bool operator==(const QueryAst&) const = default;
};

namespace detail {

inline void render_string_literal(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
}

inline void render_node(std::string& out, const NodePattern& n) {
    out += '(';
    out += n.variable;
    if (n.label) {
        out += ':';
        out += to_string(*n.label);
    }
    if (!n.props.empty()) {
        out += " {";
        bool first = true;
        for (const auto& [k, v] : n.props) {
            if (!first) out += ", ";
            first = false;
            out += k;
            out += ": ";
            render_string_literal(out, v);
        }
        out += '}';
    }
    out += ')';
}

inline void render_rel(std::string& out, const RelPattern& r) {
    out += r.dir == Direction::left ? "<-" : "-";
    out += '[';
    if (r.type) {
        out += ':';
        out += to_string(*r.type);
    }
    out += ']';
    out += r.dir == Direction::right ? "->" : "-";
}

inline void render_projection(std::string& out, const Projection& p) {
    switch (p.kind) {
    case Projection::Kind::variable: out += p.variable; break;
    case Projection::Kind::property:
        out += p.variable;
        out += '.';
        out += p.prop;
        break;
    case Projection::Kind::count:
        out += "count(";
        out += p.variable;
        out += ')';
        break;
    }
}

} // namespace detail

inline std::string render(const QueryAst& ast) {
    std::string out = "MATCH ";
    for (std::size_t i = 0; i < ast.matches.size(); ++i) {
        if (i > 0) out += " MATCH ";
        const PathPattern& path = ast.matches[i];
        for (std::size_t j = 0; j < path.nodes.size(); ++j) {
            if (j > 0) detail::render_rel(out, path.rels[j - 1]);
            detail::render_node(out, path.nodes[j]);
        }
    }
    if (!ast.where.empty()) {
        out += " WHERE ";
        bool first = true;
        for (const Condition& c : ast.where) {
            if (!first) out += " AND ";
            first = false;
            out += c.variable;
            out += '.';
            out += c.prop;
            switch (c.op) {
            case Cmp::eq: out += " = "; break;
            case Cmp::ne: out += " <> "; break;
            case Cmp::lt: out += " < "; break;
            case Cmp::gt: out += " > "; break;
            case Cmp::contains: out += " CONTAINS "; break;
            }
            if (c.value_is_number) out += c.value;
            else detail::render_string_literal(out, c.value);
        }
    }
    out += " RETURN ";
    if (ast.distinct) out += "DISTINCT ";
    for (std::size_t i = 0; i < ast.returns.size(); ++i) {
        if (i > 0) out += ", ";
        detail::render_projection(out, ast.returns[i]);
    }
    if (!ast.order_by.empty()) {
        out += " ORDER BY ";
        for (std::size_t i = 0; i < ast.order_by.size(); ++i) {
            if (i > 0) out += ", ";
            out += ast.order_by[i].variable;
            out += '.';
            out += ast.order_by[i].prop;
            if (ast.order_by[i].descending) out += " DESC";
        }
    }
    if (ast.limit) {
        out += " LIMIT ";
        out += std::to_string(*ast.limit);
    }
    return out;
}

} // namespace nobelgraph::query
