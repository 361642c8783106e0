#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/strings.hpp"
#include "nobelgraph/query/ast.hpp"

namespace nobelgraph::query {

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t row_count() const { return rows.size(); }

    bool operator==(const ResultTable&) const = default;
};

namespace detail {

// One slot per named variable (shared across patterns) or anonymous node
// pattern occurrence.
struct Slot {
    std::string name;
    std::vector<EntityLabel> labels; // conjoined; conflicting labels match nothing
    PropertyConstraints props;
    std::vector<Condition> conds;
};

struct EdgeCon {
    std::uint32_t a = 0, b = 0; // slot indices; dir is relative a -> b
    std::optional<RelationType> type;
    Direction dir = Direction::right;
};

struct CompiledQuery {
    std::vector<Slot> slots;
    std::vector<EdgeCon> edges;
    std::map<std::string, std::uint32_t> var_slot;
};

inline CompiledQuery compile(const QueryAst& ast) {
    CompiledQuery q;
    std::size_t anon = 0;
    auto slot_for = [&](const NodePattern& n) -> std::uint32_t {
        std::uint32_t idx;
        if (n.variable.empty()) {
            idx = static_cast<std::uint32_t>(q.slots.size());
            q.slots.push_back({"_" + std::to_string(anon++), {}, {}, {}});
        } else if (auto it = q.var_slot.find(n.variable); it != q.var_slot.end()) {
            idx = it->second;
        } else {
            idx = static_cast<std::uint32_t>(q.slots.size());
            q.var_slot.emplace(n.variable, idx);
            q.slots.push_back({n.variable, {}, {}, {}});
        }
        Slot& s = q.slots[idx];
        if (n.label) s.labels.push_back(*n.label);
        s.props.insert(s.props.end(), n.props.begin(), n.props.end());
        return idx;
    };
    for (const PathPattern& path : ast.matches) {
        std::vector<std::uint32_t> ids;
        ids.reserve(path.nodes.size());
        for (const NodePattern& n : path.nodes) ids.push_back(slot_for(n));
        for (std::size_t i = 0; i < path.rels.size(); ++i)
            q.edges.push_back({ids[i], ids[i + 1], path.rels[i].type, path.rels[i].dir});
    }
    for (const Condition& c : ast.where) q.slots[q.var_slot.at(c.variable)].conds.push_back(c);
    return q;
}

inline std::optional<std::string_view> prop_value(const Node& node, std::string_view key) {
    if (key == "name") return std::string_view(node.canonical_name);
    auto it = node.props.find(std::string(key));
    if (it == node.props.end()) return std::nullopt;
    return std::string_view(it->second);
}

// < and > compare numerically when both sides parse as numbers, bytewise
// otherwise; = and <> are always bytewise.
inline bool less_than(std::string_view a, std::string_view b) {
    auto x = strings::parse_number(a);
    auto y = strings::parse_number(b);
    if (x && y) return *x < *y;
    return a < b;
}

inline bool eval_condition(const Node& node, const Condition& c) {
    auto value = prop_value(node, c.prop);
    if (!value) return false;
    switch (c.op) {
    case Cmp::eq: return *value == c.value;
    case Cmp::ne: return *value != c.value;
    case Cmp::lt: return less_than(*value, c.value);
    case Cmp::gt: return less_than(c.value, *value);
    case Cmp::contains: return value->find(c.value) != std::string_view::npos;
    }
    return false;
}

inline bool node_matches(const Node& node, const Slot& slot) {
    for (EntityLabel l : slot.labels)
        if (node.label != l) return false;
    for (const auto& [k, v] : slot.props) {
        auto value = prop_value(node, k);
        if (!value || *value != v) return false;
    }
    for (const Condition& c : slot.conds)
        if (!eval_condition(node, c)) return false;
    return true;
}

inline std::vector<NodeId> scan_candidates(const PropertyGraph& store, const Slot& slot) {
    std::vector<NodeId> out;
    auto try_node = [&](NodeId id) {
        if (node_matches(store.node(id), slot)) out.push_back(id);
    };
    if (!slot.labels.empty()) {
        for (EntityLabel l : slot.labels)
            if (l != slot.labels.front()) return out; // conflicting labels
        for (NodeId id : store.nodes_with_label(slot.labels.front())) try_node(id);
    } else {
        for (const Node& n : store.nodes()) try_node(n.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool directed_edge(const PropertyGraph& store, NodeId src, NodeId dst,
                          std::optional<RelationType> type) {
    for (std::uint32_t ei : store.out_edges(src)) {
        const Edge& e = store.edges()[ei];
        if (e.dst == dst && (!type || e.rel == *type)) return true;
    }
    return false;
}

inline bool edge_holds(const PropertyGraph& store, const EdgeCon& con, NodeId at_a, NodeId at_b) {
    switch (con.dir) {
    case Direction::right: return directed_edge(store, at_a, at_b, con.type);
    case Direction::left: return directed_edge(store, at_b, at_a, con.type);
    case Direction::undirected:
        return directed_edge(store, at_a, at_b, con.type) ||
               directed_edge(store, at_b, at_a, con.type);
    }
    return false;
}

struct PlanStep {
    enum class Kind : std::uint8_t { seed, join_seed, expand } kind = Kind::seed;
    std::uint32_t slot = 0;
    std::size_t estimate = 0;              // label + property candidate count
    std::optional<std::uint32_t> via_edge; // expand only
    std::vector<std::uint32_t> check_edges; // constraints fully bound once this slot binds
};

struct Plan {
    CompiledQuery q;
    std::vector<PlanStep> steps;
};

inline Plan make_plan(const QueryAst& ast, const PropertyGraph& store,
                      std::optional<std::uint32_t> forced_seed = std::nullopt) {
    Plan plan{compile(ast), {}};
    const std::size_t n = plan.q.slots.size();
    std::vector<std::size_t> estimate(n);
    for (std::size_t i = 0; i < n; ++i) {
        Slot scan_only = plan.q.slots[i];
        scan_only.conds.clear();
        estimate[i] = scan_candidates(store, scan_only).size();
    }
    std::vector<bool> planned(n, false);
    auto pick_min = [&](auto&& eligible) -> std::optional<std::uint32_t> {
        std::optional<std::uint32_t> best;
        for (std::uint32_t i = 0; i < n; ++i)
            if (!planned[i] && eligible(i) && (!best || estimate[i] < estimate[*best]))
                best = i;
        return best;
    };
    auto adjacent_to_planned = [&](std::uint32_t s) {
        for (const EdgeCon& e : plan.q.edges)
            if ((e.a == s && planned[e.b]) || (e.b == s && planned[e.a])) return true;
        return false;
    };
    std::size_t done = 0;
    while (done < n) {
        PlanStep step;
        if (auto next = pick_min(adjacent_to_planned)) {
            step.kind = PlanStep::Kind::expand;
            step.slot = *next;
            for (std::uint32_t ei = 0; ei < plan.q.edges.size() && !step.via_edge; ++ei) {
                const EdgeCon& e = plan.q.edges[ei];
                if ((e.a == *next && planned[e.b]) || (e.b == *next && planned[e.a]))
                    step.via_edge = ei;
            }
        } else {
            step.kind = done == 0 ? PlanStep::Kind::seed : PlanStep::Kind::join_seed;
            step.slot = done == 0 && forced_seed ? *forced_seed : *pick_min([](std::uint32_t) {
                return true;
            });
        }
        step.estimate = estimate[step.slot];
        planned[step.slot] = true;
        for (std::uint32_t ei = 0; ei < plan.q.edges.size(); ++ei) {
            const EdgeCon& e = plan.q.edges[ei];
            bool involves = e.a == step.slot || e.b == step.slot;
            if (involves && planned[e.a] && planned[e.b]) step.check_edges.push_back(ei);
        }
        plan.steps.push_back(std::move(step));
        ++done;
    }
    return plan;
}

inline std::vector<NodeId> expand_candidates(const PropertyGraph& store, const Plan& plan,
                                             const PlanStep& step,
                                             const std::vector<NodeId>& binding) {
    const EdgeCon& e = plan.q.edges[*step.via_edge];
    std::uint32_t target = step.slot;
    std::uint32_t from = e.a == target ? e.b : e.a;
    NodeId u = binding[from];
    // Orient the constraint as seen from the bound endpoint. Self-loop
    // constraints are never chosen as via edges (no unplanned endpoint), so
    // from and target are distinct slots here.
    bool from_is_a = from == e.a && target == e.b;
    bool want_out, want_in;
    switch (e.dir) {
    case Direction::right:
        want_out = from_is_a;
        want_in = !from_is_a;
        break;
    case Direction::left:
        want_out = !from_is_a;
        want_in = from_is_a;
        break;
    default:
        want_out = want_in = true;
    }
    std::vector<NodeId> out;
    if (want_out)
        for (std::uint32_t ei : store.out_edges(u)) {
            const Edge& edge = store.edges()[ei];
            if (!e.type || edge.rel == *e.type) out.push_back(edge.dst);
        }
    if (want_in)
        for (std::uint32_t ei : store.in_edges(u)) {
            const Edge& edge = store.edges()[ei];
            if (!e.type || edge.rel == *e.type) out.push_back(edge.src);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename RowFn>
inline void run_plan(const PropertyGraph& store, const Plan& plan, RowFn&& on_match) {
    if (store.node_count() == 0) return;
    std::vector<NodeId> binding(plan.q.slots.size(), 0);
    auto step_rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == plan.steps.size()) {
            on_match(binding);
            return;
        }
        const PlanStep& step = plan.steps[depth];
        const Slot& slot = plan.q.slots[step.slot];
        std::vector<NodeId> candidates;
        if (step.kind == PlanStep::Kind::expand) {
            candidates = expand_candidates(store, plan, step, binding);
            std::erase_if(candidates,
                          [&](NodeId id) { return !node_matches(store.node(id), slot); });
        } else {
            candidates = scan_candidates(store, slot);
        }
        for (NodeId id : candidates) {
            binding[step.slot] = id;
            bool ok = true;
            for (std::uint32_t ei : step.check_edges) {
                const EdgeCon& e = plan.q.edges[ei];
                if (!edge_holds(store, e, binding[e.a], binding[e.b])) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, depth + 1);
        }
    };
    step_rec(step_rec, 0);
}

struct OrderSpec {
    std::size_t column = 0; // index into the widened row (visible + hidden)
    bool descending = false;
};

// Rows carry hidden trailing columns for ORDER BY keys that are not projected.
inline void finish_rows(std::vector<std::vector<std::string>>& rows, std::size_t visible,
                        const std::vector<OrderSpec>& order, bool distinct,
                        std::optional<std::uint64_t> limit) {
    auto row_less = [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        for (const OrderSpec& o : order) {
            const std::string& x = a[o.column];
            const std::string& y = b[o.column];
            if (x == y) continue;
            bool lt = less_than(x, y);
            bool gt = less_than(y, x);
            if (!lt && !gt) continue; // numerically tied; fall through to bytewise
            return o.descending ? gt : lt;
        }
        // Bytewise over the full row keeps the order total, so ties cannot
        // leave the final order at the sort algorithm's whim.
        return a < b;
    };
    std::sort(rows.begin(), rows.end(), row_less);
    if (distinct)
        rows.erase(std::unique(rows.begin(), rows.end(),
                               [&](const auto& a, const auto& b) {
                                   return std::equal(a.begin(), a.begin() + visible, b.begin());
                               }),
                   rows.end());
    if (limit && rows.size() > *limit) rows.resize(static_cast<std::size_t>(*limit));
    for (auto& row : rows) row.resize(visible);
}

inline ResultTable execute_plan(const QueryAst& ast, const PropertyGraph& store,
                                const Plan& plan) {
    ResultTable table;
    for (const Projection& p : ast.returns) {
        std::string col;
        render_projection(col, p);
        table.columns.push_back(std::move(col));
    }
    if (ast.returns.front().kind == Projection::Kind::count) {
        std::uint64_t count = 0;
        run_plan(store, plan, [&](const std::vector<NodeId>&) { ++count; });
        table.rows.push_back({std::to_string(count)});
        if (ast.limit && table.rows.size() > *ast.limit) table.rows.clear();
        return table;
    }
    std::vector<OrderSpec> order;
    std::vector<std::pair<std::uint32_t, std::string>> hidden; // slot, prop
    for (const OrderKey& key : ast.order_by) {
        std::size_t col = table.columns.size() + hidden.size();
        for (std::size_t i = 0; i < ast.returns.size(); ++i) {
            const Projection& p = ast.returns[i];
            if (p.kind == Projection::Kind::property && p.variable == key.variable &&
                p.prop == key.prop) {
                col = i;
                break;
            }
        }
        if (col >= table.columns.size() + hidden.size())
            hidden.emplace_back(plan.q.var_slot.at(key.variable), key.prop);
        order.push_back({col, key.descending});
    }
    run_plan(store, plan, [&](const std::vector<NodeId>& binding) {
        std::vector<std::string> row;
        row.reserve(ast.returns.size() + hidden.size());
        for (const Projection& p : ast.returns) {
            const Node& node = store.node(binding[plan.q.var_slot.at(p.variable)]);
            if (p.kind == Projection::Kind::variable) {
                row.push_back(node.canonical_name);
            } else {
                auto value = prop_value(node, p.prop);
                row.push_back(value ? std::string(*value) : std::string());
            }
        }
        for (const auto& [slot, prop] : hidden) {
            auto value = prop_value(store.node(binding[slot]), prop);
            row.push_back(value ? std::string(*value) : std::string());
        }
        table.rows.push_back(std::move(row));
    });
    finish_rows(table.rows, table.columns.size(), order, ast.distinct, ast.limit);
    return table;
}

} // namespace detail

inline ResultTable execute(const QueryAst& ast, const PropertyGraph& store) {
    return detail::execute_plan(ast, store, detail::make_plan(ast, store));
}

// Textual plan: seed choice, expansion order, and scan-estimate candidate
// counts against the given store.
inline std::string explain(const QueryAst& ast, const PropertyGraph& store) {
    detail::Plan plan = detail::make_plan(ast, store);
    auto slot_desc = [&](std::uint32_t s) {
        std::string out = "(" + plan.q.slots[s].name;
        for (EntityLabel l : plan.q.slots[s].labels) {
            out += ':';
            out += to_string(l);
        }
        out += ')';
        return out;
    };
    std::string out;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        const detail::PlanStep& step = plan.steps[i];
        out += std::to_string(i + 1) + ". ";
        switch (step.kind) {
        case detail::PlanStep::Kind::seed: out += "seed " + slot_desc(step.slot); break;
        case detail::PlanStep::Kind::join_seed:
            out += "join seed " + slot_desc(step.slot);
            break;
        case detail::PlanStep::Kind::expand: {
            const detail::EdgeCon& e = plan.q.edges[*step.via_edge];
            std::string arrow = "-[";
            if (e.type) arrow += std::string(":") + std::string(to_string(*e.type));
            arrow += "]-";
            std::string left = e.dir == Direction::left ? "<" + arrow : arrow;
            if (e.dir == Direction::right) left += ">";
            out += "expand " + slot_desc(step.slot) + " via " + slot_desc(e.a) + left +
                   slot_desc(e.b);
            break;
        }
        }
        out += " — " + std::to_string(step.estimate) + " candidates\n";
    }
    out += "return ";
    if (ast.distinct) out += "DISTINCT ";
    for (std::size_t i = 0; i < ast.returns.size(); ++i) {
        if (i > 0) out += ", ";
        detail::render_projection(out, ast.returns[i]);
    }
    out += '\n';
    return out;
}

} // namespace nobelgraph::query
