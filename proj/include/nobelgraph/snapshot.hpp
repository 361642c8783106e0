#pragma once
// Snapshot persistence. Line-oriented UTF-8 text, nodes first then edges,
// sorted for diff-stability:
//
//   #nobelgraph v1
//   N<TAB>label<TAB>canonical_name<TAB>urlencoded-props
//   E<TAB>src_key<TAB>rel_type<TAB>dst_key[<TAB>urlencoded-props]
//
// key = label/canonical_name (split on the first '/'). Property fields are
// '&'-joined k=v pairs, percent-encoded, keys sorted. Reserved keys carry
// node/edge metadata: __source (omitted when "original") and __provenance.
// Every line must end with '\n'; a missing final newline is treated as a
// truncated file.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/strings.hpp"

namespace nobelgraph {

namespace detail {

inline std::string encode_props(const PropertyMap& props, Source source,
                                const std::vector<std::string>& provenance) {
    std::string out;
    auto add = [&](std::string_view k, std::string_view v) {
        if (!out.empty()) out.push_back('&');
        out += strings::percent_encode(k);
        out.push_back('=');
        out += strings::percent_encode(v);
    };
    if (source == Source::enriched) add("__source", "enriched");
    if (!provenance.empty()) {
        std::string joined;
        for (const auto& p : provenance) {
            if (!joined.empty()) joined.push_back('\x1f');
            joined += p;
        }
        add("__provenance", joined);
    }
    for (const auto& [k, v] : props) add(k, v);
    return out;
}

struct DecodedProps {
    PropertyMap props;
    Source source = Source::original;
    std::vector<std::string> provenance;
};

inline DecodedProps decode_props(std::string_view field, std::size_t line_no) {
    DecodedProps out;
    if (field.empty()) return out;
    for (std::string_view pair : strings::split(field, '&')) {
        std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos)
            throw FileParseError("property field missing '='", line_no, 0);
        auto k = strings::percent_decode(pair.substr(0, eq));
        auto v = strings::percent_decode(pair.substr(eq + 1));
        if (!k || !v) throw FileParseError("bad percent-encoding in properties", line_no, 0);
        if (*k == "__source") {
            if (*v == "enriched")
                out.source = Source::enriched;
            else if (*v == "original")
                out.source = Source::original;
            else
                throw FileParseError("unknown __source value '" + *v + "'", line_no, 0);
        } else if (*k == "__provenance") {
            for (std::string_view p : strings::split(*v, '\x1f'))
                out.provenance.emplace_back(p);
        } else {
            if (!out.props.emplace(*k, *v).second)
                throw FileParseError("duplicate property key '" + *k + "'", line_no, 0);
        }
    }
    return out;
}

inline std::string node_key(const Node& n) {
    return std::string(to_string(n.label)) + "/" + n.canonical_name;
}

} // namespace detail

inline void snapshot_write(const PropertyGraph& g, std::ostream& out) {
    out << "#nobelgraph v1\n";

    std::vector<const Node*> nodes;
    nodes.reserve(g.node_count());
    for (const Node& n : g.nodes()) nodes.push_back(&n);
    std::sort(nodes.begin(), nodes.end(), [](const Node* a, const Node* b) {
        if (a->label != b->label) return to_string(a->label) < to_string(b->label);
        return a->canonical_name < b->canonical_name;
    });
    for (const Node* n : nodes) {
        out << "N\t" << to_string(n->label) << '\t' << n->canonical_name << '\t'
            << detail::encode_props(n->props, n->source, n->provenance) << '\n';
    }

    std::vector<std::string> edge_lines;
    edge_lines.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        std::string line = "E\t";
        line += detail::node_key(g.node(e.src));
        line += '\t';
        line += to_string(e.rel);
        line += '\t';
        line += detail::node_key(g.node(e.dst));
        std::string props = detail::encode_props(e.props, e.source, {});
        if (!props.empty()) {
            line += '\t';
            line += props;
        }
        edge_lines.push_back(std::move(line));
    }
    std::sort(edge_lines.begin(), edge_lines.end());
    for (const std::string& line : edge_lines) out << line << '\n';
}

inline void snapshot_write(const PropertyGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    snapshot_write(g, out);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

inline PropertyGraph snapshot_read(std::istream& in) {
    PropertyGraph g;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    bool saw_edge = false;

    auto read_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        // getline stops at '\n' without setting eofbit; hitting EOF instead
        // means the final line was cut short
        if (in.eof())
            throw FileParseError("truncated file: missing final newline", line_no, line.size());
        return true;
    };

    while (read_line()) {
        if (!saw_header) {
            if (line != "#nobelgraph v1")
                throw FileParseError("expected header '#nobelgraph v1'", line_no, 0);
            saw_header = true;
            continue;
        }
        if (line.empty()) throw FileParseError("blank line", line_no, 0);
        auto fields = strings::split(line, '\t');
        if (fields[0] == "N") {
            if (saw_edge) throw FileParseError("node record after edge records", line_no, 0);
            if (fields.size() != 4)
                throw FileParseError("node record needs 4 fields", line_no, line.size());
            auto label = parse_entity_label(fields[1]);
            if (!label)
                throw FileParseError("unknown label '" + std::string(fields[1]) + "'", line_no, 2);
            if (fields[2].empty()) throw FileParseError("empty canonical_name", line_no, 0);
            if (g.find_node(*label, fields[2]))
                throw FileParseError("duplicate node '" + std::string(fields[2]) + "'", line_no, 0);
            auto decoded = detail::decode_props(fields[3], line_no);
            auto res = g.upsert_node(*label, fields[2], decoded.props, decoded.source);
            if (!decoded.provenance.empty())
                g.restore_provenance(res.id, std::move(decoded.provenance));
        } else if (fields[0] == "E") {
            saw_edge = true;
            if (fields.size() != 4 && fields.size() != 5)
                throw FileParseError("edge record needs 4 or 5 fields", line_no, line.size());
            auto parse_key = [&](std::string_view key) -> NodeId {
                std::size_t slash = key.find('/');
                if (slash == std::string_view::npos)
                    throw FileParseError("bad node key '" + std::string(key) + "'", line_no, 0);
                auto label = parse_entity_label(key.substr(0, slash));
                if (!label)
                    throw FileParseError("unknown label in key '" + std::string(key) + "'", line_no,
                                         0);
                auto id = g.find_node(*label, key.substr(slash + 1));
                if (!id)
                    throw FileParseError("edge references unknown node '" + std::string(key) + "'",
                                         line_no, 0);
                return *id;
            };
            NodeId src = parse_key(fields[1]);
            auto rel = parse_relation_type(fields[2]);
            if (!rel)
                throw FileParseError("unknown relation '" + std::string(fields[2]) + "'", line_no,
                                     0);
            NodeId dst = parse_key(fields[3]);
            auto decoded =
                detail::decode_props(fields.size() == 5 ? fields[4] : std::string_view{}, line_no);
            if (!g.upsert_edge(src, dst, *rel, decoded.props, decoded.source))
                throw FileParseError("duplicate edge", line_no, 0);
        } else {
            throw FileParseError("unknown record type '" + std::string(fields[0]) + "'", line_no,
                                 0);
        }
    }
    if (!saw_header) throw FileParseError("empty snapshot: missing header", 1, 0);
    return g;
}

inline PropertyGraph snapshot_read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return snapshot_read(in);
}

} // namespace nobelgraph
