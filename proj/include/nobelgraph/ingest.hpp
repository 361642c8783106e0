#pragma once
// JSONL ingestion: record parsing + schema validation, canonical name
// normalization, duplicate filtering, additive merge into the store.
//
// One record per line:
//   {"name": ..., "text": ..., "entities": [...], "relations": [...]}
// entities: ["Albert Einstein", "Person"] or
//           {"mention": "Albert Einstein", "label": "Person", "qid": "Q937"}
// relations: ["Albert Einstein", "IS_CITIZEN_OF", "Germany"] or
//           {"head": ..., "rel_type": ..., "tail": ..., "props": {...}}

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/normalize.hpp"
#include "nobelgraph/schema.hpp"
#include "nobelgraph/unicode.hpp"

namespace nobelgraph {

inline constexpr std::size_t kMaxRecordBytes = 64 * 1024;

struct EntityMention {
    std::string mention;    // raw surface form
    std::string normalized; // normalize_name(mention)
    EntityLabel label = EntityLabel::Person;
    std::string qid; // optional
};

// head_idx/tail_idx index into EntityRecord::entities; kSubjectEndpoint marks
// an endpoint that matched only the record's subject name.
inline constexpr int kSubjectEndpoint = -1;

struct RelationSpec {
    std::string head;
    std::string tail;
    RelationType rel = RelationType::RECEIVED;
    int head_idx = kSubjectEndpoint;
    int tail_idx = kSubjectEndpoint;
    PropertyMap props;
};

struct EntityRecord {
    std::string name;
    std::string text;
    std::vector<EntityMention> entities; // deduped on (label, folded normalized)
    std::vector<RelationSpec> relations;
};

enum class RejectKind : std::uint8_t { parse, schema, dangling, ambiguous, oversize, invalid_name };

inline std::string_view to_string(RejectKind k) {
    switch (k) {
    case RejectKind::parse: return "parse";
    case RejectKind::schema: return "schema";
    case RejectKind::dangling: return "dangling";
    case RejectKind::ambiguous: return "ambiguous";
    case RejectKind::oversize: return "oversize";
    case RejectKind::invalid_name: return "invalid_name";
    }
    return "?";
}

struct Rejection {
    std::size_t line_no = 0;
    RejectKind kind = RejectKind::parse;
    std::string message;
};

using ParsedRecord = std::variant<EntityRecord, Rejection>;

namespace detail {

inline std::optional<std::string> json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) return nlohmann::json(v.get<double>()).dump();
    if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
    return std::nullopt;
}

} // namespace detail

inline ParsedRecord parse_record(std::string_view line, std::size_t line_no = 0) {
    auto reject = [&](RejectKind kind, std::string msg) {
        return Rejection{line_no, kind, std::move(msg)};
    };

    if (line.size() > kMaxRecordBytes)
        return reject(RejectKind::oversize, "record exceeds " + std::to_string(kMaxRecordBytes) +
                                                " bytes (" + std::to_string(line.size()) + ")");

    nlohmann::json doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object())
        return reject(RejectKind::parse, "line is not a JSON object");

    for (const char* field : {"name", "text", "entities", "relations"})
        if (!doc.contains(field))
            return reject(RejectKind::parse, std::string("missing field '") + field + "'");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "name" && it.key() != "text" && it.key() != "entities" &&
            it.key() != "relations")
            return reject(RejectKind::parse, "unknown field '" + it.key() + "'");
    if (!doc["name"].is_string() || !doc["text"].is_string())
        return reject(RejectKind::parse, "'name' and 'text' must be strings");
    if (!doc["entities"].is_array() || !doc["relations"].is_array())
        return reject(RejectKind::parse, "'entities' and 'relations' must be arrays");

    EntityRecord rec;
    rec.name = doc["name"].get<std::string>();
    rec.text = doc["text"].get<std::string>();

    auto subject_norm = normalize_name(rec.name);
    if (!subject_norm)
        return reject(RejectKind::invalid_name, "subject name '" + rec.name +
                                                    "' is empty after normalization");
    std::string subject_key = unicode::fold_lower(*subject_norm);

    // (folded normalized mention) -> indices, for endpoint resolution
    std::vector<std::pair<std::string, int>> by_name;
    std::vector<std::string> identity_seen;

    for (const auto& ent : doc["entities"]) {
        std::string mention, label_text, qid;
        if (ent.is_array()) {
            if (ent.size() != 2 || !ent[0].is_string() || !ent[1].is_string())
                return reject(RejectKind::parse, "entity array must be [mention, label]");
            mention = ent[0].get<std::string>();
            label_text = ent[1].get<std::string>();
        } else if (ent.is_object()) {
            const nlohmann::json* m = ent.contains("mention") ? &ent["mention"]
                                      : ent.contains("text") ? &ent["text"]
                                                             : nullptr;
            const nlohmann::json* l = ent.contains("label") ? &ent["label"]
                                      : ent.contains("type") ? &ent["type"]
                                                             : nullptr;
            if (!m || !l || !m->is_string() || !l->is_string())
                return reject(RejectKind::parse, "entity object needs string mention and label");
            mention = m->get<std::string>();
            label_text = l->get<std::string>();
            if (ent.contains("qid")) {
                if (!ent["qid"].is_string())
                    return reject(RejectKind::parse, "entity qid must be a string");
                qid = ent["qid"].get<std::string>();
            }
        } else {
            return reject(RejectKind::parse, "entity must be an array or object");
        }

        auto label = parse_entity_label(label_text);
        if (!label) return reject(RejectKind::schema, "unknown entity label '" + label_text + "'");
        auto norm = normalize_name(mention);
        if (!norm)
            return reject(RejectKind::invalid_name,
                          "entity mention '" + mention + "' is empty after normalization");

        std::string folded = unicode::fold_lower(*norm);
        std::string identity = std::string(to_string(*label)) + '\x1f' + folded;
        bool dup = false;
        for (const std::string& seen : identity_seen) dup = dup || seen == identity;
        if (dup) continue;
        identity_seen.push_back(identity);

        by_name.emplace_back(folded, static_cast<int>(rec.entities.size()));
        rec.entities.push_back(EntityMention{mention, *norm, *label, qid});
    }

    for (const auto& rel : doc["relations"]) {
        std::string head, rel_text, tail;
        PropertyMap props;
        if (rel.is_array()) {
            if (rel.size() != 3 || !rel[0].is_string() || !rel[1].is_string() ||
                !rel[2].is_string())
                return reject(RejectKind::parse, "relation array must be [head, rel_type, tail]");
            head = rel[0].get<std::string>();
            rel_text = rel[1].get<std::string>();
            tail = rel[2].get<std::string>();
        } else if (rel.is_object()) {
            if (!rel.contains("head") || !rel.contains("tail"))
                return reject(RejectKind::parse, "relation object needs head and tail");
            const nlohmann::json* r = nullptr;
            for (const char* key : {"rel_type", "type", "relation", "rel"})
                if (!r && rel.contains(key)) r = &rel[key];
            if (!r) return reject(RejectKind::parse, "relation object needs a relation type");
            if (!rel["head"].is_string() || !rel["tail"].is_string() || !r->is_string())
                return reject(RejectKind::parse, "relation endpoints and type must be strings");
            head = rel["head"].get<std::string>();
            rel_text = r->get<std::string>();
            tail = rel["tail"].get<std::string>();
            if (rel.contains("props")) {
                if (!rel["props"].is_object())
                    return reject(RejectKind::parse, "relation props must be an object");
                for (auto it = rel["props"].begin(); it != rel["props"].end(); ++it) {
                    auto v = detail::json_scalar(it.value());
                    if (!v)
                        return reject(RejectKind::parse,
                                      "relation prop '" + it.key() + "' must be a scalar");
                    props[it.key()] = *v;
                }
            }
        } else {
            return reject(RejectKind::parse, "relation must be an array or object");
        }

        auto rt = parse_relation_type(rel_text);
        if (!rt) return reject(RejectKind::schema, "unknown relation type '" + rel_text + "'");

        auto resolve = [&](const std::string& endpoint) -> std::variant<int, Rejection> {
            auto norm = normalize_name(endpoint);
            if (!norm)
                return reject(RejectKind::invalid_name,
                              "relation endpoint '" + endpoint + "' is empty after normalization");
            std::string folded = unicode::fold_lower(*norm);
            int found = -2;
            int matches = 0;
            for (const auto& [name, idx] : by_name) {
                if (name == folded) {
                    // same surface form under two labels is ambiguous, count
                    // distinct entities
                    ++matches;
                    found = idx;
                }
            }
            if (matches > 1)
                return reject(RejectKind::ambiguous, "relation endpoint '" + endpoint +
                                                         "' matches multiple entities");
            if (matches == 1) return found;
            if (folded == subject_key) return kSubjectEndpoint;
            return reject(RejectKind::dangling, "relation endpoint '" + endpoint +
                                                    "' is not an entity of this record");
        };

        auto h = resolve(head);
        if (std::holds_alternative<Rejection>(h)) return std::get<Rejection>(h);
        auto t = resolve(tail);
        if (std::holds_alternative<Rejection>(t)) return std::get<Rejection>(t);

        RelationSpec spec;
        spec.head = head;
        spec.tail = tail;
        spec.rel = *rt;
        spec.head_idx = std::get<int>(h);
        spec.tail_idx = std::get<int>(t);
        spec.props = std::move(props);
        rec.relations.push_back(std::move(spec));
    }

    return rec;
}

struct IngestReport {
    std::size_t records_ok = 0;
    std::size_t records_rejected = 0;
    std::size_t nodes_created = 0;
    std::size_t nodes_updated = 0;
    std::size_t edges_created = 0;
    std::size_t edges_skipped_duplicate = 0;
    std::size_t edges_skipped_unresolved = 0;
    std::vector<Rejection> rejections;
    std::vector<std::string> identity_conflicts;

    nlohmann::json to_json() const {
        nlohmann::json rej = nlohmann::json::array();
        for (const auto& r : rejections)
            rej.push_back({{"line", r.line_no},
                           {"kind", std::string(to_string(r.kind))},
                           {"message", r.message}});
        return nlohmann::json{{"records_ok", records_ok},
                              {"records_rejected", records_rejected},
                              {"nodes_created", nodes_created},
                              {"nodes_updated", nodes_updated},
                              {"edges_created", edges_created},
                              {"edges_skipped_duplicate", edges_skipped_duplicate},
                              {"edges_skipped_unresolved", edges_skipped_unresolved},
                              {"identity_conflicts", identity_conflicts},
                              {"rejections", rej}};
    }

    std::string render_text() const {
        std::string out;
        out += "records: " + std::to_string(records_ok) + " ok, " +
               std::to_string(records_rejected) + " rejected\n";
        out += "nodes: " + std::to_string(nodes_created) + " created, " +
               std::to_string(nodes_updated) + " updated\n";
        out += "edges: " + std::to_string(edges_created) + " created, " +
               std::to_string(edges_skipped_duplicate) + " duplicate, " +
               std::to_string(edges_skipped_unresolved) + " unresolved\n";
        out += "identity conflicts: " + std::to_string(identity_conflicts.size()) + "\n";
        for (const auto& r : rejections)
            out += "  rejected line " + std::to_string(r.line_no) + " [" +
                   std::string(to_string(r.kind)) + "] " + r.message + "\n";
        for (const auto& c : identity_conflicts) out += "  conflict: " + c + "\n";
        return out;
    }
};

struct IngestOptions {
    bool strict = false; // identity conflicts become hard failures
    Source source = Source::enriched;
};

// Applies records to the store in input order. Rejected records contribute
// nothing; identity conflicts skip the conflicted entity (and any relation
// touching it) but keep the rest of the record.
inline IngestReport ingest_stream(std::istream& in, PropertyGraph& store,
                                  const IngestOptions& opts = {}) {
    IngestReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (strings::trim_ascii(line).empty()) continue;

        ParsedRecord parsed = parse_record(line, line_no);
        if (std::holds_alternative<Rejection>(parsed)) {
            ++report.records_rejected;
            report.rejections.push_back(std::get<Rejection>(std::move(parsed)));
            continue;
        }
        const EntityRecord& rec = std::get<EntityRecord>(parsed);

        std::vector<std::optional<NodeId>> resolved(rec.entities.size());
        for (std::size_t i = 0; i < rec.entities.size(); ++i) {
            const EntityMention& ent = rec.entities[i];
            PropertyMap props;
            if (!ent.qid.empty()) props["qid"] = ent.qid;
            try {
                auto res = store.upsert_node(ent.label, ent.normalized, props, opts.source);
                resolved[i] = res.id;
                res.created ? ++report.nodes_created : ++report.nodes_updated;
            } catch (const IdentityConflictError& e) {
                if (opts.strict) throw;
                report.identity_conflicts.push_back("line " + std::to_string(line_no) + ": " +
                                                    e.what());
            }
        }

        for (const RelationSpec& rel : rec.relations) {
            std::optional<NodeId> src =
                rel.head_idx >= 0 ? resolved[static_cast<std::size_t>(rel.head_idx)] : std::nullopt;
            std::optional<NodeId> dst =
                rel.tail_idx >= 0 ? resolved[static_cast<std::size_t>(rel.tail_idx)] : std::nullopt;
            if (!src || !dst) {
                // endpoint is the unlisted subject or a conflicted entity
                ++report.edges_skipped_unresolved;
                continue;
            }
            bool created = store.upsert_edge(*src, *dst, rel.rel, rel.props, opts.source);
            created ? ++report.edges_created : ++report.edges_skipped_duplicate;
        }

        ++report.records_ok;
    }
    if (in.bad()) throw IoError("input stream failed while reading records");
    return report;
}

} // namespace nobelgraph
