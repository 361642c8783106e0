#pragma once
// Closed entity/relation schema shared by ingestion validation, query
// planning, and prompt assembly.

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/strings.hpp"

namespace nobelgraph {

enum class EntityLabel : std::uint8_t {
    Person,
    Person_Non_Laureate,
    Organization,
    Position,
    Occupation,
    Field,
    Country,
    Location,
    Award,
    Notable_Work,
    Event,
};

enum class RelationType : std::uint8_t {
    RECEIVED,
    WORKS_AS,
    WORKS_IN_FIELD,
    EMPLOYED_BY,
    EDUCATED_AT,
    IS_CITIZEN_OF,
    HOLDS_POSITION,
    FOUNDED,
    CO_FOUNDED,
    CO_DISCOVERED_WITH,
    PARTICIPATED_IN,
    IS_SPOUSE_OF,
    DEVELOPED,
};

inline constexpr std::size_t kEntityLabelCount = 11;
inline constexpr std::size_t kRelationTypeCount = 13;

inline constexpr std::array<std::string_view, kEntityLabelCount> kEntityLabelNames = {
    "Person",   "Person_Non_Laureate", "Organization", "Position",     "Occupation", "Field",
    "Country",  "Location",            "Award",        "Notable_Work", "Event",
};

inline constexpr std::array<std::string_view, kRelationTypeCount> kRelationTypeNames = {
    "RECEIVED",      "WORKS_AS",  "WORKS_IN_FIELD", "EMPLOYED_BY",        "EDUCATED_AT",
    "IS_CITIZEN_OF", "HOLDS_POSITION", "FOUNDED",   "CO_FOUNDED",         "CO_DISCOVERED_WITH",
    "PARTICIPATED_IN", "IS_SPOUSE_OF", "DEVELOPED",
};

namespace detail {
template <typename E, std::size_t N> constexpr std::array<E, N> enum_values() {
    std::array<E, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = static_cast<E>(i);
    return out;
}
} // namespace detail

inline constexpr auto kAllEntityLabels = detail::enum_values<EntityLabel, kEntityLabelCount>();
inline constexpr auto kAllRelationTypes = detail::enum_values<RelationType, kRelationTypeCount>();

inline std::string_view to_string(EntityLabel l) {
    return kEntityLabelNames[static_cast<std::size_t>(l)];
}

inline std::string_view to_string(RelationType r) {
    return kRelationTypeNames[static_cast<std::size_t>(r)];
}

// Case-sensitive membership tests; schema names are machine tokens.
inline std::optional<EntityLabel> parse_entity_label(std::string_view s) {
    for (std::size_t i = 0; i < kEntityLabelNames.size(); ++i)
        if (kEntityLabelNames[i] == s) return static_cast<EntityLabel>(i);
    return std::nullopt;
}

inline std::optional<RelationType> parse_relation_type(std::string_view s) {
    for (std::size_t i = 0; i < kRelationTypeNames.size(); ++i)
        if (kRelationTypeNames[i] == s) return static_cast<RelationType>(i);
    return std::nullopt;
}

struct SchemaViolationInfo {
    std::string token;
    std::string message;
};

using ValidationResult = std::variant<EntityLabel, RelationType, SchemaViolationInfo>;

inline ValidationResult validate_schema_name(std::string_view s) {
    if (auto l = parse_entity_label(s)) return *l;
    if (auto r = parse_relation_type(s)) return *r;
    return SchemaViolationInfo{std::string(s), "'" + std::string(s) +
                                                   "' is neither an entity label nor a relation type"};
}

// Allowed (src, dst) label pairs per relation. When present it is total over
// the relation set.
using RelationSignature = std::vector<std::pair<EntityLabel, EntityLabel>>;

class SchemaRegistry {
public:
    SchemaRegistry() = default;

    const std::vector<EntityLabel>& entity_labels() const { return labels_; }
    const std::vector<RelationType>& relation_types() const { return relations_; }
    bool has_signatures() const { return !signatures_.empty(); }

    const RelationSignature* signature(RelationType r) const {
        auto it = signatures_.find(r);
        return it == signatures_.end() ? nullptr : &it->second;
    }

    void add_label(EntityLabel l) {
        for (EntityLabel e : labels_)
            if (e == l) return;
        labels_.push_back(l);
    }

    void add_relation(RelationType r, RelationSignature sig = {}) {
        bool known = false;
        for (RelationType e : relations_)
            if (e == r) known = true;
        if (!known) relations_.push_back(r);
        if (!sig.empty()) signatures_[r] = std::move(sig);
    }

    // Byte-identical across runs; relation names appear exactly once each.
    std::string render_text() const {
        std::ostringstream out;
        if (!has_signatures()) {
            out << "Node types:\n";
            for (EntityLabel l : labels_) out << to_string(l) << "\n";
            out << "Relationship types:\n";
            for (RelationType r : relations_) out << to_string(r) << "\n";
            return out.str();
        }
        out << "Node types:\n";
        for (EntityLabel l : labels_) out << "(:" << to_string(l) << ")\n";
        out << "Relationship patterns:\n";
        for (RelationType r : relations_) {
            const RelationSignature* sig = signature(r);
            if (sig == nullptr || sig->empty())
                throw InvalidInput("relation_signatures must be total when enabled; missing " +
                                   std::string(to_string(r)));
            // one line per relation: sources and targets joined with '|'
            std::vector<EntityLabel> srcs, dsts;
            for (const auto& [s, d] : *sig) {
                bool have_s = false, have_d = false;
                for (EntityLabel e : srcs) have_s = have_s || e == s;
                for (EntityLabel e : dsts) have_d = have_d || e == d;
                if (!have_s) srcs.push_back(s);
                if (!have_d) dsts.push_back(d);
            }
            out << "(:";
            for (std::size_t i = 0; i < srcs.size(); ++i)
                out << (i ? "|" : "") << to_string(srcs[i]);
            out << ")-[:" << to_string(r) << "]->(:";
            for (std::size_t i = 0; i < dsts.size(); ++i)
                out << (i ? "|" : "") << to_string(dsts[i]);
            out << ")\n";
        }
        return out.str();
    }

private:
    std::vector<EntityLabel> labels_;
    std::vector<RelationType> relations_;
    std::map<RelationType, RelationSignature> signatures_;
};

namespace detail {

inline RelationSignature cross(std::initializer_list<EntityLabel> srcs,
                               std::initializer_list<EntityLabel> dsts) {
    RelationSignature sig;
    for (EntityLabel s : srcs)
        for (EntityLabel d : dsts) sig.emplace_back(s, d);
    return sig;
}

} // namespace detail

// Registry with the default domain/range signatures. EDUCATED_AT is
// Person-only here; override through a schema file if organizational
// laureates need it.
inline SchemaRegistry default_registry() {
    using L = EntityLabel;
    using R = RelationType;
    SchemaRegistry reg;
    for (std::size_t i = 0; i < kEntityLabelCount; ++i) reg.add_label(static_cast<L>(i));
    reg.add_relation(R::RECEIVED, detail::cross({L::Person, L::Organization}, {L::Award}));
    reg.add_relation(R::WORKS_AS, detail::cross({L::Person, L::Person_Non_Laureate}, {L::Occupation}));
    reg.add_relation(R::WORKS_IN_FIELD,
                     detail::cross({L::Person, L::Person_Non_Laureate, L::Organization}, {L::Field}));
    reg.add_relation(R::EMPLOYED_BY,
                     detail::cross({L::Person, L::Person_Non_Laureate}, {L::Organization}));
    reg.add_relation(R::EDUCATED_AT,
                     detail::cross({L::Person, L::Person_Non_Laureate}, {L::Organization}));
    reg.add_relation(R::IS_CITIZEN_OF,
                     detail::cross({L::Person, L::Person_Non_Laureate}, {L::Country}));
    reg.add_relation(R::HOLDS_POSITION,
                     detail::cross({L::Person, L::Person_Non_Laureate}, {L::Position}));
    reg.add_relation(R::FOUNDED,
                     detail::cross({L::Person, L::Person_Non_Laureate, L::Organization},
                                   {L::Organization}));
    reg.add_relation(R::CO_FOUNDED,
                     detail::cross({L::Person, L::Person_Non_Laureate}, {L::Organization}));
    reg.add_relation(R::CO_DISCOVERED_WITH,
                     detail::cross({L::Person, L::Person_Non_Laureate},
                                   {L::Person, L::Person_Non_Laureate}));
    reg.add_relation(R::PARTICIPATED_IN,
                     detail::cross({L::Person, L::Person_Non_Laureate, L::Organization}, {L::Event}));
    reg.add_relation(R::IS_SPOUSE_OF,
                     detail::cross({L::Person, L::Person_Non_Laureate},
                                   {L::Person, L::Person_Non_Laureate}));
    reg.add_relation(R::DEVELOPED,
                     detail::cross({L::Person, L::Person_Non_Laureate, L::Organization},
                                   {L::Notable_Work}));
    return reg;
}

// Schema file: one declaration per line.
//   ENTITY Person
//   RELATION RECEIVED Person|Organization -> Award
// '#' starts a comment; blank lines ignored.
inline SchemaRegistry parse_schema_file(std::istream& in) {
    SchemaRegistry reg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = strings::trim_ascii(line);
        if (sv.empty() || sv.front() == '#') continue;
        std::size_t sp = sv.find(' ');
        std::string_view kw = sv.substr(0, sp);
        if (kw == "ENTITY") {
            if (sp == std::string_view::npos)
                throw FileParseError("ENTITY needs a label", line_no, sv.size());
            std::string_view name = strings::trim_ascii(sv.substr(sp + 1));
            auto l = parse_entity_label(name);
            if (!l) throw SchemaViolation("unknown entity label '" + std::string(name) + "'");
            reg.add_label(*l);
        } else if (kw == "RELATION") {
            if (sp == std::string_view::npos)
                throw FileParseError("RELATION needs a name", line_no, sv.size());
            std::string_view rest = strings::trim_ascii(sv.substr(sp + 1));
            std::size_t sp2 = rest.find(' ');
            std::string_view name = rest.substr(0, sp2);
            auto r = parse_relation_type(name);
            if (!r) throw SchemaViolation("unknown relation type '" + std::string(name) + "'");
            RelationSignature sig;
            if (sp2 != std::string_view::npos) {
                std::string_view spec = strings::trim_ascii(rest.substr(sp2 + 1));
                std::size_t arrow = spec.find("->");
                if (arrow == std::string_view::npos)
                    throw FileParseError("expected 'src|... -> dst|...'", line_no, sp2);
                auto parse_side = [&](std::string_view side) {
                    std::vector<EntityLabel> out;
                    for (std::string_view tok : strings::split(side, '|')) {
                        tok = strings::trim_ascii(tok);
                        auto l = parse_entity_label(tok);
                        if (!l)
                            throw SchemaViolation("unknown entity label '" + std::string(tok) +
                                                  "' in signature");
                        out.push_back(*l);
                    }
                    return out;
                };
                auto srcs = parse_side(strings::trim_ascii(spec.substr(0, arrow)));
                auto dsts = parse_side(strings::trim_ascii(spec.substr(arrow + 2)));
                for (EntityLabel s : srcs)
                    for (EntityLabel d : dsts) sig.emplace_back(s, d);
            }
            reg.add_relation(*r, std::move(sig));
        } else {
            throw FileParseError("unknown declaration '" + std::string(kw) + "'", line_no, 0);
        }
    }
    return reg;
}

} // namespace nobelgraph
