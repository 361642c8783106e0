#pragma once
// Hop-stratified QA dataset generation: sample concrete paths from the
// store, instantiate question/Cypher templates over them, and emit
// multiple-choice items plus text-to-Cypher fine-tuning pairs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/graph.hpp"
#include "nobelgraph/query/ast.hpp"
#include "nobelgraph/query/execute.hpp"
#include "nobelgraph/rng.hpp"
#include "nobelgraph/schema.hpp"

namespace nobelgraph::qagen {

// One traversal step of a path signature: the relation taken and the label
// of the node it arrives at.
struct SigStep {
    RelationType rel = RelationType::RECEIVED;
    query::Direction dir = query::Direction::right;
    EntityLabel label = EntityLabel::Person;
};

// A question family. The anchor node (path position 0) fills the {A} slot of
// every question variant; the answer is the name of the node at the last
// position. `distinct_from_anchor` names a position whose node must differ
// from the anchor, rendered as a `<>` condition on its name.
struct QaTemplate {
    std::string id;
    int hop_count = 1;
    EntityLabel anchor_label = EntityLabel::Person;
    std::vector<SigStep> steps;
    std::vector<std::string> question_variants; // each contains {A} exactly once
    std::optional<int> distinct_from_anchor;

    EntityLabel answer_label() const { return steps.back().label; }
};

inline void validate_template(const QaTemplate& t) {
    if (t.id.empty()) throw InvalidInput("template id must not be empty");
    if (t.hop_count < 1 || t.hop_count > 4)
        throw InvalidInput("template '" + t.id + "': hop_count must be 1..4");
    if (t.steps.size() != static_cast<std::size_t>(t.hop_count))
        throw InvalidInput("template '" + t.id + "': steps must match hop_count");
    if (t.question_variants.size() < 3)
        throw InvalidInput("template '" + t.id + "': needs at least 3 question variants");
    for (const std::string& v : t.question_variants) {
        std::size_t first = v.find("{A}");
        if (first == std::string::npos || v.find("{A}", first + 1) != std::string::npos)
            throw InvalidInput("template '" + t.id + "': each variant needs exactly one {A} slot");
    }
    if (t.distinct_from_anchor &&
        (*t.distinct_from_anchor < 1 || *t.distinct_from_anchor > t.hop_count))
        throw InvalidInput("template '" + t.id + "': distinct_from_anchor out of range");
}

namespace detail {

inline std::string position_var(std::size_t i) { return "n" + std::to_string(i); }

} // namespace detail

// The gold query for (template, anchor): a single MATCH chain anchored by
// name at position 0, returning the distinct names at the last position.
inline query::QueryAst build_ast(const QaTemplate& t, std::string_view anchor) {
    query::QueryAst ast;
    query::PathPattern path;
    path.nodes.push_back({detail::position_var(0), t.anchor_label,
                          {{"name", std::string(anchor)}}});
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        path.rels.push_back({t.steps[i].rel, t.steps[i].dir});
        path.nodes.push_back({detail::position_var(i + 1), t.steps[i].label, {}});
    }
    ast.matches.push_back(std::move(path));
    if (t.distinct_from_anchor)
        ast.where.push_back({detail::position_var(static_cast<std::size_t>(*t.distinct_from_anchor)),
                             "name", query::Cmp::ne, std::string(anchor), false});
    ast.distinct = true;
    ast.returns.push_back(
        {query::Projection::Kind::property, detail::position_var(t.steps.size()), "name"});
    return ast;
}

inline std::string instantiate_cypher(const QaTemplate& t, std::string_view anchor) {
    return query::render(build_ast(t, anchor));
}

inline std::string instantiate_question(const QaTemplate& t, std::size_t variant,
                                        std::string_view anchor) {
    std::string q = t.question_variants.at(variant);
    q.replace(q.find("{A}"), 3, anchor);
    return q;
}

namespace detail {

// Nodes one signature step away from v, deduplicated for undirected steps.
inline void step_candidates(const PropertyGraph& g, NodeId v, const SigStep& s,
                            std::vector<NodeId>& out) {
    out.clear();
    if (s.dir != query::Direction::left)
        for (std::uint32_t idx : g.out_edges(v)) {
            const Edge& e = g.edges()[idx];
            if (e.rel == s.rel) out.push_back(e.dst);
        }
    if (s.dir != query::Direction::right)
        for (std::uint32_t idx : g.in_edges(v)) {
            const Edge& e = g.edges()[idx];
            if (e.rel == s.rel) out.push_back(e.src);
        }
    if (s.dir == query::Direction::undirected) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > ~b) throw InvalidInput("path count overflow; store too dense for sampling");
    return a + b;
}

// suffix_counts[i][v] = number of signature-consistent suffixes that start
// with v at position i. Zero everywhere the label does not fit.
inline std::vector<std::vector<std::uint64_t>> suffix_counts(const PropertyGraph& g,
                                                             EntityLabel anchor,
                                                             const std::vector<SigStep>& steps) {
    std::size_t h = steps.size();
    std::vector<std::vector<std::uint64_t>> counts(h + 1,
                                                   std::vector<std::uint64_t>(g.nodes().size(), 0));
    for (NodeId v : g.nodes_with_label(steps.empty() ? anchor : steps.back().label))
        counts[h][v] = 1;
    std::vector<NodeId> cands;
    for (std::size_t i = h; i-- > 0;) {
        EntityLabel at = i == 0 ? anchor : steps[i - 1].label;
        for (NodeId v : g.nodes_with_label(at)) {
            step_candidates(g, v, steps[i], cands);
            std::uint64_t total = 0;
            for (NodeId u : cands) total = checked_add(total, counts[i + 1][u]);
            counts[i][v] = total;
        }
    }
    return counts;
}

} // namespace detail

// Uniform sample over the concrete paths matching the template's signature
// (dynamic-programming count, then weighted walk). Templates with a
// distinct-from-anchor position use bounded rejection, staying uniform over
// the admissible paths. Returns nullopt when no such path exists.
inline std::optional<std::vector<NodeId>> sample_path(const PropertyGraph& g, const QaTemplate& t,
                                                      SplitMix64& rng) {
    auto counts = detail::suffix_counts(g, t.anchor_label, t.steps);
    std::uint64_t total = 0;
    for (NodeId v : g.nodes_with_label(t.anchor_label))
        total = detail::checked_add(total, counts[0][v]);
    if (total == 0) return std::nullopt;

    std::vector<NodeId> cands;
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<NodeId> path;
        std::uint64_t r = rng.bounded(total);
        for (NodeId v : g.nodes_with_label(t.anchor_label)) {
            if (r < counts[0][v]) {
                path.push_back(v);
                break;
            }
            r -= counts[0][v];
        }
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            detail::step_candidates(g, path.back(), t.steps[i], cands);
            std::uint64_t pick = rng.bounded(counts[i][path.back()]);
            for (NodeId u : cands) {
                if (pick < counts[i + 1][u]) {
                    path.push_back(u);
                    break;
                }
                pick -= counts[i + 1][u];
            }
        }
        if (!t.distinct_from_anchor ||
            path[static_cast<std::size_t>(*t.distinct_from_anchor)] != path[0])
            return path;
    }
    return std::nullopt;
}

struct McqItem {
    std::string question;
    std::array<std::string, 4> choices;
    int answer_index = 0;
    int hop_count = 0;
    std::string gold_cypher;
    std::vector<std::string> path; // provenance: node names along the sampled path
    std::string template_id;
};

struct GenerationWarning {
    int hop = 0;
    std::string reason;
};

struct McqResult {
    std::vector<McqItem> items;
    std::vector<GenerationWarning> warnings;
};

namespace detail {

// Three same-label distractors, preferring nodes that share a property
// value with the answer (hard negatives), uniformly sampled otherwise.
inline std::optional<std::array<std::string, 3>> pick_distractors(const PropertyGraph& g,
                                                                  EntityLabel label, NodeId answer,
                                                                  SplitMix64& rng) {
    const PropertyMap& answer_props = g.node(answer).props;
    std::vector<NodeId> hard, rest;
    for (NodeId v : g.nodes_with_label(label)) {
        if (v == answer) continue;
        bool shares = false;
        for (const auto& [k, val] : g.node(v).props) {
            auto it = answer_props.find(k);
            if (it != answer_props.end() && it->second == val) {
                shares = true;
                break;
            }
        }
        (shares ? hard : rest).push_back(v);
    }
    if (hard.size() + rest.size() < 3) return std::nullopt;
    shuffle(hard, rng);
    shuffle(rest, rng);
    std::array<std::string, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        NodeId v = i < hard.size() ? hard[i] : rest[i - hard.size()];
        out[i] = g.node(v).canonical_name;
    }
    return out;
}

inline std::vector<std::string> path_names(const PropertyGraph& g, const std::vector<NodeId>& path) {
    std::vector<std::string> names;
    names.reserve(path.size());
    for (NodeId v : path) names.push_back(g.node(v).canonical_name);
    return names;
}

// One MCQ item from the hop's template group, or a reason string. Template
// rotation starts at the item's ordinal so the group is used evenly;
// remaining templates serve as fallbacks.
inline std::optional<McqItem> make_mcq_item(const PropertyGraph& g,
                                            const std::vector<const QaTemplate*>& group,
                                            std::size_t ordinal, SplitMix64& rng,
                                            std::string& reason) {
    constexpr int kPathAttempts = 64;
    std::string failures;
    for (std::size_t off = 0; off < group.size(); ++off) {
        const QaTemplate& t = *group[(ordinal + off) % group.size()];
        std::string failure = "no path";
        for (int attempt = 0; attempt < kPathAttempts; ++attempt) {
            auto path = sample_path(g, t, rng);
            if (!path) break;
            const std::string& anchor = g.node((*path)[0]).canonical_name;
            query::QueryAst ast = build_ast(t, anchor);
            query::ResultTable table = query::execute(ast, g);
            if (table.rows.size() != 1) {
                failure = "no single-answer path";
                continue;
            }
            auto distractors = pick_distractors(g, t.answer_label(), path->back(), rng);
            if (!distractors) {
                failure = "insufficient distractors";
                break;
            }
            McqItem item;
            item.question =
                instantiate_question(t, rng.bounded(t.question_variants.size()), anchor);
            item.answer_index = static_cast<int>(rng.bounded(4));
            item.choices[static_cast<std::size_t>(item.answer_index)] = table.rows[0][0];
            for (std::size_t i = 0, d = 0; i < 4; ++i)
                if (static_cast<int>(i) != item.answer_index)
                    item.choices[i] = (*distractors)[d++];
            item.hop_count = t.hop_count;
            item.gold_cypher = query::render(ast);
            item.path = path_names(g, *path);
            item.template_id = t.id;
            return item;
        }
        if (!failures.empty()) failures += "; ";
        failures += t.id + ": " + failure;
    }
    reason = failures.empty() ? "no templates" : failures;
    return std::nullopt;
}

inline std::map<int, std::vector<const QaTemplate*>> group_by_hop(
    const std::vector<QaTemplate>& templates) {
    std::map<int, std::vector<const QaTemplate*>> by_hop;
    for (const QaTemplate& t : templates) {
        validate_template(t);
        by_hop[t.hop_count].push_back(&t);
    }
    return by_hop;
}

} // namespace detail

// Items are generated per hop level in ascending order; each requested item
// owns the RNG stream derived from (seed, running index), so failures do not
// shift later items and generation could run per-item in parallel.
inline McqResult generate_mcq(const PropertyGraph& store, const std::vector<QaTemplate>& templates,
                              const std::map<int, std::size_t>& counts_per_hop,
                              std::uint64_t seed) {
    auto by_hop = detail::group_by_hop(templates);
    McqResult out;
    std::uint64_t index = 0;
    for (const auto& [hop, want] : counts_per_hop) {
        auto it = by_hop.find(hop);
        if (it == by_hop.end()) {
            if (want > 0) out.warnings.push_back({hop, "no templates for this hop level"});
            index += want;
            continue;
        }
        for (std::size_t k = 0; k < want; ++k, ++index) {
            SplitMix64 rng = derive_stream(seed, index);
            std::string reason;
            auto item = detail::make_mcq_item(store, it->second, k, rng, reason);
            if (item) out.items.push_back(std::move(*item));
            else out.warnings.push_back({hop, reason});
        }
    }
    return out;
}

// Verbatim instruction format for text-to-Cypher fine-tuning.
inline constexpr std::string_view kPromptTemplate =
    "You are an expert system that converts natural language questions into Cypher queries.\n"
    "Use only the schema provided below.\n"
    "Do not invent new node types or relationships.\n"
    "\n"
    "[Graph Schema]\n"
    "{SCHEMA}\n"
    "\n"
    "[Question]\n"
    "{USER_QUESTION}\n"
    "\n"
    "[Cypher Query]\n";

inline std::string make_prompt(std::string_view schema_text, std::string_view question) {
    while (schema_text.ends_with('\n')) schema_text.remove_suffix(1);
    std::string out(kPromptTemplate);
    out.replace(out.find("{SCHEMA}"), 8, schema_text);
    out.replace(out.find("{USER_QUESTION}"), 15, question);
    return out;
}

struct FinetunePair {
    std::string prompt;
    std::string completion;
    int hop_count = 0;
    std::string question;
};

struct FinetuneResult {
    std::vector<FinetunePair> pairs;
    std::vector<GenerationWarning> warnings;
};

// Fraction of pairs in the 1-2 hop bucket vs the 3-4 hop bucket.
struct FinetuneMix {
    double low = 0.6;
    double high = 0.4;
};

// Exact bucket sizes: the 1-2 hop bucket gets round(total·low), the rest go
// to 3-4 hops; within a bucket an odd remainder goes to the lower hop.
inline std::map<int, std::size_t> finetune_counts(std::size_t total, const FinetuneMix& mix) {
    if (std::abs(mix.low + mix.high - 1.0) > 1e-9)
        throw InvalidInput("mix fractions must sum to 1");
    if (mix.low < 0 || mix.high < 0) throw InvalidInput("mix fractions must be non-negative");
    auto low = static_cast<std::size_t>(std::llround(static_cast<double>(total) * mix.low));
    if (low > total) low = total;
    std::size_t high = total - low;
    return {{1, low - low / 2}, {2, low / 2}, {3, high - high / 2}, {4, high / 2}};
}

// Single-answer execution is not required here: the pair trains question to
// query translation, so any sampleable anchor works.
inline FinetuneResult generate_finetune_pairs(const PropertyGraph& store,
                                              const std::vector<QaTemplate>& templates,
                                              std::string_view schema_text, std::size_t total,
                                              const FinetuneMix& mix, std::uint64_t seed) {
    auto by_hop = detail::group_by_hop(templates);
    FinetuneResult out;
    std::uint64_t index = 0;
    for (const auto& [hop, want] : finetune_counts(total, mix)) {
        auto it = by_hop.find(hop);
        if (it == by_hop.end()) {
            if (want > 0) out.warnings.push_back({hop, "no templates for this hop level"});
            index += want;
            continue;
        }
        const auto& group = it->second;
        for (std::size_t k = 0; k < want; ++k, ++index) {
            SplitMix64 rng = derive_stream(seed, index);
            std::optional<std::vector<NodeId>> path;
            const QaTemplate* used = nullptr;
            for (std::size_t off = 0; off < group.size() && !path; ++off) {
                used = group[(k + off) % group.size()];
                path = sample_path(store, *used, rng);
            }
            if (!path) {
                out.warnings.push_back({hop, "no sampleable path for this hop level"});
                continue;
            }
            const std::string& anchor = store.node((*path)[0]).canonical_name;
            FinetunePair pair;
            pair.question =
                instantiate_question(*used, rng.bounded(used->question_variants.size()), anchor);
            pair.prompt = make_prompt(schema_text, pair.question);
            pair.completion = instantiate_cypher(*used, anchor);
            pair.hop_count = used->hop_count;
            out.pairs.push_back(std::move(pair));
        }
    }
    return out;
}

// MCQ file: one {"question","choices","answer","hops","gold_cypher"} object
// per line; `seed` adds a seed field to every line for provenance.
inline void write_mcq_jsonl(const std::vector<McqItem>& items, std::ostream& out,
                            std::optional<std::uint64_t> seed = std::nullopt) {
    for (const McqItem& item : items) {
        nlohmann::json j{{"question", item.question},
                         {"choices", item.choices},
                         {"answer", item.answer_index},
                         {"hops", item.hop_count},
                         {"gold_cypher", item.gold_cypher}};
        if (seed) j["seed"] = *seed;
        out << j.dump() << '\n';
    }
}

inline void write_finetune_jsonl(const std::vector<FinetunePair>& pairs, std::ostream& out,
                                 std::optional<std::uint64_t> seed = std::nullopt) {
    for (const FinetunePair& pair : pairs) {
        nlohmann::json j{{"prompt", pair.prompt}, {"completion", pair.completion}};
        if (seed) j["seed"] = *seed;
        out << j.dump() << '\n';
    }
}

// Reads the MCQ JSONL contract back; malformed lines are counted and
// skipped, never fatal. Unknown extra fields are ignored.
inline std::vector<McqItem> read_mcq_jsonl(std::istream& in, std::size_t* malformed = nullptr) {
    std::vector<McqItem> items;
    std::size_t bad = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (strings::trim_ascii(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        bool ok = j.is_object() && j.contains("question") && j["question"].is_string() &&
                  j.contains("choices") && j["choices"].is_array() && j["choices"].size() == 4 &&
                  j.contains("answer") && j["answer"].is_number_integer() &&
                  j.contains("hops") && j["hops"].is_number_integer() &&
                  j.contains("gold_cypher") && j["gold_cypher"].is_string();
        if (ok)
            for (const auto& c : j["choices"]) ok = ok && c.is_string();
        if (ok) {
            int answer = j["answer"].get<int>();
            int hops = j["hops"].get<int>();
            ok = answer >= 0 && answer < 4 && hops >= 1 && hops <= 4;
        }
        if (!ok) {
            ++bad;
            continue;
        }
        McqItem item;
        item.question = j["question"].get<std::string>();
        for (std::size_t i = 0; i < 4; ++i) item.choices[i] = j["choices"][i].get<std::string>();
        item.answer_index = j["answer"].get<int>();
        item.hop_count = j["hops"].get<int>();
        item.gold_cypher = j["gold_cypher"].get<std::string>();
        items.push_back(std::move(item));
    }
    if (malformed) *malformed = bad;
    return items;
}

// The stock question families. Within every anchor label the answer labels
// are distinct across hop levels, so a shorter family can never reproduce a
// deeper family's answer by construction.
inline std::vector<QaTemplate> default_templates() {
    using L = EntityLabel;
    using R = RelationType;
    using D = query::Direction;
    std::vector<QaTemplate> out;

    out.push_back({"person-citizenship", 1, L::Person,
                   {{R::IS_CITIZEN_OF, D::right, L::Country}},
                   {"Which country is {A} a citizen of?",
                    "What country holds the citizenship of {A}?",
                    "{A} is a citizen of which country?"},
                   std::nullopt});
    out.push_back({"person-employer", 1, L::Person,
                   {{R::EMPLOYED_BY, D::right, L::Organization}},
                   {"Which organization employs {A}?", "Where does {A} work?",
                    "{A} is employed by which organization?"},
                   std::nullopt});
    out.push_back({"person-field", 1, L::Person,
                   {{R::WORKS_IN_FIELD, D::right, L::Field}},
                   {"Which field does {A} work in?", "What is the field of study of {A}?",
                    "{A} works in which field?"},
                   std::nullopt});
    out.push_back({"person-award", 1, L::Person,
                   {{R::RECEIVED, D::right, L::Award}},
                   {"Which award did {A} receive?", "What prize was given to {A}?",
                    "{A} received which award?"},
                   std::nullopt});

    out.push_back({"award-citizenship", 2, L::Award,
                   {{R::RECEIVED, D::left, L::Person}, {R::IS_CITIZEN_OF, D::right, L::Country}},
                   {"Which country is the recipient of {A} a citizen of?",
                    "The person who received {A} is a citizen of which country?",
                    "What is the citizenship of the recipient of {A}?"},
                   std::nullopt});
    out.push_back({"colleague", 2, L::Person,
                   {{R::EMPLOYED_BY, D::right, L::Organization},
                    {R::EMPLOYED_BY, D::left, L::Person}},
                   {"Apart from {A}, who works at the same organization?",
                    "Who shares an employer with {A}?",
                    "Which other person is employed by the organization that employs {A}?"},
                   2});
    out.push_back({"field-award", 2, L::Field,
                   {{R::WORKS_IN_FIELD, D::left, L::Person}, {R::RECEIVED, D::right, L::Award}},
                   {"Which award did a researcher in {A} receive?",
                    "What prize was received by someone working in {A}?",
                    "A person working in {A} received which award?"},
                   std::nullopt});
    out.push_back({"school-country", 2, L::Organization,
                   {{R::EDUCATED_AT, D::left, L::Person}, {R::IS_CITIZEN_OF, D::right, L::Country}},
                   {"Which country is a person educated at {A} a citizen of?",
                    "A graduate of {A} holds citizenship of which country?",
                    "What is the citizenship of someone educated at {A}?"},
                   std::nullopt});

    out.push_back({"award-alumnus", 3, L::Award,
                   {{R::RECEIVED, D::left, L::Person},
                    {R::EMPLOYED_BY, D::right, L::Organization},
                    {R::EDUCATED_AT, D::left, L::Person}},
                   {"Who was educated at the organization that employs the recipient of {A}?",
                    "Which person studied at the employer of the recipient of {A}?",
                    "The organization employing the recipient of {A} educated which person?"},
                   std::nullopt});
    out.push_back({"field-alumnus", 3, L::Field,
                   {{R::WORKS_IN_FIELD, D::left, L::Person},
                    {R::EMPLOYED_BY, D::right, L::Organization},
                    {R::EDUCATED_AT, D::left, L::Person}},
                   {"Who was educated at the organization where a researcher in {A} works?",
                    "Which person studied at the employer of someone working in {A}?",
                    "The organization employing a researcher in {A} educated which person?"},
                   std::nullopt});
    out.push_back({"country-field-peer", 3, L::Country,
                   {{R::IS_CITIZEN_OF, D::left, L::Person},
                    {R::WORKS_IN_FIELD, D::right, L::Field},
                    {R::WORKS_IN_FIELD, D::left, L::Person}},
                   {"Who works in the same field as a citizen of {A}?",
                    "Which person shares a field of study with a citizen of {A}?",
                    "A citizen of {A} shares a field with which person?"},
                   std::nullopt});

    out.push_back({"award-alumnus-field", 4, L::Award,
                   {{R::RECEIVED, D::left, L::Person},
                    {R::EMPLOYED_BY, D::right, L::Organization},
                    {R::EDUCATED_AT, D::left, L::Person},
                    {R::WORKS_IN_FIELD, D::right, L::Field}},
                   {"Which field does a student of the organization employing the recipient of {A} work in?",
                    "A person educated at the employer of the recipient of {A} works in which field?",
                    "What is the field of someone educated at the organization that employs the recipient of {A}?"},
                   std::nullopt});
    out.push_back({"country-peer-employer", 4, L::Country,
                   {{R::IS_CITIZEN_OF, D::left, L::Person},
                    {R::WORKS_IN_FIELD, D::right, L::Field},
                    {R::WORKS_IN_FIELD, D::left, L::Person},
                    {R::EMPLOYED_BY, D::right, L::Organization}},
                   {"Which organization employs someone in the same field as a citizen of {A}?",
                    "A person sharing a field with a citizen of {A} is employed by which organization?",
                    "Where does someone who shares a field with a citizen of {A} work?"},
                   std::nullopt});
    out.push_back({"field-coworker-country", 4, L::Field,
                   {{R::WORKS_IN_FIELD, D::left, L::Person},
                    {R::EMPLOYED_BY, D::right, L::Organization},
                    {R::EMPLOYED_BY, D::left, L::Person},
                    {R::IS_CITIZEN_OF, D::right, L::Country}},
                   {"Which country is a coworker of a researcher in {A} a citizen of?",
                    "A colleague of someone working in {A} is a citizen of which country?",
                    "What is the citizenship of a coworker of a researcher in {A}?"},
                   std::nullopt});

    return out;
}

} // namespace nobelgraph::qagen
