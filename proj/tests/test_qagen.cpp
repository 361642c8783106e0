#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/qagen.hpp"
#include "nobelgraph/query/execute.hpp"
#include "nobelgraph/query/parse.hpp"
#include "nobelgraph/rng.hpp"
#include "nobelgraph/schema.hpp"
#include "support/qa_fixture.hpp"

using namespace nobelgraph;
using namespace nobelgraph::qagen;

namespace {

const QaTemplate& template_by_id(const std::vector<QaTemplate>& templates, const std::string& id) {
    for (const QaTemplate& t : templates)
        if (t.id == id) return t;
    FAIL("unknown template id " << id);
    return templates.front();
}

std::map<int, std::size_t> hop_histogram_of_items(const std::vector<McqItem>& items) {
    std::map<int, std::size_t> h;
    for (const McqItem& item : items) ++h[item.hop_count];
    return h;
}

} // namespace

TEST_CASE("default templates validate and always instantiate parseable cypher", "[qagen]") {
    auto templates = default_templates();
    REQUIRE(templates.size() == 14);

    std::map<int, std::size_t> per_hop;
    for (const QaTemplate& t : templates) {
        REQUIRE_NOTHROW(validate_template(t));
        ++per_hop[t.hop_count];
        for (const std::string& anchor :
             {std::string("Albert Einstein"), std::string("O'Neill \"the bold\" \\ Jr."),
              std::string("Université de Genève")}) {
            std::string cypher = instantiate_cypher(t, anchor);
            query::QueryAst ast = query::parse(cypher);
            REQUIRE(ast.matches.size() == 1);
            REQUIRE(ast.matches[0].rels.size() == static_cast<std::size_t>(t.hop_count));
            REQUIRE(ast.distinct);
            REQUIRE(query::render(ast) == cypher);
            for (std::size_t v = 0; v < t.question_variants.size(); ++v) {
                std::string q = instantiate_question(t, v, anchor);
                REQUIRE(q.find(anchor) != std::string::npos);
                REQUIRE(q.find("{A}") == std::string::npos);
            }
        }
    }
    REQUIRE(per_hop == std::map<int, std::size_t>{{1, 4}, {2, 4}, {3, 3}, {4, 3}});
}

TEST_CASE("template instantiation renders the documented gold query shapes", "[qagen]") {
    auto templates = default_templates();
    REQUIRE(instantiate_cypher(template_by_id(templates, "person-citizenship"),
                               "Albert Einstein") ==
            "MATCH (n0:Person {name: \"Albert Einstein\"})-[:IS_CITIZEN_OF]->(n1:Country) "
            "RETURN DISTINCT n1.name");
    REQUIRE(instantiate_cypher(template_by_id(templates, "colleague"), "Marie Curie") ==
            "MATCH (n0:Person {name: \"Marie Curie\"})-[:EMPLOYED_BY]->(n1:Organization)"
            "<-[:EMPLOYED_BY]-(n2:Person) WHERE n2.name <> \"Marie Curie\" "
            "RETURN DISTINCT n2.name");
    REQUIRE(instantiate_cypher(template_by_id(templates, "award-citizenship"), "Nobel Prize") ==
            "MATCH (n0:Award {name: \"Nobel Prize\"})<-[:RECEIVED]-(n1:Person)"
            "-[:IS_CITIZEN_OF]->(n2:Country) RETURN DISTINCT n2.name");
}

TEST_CASE("invalid templates are rejected", "[qagen]") {
    QaTemplate t = default_templates().front();
    t.hop_count = 2;
    REQUIRE_THROWS_AS(validate_template(t), InvalidInput);

    t = default_templates().front();
    t.question_variants = {"Which country is {A} a citizen of?", "Where is {A} from?"};
    REQUIRE_THROWS_AS(validate_template(t), InvalidInput);

    t = default_templates().front();
    t.question_variants[1] = "No slot at all?";
    REQUIRE_THROWS_AS(validate_template(t), InvalidInput);

    t = default_templates().front();
    t.question_variants[1] = "Two {A} slots {A}?";
    REQUIRE_THROWS_AS(validate_template(t), InvalidInput);

    t = default_templates().front();
    t.distinct_from_anchor = 2; // hop 1 has positions 0..1
    REQUIRE_THROWS_AS(validate_template(t), InvalidInput);
}

TEST_CASE("sample_path returns the only path and none when no path exists", "[qagen]") {
    PropertyGraph g;
    NodeId p = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
    NodeId w = g.upsert_node(EntityLabel::Award, "Prize", {}).id;
    g.upsert_edge(p, w, RelationType::RECEIVED);

    auto templates = default_templates();
    const QaTemplate& award = template_by_id(templates, "person-award");
    SplitMix64 rng(1);
    for (int i = 0; i < 10; ++i) {
        auto path = sample_path(g, award, rng);
        REQUIRE(path.has_value());
        REQUIRE(*path == std::vector<NodeId>{p, w});
    }

    const QaTemplate& citizenship = template_by_id(templates, "person-citizenship");
    REQUIRE_FALSE(sample_path(g, citizenship, rng).has_value());
}

TEST_CASE("sample_path is uniform over equally available paths", "[qagen]") {
    auto templates = default_templates();

    SECTION("two branches from one anchor") {
        PropertyGraph g;
        NodeId p = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
        NodeId c1 = g.upsert_node(EntityLabel::Country, "Utopia", {}).id;
        NodeId c2 = g.upsert_node(EntityLabel::Country, "Arcadia", {}).id;
        g.upsert_edge(p, c1, RelationType::IS_CITIZEN_OF);
        g.upsert_edge(p, c2, RelationType::IS_CITIZEN_OF);

        SplitMix64 rng(42);
        std::map<NodeId, int> freq;
        for (int i = 0; i < 1000; ++i) {
            auto path = sample_path(g, template_by_id(templates, "person-citizenship"), rng);
            REQUIRE(path.has_value());
            ++freq[path->back()];
        }
        REQUIRE(freq[c1] >= 400);
        REQUIRE(freq[c1] <= 600);
        REQUIRE(freq[c1] + freq[c2] == 1000);
    }

    SECTION("three two-hop paths through a shared recipient") {
        PropertyGraph g;
        NodeId w = g.upsert_node(EntityLabel::Award, "Prize", {}).id;
        NodeId p = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
        g.upsert_edge(p, w, RelationType::RECEIVED);
        std::vector<NodeId> countries;
        for (int i = 0; i < 3; ++i) {
            countries.push_back(
                g.upsert_node(EntityLabel::Country, "Country " + std::to_string(i), {}).id);
            g.upsert_edge(p, countries.back(), RelationType::IS_CITIZEN_OF);
        }

        SplitMix64 rng(7);
        std::map<NodeId, int> freq;
        for (int i = 0; i < 900; ++i) {
            auto path = sample_path(g, template_by_id(templates, "award-citizenship"), rng);
            REQUIRE(path.has_value());
            REQUIRE(path->size() == 3);
            ++freq[path->back()];
        }
        for (NodeId c : countries) {
            REQUIRE(freq[c] >= 240);
            REQUIRE(freq[c] <= 360);
        }
    }
}

TEST_CASE("sample_path honors the distinct-from-anchor position", "[qagen]") {
    PropertyGraph g;
    NodeId a = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
    NodeId b = g.upsert_node(EntityLabel::Person, "Bob", {}).id;
    NodeId o = g.upsert_node(EntityLabel::Organization, "Lab", {}).id;
    g.upsert_edge(a, o, RelationType::EMPLOYED_BY);
    g.upsert_edge(b, o, RelationType::EMPLOYED_BY);

    const QaTemplate colleague = template_by_id(default_templates(), "colleague");
    SplitMix64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto path = sample_path(g, colleague, rng);
        REQUIRE(path.has_value());
        REQUIRE((*path)[0] != (*path)[2]);
    }

    // a lone employee has no admissible path
    PropertyGraph solo;
    NodeId s = solo.upsert_node(EntityLabel::Person, "Solo", {}).id;
    NodeId so = solo.upsert_node(EntityLabel::Organization, "Lab", {}).id;
    solo.upsert_edge(s, so, RelationType::EMPLOYED_BY);
    REQUIRE_FALSE(sample_path(solo, colleague, rng).has_value());
}

TEST_CASE("generate_mcq satisfies the item invariants on a designed store", "[qagen]") {
    PropertyGraph store = oracles::qa_fixture_store(10);
    auto templates = default_templates();
    std::map<int, std::size_t> counts{{1, 25}, {2, 25}, {3, 25}, {4, 25}};
    McqResult result = generate_mcq(store, templates, counts, 7);

    REQUIRE(result.warnings.empty());
    REQUIRE(result.items.size() == 100);
    REQUIRE(hop_histogram_of_items(result.items) ==
            std::map<int, std::size_t>{{1, 25}, {2, 25}, {3, 25}, {4, 25}});

    for (const McqItem& item : result.items) {
        CAPTURE(item.question, item.gold_cypher);
        REQUIRE(item.answer_index >= 0);
        REQUIRE(item.answer_index < 4);
        std::set<std::string> distinct(item.choices.begin(), item.choices.end());
        REQUIRE(distinct.size() == 4);

        // self-consistency: the gold query selects the answer and nothing else
        query::QueryAst ast = query::parse(item.gold_cypher);
        query::ResultTable table = query::execute(ast, store);
        REQUIRE(table.rows.size() == 1);
        REQUIRE(table.rows[0][0] == item.choices[static_cast<std::size_t>(item.answer_index)]);

        const QaTemplate& t = template_by_id(templates, item.template_id);
        REQUIRE(t.hop_count == item.hop_count);
        for (int i = 0; i < 4; ++i) {
            if (i == item.answer_index) continue;
            const std::string& distractor = item.choices[static_cast<std::size_t>(i)];
            REQUIRE(distractor != table.rows[0][0]);
            REQUIRE(store.find_node(t.answer_label(), distractor).has_value());
        }

        REQUIRE(item.path.size() == static_cast<std::size_t>(item.hop_count) + 1);
        REQUIRE(item.question.find(item.path.front()) != std::string::npos);
    }
}

TEST_CASE("generate_mcq is deterministic in the seed and robust to later requests", "[qagen]") {
    PropertyGraph store = oracles::qa_fixture_store(8);
    auto templates = default_templates();
    std::map<int, std::size_t> counts{{1, 10}, {2, 10}, {3, 10}, {4, 10}};

    McqResult a = generate_mcq(store, templates, counts, 42);
    McqResult b = generate_mcq(store, templates, counts, 42);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        REQUIRE(a.items[i].question == b.items[i].question);
        REQUIRE(a.items[i].choices == b.items[i].choices);
        REQUIRE(a.items[i].answer_index == b.items[i].answer_index);
        REQUIRE(a.items[i].gold_cypher == b.items[i].gold_cypher);
        REQUIRE(a.items[i].path == b.items[i].path);
    }

    McqResult c = generate_mcq(store, templates, counts, 43);
    bool any_difference = false;
    for (std::size_t i = 0; i < std::min(a.items.size(), c.items.size()); ++i)
        any_difference = any_difference || a.items[i].question != c.items[i].question ||
                         a.items[i].choices != c.items[i].choices;
    REQUIRE(any_difference);

    // per-item streams: items of earlier hops do not depend on later requests
    McqResult first_only = generate_mcq(store, templates, {{1, 10}}, 42);
    REQUIRE(first_only.items.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        REQUIRE(first_only.items[i].question == a.items[i].question);
        REQUIRE(first_only.items[i].choices == a.items[i].choices);
    }
}

TEST_CASE("single-answer enforcement resamples anchors with ambiguous results", "[qagen]") {
    PropertyGraph g;
    NodeId multi = g.upsert_node(EntityLabel::Person, "Multi", {}).id;
    NodeId single = g.upsert_node(EntityLabel::Person, "Single", {}).id;
    std::vector<NodeId> countries;
    for (int i = 0; i < 6; ++i)
        countries.push_back(
            g.upsert_node(EntityLabel::Country, "Country " + std::to_string(i), {}).id);
    g.upsert_edge(multi, countries[0], RelationType::IS_CITIZEN_OF);
    g.upsert_edge(multi, countries[1], RelationType::IS_CITIZEN_OF);
    g.upsert_edge(single, countries[2], RelationType::IS_CITIZEN_OF);

    std::vector<QaTemplate> templates = {
        template_by_id(default_templates(), "person-citizenship")};
    McqResult result = generate_mcq(g, templates, {{1, 30}}, 5);
    REQUIRE(result.warnings.empty());
    REQUIRE(result.items.size() == 30);
    for (const McqItem& item : result.items) {
        REQUIRE(item.path.front() == "Single");
        REQUIRE(item.choices[static_cast<std::size_t>(item.answer_index)] == "Country 2");
    }
}

TEST_CASE("distractors prefer property-sharing hard negatives", "[qagen]") {
    // 12 groups: cohorts of 4 countries each, so the 3 same-cohort others
    // are exactly the hard pool
    PropertyGraph store = oracles::qa_fixture_store(12);
    NodeId answer = *store.find_node(EntityLabel::Country, "Country 0");
    const std::string cohort = store.node(answer).props.at("cohort");

    SplitMix64 rng(9);
    auto picked = qagen::detail::pick_distractors(store, EntityLabel::Country, answer, rng);
    REQUIRE(picked.has_value());
    std::set<std::string> seen;
    for (const std::string& name : *picked) {
        REQUIRE(name != "Country 0");
        NodeId node = *store.find_node(EntityLabel::Country, name);
        REQUIRE(store.node(node).props.at("cohort") == cohort);
        seen.insert(name);
    }
    REQUIRE(seen.size() == 3);

    // with only one hard negative available the rest fall back to uniform
    PropertyGraph small = oracles::qa_fixture_store(4);
    NodeId c0 = *small.find_node(EntityLabel::Country, "Country 0");
    SplitMix64 rng2(9);
    auto fallback = qagen::detail::pick_distractors(small, EntityLabel::Country, c0, rng2);
    REQUIRE(fallback.has_value());
    REQUIRE(std::find(fallback->begin(), fallback->end(), "Country 3") != fallback->end());
}

TEST_CASE("items are skipped with a reason when generation cannot finish", "[qagen]") {
    PropertyGraph g;
    NodeId p = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
    NodeId c = g.upsert_node(EntityLabel::Country, "Utopia", {}).id;
    g.upsert_edge(p, c, RelationType::IS_CITIZEN_OF);

    auto all = default_templates();
    std::vector<QaTemplate> citizenship = {template_by_id(all, "person-citizenship")};

    SECTION("insufficient distractors") {
        McqResult result = generate_mcq(g, citizenship, {{1, 2}}, 1);
        REQUIRE(result.items.empty());
        REQUIRE(result.warnings.size() == 2);
        for (const GenerationWarning& w : result.warnings) {
            REQUIRE(w.hop == 1);
            REQUIRE(w.reason.find("insufficient distractors") != std::string::npos);
        }
    }

    SECTION("no sampleable path") {
        std::vector<QaTemplate> award = {template_by_id(all, "person-award")};
        McqResult result = generate_mcq(g, award, {{1, 1}}, 1);
        REQUIRE(result.items.empty());
        REQUIRE(result.warnings.size() == 1);
        REQUIRE(result.warnings[0].reason.find("no path") != std::string::npos);
    }

    SECTION("hop level without templates") {
        McqResult result = generate_mcq(g, citizenship, {{3, 2}}, 1);
        REQUIRE(result.items.empty());
        REQUIRE(result.warnings.size() == 1);
        REQUIRE(result.warnings[0].hop == 3);
        REQUIRE(result.warnings[0].reason.find("no templates") != std::string::npos);
    }
}

TEST_CASE("mcq items declare the minimal hop count (honesty spot check)", "[qagen]") {
    PropertyGraph store = oracles::qa_fixture_store(12);
    auto templates = default_templates();
    McqResult result =
        generate_mcq(store, templates, {{2, 40}, {3, 40}, {4, 40}}, 3);
    REQUIRE(result.items.size() == 120);

    std::size_t honest = 0;
    for (const McqItem& item : result.items) {
        const QaTemplate& t = template_by_id(templates, item.template_id);
        const std::string& anchor = item.path.front();
        const std::string& answer = item.choices[static_cast<std::size_t>(item.answer_index)];
        bool shorter_reaches = false;
        for (const QaTemplate& other : templates) {
            if (other.hop_count >= t.hop_count || other.anchor_label != t.anchor_label) continue;
            query::ResultTable table =
                query::execute(build_ast(other, anchor), store);
            if (table.rows.size() == 1 && table.rows[0][0] == answer) shorter_reaches = true;
        }
        if (!shorter_reaches) ++honest;
    }
    REQUIRE(static_cast<double>(honest) >= 0.9 * static_cast<double>(result.items.size()));
}

TEST_CASE("mcq jsonl round trip honors the file contract", "[qagen]") {
    PropertyGraph store = oracles::qa_fixture_store(6);
    McqResult result = generate_mcq(store, default_templates(), {{1, 3}, {2, 3}}, 2);
    REQUIRE(result.items.size() == 6);

    SECTION("field set is exactly the contract") {
        std::ostringstream out;
        write_mcq_jsonl(result.items, out);
        std::istringstream lines(out.str());
        std::string line;
        std::size_t n = 0;
        while (std::getline(lines, line)) {
            nlohmann::json j = nlohmann::json::parse(line);
            REQUIRE(j.size() == 5);
            REQUIRE(j.contains("question"));
            REQUIRE(j.contains("choices"));
            REQUIRE(j.contains("answer"));
            REQUIRE(j.contains("hops"));
            REQUIRE(j.contains("gold_cypher"));
            REQUIRE(j["choices"].size() == 4);
            ++n;
        }
        REQUIRE(n == 6);
    }

    SECTION("seed provenance lands on every line when requested") {
        std::ostringstream out;
        write_mcq_jsonl(result.items, out, 42);
        std::istringstream lines(out.str());
        std::string line;
        while (std::getline(lines, line)) {
            nlohmann::json j = nlohmann::json::parse(line);
            REQUIRE(j.size() == 6);
            REQUIRE(j["seed"] == 42);
        }
    }

    SECTION("round trip preserves every field") {
        std::ostringstream out;
        write_mcq_jsonl(result.items, out, 42);
        std::istringstream in(out.str());
        std::size_t malformed = 99;
        std::vector<McqItem> back = read_mcq_jsonl(in, &malformed);
        REQUIRE(malformed == 0);
        REQUIRE(back.size() == result.items.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            REQUIRE(back[i].question == result.items[i].question);
            REQUIRE(back[i].choices == result.items[i].choices);
            REQUIRE(back[i].answer_index == result.items[i].answer_index);
            REQUIRE(back[i].hop_count == result.items[i].hop_count);
            REQUIRE(back[i].gold_cypher == result.items[i].gold_cypher);
        }
    }

    SECTION("malformed lines are counted and skipped") {
        std::ostringstream out;
        write_mcq_jsonl({result.items[0]}, out);
        std::string valid = out.str();
        std::string payload = "not json at all\n"
                              "[1, 2, 3]\n"
                              "{\"question\": \"q\"}\n" +
                              valid +
                              "{\"question\": \"q\", \"choices\": [\"a\", \"b\", \"c\"], "
                              "\"answer\": 0, \"hops\": 1, \"gold_cypher\": \"x\"}\n"
                              "{\"question\": \"q\", \"choices\": [\"a\", \"b\", \"c\", \"d\"], "
                              "\"answer\": 4, \"hops\": 1, \"gold_cypher\": \"x\"}\n"
                              "\n";
        std::istringstream in(payload);
        std::size_t malformed = 0;
        std::vector<McqItem> back = read_mcq_jsonl(in, &malformed);
        REQUIRE(back.size() == 1);
        REQUIRE(back[0].question == result.items[0].question);
        REQUIRE(malformed == 5);
    }
}

TEST_CASE("finetune bucket counts are exact with odd remainders to the lower hop", "[qagen]") {
    using Counts = std::map<int, std::size_t>;
    REQUIRE(finetune_counts(1000, {}) == Counts{{1, 300}, {2, 300}, {3, 200}, {4, 200}});
    REQUIRE(finetune_counts(100, {}) == Counts{{1, 30}, {2, 30}, {3, 20}, {4, 20}});
    REQUIRE(finetune_counts(7, {}) == Counts{{1, 2}, {2, 2}, {3, 2}, {4, 1}});
    REQUIRE(finetune_counts(10, {0.55, 0.45}) == Counts{{1, 3}, {2, 3}, {3, 2}, {4, 2}});
    REQUIRE(finetune_counts(10, {1.0, 0.0}) == Counts{{1, 5}, {2, 5}, {3, 0}, {4, 0}});
    REQUIRE(finetune_counts(0, {}) == Counts{{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    REQUIRE_THROWS_AS(finetune_counts(10, {0.6, 0.6}), InvalidInput);
    REQUIRE_THROWS_AS(finetune_counts(10, {1.4, -0.4}), InvalidInput);
}

TEST_CASE("finetune pairs honor the mix and the verbatim prompt format", "[qagen]") {
    PropertyGraph store = oracles::qa_fixture_store(10);
    auto templates = default_templates();
    const std::string schema_text = default_registry().render_text();

    FinetuneResult result =
        generate_finetune_pairs(store, templates, schema_text, 200, {}, 11);
    REQUIRE(result.warnings.empty());
    REQUIRE(result.pairs.size() == 200);

    std::map<int, std::size_t> hops;
    for (const FinetunePair& pair : result.pairs) ++hops[pair.hop_count];
    REQUIRE(hops == std::map<int, std::size_t>{{1, 60}, {2, 60}, {3, 40}, {4, 40}});

    const std::string schema_body =
        schema_text.ends_with('\n') ? schema_text.substr(0, schema_text.size() - 1) : schema_text;
    for (const FinetunePair& pair : result.pairs) {
        CAPTURE(pair.question);
        REQUIRE_NOTHROW(query::parse(pair.completion));

        REQUIRE(pair.prompt.starts_with(
            "You are an expert system that converts natural language questions into Cypher "
            "queries.\n"
            "Use only the schema provided below.\n"
            "Do not invent new node types or relationships.\n"
            "\n"
            "[Graph Schema]\n"));
        REQUIRE(pair.prompt.ends_with("\n\n[Cypher Query]\n"));

        // the schema rendering appears exactly once
        std::size_t first = pair.prompt.find(schema_body);
        REQUIRE(first != std::string::npos);
        REQUIRE(pair.prompt.find(schema_body, first + 1) == std::string::npos);

        REQUIRE(pair.prompt.find("[Question]\n" + pair.question + "\n") != std::string::npos);
    }

    FinetuneResult again =
        generate_finetune_pairs(store, templates, schema_text, 200, {}, 11);
    REQUIRE(again.pairs.size() == result.pairs.size());
    for (std::size_t i = 0; i < result.pairs.size(); ++i) {
        REQUIRE(again.pairs[i].prompt == result.pairs[i].prompt);
        REQUIRE(again.pairs[i].completion == result.pairs[i].completion);
    }
}

TEST_CASE("finetune jsonl carries prompt and completion per line", "[qagen]") {
    PropertyGraph store = oracles::qa_fixture_store(5);
    FinetuneResult result = generate_finetune_pairs(
        store, default_templates(), default_registry().render_text(), 10, {}, 1);
    REQUIRE(result.pairs.size() == 10);

    std::ostringstream out;
    write_finetune_jsonl(result.pairs, out);
    std::istringstream lines(out.str());
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        REQUIRE(j.size() == 2);
        REQUIRE(j["prompt"].is_string());
        REQUIRE(j["completion"].is_string());
        ++n;
    }
    REQUIRE(n == 10);

    std::ostringstream seeded;
    write_finetune_jsonl(result.pairs, seeded, 7);
    std::istringstream seeded_lines(seeded.str());
    while (std::getline(seeded_lines, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        REQUIRE(j.size() == 3);
        REQUIRE(j["seed"] == 7);
    }
}

TEST_CASE("make_prompt substitutes the slots without rescanning content", "[qagen]") {
    std::string prompt = make_prompt("Node types:\nPerson\n", "What is {SCHEMA} doing here?");
    REQUIRE(prompt.find("Node types:\nPerson") != std::string::npos);
    // the question lands verbatim even when it contains a placeholder string
    REQUIRE(prompt.find("What is {SCHEMA} doing here?") != std::string::npos);
    REQUIRE(prompt.find("{USER_QUESTION}") == std::string::npos);
}
