#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/qa.hpp"
#include "nobelgraph/qa_external.hpp"
#include "nobelgraph/qagen.hpp"
#include "nobelgraph/query/parse.hpp"
#include "nobelgraph/rng.hpp"
#include "nobelgraph/schema.hpp"
#include "support/qa_fixture.hpp"

using namespace nobelgraph;
using namespace nobelgraph::qa;
using nobelgraph::qagen::McqItem;
using nobelgraph::qagen::QaTemplate;

namespace {

class FixedTranslator final : public Translator {
  public:
    explicit FixedTranslator(std::string cypher) : cypher_(std::move(cypher)) {}
    std::string name() const override { return "fixed"; }
    Translation translate(const std::string&, const std::string&) override {
        return Translation::ok(cypher_);
    }

  private:
    std::string cypher_;
};

class FuzzTranslator final : public Translator {
  public:
    explicit FuzzTranslator(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "fuzz"; }
    Translation translate(const std::string&, const std::string&) override {
        std::string out;
        if (rng_.bounded(3) == 0) out = "MATCH (";
        std::size_t len = rng_.bounded(50);
        for (std::size_t i = 0; i < len; ++i)
            out.push_back(static_cast<char>(rng_.bounded(256)));
        return Translation::ok(out);
    }

  private:
    SplitMix64 rng_;
};

PropertyGraph citizenship_store() {
    PropertyGraph g;
    NodeId ada = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
    g.upsert_edge(ada, g.upsert_node(EntityLabel::Country, "Utopia", {}).id,
                  RelationType::IS_CITIZEN_OF);
    g.upsert_edge(ada, g.upsert_node(EntityLabel::Country, "Arcadia", {}).id,
                  RelationType::IS_CITIZEN_OF);
    return g;
}

McqItem citizenship_item(std::array<std::string, 4> choices, int answer) {
    McqItem item;
    item.question = "Which country is Ada a citizen of?";
    item.choices = std::move(choices);
    item.answer_index = answer;
    item.hop_count = 1;
    item.gold_cypher = "MATCH (n0:Person {name: \"Ada\"})-[:IS_CITIZEN_OF]->(n1:Country) "
                       "RETURN DISTINCT n1.name";
    return item;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

const std::string kSchemaText = default_registry().render_text();

} // namespace

TEST_CASE("answer keys normalize trim, case, and parentheticals", "[qa]") {
    REQUIRE(answer_key("Germany ") == answer_key("Germany"));
    REQUIRE(answer_key("GERMANY") == answer_key("germany"));
    REQUIRE(answer_key("Germany (Federal Republic)") == answer_key("Germany"));
    REQUIRE(answer_key("  Marie   Curie ") == answer_key("Marie Curie"));
    REQUIRE(answer_key("Germany") != answer_key("France"));
    REQUIRE(answer_key("   ") == answer_key(""));
}

TEST_CASE("oracle translator scores 100 percent at every hop", "[qa]") {
    PropertyGraph store = oracles::qa_fixture_store(10);
    qagen::McqResult gen = qagen::generate_mcq(store, qagen::default_templates(),
                                               {{1, 10}, {2, 10}, {3, 10}, {4, 10}}, 17);
    REQUIRE(gen.items.size() == 40);

    OracleTranslator oracle(gen.items);
    EvalReport report = evaluate(gen.items, oracle, store, kSchemaText);
    REQUIRE(report.translator == "oracle");
    REQUIRE(report.total == 40);
    REQUIRE(report.correct == 40);
    REQUIRE(report.accuracy_percent() == 100.0);
    for (int hop = 1; hop <= 4; ++hop) {
        REQUIRE(report.hop_total[static_cast<std::size_t>(hop - 1)] == 10);
        REQUIRE(report.hop_accuracy_percent(hop) == 100.0);
    }
    REQUIRE(report.translation_failures == 0);
    REQUIRE(report.execution_empty == 0);
    REQUIRE(report.abstentions == 0);
    REQUIRE(report.traces.size() == 40);

    // per-hop accuracies weighted by item counts reproduce the overall number
    double weighted = 0.0;
    for (int hop = 1; hop <= 4; ++hop)
        weighted += report.hop_accuracy_percent(hop) *
                    static_cast<double>(report.hop_total[static_cast<std::size_t>(hop - 1)]) /
                    static_cast<double>(report.total);
    REQUIRE_THAT(weighted, Catch::Matchers::WithinAbs(report.accuracy_percent(), 1e-9));
}

TEST_CASE("abstain translator scores zero and is counted as abstention", "[qa]") {
    PropertyGraph store = oracles::qa_fixture_store(6);
    qagen::McqResult gen =
        qagen::generate_mcq(store, qagen::default_templates(), {{1, 5}, {2, 5}}, 4);
    REQUIRE(gen.items.size() == 10);

    AbstainTranslator abstain;
    EvalReport report = evaluate(gen.items, abstain, store, kSchemaText);
    REQUIRE(report.translator == "abstain");
    REQUIRE(report.correct == 0);
    REQUIRE(report.accuracy_percent() == 0.0);
    REQUIRE(report.translation_failures == 10);
    REQUIRE(report.abstentions == 10);
    for (const McqTrace& trace : report.traces) {
        REQUIRE(trace.chosen == -1);
        REQUIRE(trace.note.find("translation failed") != std::string::npos);
    }
}

TEST_CASE("template translator reproduces gold queries on its own questions", "[qa]") {
    PropertyGraph store = oracles::qa_fixture_store(10);
    qagen::McqResult gen = qagen::generate_mcq(store, qagen::default_templates(),
                                               {{1, 10}, {2, 10}, {3, 10}, {4, 10}}, 23);
    REQUIRE(gen.items.size() == 40);

    TemplateTranslator translator;
    for (const McqItem& item : gen.items) {
        Translation t = translator.translate(item.question, kSchemaText);
        CAPTURE(item.question);
        REQUIRE(t.cypher.has_value());
        REQUIRE(*t.cypher == item.gold_cypher);
    }

    EvalReport report = evaluate(gen.items, translator, store, kSchemaText);
    REQUIRE(report.translator == "template");
    REQUIRE(report.correct == 40);
    REQUIRE(report.accuracy_percent() == 100.0);
}

TEST_CASE("template translator fails cleanly off-template and stays schema-safe", "[qa]") {
    TemplateTranslator translator;
    Translation t = translator.translate("Tell me everything about Ada.", kSchemaText);
    REQUIRE_FALSE(t.cypher.has_value());
    REQUIRE(t.error.find("no template") != std::string::npos);

    // anything it does emit must parse (and therefore schema-validate)
    SplitMix64 rng(99);
    for (int i = 0; i < 300; ++i) {
        std::string question;
        std::size_t len = rng.bounded(60);
        for (std::size_t k = 0; k < len; ++k)
            question.push_back(static_cast<char>(32 + rng.bounded(95)));
        Translation out = translator.translate(question, kSchemaText);
        if (out.cypher) REQUIRE_NOTHROW(query::parse(*out.cypher));
    }
}

TEST_CASE("template matching prefers the most specific variant", "[qa]") {
    auto variants = [](std::string a, std::string b, std::string c) {
        return std::vector<std::string>{std::move(a), std::move(b), std::move(c)};
    };
    QaTemplate generic{"generic",
                       1,
                       EntityLabel::Person,
                       {{RelationType::IS_CITIZEN_OF, query::Direction::right,
                         EntityLabel::Country}},
                       variants("Where is {A} from?", "unused one {A}?", "unused two {A}?"),
                       std::nullopt};
    QaTemplate specific{"specific",
                        1,
                        EntityLabel::Person,
                        {{RelationType::EMPLOYED_BY, query::Direction::right,
                          EntityLabel::Organization}},
                        variants("Where is the employer of {A}?", "spare one {A}?",
                                 "spare two {A}?"),
                        std::nullopt};
    TemplateTranslator translator({generic, specific});

    // both variants match this question; the longer literal must win
    Translation t = translator.translate("Where is the employer of Ada?", kSchemaText);
    REQUIRE(t.cypher.has_value());
    REQUIRE(t.cypher->find("EMPLOYED_BY") != std::string::npos);
    REQUIRE(t.cypher->find("\"Ada\"") != std::string::npos);

    Translation g = translator.translate("Where is Ada from?", kSchemaText);
    REQUIRE(g.cypher.has_value());
    REQUIRE(g.cypher->find("IS_CITIZEN_OF") != std::string::npos);

    // identical surface forms resolve to the earliest template
    QaTemplate clone = generic;
    clone.id = "clone";
    clone.steps = {{RelationType::WORKS_IN_FIELD, query::Direction::right, EntityLabel::Field}};
    TemplateTranslator tied({generic, clone});
    Translation tie = tied.translate("Where is Ada from?", kSchemaText);
    REQUIRE(tie.cypher.has_value());
    REQUIRE(tie.cypher->find("IS_CITIZEN_OF") != std::string::npos);
}

TEST_CASE("answer selection handles multi-row results and normalization", "[qa]") {
    PropertyGraph store = citizenship_store();
    FixedTranslator translator(citizenship_item({"a", "b", "c", "d"}, 0).gold_cypher);

    SECTION("exactly one choice matching any row is chosen") {
        McqItem item = citizenship_item({"Utopia", "Mars", "Venus", "Pluto"}, 0);
        McqTrace trace = answer_mcq(item, translator, store, kSchemaText);
        REQUIRE(trace.row_count == 2);
        REQUIRE(trace.chosen == 0);
        REQUIRE(trace.correct);
    }

    SECTION("two matching choices abstain") {
        McqItem item = citizenship_item({"Utopia", "Arcadia", "Venus", "Pluto"}, 0);
        McqTrace trace = answer_mcq(item, translator, store, kSchemaText);
        REQUIRE(trace.chosen == -1);
        REQUIRE_FALSE(trace.correct);
        REQUIRE(trace.note.find("multiple choices") != std::string::npos);
    }

    SECTION("no matching choice abstains") {
        McqItem item = citizenship_item({"Mars", "Venus", "Pluto", "Ceres"}, 0);
        McqTrace trace = answer_mcq(item, translator, store, kSchemaText);
        REQUIRE(trace.chosen == -1);
        REQUIRE(trace.note.find("no choice matches") != std::string::npos);
    }

    SECTION("values match choices through the normalization chain") {
        PropertyGraph g;
        NodeId ada = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
        g.upsert_edge(ada,
                      g.upsert_node(EntityLabel::Country, "Germany (Federal Republic)", {}).id,
                      RelationType::IS_CITIZEN_OF);
        McqItem item = citizenship_item({"  GERMANY  ", "France", "Italy", "Spain"}, 0);
        McqTrace trace = answer_mcq(item, translator, g, kSchemaText);
        REQUIRE(trace.chosen == 0);
        REQUIRE(trace.correct);
    }
}

TEST_CASE("pipeline failure stages are traced and counted", "[qa]") {
    PropertyGraph store = citizenship_store();

    SECTION("unparseable translation never reaches the executor") {
        FixedTranslator sql("SELECT * FROM people");
        McqItem item = citizenship_item({"Utopia", "Mars", "Venus", "Pluto"}, 0);
        McqTrace trace = answer_mcq(item, sql, store, kSchemaText);
        REQUIRE(trace.translated);
        REQUIRE_FALSE(trace.parsed);
        REQUIRE_FALSE(trace.executed);
        REQUIRE(trace.chosen == -1);
        REQUIRE(trace.note.find("parse failed") != std::string::npos);
    }

    SECTION("empty execution is counted separately") {
        FixedTranslator nobody("MATCH (n0:Person {name: \"Nobody\"})-[:IS_CITIZEN_OF]->"
                               "(n1:Country) RETURN DISTINCT n1.name");
        McqItem item = citizenship_item({"Utopia", "Mars", "Venus", "Pluto"}, 0);
        EvalReport report = evaluate(std::vector<McqItem>{item}, nobody, store, kSchemaText);
        REQUIRE(report.execution_empty == 1);
        REQUIRE(report.abstentions == 1);
        REQUIRE(report.correct == 0);
        REQUIRE(report.traces[0].executed);
        REQUIRE(report.traces[0].note.find("no rows") != std::string::npos);
    }

    SECTION("oracle without the question reports a translation failure") {
        OracleTranslator oracle(std::vector<McqItem>{});
        McqItem item = citizenship_item({"Utopia", "Mars", "Venus", "Pluto"}, 0);
        McqTrace trace = answer_mcq(item, oracle, store, kSchemaText);
        REQUIRE_FALSE(trace.translated);
        REQUIRE(trace.note.find("translation failed") != std::string::npos);
    }
}

TEST_CASE("random translator output is handled without ever executing garbage", "[qa]") {
    PropertyGraph store = oracles::qa_fixture_store(5);
    qagen::McqResult gen =
        qagen::generate_mcq(store, qagen::default_templates(), {{1, 5}, {2, 5}}, 8);
    REQUIRE(gen.items.size() == 10);

    FuzzTranslator fuzz(1234);
    for (int round = 0; round < 40; ++round) {
        for (const McqItem& item : gen.items) {
            McqTrace trace;
            REQUIRE_NOTHROW(trace = answer_mcq(item, fuzz, store, kSchemaText));
            if (!trace.parsed) REQUIRE_FALSE(trace.executed);
            REQUIRE(trace.chosen == -1);
        }
    }
}

TEST_CASE("evaluation from a stream skips malformed lines and stays deterministic", "[qa]") {
    PropertyGraph store = oracles::qa_fixture_store(8);
    qagen::McqResult gen =
        qagen::generate_mcq(store, qagen::default_templates(), {{1, 4}, {3, 4}}, 12);
    REQUIRE(gen.items.size() == 8);

    std::ostringstream payload;
    payload << "this line is not json\n";
    qagen::write_mcq_jsonl(gen.items, payload, 12);
    payload << "{\"question\": \"missing the rest\"}\n";

    OracleTranslator oracle(gen.items);
    std::istringstream first(payload.str());
    EvalReport a = evaluate(first, oracle, store, kSchemaText);
    REQUIRE(a.malformed_lines == 2);
    REQUIRE(a.total == 8);
    REQUIRE(a.correct == 8);
    REQUIRE(a.hop_total == std::array<std::size_t, 4>{4, 0, 4, 0});

    std::istringstream second(payload.str());
    EvalReport b = evaluate(second, oracle, store, kSchemaText);
    REQUIRE(a.total == b.total);
    REQUIRE(a.correct == b.correct);
    REQUIRE(a.traces.size() == b.traces.size());
    for (std::size_t i = 0; i < a.traces.size(); ++i) {
        REQUIRE(a.traces[i].cypher == b.traces[i].cypher);
        REQUIRE(a.traces[i].chosen == b.traces[i].chosen);
        REQUIRE(a.traces[i].note == b.traces[i].note);
    }
}

TEST_CASE("repl answers questions and survives stage failures", "[qa]") {
    PropertyGraph g;
    NodeId ada = g.upsert_node(EntityLabel::Person, "Ada", {}).id;
    g.upsert_edge(ada, g.upsert_node(EntityLabel::Country, "Utopia", {}).id,
                  RelationType::IS_CITIZEN_OF);

    TemplateTranslator translator;
    std::istringstream in("\nWhich country is Ada a citizen of?\ncomplete gibberish\n:quit\n"
                          "never read\n");
    std::ostringstream out;
    repl(g, translator, kSchemaText, in, out);
    std::string text = out.str();

    REQUIRE(count_occurrences(text, "question> ") == 4);
    REQUIRE(text.find("cypher: MATCH (n0:Person {name: \"Ada\"})") != std::string::npos);
    REQUIRE(text.find("n1.name") != std::string::npos);
    REQUIRE(text.find("Utopia") != std::string::npos);
    REQUIRE(text.find("(1 row)") != std::string::npos);
    REQUIRE(text.find("answer: Utopia") != std::string::npos);
    REQUIRE(text.find("translation failed:") != std::string::npos);
    REQUIRE(text.find("never read") == std::string::npos);

    // end of input exits cleanly
    std::istringstream empty_in("");
    std::ostringstream empty_out;
    repl(g, translator, kSchemaText, empty_in, empty_out);
    REQUIRE(empty_out.str() == "question> \n");
}

TEST_CASE("external translator runs a local command", "[qa][external]") {
    const std::string gold = "MATCH (n0:Person)-[:RECEIVED]->(n1:Award) RETURN DISTINCT n1.name";

    SECTION("stdout becomes the translation") {
        ExternalTranslator tr("echo '" + gold + "'");
        REQUIRE(tr.name() == "external");
        Translation t = tr.translate("q", kSchemaText);
        REQUIRE(t.cypher.has_value());
        REQUIRE(*t.cypher == gold);
        REQUIRE_NOTHROW(query::parse(*t.cypher));
    }

    SECTION("the prompt is delivered on stdin") {
        ExternalTranslator tr("cat");
        Translation t = tr.translate("THE QUESTION?", "THE SCHEMA BODY");
        REQUIRE(t.cypher.has_value());
        REQUIRE(t.cypher->find("THE SCHEMA BODY") != std::string::npos);
        REQUIRE(t.cypher->find("[Question]\nTHE QUESTION?") != std::string::npos);
        REQUIRE(t.cypher->find("[Cypher Query]") != std::string::npos);
    }

    SECTION("a failing command is retried once, then reported") {
        std::filesystem::path marker =
            std::filesystem::temp_directory_path() /
            ("qa_retry_" + std::to_string(::getpid()) + ".txt");
        std::filesystem::remove(marker);
        ExternalTranslator tr("echo attempt >> " + marker.string() + "; exit 7");
        Translation t = tr.translate("q", kSchemaText);
        REQUIRE_FALSE(t.cypher.has_value());
        REQUIRE(t.error.find("status 7") != std::string::npos);
        REQUIRE(t.error.find("after retry") != std::string::npos);

        std::ifstream attempts(marker);
        std::string line;
        std::size_t runs = 0;
        while (std::getline(attempts, line)) ++runs;
        REQUIRE(runs == 2);
        std::filesystem::remove(marker);
    }

    SECTION("empty output is a failure") {
        ExternalTranslator tr("true");
        Translation t = tr.translate("q", kSchemaText);
        REQUIRE_FALSE(t.cypher.has_value());
        REQUIRE(t.error.find("no output") != std::string::npos);
    }

    SECTION("a hung command is killed at the deadline") {
        ExternalTranslator tr("sleep 30", std::chrono::seconds(1));
        auto start = std::chrono::steady_clock::now();
        Translation t = tr.translate("q", kSchemaText);
        auto elapsed = std::chrono::steady_clock::now() - start;
        REQUIRE_FALSE(t.cypher.has_value());
        REQUIRE(t.error.find("timed out") != std::string::npos);
        REQUIRE(elapsed < std::chrono::seconds(10));
    }
}

TEST_CASE("external translator speaks plain http", "[qa][external]") {
    const std::string gold = "MATCH (n0:Person {name: \"Ada\"})-[:IS_CITIZEN_OF]->(n1:Country) "
                             "RETURN DISTINCT n1.name";
    httplib::Server server;
    std::mutex mutex;
    std::vector<std::string> bodies;
    std::atomic<int> broken_hits{0};
    server.Post("/translate", [&](const httplib::Request& req, httplib::Response& res) {
        {
            std::lock_guard<std::mutex> lock(mutex);
            bodies.push_back(req.body);
        }
        res.set_content(gold + "\n", "text/plain");
    });
    server.Post("/broken", [&](const httplib::Request&, httplib::Response& res) {
        ++broken_hits;
        res.status = 500;
    });
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread serve([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    const std::string root = "http://127.0.0.1:" + std::to_string(port);

    SECTION("response body becomes the translation") {
        ExternalTranslator tr(root + "/translate");
        Translation t = tr.translate("Which country is Ada a citizen of?", "SCHEMA MARKER");
        REQUIRE(t.cypher.has_value());
        REQUIRE(*t.cypher == gold);
        std::lock_guard<std::mutex> lock(mutex);
        REQUIRE(bodies.size() == 1);
        REQUIRE(bodies[0].find("SCHEMA MARKER") != std::string::npos);
        REQUIRE(bodies[0].find("Which country is Ada a citizen of?") != std::string::npos);
        REQUIRE(bodies[0].find("[Cypher Query]") != std::string::npos);
    }

    SECTION("non-200 responses are retried once and reported") {
        ExternalTranslator tr(root + "/broken");
        Translation t = tr.translate("q", "s");
        REQUIRE_FALSE(t.cypher.has_value());
        REQUIRE(t.error.find("500") != std::string::npos);
        REQUIRE(broken_hits.load() == 2);
    }

    server.stop();
    serve.join();

    SECTION("an unreachable endpoint fails without hanging") {
        ExternalTranslator tr("http://127.0.0.1:1/translate", std::chrono::seconds(2));
        Translation t = tr.translate("q", "s");
        REQUIRE_FALSE(t.cypher.has_value());
    }
}

TEST_CASE("external translator resolves its endpoint from the environment", "[qa][external]") {
    const char* var = kEndpointEnvVar;
    ::setenv(var, "echo 'MATCH (n:Person) RETURN n.name'", 1);
    ExternalTranslator tr = ExternalTranslator::from_env();
    Translation t = tr.translate("q", kSchemaText);
    REQUIRE(t.cypher.has_value());
    REQUIRE(*t.cypher == "MATCH (n:Person) RETURN n.name");

    ::unsetenv(var);
    REQUIRE_THROWS_AS(ExternalTranslator::from_env(), UserError);
    REQUIRE_THROWS_AS(ExternalTranslator(""), UserError);
}
