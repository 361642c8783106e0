#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "nobelgraph/graph.hpp"
#include "nobelgraph/query/execute.hpp"
#include "nobelgraph/query/parse.hpp"
#include "nobelgraph/rng.hpp"
#include "support/oracles.hpp"

using namespace nobelgraph;
using namespace nobelgraph::query;

namespace {

PropertyGraph einstein_store() {
    PropertyGraph g;
    NodeId p = g.upsert_node(EntityLabel::Person, "Albert Einstein", {{"year", "1879"}}).id;
    NodeId a = g.upsert_node(EntityLabel::Award, "Nobel Prize in Physics 1921",
                             {{"year", "1921"}})
                   .id;
    NodeId c = g.upsert_node(EntityLabel::Country, "Germany", {}).id;
    g.upsert_edge(p, a, RelationType::RECEIVED);
    g.upsert_edge(p, c, RelationType::IS_CITIZEN_OF);
    return g;
}

ResultTable run(const PropertyGraph& store, const std::string& text) {
    QueryAst ast = parse(text);
    ResultTable got = execute(ast, store);
    ResultTable expected = oracles::enumerate_query(ast, store);
    INFO("query: " << text);
    REQUIRE(got.columns == expected.columns);
    REQUIRE(got.rows == expected.rows);
    return got;
}

using Rows = std::vector<std::vector<std::string>>;

} // namespace

TEST_CASE("award-and-citizenship fixture returns Germany", "[query]") {
    PropertyGraph g = einstein_store();
    ResultTable table = run(
        g,
        "MATCH (p:Person)-[:WON_AWARD]->(a:Award {name: \"Nobel Prize in Physics 1921\"}), "
        "(p)-[:IS_CITIZEN_OF]->(c:Country) RETURN c.name");
    CHECK(table.columns == std::vector<std::string>{"c.name"});
    CHECK(table.rows == Rows{{"Germany"}});

    // Same result when the clauses arrive as separate MATCHes.
    ResultTable split = run(
        g,
        "MATCH (p:Person)-[:RECEIVED]->(a:Award {name: \"Nobel Prize in Physics 1921\"}) "
        "MATCH (p)-[:IS_CITIZEN_OF]->(c:Country) RETURN c.name");
    CHECK(split.rows == Rows{{"Germany"}});

    // A name that is not in the store matches nothing.
    CHECK(run(g,
              "MATCH (p:Person)-[:WON_AWARD]->(a:Award {name: \"Nobel Prize in Peace 1921\"}), "
              "(p)-[:IS_CITIZEN_OF]->(c:Country) RETURN c.name")
              .rows.empty());
}

TEST_CASE("empty store yields empty tables but intact columns", "[query]") {
    PropertyGraph g;
    ResultTable table = run(g, "MATCH (p:Person)-[:RECEIVED]->(a:Award) RETURN p.name, a.name");
    CHECK(table.columns == std::vector<std::string>{"p.name", "a.name"});
    CHECK(table.row_count() == 0);

    // count() over nothing is still one row saying zero.
    CHECK(run(g, "MATCH (p:Person) RETURN count(p)").rows == Rows{{"0"}});
}

TEST_CASE("count projects the number of matches", "[query]") {
    PropertyGraph g;
    g.upsert_node(EntityLabel::Person, "A", {});
    g.upsert_node(EntityLabel::Person, "B", {});
    g.upsert_node(EntityLabel::Person, "C", {});
    g.upsert_node(EntityLabel::Country, "X", {});
    ResultTable table = run(g, "MATCH (p:Person) RETURN count(p)");
    CHECK(table.columns == std::vector<std::string>{"count(p)"});
    CHECK(table.rows == Rows{{"3"}});
    CHECK(run(g, "MATCH (p:Person) RETURN count(*)").rows == Rows{{"3"}});
    CHECK(run(g, "MATCH (n) RETURN count(n)").rows == Rows{{"4"}});
    // Cartesian product across disconnected MATCH clauses.
    CHECK(run(g, "MATCH (p:Person) MATCH (c:Country) RETURN count(*)").rows == Rows{{"3"}});
    CHECK(run(g, "MATCH (p:Person) MATCH (q:Person) RETURN count(*)").rows == Rows{{"9"}});
    // LIMIT 0 drops even the aggregate row.
    CHECK(run(g, "MATCH (p:Person) RETURN count(p) LIMIT 0").row_count() == 0);
}

TEST_CASE("matching is homomorphic: variables may share a node", "[query]") {
    PropertyGraph g;
    NodeId a = g.upsert_node(EntityLabel::Person, "A", {}).id;
    NodeId b = g.upsert_node(EntityLabel::Person, "B", {}).id;
    NodeId w = g.upsert_node(EntityLabel::Award, "W", {}).id;
    g.upsert_edge(a, w, RelationType::RECEIVED);
    g.upsert_edge(b, w, RelationType::RECEIVED);
    ResultTable table = run(
        g, "MATCH (x:Person)-[:RECEIVED]->(w:Award)<-[:RECEIVED]-(y:Person) RETURN x.name, y.name");
    CHECK(table.rows == Rows{{"A", "A"}, {"A", "B"}, {"B", "A"}, {"B", "B"}});
}

TEST_CASE("direction is honored and undirected matches either way", "[query]") {
    PropertyGraph g;
    NodeId p = g.upsert_node(EntityLabel::Person, "P", {}).id;
    NodeId o = g.upsert_node(EntityLabel::Organization, "O", {}).id;
    g.upsert_edge(p, o, RelationType::EMPLOYED_BY);

    CHECK(run(g, "MATCH (p:Person)-[:EMPLOYED_BY]->(o:Organization) RETURN o.name").rows ==
          Rows{{"O"}});
    CHECK(run(g, "MATCH (o:Organization)-[:EMPLOYED_BY]->(p:Person) RETURN o.name").rows.empty());
    CHECK(run(g, "MATCH (o:Organization)<-[:EMPLOYED_BY]-(p:Person) RETURN o.name").rows ==
          Rows{{"O"}});
    CHECK(run(g, "MATCH (o:Organization)-[:EMPLOYED_BY]-(p:Person) RETURN o.name").rows ==
          Rows{{"O"}});
    CHECK(run(g, "MATCH (p:Person)-[:EMPLOYED_BY]-(o:Organization) RETURN o.name").rows ==
          Rows{{"O"}});
    // Untyped relationships match any relation.
    CHECK(run(g, "MATCH (p:Person)-[]->(x) RETURN x.name").rows == Rows{{"O"}});
    CHECK(run(g, "MATCH (p:Person)-[:WORKS_IN_FIELD]->(x) RETURN x.name").rows.empty());
}

TEST_CASE("self-referential patterns bind one node to both endpoints", "[query]") {
    PropertyGraph g;
    NodeId a = g.upsert_node(EntityLabel::Person, "A", {}).id;
    NodeId b = g.upsert_node(EntityLabel::Person, "B", {}).id;
    g.upsert_edge(a, b, RelationType::IS_SPOUSE_OF);
    CHECK(run(g, "MATCH (x:Person)-[:IS_SPOUSE_OF]->(x) RETURN x.name").rows.empty());
    g.upsert_edge(a, a, RelationType::IS_SPOUSE_OF);
    CHECK(run(g, "MATCH (x:Person)-[:IS_SPOUSE_OF]->(x) RETURN x.name").rows == Rows{{"A"}});
}

TEST_CASE("where clauses compare numerically then bytewise", "[query]") {
    PropertyGraph g;
    g.upsert_node(EntityLabel::Person, "Old", {{"year", "999"}});
    g.upsert_node(EntityLabel::Person, "New", {{"year", "1000"}});
    g.upsert_node(EntityLabel::Person, "Unknown", {});

    // Bytewise "999" > "1000"; numeric comparison must win here.
    CHECK(run(g, "MATCH (p:Person) WHERE p.year < 1000 RETURN p.name").rows == Rows{{"Old"}});
    CHECK(run(g, "MATCH (p:Person) WHERE p.year > 999 RETURN p.name").rows == Rows{{"New"}});
    // Non-numeric operands fall back to byte order.
    CHECK(run(g, "MATCH (p:Person) WHERE p.name > \"N\" RETURN p.name").rows ==
          Rows{{"New"}, {"Old"}, {"Unknown"}});
    // Missing properties never satisfy a condition, not even <>.
    CHECK(run(g, "MATCH (p:Person) WHERE p.year <> 999 RETURN p.name").rows == Rows{{"New"}});
    CHECK(run(g, "MATCH (p:Person) WHERE p.year = \"\" RETURN p.name").rows.empty());
    // contains is case-sensitive.
    CHECK(run(g, "MATCH (p:Person) WHERE p.name CONTAINS \"n\" RETURN p.name").rows ==
          Rows{{"Unknown"}});
    CHECK(run(g, "MATCH (p:Person) WHERE p.name CONTAINS \"N\" RETURN p.name").rows ==
          Rows{{"New"}});
    CHECK(run(g, "MATCH (p:Person) WHERE p.name CONTAINS \"know\" RETURN p.name").rows ==
          Rows{{"Unknown"}});
}

TEST_CASE("distinct deduplicates and default order sorts all columns", "[query]") {
    PropertyGraph g;
    NodeId p1 = g.upsert_node(EntityLabel::Person, "P1", {}).id;
    NodeId p2 = g.upsert_node(EntityLabel::Person, "P2", {}).id;
    NodeId de = g.upsert_node(EntityLabel::Country, "Germany", {}).id;
    g.upsert_edge(p1, de, RelationType::IS_CITIZEN_OF);
    g.upsert_edge(p2, de, RelationType::IS_CITIZEN_OF);

    CHECK(run(g, "MATCH (p:Person)-[:IS_CITIZEN_OF]->(c:Country) RETURN c.name").rows ==
          Rows{{"Germany"}, {"Germany"}});
    CHECK(run(g, "MATCH (p:Person)-[:IS_CITIZEN_OF]->(c:Country) RETURN DISTINCT c.name").rows ==
          Rows{{"Germany"}});
    // Bare variable projections return the node's name.
    CHECK(run(g, "MATCH (p:Person)-[:IS_CITIZEN_OF]->(c:Country) RETURN p, c").rows ==
          Rows{{"P1", "Germany"}, {"P2", "Germany"}});
}

TEST_CASE("order by sorts numerically with hidden keys and limit truncates", "[query]") {
    PropertyGraph g;
    g.upsert_node(EntityLabel::Person, "A", {{"year", "9"}});
    g.upsert_node(EntityLabel::Person, "B", {{"year", "10"}});
    g.upsert_node(EntityLabel::Person, "C", {{"year", "2"}});

    ResultTable by_year = run(g, "MATCH (p:Person) RETURN p.name ORDER BY p.year");
    CHECK(by_year.columns == std::vector<std::string>{"p.name"});
    CHECK(by_year.rows == Rows{{"C"}, {"A"}, {"B"}});
    CHECK(run(g, "MATCH (p:Person) RETURN p.name ORDER BY p.year DESC").rows ==
          Rows{{"B"}, {"A"}, {"C"}});
    CHECK(run(g, "MATCH (p:Person) RETURN p.name ORDER BY p.year DESC LIMIT 2").rows ==
          Rows{{"B"}, {"A"}});
    CHECK(run(g, "MATCH (p:Person) RETURN p.name LIMIT 0").row_count() == 0);
    CHECK(run(g, "MATCH (p:Person) RETURN p.name, p.year ORDER BY p.year").rows ==
          Rows{{"C", "2"}, {"A", "9"}, {"B", "10"}});
}

TEST_CASE("missing properties project as empty strings", "[query]") {
    PropertyGraph g;
    g.upsert_node(EntityLabel::Person, "A", {{"year", "1901"}});
    g.upsert_node(EntityLabel::Person, "B", {});
    CHECK(run(g, "MATCH (p:Person) RETURN p.name, p.year").rows ==
          Rows{{"A", "1901"}, {"B", ""}});
}

TEST_CASE("property maps filter on any node in the chain", "[query]") {
    PropertyGraph g = einstein_store();
    CHECK(run(g, "MATCH (x {name: \"Germany\"}) RETURN x").rows == Rows{{"Germany"}});
    CHECK(run(g, "MATCH (p:Person {year: 1879})-[:RECEIVED]->(a:Award) RETURN a.name").rows ==
          Rows{{"Nobel Prize in Physics 1921"}});
    CHECK(run(g, "MATCH (p:Person {year: 1880})-[:RECEIVED]->(a:Award) RETURN a.name")
              .rows.empty());
}

TEST_CASE("distinct results do not depend on the seed pattern", "[query]") {
    SplitMix64 rng(555);
    oracles::StoreConfig cfg;
    cfg.persons = 20;
    PropertyGraph g = oracles::random_store(rng, cfg);
    QueryAst ast = parse(
        "MATCH (p:Person)-[:RECEIVED]->(a:Award)<-[:RECEIVED]-(q:Person) "
        "RETURN DISTINCT p.name, q.name");
    ResultTable base = execute(ast, g);
    CHECK(base == oracles::enumerate_query(ast, g));
    for (std::uint32_t seed_slot = 0; seed_slot < 3; ++seed_slot) {
        query::detail::Plan plan = query::detail::make_plan(ast, g, seed_slot);
        CHECK(plan.steps.front().slot == seed_slot);
        ResultTable forced = query::detail::execute_plan(ast, g, plan);
        CHECK(forced == base);
    }
}

namespace {

std::string random_chain_query(SplitMix64& rng, const oracles::StoreConfig& cfg) {
    struct Hop {
        const char* rel;
        const char* label;
        const char* name_prefix;
        std::size_t pool;
    };
    const Hop hops[] = {
        {"RECEIVED", "Award", "Award ", cfg.awards},
        {"EMPLOYED_BY", "Organization", "Org ", cfg.orgs},
        {"EDUCATED_AT", "Organization", "Org ", cfg.orgs},
        {"WORKS_IN_FIELD", "Field", "Field ", cfg.fields},
        {"IS_CITIZEN_OF", "Country", "Country ", cfg.countries},
    };
    std::size_t nhops = 1 + rng.bounded(4);
    std::string q = "MATCH (v0:Person)";
    std::vector<std::string> vars = {"v0"};
    for (std::size_t i = 1; i <= nhops; ++i) {
        bool to_attr = i % 2 == 1; // odd positions hold attribute nodes
        const Hop& hop = hops[rng.bounded(5)];
        std::string type = rng.bounded(8) == 0 ? "" : std::string(":") + hop.rel;
        // The stored edge always points person -> attribute; sometimes write
        // the pattern the wrong way round to exercise empty results.
        int dir = static_cast<int>(rng.bounded(8)); // 0 wrong-way, 1-2 undirected, else correct
        std::string arrow_l, arrow_r;
        if (to_attr) {
            arrow_l = dir == 0 ? "<-" : "-";
            arrow_r = dir == 0 || dir <= 2 ? "-" : "->";
        } else {
            arrow_l = dir == 0 || dir <= 2 ? "-" : "<-";
            arrow_r = dir == 0 ? "->" : "-";
        }
        vars.push_back("v" + std::to_string(i));
        std::string node = "(" + vars.back();
        if (to_attr) {
            if (rng.bounded(5) != 0) node += std::string(":") + hop.label;
            if (rng.bounded(10) == 0)
                node += std::string(" {name: \"") + hop.name_prefix +
                        std::to_string(rng.bounded(hop.pool)) + "\"}";
        } else {
            node += ":Person";
        }
        node += ")";
        q += arrow_l + "[" + type + "]" + arrow_r + node;
    }
    std::vector<std::string> person_vars;
    for (std::size_t i = 0; i < vars.size(); i += 2) person_vars.push_back(vars[i]);
    if (rng.bounded(5) < 2) {
        q += " WHERE ";
        switch (rng.bounded(4)) {
        case 0: q += person_vars[rng.bounded(person_vars.size())] + ".year > 1940"; break;
        case 1: q += person_vars[rng.bounded(person_vars.size())] + ".year < 1935"; break;
        case 2: q += vars[rng.bounded(vars.size())] + ".name CONTAINS \"1\""; break;
        default:
            q += vars[rng.bounded(vars.size())] + ".name <> \"Person 2\" AND " +
                 person_vars[0] + ".year > 1905";
        }
    }
    bool distinct = rng.bounded(2) == 1;
    std::string last = vars.back();
    std::string proj;
    switch (rng.bounded(6)) {
    case 0: proj = "count(" + vars[0] + ")"; break;
    case 1: proj = "count(*)"; break;
    case 2: proj = last; break;
    case 3: proj = last + ".name"; break;
    case 4: proj = vars[0] + ".name, " + last + ".name"; break;
    default: proj = vars[0] + ".year, " + last + ".name"; break;
    }
    bool counting = proj.starts_with("count");
    q += " RETURN ";
    if (distinct && !counting) q += "DISTINCT ";
    q += proj;
    if (!counting && rng.bounded(3) == 0) {
        if (distinct) {
            // Keys must be projected properties; reuse the first projection.
            if (proj.find('.') != std::string::npos) {
                std::string key = proj.substr(0, proj.find(','));
                q += " ORDER BY " + key + (rng.bounded(2) ? " DESC" : "");
            }
        } else {
            q += " ORDER BY " + person_vars[rng.bounded(person_vars.size())] +
                 (rng.bounded(2) ? ".year" : ".name") + (rng.bounded(2) ? " DESC" : "");
        }
    }
    if (rng.bounded(4) == 0) q += " LIMIT " + std::to_string(rng.bounded(6));
    return q;
}

} // namespace

TEST_CASE("executor matches the exhaustive enumerator on random stores", "[query]") {
    SplitMix64 rng(20260819);
    for (int round = 0; round < 3; ++round) {
        oracles::StoreConfig cfg;
        cfg.persons = 15 + 10 * static_cast<std::size_t>(round);
        cfg.orgs = 4 + static_cast<std::size_t>(round);
        cfg.fields = 3 + static_cast<std::size_t>(round);
        cfg.countries = 5;
        cfg.awards = 3;
        PropertyGraph g = oracles::random_store(rng, cfg);
        for (std::size_t i = 0; i < cfg.persons; ++i)
            g.upsert_node(EntityLabel::Person, "Person " + std::to_string(i),
                          {{"year", std::to_string(1900 + rng.bounded(80))}});
        for (int trial = 0; trial < 40; ++trial) {
            std::string text = random_chain_query(rng, cfg);
            INFO("query: " << text);
            QueryAst ast = parse(text);
            ResultTable got = execute(ast, g);
            ResultTable expected = oracles::enumerate_query(ast, g);
            REQUIRE(got.columns == expected.columns);
            REQUIRE(got.rows == expected.rows);
        }
    }
}

TEST_CASE("explain lists seed, expansions, and joins with estimates", "[query]") {
    PropertyGraph g;
    for (int i = 0; i < 25; ++i)
        g.upsert_node(EntityLabel::Person, "P" + std::to_string(i), {});
    NodeId w = g.upsert_node(EntityLabel::Award, "W0", {}).id;
    g.upsert_node(EntityLabel::Award, "W1", {});
    g.upsert_node(EntityLabel::Award, "W2", {});
    g.upsert_edge(0, w, RelationType::RECEIVED);

    std::string single = explain(parse("MATCH (p:Person) RETURN p"), g);
    CHECK_THAT(single, Catch::Matchers::StartsWith("1. seed (p:Person) — 25 candidates"));
    CHECK(single.find("2.") == std::string::npos);
    CHECK_THAT(single, Catch::Matchers::ContainsSubstring("return p"));

    // The three awards are more selective than 25 people, so they seed.
    std::string selective =
        explain(parse("MATCH (p:Person)-[:RECEIVED]->(a:Award) RETURN p.name"), g);
    CHECK_THAT(selective, Catch::Matchers::StartsWith("1. seed (a:Award) — 3 candidates"));
    CHECK_THAT(selective,
               Catch::Matchers::ContainsSubstring(
                   "2. expand (p:Person) via (p:Person)-[:RECEIVED]->(a:Award)"));

    std::string four_hop = explain(
        parse("MATCH (a:Person)-[]->(b)-[]->(c)-[]->(d)-[]->(e) RETURN a"), g);
    std::size_t expands = 0;
    for (std::size_t at = four_hop.find("expand"); at != std::string::npos;
         at = four_hop.find("expand", at + 1))
        ++expands;
    CHECK(expands == 4);
    CHECK(four_hop.find("join") == std::string::npos);

    std::string joined =
        explain(parse("MATCH (p:Person) MATCH (a:Award) RETURN count(*)"), g);
    CHECK_THAT(joined, Catch::Matchers::ContainsSubstring("join seed"));
}
