// nobelgraph: Nobel laureate knowledge-graph engine.
// Subcommands operate on a snapshot file ("store"); only `ingest` mutates it.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nobelgraph/ingest.hpp"
#include "nobelgraph/nobelgraph.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace nobelgraph;

namespace {

PropertyGraph load_store(const std::string& path, bool must_exist = true) {
    if (!fs::exists(path)) {
        if (must_exist) throw IoError("store not found: " + path);
        return {};
    }
    return snapshot_read(path);
}

void save_store(const PropertyGraph& g, const std::string& path) {
    // write-then-rename keeps a crash from truncating the store
    std::string tmp = path + ".tmp";
    snapshot_write(g, tmp);
    fs::rename(tmp, path);
}

int run_ingest(const std::string& store_path, const std::string& input_path, bool strict,
               const std::string& source, const std::string& format) {
    PropertyGraph g = load_store(store_path, /*must_exist=*/false);
    IngestOptions opts;
    opts.strict = strict;
    if (source == "original")
        opts.source = Source::original;
    else if (source == "enriched")
        opts.source = Source::enriched;
    else
        throw InvalidInput("--source must be 'original' or 'enriched'");

    std::ifstream in(input_path);
    if (!in) throw IoError("cannot open input: " + input_path);
    // a strict-mode failure throws before the save, leaving the store untouched
    IngestReport report = ingest_stream(in, g, opts);
    save_store(g, store_path);
    if (format == "jsonl")
        std::cout << report.to_json().dump() << "\n";
    else
        std::cout << report.render_text();
    return 0;
}

int run_query(const std::string& store_path, const std::string& file, const std::string& format,
              bool explain_only) {
    PropertyGraph g = load_store(store_path);
    std::ifstream file_in;
    if (!file.empty()) {
        file_in.open(file);
        if (!file_in) throw IoError("cannot open query file: " + file);
    }
    std::istream& in = file.empty() ? std::cin : file_in;

    // One query per line; blank lines are ignored and errors do not stop the
    // stream, they just fail the exit code.
    int failures = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (strings::trim_ascii(line).empty()) continue;
        try {
            query::QueryAst ast = query::parse(line);
            if (explain_only) {
                std::cout << query::explain(ast, g);
                continue;
            }
            query::ResultTable table = query::execute(ast, g);
            if (format == "jsonl") {
                json out{{"columns", table.columns}, {"rows", table.rows}};
                std::cout << out.dump() << "\n";
            } else {
                std::vector<std::vector<std::string>> rows;
                rows.push_back(table.columns);
                rows.insert(rows.end(), table.rows.begin(), table.rows.end());
                std::cout << detail::format_table(rows);
                std::cout << "(" << table.row_count() << (table.row_count() == 1 ? " row" : " rows")
                          << ")\n";
            }
        } catch (const UserError& e) {
            std::cerr << "error: " << e.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

int run_stats(const std::string& store_path, const std::string& format) {
    PropertyGraph g = load_store(store_path);
    GraphStats s = g.stats();
    if (format == "jsonl") {
        json by_label = json::object(), by_type = json::object();
        for (const auto& [l, n] : s.nodes_by_label) by_label[std::string(to_string(l))] = n;
        for (const auto& [t, n] : s.edges_by_type) by_type[std::string(to_string(t))] = n;
        json out{{"nodes_total", s.nodes_total},
                 {"edges_total", s.edges_total},
                 {"nodes_by_label", by_label},
                 {"edges_by_type", by_type},
                 {"nodes_original", s.nodes_by_source.count(Source::original)
                                        ? s.nodes_by_source.at(Source::original)
                                        : 0},
                 {"nodes_enriched", s.nodes_by_source.count(Source::enriched)
                                        ? s.nodes_by_source.at(Source::enriched)
                                        : 0},
                 {"edges_original", s.edges_by_source.count(Source::original)
                                        ? s.edges_by_source.at(Source::original)
                                        : 0},
                 {"edges_enriched", s.edges_by_source.count(Source::enriched)
                                        ? s.edges_by_source.at(Source::enriched)
                                        : 0}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << render_growth_table(s);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nobel laureate knowledge-graph engine"};
    app.require_subcommand(1);

    std::string store, input, format = "table", source = "enriched";
    bool strict = false;

    auto* ingest = app.add_subcommand("ingest", "Load JSONL records into a store");
    ingest->add_option("--store", store, "snapshot file to create or extend")->required();
    ingest->add_option("--input", input, "JSONL records file")->required();
    ingest->add_flag("--strict", strict, "treat identity conflicts as failures");
    ingest->add_option("--source", source, "tag created rows as original|enriched")
        ->check(CLI::IsMember({"original", "enriched"}));
    ingest->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"table", "jsonl"}));

    auto* stats = app.add_subcommand("stats", "Summarize a store");
    stats->add_option("--store", store, "snapshot file")->required();
    stats->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "jsonl"}));

    std::string query_file;
    bool repl = false, explain_only = false;
    auto* query_cmd = app.add_subcommand("query", "Run Cypher-subset queries against a store");
    query_cmd->add_option("--store", store, "snapshot file")->required();
    auto* file_opt = query_cmd->add_option("--file", query_file, "file with one query per line");
    query_cmd->add_flag("--repl", repl, "read queries from stdin (default)")->excludes(file_opt);
    query_cmd->add_flag("--explain", explain_only, "print query plans instead of executing");
    query_cmd->add_option("--format", format, "result format")
        ->check(CLI::IsMember({"table", "jsonl"}));

    try {
        app.parse(argc, argv);
        if (ingest->parsed()) return run_ingest(store, input, strict, source, format);
        if (stats->parsed()) return run_stats(store, format);
        if (query_cmd->parsed()) return run_query(store, query_file, format, explain_only);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
