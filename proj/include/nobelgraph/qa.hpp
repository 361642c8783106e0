#pragma once

// Question-answering pipeline: translate a natural-language question into a
// Cypher query, run it against the store, and pick the matching choice. The
// translator is pluggable; everything downstream of it is deterministic and
// refuses to execute anything that does not parse under the query grammar.

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/graph.hpp"
#include "nobelgraph/normalize.hpp"
#include "nobelgraph/qagen.hpp"
#include "nobelgraph/query/ast.hpp"
#include "nobelgraph/query/execute.hpp"
#include "nobelgraph/query/parse.hpp"
#include "nobelgraph/reports.hpp"
#include "nobelgraph/strings.hpp"

namespace nobelgraph::qa {

// Outcome of one translation attempt: Cypher text, or the reason there is none.
struct Translation {
    std::optional<std::string> cypher;
    std::string error;

    static Translation ok(std::string text) { return {std::move(text), {}}; }
    static Translation fail(std::string reason) { return {std::nullopt, std::move(reason)}; }
};

// One capability: turn a question (plus the schema text the translator is
// allowed to rely on) into a Cypher query.
class Translator {
  public:
    virtual ~Translator() = default;
    virtual std::string name() const = 0;
    virtual Translation translate(const std::string& question,
                                  const std::string& schema_text) = 0;
};

// Rule-based slot matching against a template set's surface variants: a
// question of the form `prefix + anchor + suffix` for some variant
// `prefix{A}suffix` binds the anchor and emits that template's query. The
// most specific variant (longest combined prefix+suffix) wins; ties resolve
// to the earliest template in the list. Every output is built from the
// template's own labels and relations, so it always schema-validates.
class TemplateTranslator final : public Translator {
  public:
    explicit TemplateTranslator(
        std::vector<qagen::QaTemplate> templates = qagen::default_templates())
        : templates_(std::move(templates)) {
        for (const qagen::QaTemplate& t : templates_) qagen::validate_template(t);
    }

    std::string name() const override { return "template"; }

    Translation translate(const std::string& question, const std::string&) override {
        const qagen::QaTemplate* best = nullptr;
        std::string anchor;
        std::size_t best_literal = 0;
        for (const qagen::QaTemplate& t : templates_) {
            for (const std::string& variant : t.question_variants) {
                std::size_t slot = variant.find("{A}");
                std::string_view prefix = std::string_view(variant).substr(0, slot);
                std::string_view suffix = std::string_view(variant).substr(slot + 3);
                if (question.size() <= prefix.size() + suffix.size()) continue;
                if (!question.starts_with(prefix) || !question.ends_with(suffix)) continue;
                std::size_t literal = prefix.size() + suffix.size();
                if (best == nullptr || literal > best_literal) {
                    best = &t;
                    anchor = question.substr(prefix.size(),
                                             question.size() - prefix.size() - suffix.size());
                    best_literal = literal;
                }
            }
        }
        if (best == nullptr) return Translation::fail("no template matches the question");
        return Translation::ok(qagen::instantiate_cypher(*best, anchor));
    }

  private:
    std::vector<qagen::QaTemplate> templates_;
};

// Replays the dataset's own gold queries. A harness ceiling — any score
// below 100% on a self-generated dataset is a pipeline bug, not a model gap.
class OracleTranslator final : public Translator {
  public:
    explicit OracleTranslator(const std::vector<qagen::McqItem>& items) {
        for (const qagen::McqItem& item : items) gold_.emplace(item.question, item.gold_cypher);
    }

    std::string name() const override { return "oracle"; }

    Translation translate(const std::string& question, const std::string&) override {
        auto it = gold_.find(question);
        if (it == gold_.end()) return Translation::fail("question not present in the gold map");
        return Translation::ok(it->second);
    }

  private:
    std::map<std::string, std::string> gold_;
};

// Never answers; the floor every real translator must beat.
class AbstainTranslator final : public Translator {
  public:
    std::string name() const override { return "abstain"; }
    Translation translate(const std::string&, const std::string&) override {
        return Translation::fail("abstain translator never answers");
    }
};

// Matching key for comparing result values against choices: canonical name
// cleanup (trim, parenthetical stripping, NFC) followed by case folding.
inline std::string answer_key(const std::string& raw) {
    if (std::optional<std::string> cleaned = normalize_name(raw))
        return unicode::fold_lower(*cleaned);
    return unicode::fold_lower(strings::trim_ascii(raw));
}

// Everything that happened while answering one item; kept per item so hop
// level failures can be diagnosed from the report alone.
struct McqTrace {
    std::string question;
    int hop_count = 0;
    std::string cypher;  // translator output, when it produced any
    bool translated = false;
    bool parsed = false;
    bool executed = false;
    std::size_t row_count = 0;
    int chosen = -1;  // 0..3, or -1 when the pipeline abstained
    bool correct = false;
    std::string note;  // abstain reason; empty when a choice was picked
};

// Run the full pipeline for one item: translate, parse, execute, normalize,
// and select the single choice matching any result value. Zero or multiple
// matching choices abstain (scored incorrect). Unparseable translator output
// never reaches the executor.
inline McqTrace answer_mcq(const qagen::McqItem& item, Translator& translator,
                           const PropertyGraph& store, const std::string& schema_text) {
    McqTrace trace;
    trace.question = item.question;
    trace.hop_count = item.hop_count;

    Translation t = translator.translate(item.question, schema_text);
    if (!t.cypher) {
        trace.note = "translation failed: " + t.error;
        return trace;
    }
    trace.translated = true;
    trace.cypher = *t.cypher;

    query::QueryAst ast;
    try {
        ast = query::parse(trace.cypher);
    } catch (const UserError& e) {
        trace.note = std::string("parse failed: ") + e.what();
        return trace;
    }
    trace.parsed = true;

    query::ResultTable table;
    try {
        table = query::execute(ast, store);
    } catch (const UserError& e) {
        trace.note = std::string("execution failed: ") + e.what();
        return trace;
    }
    trace.executed = true;
    trace.row_count = table.row_count();
    if (table.rows.empty()) {
        trace.note = "execution returned no rows";
        return trace;
    }

    std::set<std::string> result_keys;
    for (const std::vector<std::string>& row : table.rows)
        for (const std::string& value : row) result_keys.insert(answer_key(value));

    int match = -1;
    int matches = 0;
    for (int i = 0; i < 4; ++i) {
        if (result_keys.count(answer_key(item.choices[static_cast<std::size_t>(i)])) > 0) {
            match = i;
            ++matches;
        }
    }
    if (matches == 1) {
        trace.chosen = match;
        trace.correct = match == item.answer_index;
    } else {
        trace.note = matches == 0 ? "no choice matches the result"
                                  : "multiple choices match the result";
    }
    return trace;
}

struct EvalReport {
    std::string translator;
    std::size_t total = 0;  // scored items; malformed lines are excluded
    std::size_t correct = 0;
    std::array<std::size_t, 4> hop_total{};
    std::array<std::size_t, 4> hop_correct{};
    std::size_t translation_failures = 0;
    std::size_t execution_empty = 0;
    std::size_t abstentions = 0;
    std::size_t malformed_lines = 0;
    std::vector<McqTrace> traces;  // ordered by item index

    double accuracy_percent() const {
        if (total == 0) return 0.0;
        return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
    }

    double hop_accuracy_percent(int hop) const {
        std::size_t t = hop_total.at(static_cast<std::size_t>(hop - 1));
        std::size_t c = hop_correct.at(static_cast<std::size_t>(hop - 1));
        if (t == 0) return 0.0;
        return 100.0 * static_cast<double>(c) / static_cast<double>(t);
    }
};

inline EvalReport evaluate(const std::vector<qagen::McqItem>& items, Translator& translator,
                           const PropertyGraph& store, const std::string& schema_text) {
    EvalReport report;
    report.translator = translator.name();
    for (const qagen::McqItem& item : items) {
        if (item.hop_count < 1 || item.hop_count > 4)
            throw InvalidInput("mcq item hop count out of range");
        McqTrace trace = answer_mcq(item, translator, store, schema_text);
        std::size_t bucket = static_cast<std::size_t>(item.hop_count - 1);
        ++report.total;
        ++report.hop_total[bucket];
        if (trace.correct) {
            ++report.correct;
            ++report.hop_correct[bucket];
        }
        if (!trace.translated) ++report.translation_failures;
        if (trace.executed && trace.row_count == 0) ++report.execution_empty;
        if (trace.chosen < 0) ++report.abstentions;
        report.traces.push_back(std::move(trace));
    }
    return report;
}

inline EvalReport evaluate(std::istream& dataset, Translator& translator,
                           const PropertyGraph& store, const std::string& schema_text) {
    std::size_t malformed = 0;
    std::vector<qagen::McqItem> items = qagen::read_mcq_jsonl(dataset, &malformed);
    EvalReport report = evaluate(items, translator, store, schema_text);
    report.malformed_lines = malformed;
    return report;
}

inline EvalReport evaluate(const std::filesystem::path& dataset_path, Translator& translator,
                           const PropertyGraph& store, const std::string& schema_text) {
    std::ifstream in(dataset_path);
    if (!in) throw IoError("cannot open dataset: " + dataset_path.string());
    return evaluate(in, translator, store, schema_text);
}

// Single-shot question loop: each turn translates, prints the query, the
// result table, and the normalized answer values. Stage failures are printed
// and the loop continues; `:quit` or end of input exits cleanly.
inline void repl(const PropertyGraph& store, Translator& translator,
                 const std::string& schema_text, std::istream& in, std::ostream& out) {
    std::string line;
    while (true) {
        out << "question> " << std::flush;
        if (!std::getline(in, line)) {
            out << "\n";
            return;
        }
        std::string question(strings::trim_ascii(line));
        if (question.empty()) continue;
        if (question == ":quit") return;

        Translation t = translator.translate(question, schema_text);
        if (!t.cypher) {
            out << "translation failed: " << t.error << "\n";
            continue;
        }
        out << "cypher: " << *t.cypher << "\n";

        query::QueryAst ast;
        try {
            ast = query::parse(*t.cypher);
        } catch (const UserError& e) {
            out << "parse failed: " << e.what() << "\n";
            continue;
        }

        query::ResultTable table;
        try {
            table = query::execute(ast, store);
        } catch (const UserError& e) {
            out << "execution failed: " << e.what() << "\n";
            continue;
        }

        std::vector<std::vector<std::string>> rows;
        rows.push_back(table.columns);
        rows.insert(rows.end(), table.rows.begin(), table.rows.end());
        out << nobelgraph::detail::format_table(rows);
        out << "(" << table.row_count() << (table.row_count() == 1 ? " row" : " rows") << ")\n";

        std::vector<std::string> answers;
        std::set<std::string> seen;
        for (const std::vector<std::string>& row : table.rows)
            for (const std::string& value : row) {
                if (!seen.insert(answer_key(value)).second) continue;
                answers.push_back(normalize_name(value).value_or(
                    std::string(strings::trim_ascii(value))));
            }
        if (answers.empty()) {
            out << "answer: (no result)\n";
        } else {
            out << "answer: ";
            for (std::size_t i = 0; i < answers.size(); ++i)
                out << (i == 0 ? "" : "; ") << answers[i];
            out << "\n";
        }
    }
}

} // namespace nobelgraph::qa
