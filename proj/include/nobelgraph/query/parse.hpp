#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/schema.hpp"
#include "nobelgraph/query/ast.hpp"

namespace nobelgraph::query {

enum class QueryErrorKind : std::uint8_t { syntax, unbound_variable, schema_violation };

class QueryError : public UserError {
public:
    QueryError(QueryErrorKind kind, std::size_t offset, const std::string& detail,
               std::vector<std::string> expected = {})
        : UserError(format(kind, offset, detail, expected)),
          kind_(kind),
          offset_(offset),
          expected_(std::move(expected)) {}

    QueryErrorKind kind() const { return kind_; }
    std::size_t offset() const { return offset_; } // byte offset into the query text
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(QueryErrorKind kind, std::size_t offset, const std::string& detail,
                              const std::vector<std::string>& expected) {
        const char* head = kind == QueryErrorKind::syntax            ? "syntax error"
                           : kind == QueryErrorKind::unbound_variable ? "unbound variable"
                                                                      : "schema violation";
        std::string msg = std::string(head) + " at offset " + std::to_string(offset) + ": " + detail;
        if (!expected.empty()) {
            msg += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) msg += ", ";
                msg += expected[i];
            }
            msg += ")";
        }
        return msg;
    }

    QueryErrorKind kind_;
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Relationship-type spellings accepted in queries beyond the schema's own
// names (e.g. WON_AWARD for RECEIVED).
using AliasTable = std::map<std::string, RelationType, std::less<>>;

inline const AliasTable& default_aliases() {
    static const AliasTable table = {{"WON_AWARD", RelationType::RECEIVED}};
    return table;
}

inline constexpr std::size_t kMaxPatternHops = 4;

namespace detail {

struct Token {
    enum class Kind : std::uint8_t {
        lparen, rparen, lbracket, rbracket, lbrace, rbrace,
        colon, comma, dot, star, eq, ne, lt, gt, dash,
        ident, string, number,
        kw_match, kw_where, kw_and, kw_return, kw_distinct, kw_count,
        kw_contains, kw_order, kw_by, kw_asc, kw_desc, kw_limit,
        end,
    };

    Kind kind = Kind::end;
    std::size_t pos = 0;
    std::string text; // identifier spelling, number spelling, or decoded string value
};

inline bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

inline bool ascii_ci_equal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        char x = a[i], y = b[i];
        if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 'a' + 'A');
        if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 'a' + 'A');
        if (x != y) return false;
    }
    return true;
}

inline Token::Kind keyword_kind(std::string_view word) {
    using K = Token::Kind;
    static constexpr std::pair<std::string_view, K> table[] = {
        {"MATCH", K::kw_match},       {"WHERE", K::kw_where},   {"AND", K::kw_and},
        {"RETURN", K::kw_return},     {"DISTINCT", K::kw_distinct}, {"COUNT", K::kw_count},
        {"CONTAINS", K::kw_contains}, {"ORDER", K::kw_order},   {"BY", K::kw_by},
        {"ASC", K::kw_asc},           {"DESC", K::kw_desc},     {"LIMIT", K::kw_limit},
    };
    for (const auto& [name, kind] : table)
        if (ascii_ci_equal(word, name)) return kind;
    return K::ident;
}

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        Token tok;
        tok.pos = i;
        switch (c) {
        case '(': tok.kind = Token::Kind::lparen; ++i; break;
        case ')': tok.kind = Token::Kind::rparen; ++i; break;
        case '[': tok.kind = Token::Kind::lbracket; ++i; break;
        case ']': tok.kind = Token::Kind::rbracket; ++i; break;
        case '{': tok.kind = Token::Kind::lbrace; ++i; break;
        case '}': tok.kind = Token::Kind::rbrace; ++i; break;
        case ':': tok.kind = Token::Kind::colon; ++i; break;
        case ',': tok.kind = Token::Kind::comma; ++i; break;
        case '.': tok.kind = Token::Kind::dot; ++i; break;
        case '*': tok.kind = Token::Kind::star; ++i; break;
        case '=': tok.kind = Token::Kind::eq; ++i; break;
        case '-': tok.kind = Token::Kind::dash; ++i; break;
        case '>': tok.kind = Token::Kind::gt; ++i; break;
        case '<':
            if (i + 1 < n && text[i + 1] == '>') {
                tok.kind = Token::Kind::ne;
                i += 2;
            } else {
                tok.kind = Token::Kind::lt;
                ++i;
            }
            break;
        case '"':
        case '\'': {
            char quote = c;
            ++i;
            tok.kind = Token::Kind::string;
            while (i < n && text[i] != quote) {
                if (text[i] == '\\') {
                    ++i;
                    if (i >= n) break;
                }
                tok.text += text[i];
                ++i;
            }
            if (i >= n)
                throw QueryError(QueryErrorKind::syntax, tok.pos, "unterminated string literal");
            ++i; // closing quote
            break;
        }
        default:
            if (c >= '0' && c <= '9') {
                tok.kind = Token::Kind::number;
                std::size_t begin = i;
                while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
                if (i + 1 < n && text[i] == '.' && text[i + 1] >= '0' && text[i + 1] <= '9') {
                    ++i;
                    while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
                }
                tok.text = std::string(text.substr(begin, i - begin));
            } else if (ident_start(c)) {
                std::size_t begin = i;
                while (i < n && ident_char(text[i])) ++i;
                tok.text = std::string(text.substr(begin, i - begin));
                tok.kind = keyword_kind(tok.text);
            } else {
                throw QueryError(QueryErrorKind::syntax, i,
                                 std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::end;
    end.pos = n;
    out.push_back(std::move(end));
    return out;
}

inline std::string describe(const Token& t) {
    using K = Token::Kind;
    switch (t.kind) {
    case K::ident: return "identifier '" + t.text + "'";
    case K::string: return "string literal";
    case K::number: return "number " + t.text;
    case K::end: return "end of input";
    default: break;
    }
    static const std::map<K, std::string_view> names = {
        {K::lparen, "'('"},      {K::rparen, "')'"},      {K::lbracket, "'['"},
        {K::rbracket, "']'"},    {K::lbrace, "'{'"},      {K::rbrace, "'}'"},
        {K::colon, "':'"},       {K::comma, "','"},       {K::dot, "'.'"},
        {K::star, "'*'"},        {K::eq, "'='"},          {K::ne, "'<>'"},
        {K::lt, "'<'"},          {K::gt, "'>'"},          {K::dash, "'-'"},
        {K::kw_match, "MATCH"},  {K::kw_where, "WHERE"},  {K::kw_and, "AND"},
        {K::kw_return, "RETURN"}, {K::kw_distinct, "DISTINCT"}, {K::kw_count, "COUNT"},
        {K::kw_contains, "CONTAINS"}, {K::kw_order, "ORDER"}, {K::kw_by, "BY"},
        {K::kw_asc, "ASC"},      {K::kw_desc, "DESC"},    {K::kw_limit, "LIMIT"},
    };
    return std::string(names.at(t.kind));
}

class Parser {
public:
    Parser(std::string_view text, const AliasTable& aliases)
        : tokens_(lex(text)), aliases_(aliases) {}

    QueryAst run() {
        QueryAst ast;
        expect(Token::Kind::kw_match, "MATCH");
        parse_match_clause(ast);
        while (accept(Token::Kind::kw_match)) parse_match_clause(ast);
        if (accept(Token::Kind::kw_where)) {
            ast.where.push_back(parse_condition());
            while (accept(Token::Kind::kw_and)) ast.where.push_back(parse_condition());
        }
        expect(Token::Kind::kw_return, "RETURN");
        ast.distinct = accept(Token::Kind::kw_distinct);
        ast.returns.push_back(parse_projection());
        while (accept(Token::Kind::comma)) ast.returns.push_back(parse_projection());
        validate_count_projection(ast);
        if (accept(Token::Kind::kw_order)) {
            expect(Token::Kind::kw_by, "BY");
            parse_order_key(ast);
            while (accept(Token::Kind::comma)) parse_order_key(ast);
        }
        if (accept(Token::Kind::kw_limit)) {
            const Token& t = expect(Token::Kind::number, "number");
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
                throw QueryError(QueryErrorKind::syntax, t.pos, "LIMIT takes a non-negative integer");
            ast.limit = value;
        }
        if (cur().kind != Token::Kind::end)
            throw QueryError(QueryErrorKind::syntax, cur().pos,
                             "unexpected " + describe(cur()) + " after query", {"end of input"});
        return ast;
    }

private:
    const Token& cur() const { return tokens_[i_]; }

    bool accept(Token::Kind k) {
        if (cur().kind != k) return false;
        ++i_;
        return true;
    }

    const Token& expect(Token::Kind k, const char* what) {
        if (cur().kind != k)
            throw QueryError(QueryErrorKind::syntax, cur().pos, "unexpected " + describe(cur()),
                             {what});
        return tokens_[i_++];
    }

    void parse_match_clause(QueryAst& ast) {
        ast.matches.push_back(parse_pattern());
        while (accept(Token::Kind::comma)) ast.matches.push_back(parse_pattern());
    }

    PathPattern parse_pattern() {
        PathPattern path;
        path.nodes.push_back(parse_node());
        while (cur().kind == Token::Kind::dash || cur().kind == Token::Kind::lt) {
            if (path.rels.size() == kMaxPatternHops)
                throw QueryError(QueryErrorKind::syntax, cur().pos,
                                 "pattern exceeds " + std::to_string(kMaxPatternHops) +
                                     " relationships");
            path.rels.push_back(parse_rel());
            path.nodes.push_back(parse_node());
        }
        return path;
    }

    NodePattern parse_node() {
        expect(Token::Kind::lparen, "'('");
        NodePattern node;
        if (cur().kind == Token::Kind::ident) {
            node.variable = cur().text;
            ++i_;
            bound_.insert(node.variable);
        }
        if (accept(Token::Kind::colon)) {
            const Token& t = expect(Token::Kind::ident, "label name");
            auto label = parse_entity_label(t.text);
            if (!label)
                throw QueryError(QueryErrorKind::schema_violation, t.pos,
                                 "unknown label '" + t.text + "'");
            node.label = *label;
        }
        if (accept(Token::Kind::lbrace)) {
            node.props.push_back(parse_prop_entry());
            while (accept(Token::Kind::comma)) node.props.push_back(parse_prop_entry());
            expect(Token::Kind::rbrace, "'}'");
        }
        expect(Token::Kind::rparen, "')'");
        return node;
    }

    std::pair<std::string, std::string> parse_prop_entry() {
        const Token& key = expect(Token::Kind::ident, "property name");
        expect(Token::Kind::colon, "':'");
        auto [value, is_number] = parse_literal();
        (void)is_number; // store property values are strings either way
        return {key.text, value};
    }

    RelPattern parse_rel() {
        RelPattern rel;
        bool from_left = false;
        if (accept(Token::Kind::lt)) {
            from_left = true;
            expect(Token::Kind::dash, "'-'");
        } else {
            expect(Token::Kind::dash, "'-'");
        }
        expect(Token::Kind::lbracket, "'['");
        if (accept(Token::Kind::colon)) {
            const Token& t = expect(Token::Kind::ident, "relationship type");
            rel.type = resolve_type(t);
        } else if (cur().kind == Token::Kind::ident) {
            throw QueryError(QueryErrorKind::syntax, cur().pos,
                             "relationship variables are not supported", {"':'", "']'"});
        }
        expect(Token::Kind::rbracket, "']'");
        expect(Token::Kind::dash, "'-'");
        if (accept(Token::Kind::gt)) {
            if (from_left)
                throw QueryError(QueryErrorKind::syntax, tokens_[i_ - 1].pos,
                                 "relationship cannot point both ways", {"'('"});
            rel.dir = Direction::right;
        } else {
            rel.dir = from_left ? Direction::left : Direction::undirected;
        }
        return rel;
    }

    RelationType resolve_type(const Token& t) {
        if (auto type = parse_relation_type(t.text)) return *type;
        if (auto it = aliases_.find(t.text); it != aliases_.end()) return it->second;
        throw QueryError(QueryErrorKind::schema_violation, t.pos,
                         "unknown relationship type '" + t.text + "'");
    }

    std::pair<std::string, bool> parse_literal() {
        if (cur().kind == Token::Kind::string) return {tokens_[i_++].text, false};
        if (accept(Token::Kind::dash)) {
            const Token& t = expect(Token::Kind::number, "number");
            return {"-" + t.text, true};
        }
        if (cur().kind == Token::Kind::number) return {tokens_[i_++].text, true};
        throw QueryError(QueryErrorKind::syntax, cur().pos, "unexpected " + describe(cur()),
                         {"string literal", "number"});
    }

    const Token& bound_variable() {
        const Token& t = expect(Token::Kind::ident, "variable");
        if (!bound_.count(t.text))
            throw QueryError(QueryErrorKind::unbound_variable, t.pos,
                             "variable '" + t.text + "' is not bound by any MATCH clause");
        return t;
    }

    Condition parse_condition() {
        Condition cond;
        cond.variable = bound_variable().text;
        expect(Token::Kind::dot, "'.'");
        cond.prop = expect(Token::Kind::ident, "property name").text;
        switch (cur().kind) {
        case Token::Kind::eq: cond.op = Cmp::eq; break;
        case Token::Kind::ne: cond.op = Cmp::ne; break;
        case Token::Kind::lt: cond.op = Cmp::lt; break;
        case Token::Kind::gt: cond.op = Cmp::gt; break;
        case Token::Kind::kw_contains: cond.op = Cmp::contains; break;
        default:
            throw QueryError(QueryErrorKind::syntax, cur().pos, "unexpected " + describe(cur()),
                             {"'='", "'<>'", "'<'", "'>'", "CONTAINS"});
        }
        ++i_;
        auto [value, is_number] = parse_literal();
        cond.value = std::move(value);
        cond.value_is_number = is_number;
        return cond;
    }

    Projection parse_projection() {
        Projection proj;
        if (accept(Token::Kind::kw_count)) {
            proj.kind = Projection::Kind::count;
            expect(Token::Kind::lparen, "'('");
            if (accept(Token::Kind::star)) {
                proj.variable = "*";
            } else {
                proj.variable = bound_variable().text;
            }
            expect(Token::Kind::rparen, "')'");
            return proj;
        }
        proj.variable = bound_variable().text;
        if (accept(Token::Kind::dot)) {
            proj.kind = Projection::Kind::property;
            proj.prop = expect(Token::Kind::ident, "property name").text;
        } else {
            proj.kind = Projection::Kind::variable;
        }
        return proj;
    }

    void validate_count_projection(const QueryAst& ast) {
        if (ast.returns.size() < 2) return;
        for (const Projection& p : ast.returns)
            if (p.kind == Projection::Kind::count)
                throw QueryError(QueryErrorKind::syntax, tokens_[i_ - 1].pos,
                                 "count() must be the only projection");
    }

    void parse_order_key(QueryAst& ast) {
        OrderKey key;
        const Token& var = bound_variable();
        key.variable = var.text;
        expect(Token::Kind::dot, "'.'");
        key.prop = expect(Token::Kind::ident, "property name").text;
        if (accept(Token::Kind::kw_desc)) key.descending = true;
        else accept(Token::Kind::kw_asc);
        if (ast.distinct) {
            bool projected = false;
            for (const Projection& p : ast.returns)
                projected |= p.kind == Projection::Kind::property && p.variable == key.variable &&
                             p.prop == key.prop;
            if (!projected)
                throw QueryError(QueryErrorKind::syntax, var.pos,
                                 "ORDER BY key must appear in the DISTINCT RETURN list");
        }
        ast.order_by.push_back(std::move(key));
    }

    std::vector<Token> tokens_;
    std::size_t i_ = 0;
    std::set<std::string, std::less<>> bound_;
    const AliasTable& aliases_;
};

} // namespace detail

inline QueryAst parse(std::string_view text, const AliasTable& aliases = default_aliases()) {
    return detail::Parser(text, aliases).run();
}

} // namespace nobelgraph::query
