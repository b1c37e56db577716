#include "hcrag/graph/cypher.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace hcrag::graph::cypher {

namespace {

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class TokenKind {
    Keyword,      // MATCH WHERE RETURN AND OR CONTAINS TRUE FALSE
    Ident,        // bare or backtick-quoted
    String,       // quoted literal, unescaped
    Integer,
    Float,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Dot,
    Dash,
    ArrowRight,   // ->
    ArrowLeft,    // <-
    Equals,
    End,
};

struct Token {
    TokenKind kind;
    std::string text;     // keyword uppercased; ident/string unquoted
    std::string raw;      // original source spelling (for error messages)
    int line = 1;
    int column = 1;
    int offset = 0;
};

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {"MATCH", "WHERE",    "RETURN", "AND",
                                             "OR",    "CONTAINS", "TRUE",   "FALSE"};
    return kw;
}

[[noreturn]] void throw_syntax(const std::string& got, std::vector<std::string> expected,
                               int line, int column, int offset) {
    throw CypherSyntaxError(got, std::move(expected), line, column, offset);
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> tokenize() {
        std::vector<Token> tokens;
        while (true) {
            skip_whitespace();
            Token token = next_token();
            const bool done = token.kind == TokenKind::End;
            tokens.push_back(std::move(token));
            if (done) break;
        }
        return tokens;
    }

private:
    void skip_whitespace() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++column_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    Token make(TokenKind kind, std::string text, std::string raw, int line, int column,
               int offset) {
        return Token{kind, std::move(text), std::move(raw), line, column, offset};
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    Token next_token() {
        const int line = line_;
        const int column = column_;
        const int offset = static_cast<int>(pos_);
        if (pos_ >= text_.size()) {
            return make(TokenKind::End, "", "end of input", line, column, offset);
        }
        const char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            std::string word(text_.substr(start, pos_ - start));
            std::string upper = word;
            std::transform(upper.begin(), upper.end(), upper.begin(),
                           [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
            if (keywords().count(upper)) {
                return make(TokenKind::Keyword, upper, word, line, column, offset);
            }
            return make(TokenKind::Ident, word, word, line, column, offset);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return lex_number(line, column, offset);
        }
        switch (c) {
            case '`':
                return lex_backtick(line, column, offset);
            case '\'':
            case '"':
                return lex_string(c, line, column, offset);
            case '(':
                advance();
                return make(TokenKind::LParen, "(", "(", line, column, offset);
            case ')':
                advance();
                return make(TokenKind::RParen, ")", ")", line, column, offset);
            case '[':
                advance();
                return make(TokenKind::LBracket, "[", "[", line, column, offset);
            case ']':
                advance();
                return make(TokenKind::RBracket, "]", "]", line, column, offset);
            case ':':
                advance();
                return make(TokenKind::Colon, ":", ":", line, column, offset);
            case ',':
                advance();
                return make(TokenKind::Comma, ",", ",", line, column, offset);
            case '.':
                advance();
                return make(TokenKind::Dot, ".", ".", line, column, offset);
            case '=':
                advance();
                return make(TokenKind::Equals, "=", "=", line, column, offset);
            case '-':
                if (peek(1) == '>') {
                    advance(2);
                    return make(TokenKind::ArrowRight, "->", "->", line, column, offset);
                }
                advance();
                return make(TokenKind::Dash, "-", "-", line, column, offset);
            case '<':
                if (peek(1) == '-') {
                    advance(2);
                    return make(TokenKind::ArrowLeft, "<-", "<-", line, column, offset);
                }
                advance();
                throw_syntax("<", {"\"<-\""}, line, column, offset);
            default: {
                std::string raw(1, c);
                throw_syntax(raw, {"a valid token"}, line, column, offset);
            }
        }
    }

    Token lex_number(int line, int column, int offset) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        bool is_float = false;
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            is_float = true;
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos_;
            std::size_t ahead = 1;
            if (peek(1) == '+' || peek(1) == '-') ahead = 2;
            if (std::isdigit(static_cast<unsigned char>(peek(ahead)))) {
                is_float = true;
                advance(ahead + 1);
                while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            } else {
                pos_ = mark;
            }
        }
        std::string word(text_.substr(start, pos_ - start));
        return make(is_float ? TokenKind::Float : TokenKind::Integer, word, word, line, column,
                    offset);
    }

    Token lex_backtick(int line, int column, int offset) {
        advance();  // opening backtick
        std::string value;
        while (true) {
            if (pos_ >= text_.size()) {
                throw_syntax("end of input", {"\"`\""}, line_, column_,
                             static_cast<int>(pos_));
            }
            const char c = peek();
            if (c == '`') {
                if (peek(1) == '`') {  // doubled backtick escapes itself
                    value.push_back('`');
                    advance(2);
                    continue;
                }
                advance();
                break;
            }
            value.push_back(c);
            advance();
        }
        return make(TokenKind::Ident, value, "`" + value + "`", line, column, offset);
    }

    Token lex_string(char quote, int line, int column, int offset) {
        advance();  // opening quote
        std::string value;
        while (true) {
            if (pos_ >= text_.size()) {
                throw_syntax("end of input", {std::string("closing ") + quote}, line_, column_,
                             static_cast<int>(pos_));
            }
            const char c = peek();
            if (c == '\\') {
                const char next = peek(1);
                if (next == '\\' || next == '\'' || next == '"') {
                    value.push_back(next);
                    advance(2);
                    continue;
                }
                if (next == 'n') {
                    value.push_back('\n');
                    advance(2);
                    continue;
                }
                value.push_back(c);
                advance();
                continue;
            }
            if (c == quote) {
                advance();
                break;
            }
            value.push_back(c);
            advance();
        }
        return make(TokenKind::String, value, value, line, column, offset);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    CypherQuery parse() {
        CypherQuery query;
        expect_keyword("MATCH");
        query.patterns.push_back(parse_pattern());
        while (at(TokenKind::Comma)) {
            next();
            query.patterns.push_back(parse_pattern());
        }
        if (at_keyword("WHERE")) {
            next();
            query.where = parse_or_expr();
        }
        expect_keyword("RETURN");
        query.return_items.push_back(parse_return_item());
        while (at(TokenKind::Comma)) {
            next();
            query.return_items.push_back(parse_return_item());
        }
        if (!at(TokenKind::End)) {
            fail({"end of input"});
        }
        validate_bindings(query);
        return query;
    }

private:
    const Token& cur() const { return tokens_[index_]; }
    void next() { ++index_; }
    bool at(TokenKind kind) const { return cur().kind == kind; }
    bool at_keyword(const char* kw) const {
        return cur().kind == TokenKind::Keyword && cur().text == kw;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = cur();
        throw_syntax(t.raw, std::move(expected), t.line, t.column, t.offset);
    }

    void expect_keyword(const char* kw) {
        if (!at_keyword(kw)) fail({std::string("\"") + kw + "\""});
        next();
    }

    Token expect(TokenKind kind, const char* what) {
        if (!at(kind)) fail({what});
        Token t = cur();
        next();
        return t;
    }

    std::string parse_name(const char* what) {
        if (!at(TokenKind::Ident)) fail({what});
        std::string name = cur().text;
        next();
        return name;
    }

    NodePattern parse_node_pattern() {
        NodePattern node;
        if (!at(TokenKind::LParen)) fail({"\"(\""});
        next();
        if (at(TokenKind::Ident)) {
            node.var = cur().text;
            next();
        }
        if (at(TokenKind::Colon)) {
            next();
            node.label = parse_name("a label");
        }
        if (!at(TokenKind::RParen)) fail({"\")\""});
        next();
        return node;
    }

    MatchPattern parse_pattern() {
        MatchPattern pattern;
        pattern.src = parse_node_pattern();
        if (at(TokenKind::Dash)) {
            // -[:TYPE]->(dst) or -[]->(dst)
            next();
            pattern.direction = Direction::Out;
            parse_rel_body(pattern);
            if (!at(TokenKind::ArrowRight)) fail({"\"->\""});
            next();
            pattern.dst = parse_node_pattern();
        } else if (at(TokenKind::ArrowLeft)) {
            // <-[:TYPE]-(dst) or <-[]-(dst)
            next();
            pattern.direction = Direction::In;
            parse_rel_body(pattern);
            if (!at(TokenKind::Dash)) fail({"\"-\""});
            next();
            pattern.dst = parse_node_pattern();
        }
        return pattern;
    }

    void parse_rel_body(MatchPattern& pattern) {
        if (!at(TokenKind::LBracket)) fail({"\"[\""});
        next();
        if (at(TokenKind::Colon)) {
            next();
            pattern.rel_type = parse_name("a relationship type");
        }
        if (!at(TokenKind::RBracket)) fail({"\"]\""});
        next();
    }

    std::unique_ptr<WhereExpr> parse_or_expr() {
        auto lhs = parse_and_expr();
        while (at_keyword("OR")) {
            next();
            auto rhs = parse_and_expr();
            auto node = std::make_unique<WhereExpr>();
            node->boolean = BoolExpr{BoolOp::Or, std::move(lhs), std::move(rhs)};
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<WhereExpr> parse_and_expr() {
        auto lhs = parse_primary();
        while (at_keyword("AND")) {
            next();
            auto rhs = parse_primary();
            auto node = std::make_unique<WhereExpr>();
            node->boolean = BoolExpr{BoolOp::And, std::move(lhs), std::move(rhs)};
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<WhereExpr> parse_primary() {
        if (at(TokenKind::LParen)) {
            next();
            auto inner = parse_or_expr();
            if (!at(TokenKind::RParen)) fail({"\")\""});
            next();
            return inner;
        }
        auto node = std::make_unique<WhereExpr>();
        node->comparison = parse_comparison();
        return node;
    }

    Comparison parse_comparison() {
        Comparison cmp;
        if (!at(TokenKind::Ident)) fail({"a variable", "\"(\""});
        cmp.var = cur().text;
        next();
        if (!at(TokenKind::Dot)) fail({"\".\""});
        next();
        cmp.prop = parse_name("a property name");
        if (at(TokenKind::Equals)) {
            next();
            cmp.op = CompareOp::Eq;
            cmp.literal = parse_literal();
        } else if (at_keyword("CONTAINS")) {
            next();
            cmp.op = CompareOp::Contains;
            if (!at(TokenKind::String)) fail({"a string literal"});
            cmp.literal = cur().text;
            next();
        } else {
            fail({"\"=\"", "\"CONTAINS\""});
        }
        return cmp;
    }

    PropertyValue parse_literal() {
        bool negative = false;
        if (at(TokenKind::Dash)) {
            negative = true;
            next();
        }
        if (at(TokenKind::String)) {
            if (negative) fail({"a number"});
            std::string value = cur().text;
            next();
            return value;
        }
        if (at(TokenKind::Integer)) {
            std::int64_t value = std::stoll(cur().text);
            next();
            return negative ? -value : value;
        }
        if (at(TokenKind::Float)) {
            double value = std::stod(cur().text);
            next();
            return negative ? -value : value;
        }
        if (at_keyword("TRUE") || at_keyword("FALSE")) {
            if (negative) fail({"a number"});
            bool value = cur().text == "TRUE";
            next();
            return value;
        }
        fail({"a literal value"});
    }

    ReturnItem parse_return_item() {
        ReturnItem item;
        if (!at(TokenKind::Ident)) fail({"a variable"});
        item.var = cur().text;
        next();
        if (at(TokenKind::Dot)) {
            next();
            item.prop = parse_name("a property name");
        }
        return item;
    }

    // Every variable referenced in WHERE or RETURN must be bound by a pattern.
    void validate_bindings(const CypherQuery& query) const {
        std::set<std::string> bound;
        for (const auto& pattern : query.patterns) {
            if (pattern.src.var) bound.insert(*pattern.src.var);
            if (pattern.dst && pattern.dst->var) bound.insert(*pattern.dst->var);
        }
        auto check = [&](const std::string& var) {
            if (!bound.count(var)) {
                throw_syntax(var, {"a bound variable"}, 0, 0, -1);
            }
        };
        std::function<void(const WhereExpr&)> walk = [&](const WhereExpr& expr) {
            if (expr.comparison) check(expr.comparison->var);
            if (expr.boolean) {
                walk(*expr.boolean.value().lhs);
                walk(*expr.boolean.value().rhs);
            }
        };
        if (query.where) walk(*query.where);
        for (const auto& item : query.return_items) check(item.var);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

// ---------------------------------------------------------------------------
// Printer helpers
// ---------------------------------------------------------------------------

bool is_plain_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    return keywords().count(upper) == 0;
}

std::string print_name(const std::string& name) {
    if (is_plain_identifier(name)) return name;
    std::string out = "`";
    for (char c : name) {
        if (c == '`') out += "``";
        else out.push_back(c);
    }
    out += "`";
    return out;
}

std::string print_string_literal(const std::string& value) {
    std::string out = "'";
    for (char c : value) {
        if (c == '\\' || c == '\'') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    out += "'";
    return out;
}

std::string print_literal(const PropertyValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return print_string_literal(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return nlohmann::json(v).dump();
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                throw ValidationError("list literals are not part of the query subset");
            }
        },
        value);
}

std::string print_node_pattern(const NodePattern& node) {
    std::string out = "(";
    if (node.var) out += *node.var;
    if (node.label) out += ":" + print_name(*node.label);
    out += ")";
    return out;
}

std::string print_where(const WhereExpr& expr) {
    if (expr.comparison) {
        const Comparison& cmp = *expr.comparison;
        std::string out = cmp.var + "." + print_name(cmp.prop);
        if (cmp.op == CompareOp::Eq) {
            out += " = " + print_literal(cmp.literal);
        } else {
            out += " CONTAINS " + print_literal(cmp.literal);
        }
        return out;
    }
    const BoolExpr& node = *expr.boolean;
    auto wrap = [](const WhereExpr& child) {
        std::string text = print_where(child);
        if (child.boolean) return "(" + text + ")";
        return text;
    };
    const char* op = node.op == BoolOp::And ? " AND " : " OR ";
    return wrap(*node.lhs) + op + wrap(*node.rhs);
}

// ---------------------------------------------------------------------------
// Executor
// ---------------------------------------------------------------------------

struct StoreView {
    std::map<std::string, NodeRecord> nodes;
    std::vector<EdgeRecord> edges;
};

StoreView snapshot_view(const GraphStore& store) {
    StoreView view;
    for (const auto& id : store.all_node_ids()) {
        view.nodes.emplace(id, *store.node(id));
    }
    view.edges = store.all_edges();
    return view;
}

bool node_has_label(const NodeRecord& node, const std::string& label) {
    return std::find(node.labels.begin(), node.labels.end(), label) != node.labels.end();
}

Cell node_property(const NodeRecord& node, const std::string& key) {
    auto it = node.properties.find(key);
    if (it == node.properties.end()) return std::nullopt;
    return it->second;
}

bool eval_comparison(const Comparison& cmp, const NodeRecord& node) {
    Cell cell = node_property(node, cmp.prop);
    if (!cell) return false;  // unknown property never matches
    if (cmp.op == CompareOp::Contains) {
        if (!std::holds_alternative<std::string>(*cell)) return false;
        const std::string haystack = ascii_lower(std::get<std::string>(*cell));
        const std::string needle = ascii_lower(std::get<std::string>(cmp.literal));
        return haystack.find(needle) != std::string::npos;
    }
    return property_equals(*cell, cmp.literal);
}

struct Binding {
    // node id per pattern position, in pattern order (src, then dst when present)
    std::vector<std::string> positions;
    std::unordered_map<std::string, std::string> vars;
};

bool eval_where(const WhereExpr& expr, const Binding& binding, const StoreView& view) {
    if (expr.comparison) {
        const Comparison& cmp = *expr.comparison;
        auto it = binding.vars.find(cmp.var);
        if (it == binding.vars.end()) return false;
        return eval_comparison(cmp, view.nodes.at(it->second));
    }
    const BoolExpr& node = *expr.boolean;
    if (node.op == BoolOp::And) {
        return eval_where(*node.lhs, binding, view) && eval_where(*node.rhs, binding, view);
    }
    return eval_where(*node.lhs, binding, view) || eval_where(*node.rhs, binding, view);
}

// Extends a binding with a node at one pattern endpoint. Returns false when
// the endpoint conflicts with an existing variable binding or label.
bool bind_endpoint(Binding& binding, const NodePattern& pattern, const NodeRecord& node) {
    if (pattern.label && !node_has_label(node, *pattern.label)) return false;
    if (pattern.var) {
        auto it = binding.vars.find(*pattern.var);
        if (it != binding.vars.end()) {
            if (it->second != node.node_id) return false;
        } else {
            binding.vars.emplace(*pattern.var, node.node_id);
        }
    }
    binding.positions.push_back(node.node_id);
    return true;
}

std::string render_node(const NodeRecord& node) {
    std::ostringstream out;
    out << "(";
    for (const auto& label : node.labels) out << ":" << label;
    out << " {";
    bool first = true;
    for (const auto& [key, value] : node.properties) {
        if (!first) out << ", ";
        out << key << ": " << property_to_display(value);
        first = false;
    }
    out << "})";
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

CypherSyntaxError::CypherSyntaxError(std::string got, std::vector<std::string> expected, int line,
                                     int column, int offset)
    : Error([&] {
          std::ostringstream out;
          out << "Invalid input '" << got << "': expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
              if (i > 0) out << (i + 1 == expected.size() ? (expected.size() > 2 ? ", or " : " or ")
                                                          : ", ");
              out << expected[i];
          }
          if (offset >= 0) {
              out << " (line " << line << ", column " << column << " (offset: " << offset << "))";
          }
          return out.str();
      }()),
      got_(std::move(got)),
      expected_(std::move(expected)),
      line_(line),
      column_(column),
      offset_(offset) {}

CypherQuery parse_cypher(const std::string& text) {
    Lexer lexer(text);
    Parser parser(lexer.tokenize());
    return parser.parse();
}

std::string print_cypher(const CypherQuery& query) {
    std::ostringstream out;
    out << "MATCH ";
    for (std::size_t i = 0; i < query.patterns.size(); ++i) {
        if (i) out << ", ";
        const MatchPattern& p = query.patterns[i];
        out << print_node_pattern(p.src);
        if (p.direction == Direction::Out) {
            out << "-[" << (p.rel_type ? ":" + print_name(*p.rel_type) : "") << "]->"
                << print_node_pattern(*p.dst);
        } else if (p.direction == Direction::In) {
            out << "<-[" << (p.rel_type ? ":" + print_name(*p.rel_type) : "") << "]-"
                << print_node_pattern(*p.dst);
        }
    }
    if (query.where) {
        out << " WHERE " << print_where(*query.where);
    }
    out << " RETURN ";
    for (std::size_t i = 0; i < query.return_items.size(); ++i) {
        if (i) out << ", ";
        out << query.return_items[i].var;
        if (query.return_items[i].prop) out << "." << print_name(*query.return_items[i].prop);
    }
    return out.str();
}

namespace {

std::unique_ptr<WhereExpr> clone_where(const WhereExpr& expr) {
    auto out = std::make_unique<WhereExpr>();
    if (expr.comparison) {
        out->comparison = expr.comparison;
    } else {
        out->boolean = BoolExpr{expr.boolean->op, clone_where(*expr.boolean->lhs),
                                clone_where(*expr.boolean->rhs)};
    }
    return out;
}

bool where_equals(const WhereExpr& a, const WhereExpr& b) {
    if (a.comparison.has_value() != b.comparison.has_value()) return false;
    if (a.comparison) {
        return a.comparison->var == b.comparison->var && a.comparison->prop == b.comparison->prop &&
               a.comparison->op == b.comparison->op &&
               a.comparison->literal == b.comparison->literal;
    }
    return a.boolean->op == b.boolean->op && where_equals(*a.boolean->lhs, *b.boolean->lhs) &&
           where_equals(*a.boolean->rhs, *b.boolean->rhs);
}

}  // namespace

CypherQuery clone(const CypherQuery& query) {
    CypherQuery out;
    out.patterns = query.patterns;
    if (query.where) out.where = clone_where(*query.where);
    out.return_items = query.return_items;
    return out;
}

bool ast_equals(const CypherQuery& a, const CypherQuery& b) {
    auto node_eq = [](const NodePattern& x, const NodePattern& y) {
        return x.var == y.var && x.label == y.label;
    };
    if (a.patterns.size() != b.patterns.size()) return false;
    for (std::size_t i = 0; i < a.patterns.size(); ++i) {
        const auto& x = a.patterns[i];
        const auto& y = b.patterns[i];
        if (!node_eq(x.src, y.src) || x.direction != y.direction || x.rel_type != y.rel_type)
            return false;
        if (x.dst.has_value() != y.dst.has_value()) return false;
        if (x.dst && !node_eq(*x.dst, *y.dst)) return false;
    }
    if ((a.where != nullptr) != (b.where != nullptr)) return false;
    if (a.where && !where_equals(*a.where, *b.where)) return false;
    if (a.return_items.size() != b.return_items.size()) return false;
    for (std::size_t i = 0; i < a.return_items.size(); ++i) {
        if (a.return_items[i].var != b.return_items[i].var ||
            a.return_items[i].prop != b.return_items[i].prop)
            return false;
    }
    return true;
}

bool cell_equals(const Cell& a, const Cell& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return property_equals(*a, *b);
}

std::string cell_to_display(const Cell& cell) {
    if (!cell) return "null";
    return property_to_display(*cell);
}

std::string ResultTable::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << " | ";
        out << columns[i];
    }
    for (const auto& row : rows) {
        out << '\n';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << " | ";
            out << cell_to_display(row[i]);
        }
    }
    return out.str();
}

ResultTable execute(const CypherQuery& query, const GraphStore& store) {
    const StoreView view = snapshot_view(store);

    std::vector<Binding> bindings{Binding{}};
    for (const auto& pattern : query.patterns) {
        std::vector<Binding> extended;
        for (const auto& binding : bindings) {
            if (pattern.direction == Direction::None) {
                for (const auto& [id, node] : view.nodes) {
                    Binding candidate = binding;
                    if (bind_endpoint(candidate, pattern.src, node)) {
                        extended.push_back(std::move(candidate));
                    }
                }
            } else {
                for (const auto& edge : view.edges) {
                    if (pattern.rel_type && edge.rel_type != *pattern.rel_type) continue;
                    // For Out the edge runs src->dst, for In it runs dst->src.
                    const std::string& src_id =
                        pattern.direction == Direction::Out ? edge.from_id : edge.to_id;
                    const std::string& dst_id =
                        pattern.direction == Direction::Out ? edge.to_id : edge.from_id;
                    Binding candidate = binding;
                    if (!bind_endpoint(candidate, pattern.src, view.nodes.at(src_id))) continue;
                    if (!bind_endpoint(candidate, *pattern.dst, view.nodes.at(dst_id))) continue;
                    extended.push_back(std::move(candidate));
                }
            }
        }
        bindings = std::move(extended);
    }

    if (query.where) {
        std::vector<Binding> filtered;
        for (auto& binding : bindings) {
            if (eval_where(*query.where, binding, view)) {
                filtered.push_back(std::move(binding));
            }
        }
        bindings = std::move(filtered);
    }

    std::sort(bindings.begin(), bindings.end(),
              [](const Binding& a, const Binding& b) { return a.positions < b.positions; });

    ResultTable table;
    for (const auto& item : query.return_items) {
        table.columns.push_back(item.prop ? item.var + "." + *item.prop : item.var);
    }
    table.rows.reserve(bindings.size());
    for (const auto& binding : bindings) {
        std::vector<Cell> row;
        row.reserve(query.return_items.size());
        for (const auto& item : query.return_items) {
            const NodeRecord& node = view.nodes.at(binding.vars.at(item.var));
            if (item.prop) {
                row.push_back(node_property(node, *item.prop));
            } else {
                row.push_back(PropertyValue{render_node(node)});
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace hcrag::graph::cypher
