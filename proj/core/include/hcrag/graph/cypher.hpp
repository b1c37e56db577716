#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcrag/common/errors.hpp"
#include "hcrag/graph/property_value.hpp"
#include "hcrag/graph/store.hpp"

namespace hcrag::graph::cypher {

// ---------------------------------------------------------------------------
// AST for the supported subset: a single MATCH with node patterns and
// optional one-hop relationships, WHERE over =, CONTAINS, AND, OR, and a
// RETURN list of variables or properties.
// ---------------------------------------------------------------------------

enum class Direction { None, Out, In };

struct NodePattern {
    std::optional<std::string> var;
    std::optional<std::string> label;
};

struct MatchPattern {
    NodePattern src;
    Direction direction = Direction::None;
    std::optional<std::string> rel_type;  // anonymous -[]-> when absent
    std::optional<NodePattern> dst;       // present iff direction != None
};

enum class CompareOp { Eq, Contains };

struct WhereExpr;

struct Comparison {
    std::string var;
    std::string prop;
    CompareOp op = CompareOp::Eq;
    PropertyValue literal;
};

enum class BoolOp { And, Or };

struct BoolExpr {
    BoolOp op;
    std::unique_ptr<WhereExpr> lhs;
    std::unique_ptr<WhereExpr> rhs;
};

struct WhereExpr {
    // exactly one of the two is active
    std::optional<Comparison> comparison;
    std::optional<BoolExpr> boolean;
};

struct ReturnItem {
    std::string var;
    std::optional<std::string> prop;  // whole-variable return when absent
};

struct CypherQuery {
    std::vector<MatchPattern> patterns;
    std::unique_ptr<WhereExpr> where;  // may be null
    std::vector<ReturnItem> return_items;
};

CypherQuery clone(const CypherQuery& query);
bool ast_equals(const CypherQuery& a, const CypherQuery& b);

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

// Syntax error with source position and the token set the parser accepted at
// that point, e.g.:
//   Invalid input 'objective': expected ")" (line 1, column 19 (offset: 18))
class CypherSyntaxError : public Error {
public:
    CypherSyntaxError(std::string got, std::vector<std::string> expected, int line, int column,
                      int offset);

    const std::string& got() const { return got_; }
    const std::vector<std::string>& expected() const { return expected_; }
    int line() const { return line_; }
    int column() const { return column_; }
    int offset() const { return offset_; }

private:
    std::string got_;
    std::vector<std::string> expected_;
    int line_;
    int column_;
    int offset_;
};

CypherQuery parse_cypher(const std::string& text);

// Canonical text form; parse_cypher(print_cypher(q)) reproduces q.
std::string print_cypher(const CypherQuery& query);

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

// A cell is null when the bound node lacks the requested property.
using Cell = std::optional<PropertyValue>;

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    // Deterministic flattening used for KG context assembly: a header line
    // followed by one line per row, columns joined with " | ".
    std::string to_text() const;
};

bool cell_equals(const Cell& a, const Cell& b);
std::string cell_to_display(const Cell& cell);

// Evaluates the query against the store. Rows are every binding satisfying
// the patterns and predicates, sorted by the tuple of bound node ids in
// pattern position order. Unknown labels yield empty results; unknown
// properties evaluate to null.
ResultTable execute(const CypherQuery& query, const GraphStore& store);

}  // namespace hcrag::graph::cypher
