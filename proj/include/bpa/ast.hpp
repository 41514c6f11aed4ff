#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace bpa {

// Line-annotated abstract syntax for MiniLang. Every statement and expression
// carries the 1-based source line of its first token. Trees are move-only;
// analyses take them by const reference.

enum class UnaryOp { Neg, Not };
enum class BinaryOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };

const char* to_symbol(UnaryOp op);
const char* to_symbol(BinaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
  long long value = 0;  // non-negative by construction; negatives are Unary(Neg, ...)
};
struct BoolLit {
  bool value = false;
};
struct StrLit {
  std::string value;  // decoded contents, without quotes
};
struct VarRef {
  std::string name;
};
struct UnaryExpr {
  UnaryOp op;
  ExprPtr operand;
};
struct BinaryExpr {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct CallExpr {
  std::string callee;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<IntLit, BoolLit, StrLit, VarRef, UnaryExpr, BinaryExpr, CallExpr> node;
  int line = 0;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
  std::vector<StmtPtr> stmts;

  bool empty() const { return stmts.empty(); }
  int first_stmt_line() const;  // 0 when empty
};

// `else` arm of an if: either a plain block or a chained `else if`.
struct ElseArm {
  Block block;        // used when else_if is null
  StmtPtr else_if;    // an IfStmt when the source read `else if (...)`
  bool is_chain() const { return else_if != nullptr; }
};

struct LetStmt {
  std::string name;
  ExprPtr value;
};
struct AssignStmt {
  std::string name;
  ExprPtr value;
};
struct IfStmt {
  ExprPtr cond;
  Block then_block;
  std::optional<ElseArm> else_arm;
};
struct WhileStmt {
  ExprPtr cond;
  Block body;
};
struct ForStmt {
  std::string var;
  ExprPtr from;
  ExprPtr to;
  Block body;
};
struct ReturnStmt {
  ExprPtr value;
};
struct PrintStmt {
  ExprPtr value;
};
struct ExprStmt {
  ExprPtr expr;
};

struct Stmt {
  std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt, ForStmt, ReturnStmt, PrintStmt, ExprStmt>
      node;
  int line = 0;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  Block body;
  int header_line = 0;
  int first_body_line = 0;  // line of the first body statement; header_line + 1 if body empty
};

struct Program {
  std::vector<FunctionDef> functions;
  int source_lines = 0;  // physical line count of the canonical text
};

// ---------------------------------------------------------------------------
// Tree queries shared by the analyses.

/// Pre-order visit of every statement, nested ones included.
void for_each_stmt(const Block& b, const std::function<void(const Stmt&)>& fn);
void for_each_stmt(const Program& p, const std::function<void(const Stmt&)>& fn);

/// All statement lines of the program, in ascending order.
std::set<int> statement_lines(const Program& p);

const FunctionDef* find_function(const Program& p, const std::string& name);

/// Function whose printed span contains `line`, or null.
const FunctionDef* function_at_line(const Program& p, int line);

/// First statement (in pre-order) whose line equals `line`, or null.
const Stmt* stmt_at_line(const Program& p, int line);

/// Next statement line in source order after `line` within the same function
/// (0 when none). Brace-only lines do not count.
int next_statement_line(const Program& p, int line);

/// Greatest statement line inside `s` (the statement itself included).
int last_line_of(const Stmt& s);

/// Variable names read by the expression, in first-appearance order.
void collect_var_reads(const Expr& e, std::vector<std::string>& out);

/// Variables read when the statement at `line` executes (conditions, RHS,
/// bounds, arguments), excluding nested-block contents.
std::vector<std::string> vars_read_at_line(const Program& p, int line);

/// Variable written by the statement at `line` (let/assign target, for
/// variable), empty if none.
std::string var_written_at_line(const Program& p, int line);

/// Names of functions called anywhere in the statement at `line` (own
/// expressions only, not nested blocks).
std::vector<std::string> calls_at_line(const Program& p, int line);

/// Lines, across the whole program, whose statement calls `fname`.
std::set<int> call_site_lines(const Program& p, const std::string& fname);

/// Structural equality, ignoring line numbers. An `else` arm with an empty
/// block compares equal to an absent one (the canonical printer drops it).
bool structural_equal(const Program& a, const Program& b);
bool structural_equal(const Expr& a, const Expr& b);
bool structural_equal(const Stmt& a, const Stmt& b);

}  // namespace bpa
