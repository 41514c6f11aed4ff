#include "bpa/ast.hpp"

#include <algorithm>

namespace bpa {

const char* to_symbol(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Not: return "!";
  }
  return "?";
}

const char* to_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

int Block::first_stmt_line() const { return stmts.empty() ? 0 : stmts.front()->line; }

namespace {

void walk_stmt(const Stmt& s, const std::function<void(const Stmt&)>& fn) {
  fn(s);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IfStmt>) {
          for_each_stmt(node.then_block, fn);
          if (node.else_arm) {
            if (node.else_arm->is_chain()) {
              walk_stmt(*node.else_arm->else_if, fn);
            } else {
              for_each_stmt(node.else_arm->block, fn);
            }
          }
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          for_each_stmt(node.body, fn);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          for_each_stmt(node.body, fn);
        }
      },
      s.node);
}

// Expressions evaluated directly by a statement (conditions, RHS, bounds,
// call arguments), not those inside nested blocks.
void own_exprs(const Stmt& s, std::vector<const Expr*>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt>) {
          out.push_back(node.value.get());
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          out.push_back(node.cond.get());
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          out.push_back(node.cond.get());
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          out.push_back(node.from.get());
          out.push_back(node.to.get());
        } else if constexpr (std::is_same_v<T, ReturnStmt> || std::is_same_v<T, PrintStmt>) {
          out.push_back(node.value.get());
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          out.push_back(node.expr.get());
        }
      },
      s.node);
}

void collect_calls(const Expr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, UnaryExpr>) {
          collect_calls(*node.operand, out);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          collect_calls(*node.lhs, out);
          collect_calls(*node.rhs, out);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          out.push_back(node.callee);
          for (const auto& a : node.args) collect_calls(*a, out);
        }
      },
      e.node);
}

}  // namespace

void for_each_stmt(const Block& b, const std::function<void(const Stmt&)>& fn) {
  for (const auto& s : b.stmts) walk_stmt(*s, fn);
}

void for_each_stmt(const Program& p, const std::function<void(const Stmt&)>& fn) {
  for (const auto& f : p.functions) for_each_stmt(f.body, fn);
}

std::set<int> statement_lines(const Program& p) {
  std::set<int> lines;
  for_each_stmt(p, [&](const Stmt& s) { lines.insert(s.line); });
  return lines;
}

const FunctionDef* find_function(const Program& p, const std::string& name) {
  for (const auto& f : p.functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const FunctionDef* function_at_line(const Program& p, int line) {
  const FunctionDef* best = nullptr;
  for (const auto& f : p.functions) {
    if (f.header_line <= line && (!best || f.header_line > best->header_line)) best = &f;
  }
  return best;
}

const Stmt* stmt_at_line(const Program& p, int line) {
  const Stmt* found = nullptr;
  for_each_stmt(p, [&](const Stmt& s) {
    if (!found && s.line == line) found = &s;
  });
  return found;
}

int next_statement_line(const Program& p, int line) {
  const FunctionDef* f = function_at_line(p, line);
  if (!f) return 0;
  int best = 0;
  for_each_stmt(f->body, [&](const Stmt& s) {
    if (s.line > line && (best == 0 || s.line < best)) best = s.line;
  });
  return best;
}

int last_line_of(const Stmt& s) {
  int last = s.line;
  walk_stmt(s, [&](const Stmt& inner) { last = std::max(last, inner.line); });
  return last;
}

void collect_var_reads(const Expr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          if (std::find(out.begin(), out.end(), node.name) == out.end()) out.push_back(node.name);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          collect_var_reads(*node.operand, out);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          collect_var_reads(*node.lhs, out);
          collect_var_reads(*node.rhs, out);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          for (const auto& a : node.args) collect_var_reads(*a, out);
        }
      },
      e.node);
}

std::vector<std::string> vars_read_at_line(const Program& p, int line) {
  std::vector<std::string> out;
  const Stmt* s = stmt_at_line(p, line);
  if (!s) return out;
  std::vector<const Expr*> exprs;
  own_exprs(*s, exprs);
  for (const Expr* e : exprs) collect_var_reads(*e, out);
  return out;
}

std::string var_written_at_line(const Program& p, int line) {
  const Stmt* s = stmt_at_line(p, line);
  if (!s) return {};
  if (const auto* let = std::get_if<LetStmt>(&s->node)) return let->name;
  if (const auto* asg = std::get_if<AssignStmt>(&s->node)) return asg->name;
  if (const auto* fr = std::get_if<ForStmt>(&s->node)) return fr->var;
  return {};
}

std::vector<std::string> calls_at_line(const Program& p, int line) {
  std::vector<std::string> out;
  const Stmt* s = stmt_at_line(p, line);
  if (!s) return out;
  std::vector<const Expr*> exprs;
  own_exprs(*s, exprs);
  for (const Expr* e : exprs) collect_calls(*e, out);
  return out;
}

std::set<int> call_site_lines(const Program& p, const std::string& fname) {
  std::set<int> lines;
  for_each_stmt(p, [&](const Stmt& s) {
    std::vector<const Expr*> exprs;
    own_exprs(s, exprs);
    std::vector<std::string> calls;
    for (const Expr* e : exprs) collect_calls(*e, calls);
    if (std::find(calls.begin(), calls.end(), fname) != calls.end()) lines.insert(s.line);
  });
  return lines;
}

// ---------------------------------------------------------------------------
// Structural equality (line-insensitive).

bool structural_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, StrLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return na.op == nb.op && structural_equal(*na.operand, *nb.operand);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return na.op == nb.op && structural_equal(*na.lhs, *nb.lhs) &&
                 structural_equal(*na.rhs, *nb.rhs);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (na.callee != nb.callee || na.args.size() != nb.args.size()) return false;
          for (std::size_t i = 0; i < na.args.size(); ++i) {
            if (!structural_equal(*na.args[i], *nb.args[i])) return false;
          }
          return true;
        }
      },
      a.node);
}

namespace {

bool blocks_equal(const Block& a, const Block& b) {
  if (a.stmts.size() != b.stmts.size()) return false;
  for (std::size_t i = 0; i < a.stmts.size(); ++i) {
    if (!structural_equal(*a.stmts[i], *b.stmts[i])) return false;
  }
  return true;
}

bool else_absent(const std::optional<ElseArm>& e) {
  return !e || (!e->is_chain() && e->block.empty());
}

bool else_equal(const std::optional<ElseArm>& a, const std::optional<ElseArm>& b) {
  if (else_absent(a) || else_absent(b)) return else_absent(a) && else_absent(b);
  if (a->is_chain() != b->is_chain()) return false;
  if (a->is_chain()) return structural_equal(*a->else_if, *b->else_if);
  return blocks_equal(a->block, b->block);
}

}  // namespace

bool structural_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt>) {
          return na.name == nb.name && structural_equal(*na.value, *nb.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return structural_equal(*na.cond, *nb.cond) &&
                 blocks_equal(na.then_block, nb.then_block) &&
                 else_equal(na.else_arm, nb.else_arm);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          return structural_equal(*na.cond, *nb.cond) && blocks_equal(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          return na.var == nb.var && structural_equal(*na.from, *nb.from) &&
                 structural_equal(*na.to, *nb.to) && blocks_equal(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, ReturnStmt> || std::is_same_v<T, PrintStmt>) {
          return structural_equal(*na.value, *nb.value);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          return structural_equal(*na.expr, *nb.expr);
        }
      },
      a.node);
}

bool structural_equal(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const auto& fa = a.functions[i];
    const auto& fb = b.functions[i];
    if (fa.name != fb.name || fa.params != fb.params) return false;
    if (!blocks_equal(fa.body, fb.body)) return false;
  }
  return true;
}

}  // namespace bpa
