#include "bpa/printer.hpp"

#include <sstream>

#include "bpa/parser.hpp"

namespace bpa {

namespace {

// Binding strength per operator; higher binds tighter.
int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Eq:
    case BinaryOp::Ne:
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 3;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 4;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return 5;
  }
  return 0;
}
constexpr int kUnaryPrec = 6;

std::string encode_string(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c); break;
    }
  }
  out.push_back('"');
  return out;
}

void print_expr_prec(const Expr& e, int parent_prec, bool is_right_operand, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          out += std::to_string(node.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          out += node.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, StrLit>) {
          out += encode_string(node.value);
        } else if constexpr (std::is_same_v<T, VarRef>) {
          out += node.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          bool parens = kUnaryPrec < parent_prec;
          if (parens) out.push_back('(');
          out += to_symbol(node.op);
          print_expr_prec(*node.operand, kUnaryPrec, false, out);
          if (parens) out.push_back(')');
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          int prec = precedence(node.op);
          // All binary operators are left-associative, so a right operand at
          // equal precedence needs parentheses to re-parse identically.
          bool parens = prec < parent_prec || (prec == parent_prec && is_right_operand);
          if (parens) out.push_back('(');
          print_expr_prec(*node.lhs, prec, false, out);
          out.push_back(' ');
          out += to_symbol(node.op);
          out.push_back(' ');
          print_expr_prec(*node.rhs, prec, true, out);
          if (parens) out.push_back(')');
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          out += node.callee;
          out.push_back('(');
          for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (i > 0) out += ", ";
            print_expr_prec(*node.args[i], 0, false, out);
          }
          out.push_back(')');
        }
      },
      e.node);
}

class Printer {
 public:
  std::string render(const Program& p) {
    for (const auto& f : p.functions) {
      line_start();
      out_ += "fun " + f.name + "(";
      for (std::size_t i = 0; i < f.params.size(); ++i) {
        if (i > 0) out_ += ", ";
        out_ += f.params[i];
      }
      out_ += ") {";
      line_end();
      ++indent_;
      print_block(f.body);
      --indent_;
      line_start();
      out_ += "}";
      line_end();
    }
    return out_;
  }

 private:
  std::string out_;
  int indent_ = 0;

  void line_start() { out_.append(static_cast<std::size_t>(indent_) * 2, ' '); }
  void line_end() { out_.push_back('\n'); }

  void print_block(const Block& b) {
    for (const auto& s : b.stmts) print_stmt(*s);
  }

  void print_stmt(const Stmt& s) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            simple_line("let " + node.name + " = " + expr_text(*node.value) + ";");
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            simple_line(node.name + " = " + expr_text(*node.value) + ";");
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            line_start();
            print_if_chain(node);
            line_end();
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            simple_line("while (" + expr_text(*node.cond) + ") {");
            ++indent_;
            print_block(node.body);
            --indent_;
            simple_line("}");
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            simple_line("for (" + node.var + " in " + expr_text(*node.from) + ".." +
                        expr_text(*node.to) + ") {");
            ++indent_;
            print_block(node.body);
            --indent_;
            simple_line("}");
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            simple_line("return " + expr_text(*node.value) + ";");
          } else if constexpr (std::is_same_v<T, PrintStmt>) {
            simple_line("print(" + expr_text(*node.value) + ");");
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            simple_line(expr_text(*node.expr) + ";");
          }
        },
        s.node);
  }

  // `if` chains print as `} else if (...) {` so the whole chain stays one
  // construct; empty else arms are dropped. Emits everything between the
  // current line start and the final `}` of the chain.
  void print_if_chain(const IfStmt& s) {
    out_ += "if (" + expr_text(*s.cond) + ") {";
    line_end();
    ++indent_;
    print_block(s.then_block);
    --indent_;
    line_start();
    const IfStmt* cur = &s;
    while (cur->else_arm) {
      const ElseArm& arm = *cur->else_arm;
      if (arm.is_chain()) {
        const IfStmt& next = std::get<IfStmt>(arm.else_if->node);
        out_ += "} else if (" + expr_text(*next.cond) + ") {";
        line_end();
        ++indent_;
        print_block(next.then_block);
        --indent_;
        line_start();
        cur = &next;
      } else {
        if (arm.block.empty()) break;  // canonicalization: drop empty else
        out_ += "} else {";
        line_end();
        ++indent_;
        print_block(arm.block);
        --indent_;
        line_start();
        break;
      }
    }
    out_ += "}";
  }

  void simple_line(const std::string& text) {
    line_start();
    out_ += text;
    line_end();
  }

  static std::string expr_text(const Expr& e) {
    std::string out;
    print_expr_prec(e, 0, false, out);
    return out;
  }
};

}  // namespace

std::string print_expr(const Expr& e) {
  std::string out;
  print_expr_prec(e, 0, false, out);
  return out;
}

std::string pretty_print(const Program& p) {
  Printer printer;
  return printer.render(p);
}

std::string canonicalize(const std::string& source) { return pretty_print(parse(source)); }

}  // namespace bpa
