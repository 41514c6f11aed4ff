#pragma once

// Grammar-driven random program generator for property tests. Programs are
// syntactically valid by construction (unique function names, calls target
// defined functions); they are not guaranteed to terminate or typecheck, so
// only parse/print properties and static analyses should run on them.

#include <random>
#include <string>
#include <vector>

#include "bpa/ast.hpp"

namespace bpa::testgen {

class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

  Program generate() {
    Program p;
    int fn_count = 1 + static_cast<int>(rng_() % 3);
    for (int i = 0; i < fn_count; ++i) fn_names_.push_back("fn" + std::to_string(i));
    for (int i = 0; i < fn_count; ++i) {
      FunctionDef f;
      f.name = fn_names_[static_cast<std::size_t>(i)];
      int params = static_cast<int>(rng_() % 4);
      for (int j = 0; j < params; ++j) f.params.push_back(var_name(j));
      vars_ = f.params;
      if (vars_.empty()) vars_.push_back("seedless");  // keep VarRef pool non-empty
      budget_ = 4 + static_cast<int>(rng_() % 10);
      f.body = gen_block(0);
      p.functions.push_back(std::move(f));
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> fn_names_;
  std::vector<std::string> vars_;
  int budget_ = 0;

  static std::string var_name(int i) {
    static const char* pool[] = {"a", "b", "c", "n", "x", "y", "k", "acc", "tmp", "total"};
    return pool[i % 10];
  }

  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  ExprPtr make_expr(int depth) {
    auto e = std::make_unique<Expr>();
    int choice = pick(depth >= 3 ? 4 : 8);
    switch (choice) {
      case 0: e->node = IntLit{static_cast<long long>(pick(100))}; break;
      case 1: e->node = BoolLit{pick(2) == 0}; break;
      case 2: e->node = VarRef{vars_[static_cast<std::size_t>(pick(
                  static_cast<int>(vars_.size())))]}; break;
      case 3: {
        std::string s;
        int len = pick(6);
        static const char charset[] = "abz0 _\\\"\n\t";
        for (int i = 0; i < len; ++i) s.push_back(charset[pick(10)]);
        e->node = StrLit{std::move(s)};
        break;
      }
      case 4: {
        UnaryExpr u{pick(2) == 0 ? UnaryOp::Neg : UnaryOp::Not, make_expr(depth + 1)};
        e->node = std::move(u);
        break;
      }
      case 5:
      case 6: {
        static const BinaryOp ops[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                                       BinaryOp::Div, BinaryOp::Mod, BinaryOp::Eq,
                                       BinaryOp::Ne,  BinaryOp::Lt,  BinaryOp::Le,
                                       BinaryOp::Gt,  BinaryOp::Ge,  BinaryOp::And,
                                       BinaryOp::Or};
        BinaryExpr b{ops[pick(13)], make_expr(depth + 1), make_expr(depth + 1)};
        e->node = std::move(b);
        break;
      }
      default: {
        CallExpr call;
        call.callee = fn_names_[static_cast<std::size_t>(pick(static_cast<int>(fn_names_.size())))];
        int argc = pick(3);
        for (int i = 0; i < argc; ++i) call.args.push_back(make_expr(depth + 1));
        e->node = std::move(call);
        break;
      }
    }
    return e;
  }

  Block gen_block(int depth) {
    Block b;
    int count = depth == 0 ? 1 + pick(5) : pick(3);
    for (int i = 0; i < count && budget_ > 0; ++i) {
      --budget_;
      b.stmts.push_back(std::make_unique<Stmt>(gen_stmt(depth)));
    }
    return b;
  }

  Stmt gen_stmt(int depth) {
    int choice = pick(depth >= 2 ? 6 : 10);
    switch (choice) {
      case 0:
      case 1: {
        std::string name = var_name(pick(10));
        LetStmt s{name, make_expr(0)};
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
        return Stmt{std::move(s)};
      }
      case 2: {
        AssignStmt s{vars_[static_cast<std::size_t>(pick(static_cast<int>(vars_.size())))],
                     make_expr(0)};
        return Stmt{std::move(s)};
      }
      case 3: return Stmt{ReturnStmt{make_expr(0)}};
      case 4: return Stmt{PrintStmt{make_expr(0)}};
      case 5: {
        CallExpr call;
        call.callee = fn_names_[static_cast<std::size_t>(pick(static_cast<int>(fn_names_.size())))];
        if (pick(2) == 0) call.args.push_back(make_expr(1));
        auto e = std::make_unique<Expr>();
        e->node = std::move(call);
        return Stmt{ExprStmt{std::move(e)}};
      }
      case 6:
      case 7: {
        IfStmt s;
        s.cond = make_expr(0);
        s.then_block = gen_block(depth + 1);
        int else_kind = pick(4);
        if (else_kind == 1) {
          ElseArm arm;
          arm.block = gen_block(depth + 1);
          s.else_arm = std::move(arm);
        } else if (else_kind == 2 && depth < 2) {
          ElseArm arm;
          IfStmt nested;
          nested.cond = make_expr(0);
          nested.then_block = gen_block(depth + 1);
          if (pick(2) == 0) {
            ElseArm tail;
            tail.block = gen_block(depth + 1);
            nested.else_arm = std::move(tail);
          }
          arm.else_if = std::make_unique<Stmt>(Stmt{std::move(nested)});
          s.else_arm = std::move(arm);
        } else if (else_kind == 3) {
          s.else_arm = ElseArm{};  // empty else: printer must drop it
        }
        return Stmt{std::move(s)};
      }
      case 8: {
        WhileStmt s;
        s.cond = make_expr(0);
        s.body = gen_block(depth + 1);
        return Stmt{std::move(s)};
      }
      default: {
        ForStmt s;
        s.var = var_name(pick(10));
        s.from = make_expr(1);
        s.to = make_expr(1);
        s.body = gen_block(depth + 1);
        if (std::find(vars_.begin(), vars_.end(), s.var) == vars_.end()) vars_.push_back(s.var);
        return Stmt{std::move(s)};
      }
    }
  }
};

}  // namespace bpa::testgen
