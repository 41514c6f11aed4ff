#include "bpa/interp.hpp"

#include <cstdint>
#include <unordered_map>

namespace bpa {

std::string value_text(const Value& v) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return "unit";
}

bool value_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  return a == b;
}

namespace {

const char* kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "int";
    case 1: return "bool";
    case 2: return "string";
    default: return "unit";
  }
}

// Thrown internally to unwind a `return`.
struct ReturnSignal {
  Value value;
};

class Interp {
 public:
  Interp(const Program& p, long long step_limit) : program_(p), step_limit_(step_limit) {}

  Value call_function(const std::string& name, const std::vector<Value>& args, int at_line) {
    const FunctionDef* f = find_function(program_, name);
    if (!f) throw EvalError(at_line, "unknown function '" + name + "'");
    if (f->params.size() != args.size()) {
      throw EvalError(at_line, "arity mismatch calling '" + name + "': expected " +
                                   std::to_string(f->params.size()) + " arguments, got " +
                                   std::to_string(args.size()));
    }
    if (++depth_ > kMaxCallDepth) throw EvalError(at_line, "call depth exceeded");
    std::unordered_map<std::string, Value> env;
    for (std::size_t i = 0; i < args.size(); ++i) env[f->params[i]] = args[i];
    Value result = Unit{};
    try {
      exec_block(f->body, env);
    } catch (ReturnSignal& ret) {
      result = std::move(ret.value);
    }
    --depth_;
    return result;
  }

  std::string take_stdout() { return std::move(stdout_); }
  const std::string& stdout_text() const { return stdout_; }
  long long steps() const { return steps_; }

 private:
  const Program& program_;
  long long step_limit_;
  long long steps_ = 0;
  int depth_ = 0;
  std::string stdout_;

  using Env = std::unordered_map<std::string, Value>;

  void tick() {
    if (++steps_ > step_limit_) throw TimeoutError(steps_);
  }

  void exec_block(const Block& b, Env& env) {
    for (const auto& s : b.stmts) exec_stmt(*s, env);
  }

  void exec_stmt(const Stmt& s, Env& env) {
    tick();
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            env[node.name] = eval(*node.value, env);
          } else if constexpr (std::is_same_v<T, AssignStmt>) {
            auto it = env.find(node.name);
            if (it == env.end()) {
              throw EvalError(s.line, "assignment to unbound variable '" + node.name + "'");
            }
            it->second = eval(*node.value, env);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            if (truth(eval(*node.cond, env), s.line)) {
              exec_block(node.then_block, env);
            } else if (node.else_arm) {
              if (node.else_arm->is_chain()) {
                exec_stmt(*node.else_arm->else_if, env);
              } else {
                exec_block(node.else_arm->block, env);
              }
            }
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            while (truth(eval(*node.cond, env), s.line)) {
              exec_block(node.body, env);
              tick();  // each condition re-check costs a step
            }
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            // inclusive range, bounds evaluated once
            long long from = int_of(eval(*node.from, env), s.line);
            long long to = int_of(eval(*node.to, env), s.line);
            for (long long i = from; i <= to; ++i) {
              env[node.var] = i;
              exec_block(node.body, env);
              tick();
            }
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            throw ReturnSignal{eval(*node.value, env)};
          } else if constexpr (std::is_same_v<T, PrintStmt>) {
            stdout_ += value_text(eval(*node.value, env));
            stdout_ += '\n';
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            eval(*node.expr, env);
          }
        },
        s.node);
  }

  bool truth(const Value& v, int line) {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw EvalError(line, std::string("condition must be bool, got ") + kind_name(v));
  }

  long long int_of(const Value& v, int line) {
    if (const auto* i = std::get_if<long long>(&v)) return *i;
    throw EvalError(line, std::string("expected int, got ") + kind_name(v));
  }

  Value eval(const Expr& e, Env& env) {
    return std::visit(
        [&](const auto& node) -> Value {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return node.value;
          } else if constexpr (std::is_same_v<T, BoolLit>) {
            return node.value;
          } else if constexpr (std::is_same_v<T, StrLit>) {
            return node.value;
          } else if constexpr (std::is_same_v<T, VarRef>) {
            auto it = env.find(node.name);
            if (it == env.end()) throw EvalError(e.line, "unbound variable '" + node.name + "'");
            return it->second;
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            Value v = eval(*node.operand, env);
            if (node.op == UnaryOp::Neg) {
              return -int_of(v, e.line);
            }
            if (const auto* b = std::get_if<bool>(&v)) return !*b;
            throw EvalError(e.line, std::string("'!' needs bool, got ") + kind_name(v));
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            return eval_binary(node, e.line, env);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            std::vector<Value> args;
            args.reserve(node.args.size());
            for (const auto& a : node.args) args.push_back(eval(*a, env));
            return call_function(node.callee, args, e.line);
          }
        },
        e.node);
  }

  Value eval_binary(const BinaryExpr& node, int line, Env& env) {
    // && and || short-circuit
    if (node.op == BinaryOp::And || node.op == BinaryOp::Or) {
      bool lhs = truth_operand(eval(*node.lhs, env), line, to_symbol(node.op));
      if (node.op == BinaryOp::And && !lhs) return false;
      if (node.op == BinaryOp::Or && lhs) return true;
      return truth_operand(eval(*node.rhs, env), line, to_symbol(node.op));
    }
    Value lv = eval(*node.lhs, env);
    Value rv = eval(*node.rhs, env);
    if (node.op == BinaryOp::Eq || node.op == BinaryOp::Ne) {
      if (lv.index() != rv.index()) {
        throw EvalError(line, std::string("'") + to_symbol(node.op) + "' needs operands of the " +
                                  "same kind, got " + kind_name(lv) + " and " + kind_name(rv));
      }
      bool eq = value_equal(lv, rv);
      return node.op == BinaryOp::Eq ? eq : !eq;
    }
    long long a = arith_operand(lv, line, to_symbol(node.op));
    long long b = arith_operand(rv, line, to_symbol(node.op));
    switch (node.op) {
      case BinaryOp::Add: return wrap_add(a, b);
      case BinaryOp::Sub: return wrap_sub(a, b);
      case BinaryOp::Mul: return wrap_mul(a, b);
      case BinaryOp::Div:
        if (b == 0) throw EvalError(line, "division by zero");
        if (a == INT64_MIN && b == -1) return a;  // avoid UB on overflow
        return a / b;
      case BinaryOp::Mod:
        if (b == 0) throw EvalError(line, "modulo by zero");
        if (a == INT64_MIN && b == -1) return 0LL;
        return a % b;
      case BinaryOp::Lt: return a < b;
      case BinaryOp::Le: return a <= b;
      case BinaryOp::Gt: return a > b;
      case BinaryOp::Ge: return a >= b;
      default: throw EvalError(line, "unreachable operator");
    }
  }

  bool truth_operand(const Value& v, int line, const char* op) {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw EvalError(line, std::string("'") + op + "' needs bool operands, got " + kind_name(v));
  }

  long long arith_operand(const Value& v, int line, const char* op) {
    if (const auto* i = std::get_if<long long>(&v)) return *i;
    throw EvalError(line, std::string("'") + op + "' needs int operands, got " + kind_name(v));
  }

  // two's-complement wrap instead of signed-overflow UB
  static long long wrap_add(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) +
                                  static_cast<unsigned long long>(b));
  }
  static long long wrap_sub(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) -
                                  static_cast<unsigned long long>(b));
  }
  static long long wrap_mul(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) *
                                  static_cast<unsigned long long>(b));
  }
};

}  // namespace

RunOutcome run_call_outcome(const Program& p, const std::string& entry,
                            const std::vector<Value>& args, long long step_limit) {
  const FunctionDef* f = find_function(p, entry);
  Interp interp(p, step_limit);
  RunOutcome out;
  try {
    out.value = interp.call_function(entry, args, f ? f->header_line : 0);
    out.status = RunStatus::Ok;
  } catch (const TimeoutError&) {
    out.status = RunStatus::Timeout;
  } catch (const EvalError& e) {
    out.status = RunStatus::Error;
    out.error_line = e.line;
    out.error_reason = e.reason;
  }
  out.stdout_text = interp.take_stdout();
  out.steps = interp.steps();
  return out;
}

ExecResult run_call(const Program& p, const std::string& entry, const std::vector<Value>& args,
                    long long step_limit) {
  RunOutcome out = run_call_outcome(p, entry, args, step_limit);
  switch (out.status) {
    case RunStatus::Timeout: throw TimeoutError(out.steps);
    case RunStatus::Error: throw EvalError(out.error_line, out.error_reason);
    case RunStatus::Ok: break;
  }
  return ExecResult{std::move(out.value), std::move(out.stdout_text), out.steps};
}

}  // namespace bpa
