#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bpa/ast.hpp"

namespace bpa {

struct Unit {
  bool operator==(const Unit&) const { return true; }
};

/// Runtime value: 64-bit signed int, bool, string, or unit.
using Value = std::variant<long long, bool, std::string, Unit>;

/// Canonical text of a value, as `print` writes it (no quotes around strings).
std::string value_text(const Value& v);

bool value_equal(const Value& a, const Value& b);

struct EvalError : std::runtime_error {
  int line;
  std::string reason;
  EvalError(int line_, std::string reason_)
      : std::runtime_error("runtime error at line " + std::to_string(line_) + ": " + reason_),
        line(line_),
        reason(std::move(reason_)) {}
};

struct TimeoutError : std::runtime_error {
  long long steps;
  explicit TimeoutError(long long steps_)
      : std::runtime_error("step limit exceeded after " + std::to_string(steps_) + " steps"),
        steps(steps_) {}
};

inline constexpr long long kDefaultStepLimit = 100000;
inline constexpr int kMaxCallDepth = 512;

struct ExecResult {
  Value value;
  std::string stdout_text;
  long long steps = 0;
};

enum class RunStatus { Ok, Error, Timeout };

/// Non-throwing execution outcome; stdout and step count are preserved even
/// when the run errors or times out.
struct RunOutcome {
  RunStatus status = RunStatus::Ok;
  Value value = Unit{};
  std::string stdout_text;
  long long steps = 0;
  int error_line = 0;
  std::string error_reason;
};

RunOutcome run_call_outcome(const Program& p, const std::string& entry,
                            const std::vector<Value>& args,
                            long long step_limit = kDefaultStepLimit);

/// Big-step evaluation of `entry(args...)` with function-local scope. Each
/// statement execution (including every loop-condition re-check) costs one
/// step; exceeding `step_limit` raises TimeoutError. Falling off a function
/// end yields Unit.
ExecResult run_call(const Program& p, const std::string& entry, const std::vector<Value>& args,
                    long long step_limit = kDefaultStepLimit);

}  // namespace bpa
