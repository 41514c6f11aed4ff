#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpa/interp.hpp"

namespace bpa {

/// A single test: call `entry(args...)` and compare result value and/or
/// stdout. At least one expectation is present.
struct TestCase {
  std::string id;
  std::string entry;
  std::vector<Value> args;
  std::optional<Value> expected_value;
  std::optional<std::string> expected_stdout;
};

enum class TestStatus { Pass, Fail, RuntimeError, Timeout };

const char* to_string(TestStatus s);

struct TestVerdict {
  std::string test_id;
  TestStatus status = TestStatus::Fail;
  std::optional<Value> actual_value;
  std::string actual_stdout;
  long long steps_used = 0;
};

struct TaskSuite {
  std::string task_id;
  std::vector<TestCase> tests;
};

struct SuiteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pass iff every present expectation matches exactly; RuntimeError/Timeout
/// statuses never compare expectations.
TestVerdict run_test(const Program& p, const TestCase& t,
                     long long step_limit = kDefaultStepLimit);

/// Independent executions, verdicts in suite order.
std::vector<TestVerdict> run_suite(const Program& p, const std::vector<TestCase>& suite,
                                   long long step_limit = kDefaultStepLimit);

/// Loads `{ "task_id": str, "tests": [...] }`. Int args encode as numbers,
/// Bool as true/false, Str as strings. Throws SuiteError on malformed input,
/// duplicate ids, or a test with no expectation.
TaskSuite load_suite(const std::string& path);
TaskSuite parse_suite_json(const std::string& text, const std::string& origin);

const TestCase* find_test(const TaskSuite& suite, const std::string& id);

}  // namespace bpa
