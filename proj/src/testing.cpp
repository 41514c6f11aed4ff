#include "bpa/testing.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bpa {

const char* to_string(TestStatus s) {
  switch (s) {
    case TestStatus::Pass: return "Pass";
    case TestStatus::Fail: return "Fail";
    case TestStatus::RuntimeError: return "RuntimeError";
    case TestStatus::Timeout: return "Timeout";
  }
  return "?";
}

TestVerdict run_test(const Program& p, const TestCase& t, long long step_limit) {
  TestVerdict v;
  v.test_id = t.id;
  RunOutcome out = run_call_outcome(p, t.entry, t.args, step_limit);
  v.actual_stdout = out.stdout_text;
  v.steps_used = out.steps;
  switch (out.status) {
    case RunStatus::Timeout:
      v.status = TestStatus::Timeout;
      return v;
    case RunStatus::Error:
      v.status = TestStatus::RuntimeError;
      return v;
    case RunStatus::Ok:
      break;
  }
  v.actual_value = out.value;
  bool ok = true;
  if (t.expected_value && !value_equal(*t.expected_value, out.value)) ok = false;
  if (t.expected_stdout && *t.expected_stdout != out.stdout_text) ok = false;
  v.status = ok ? TestStatus::Pass : TestStatus::Fail;
  return v;
}

std::vector<TestVerdict> run_suite(const Program& p, const std::vector<TestCase>& suite,
                                   long long step_limit) {
  std::set<std::string> ids;
  for (const auto& t : suite) {
    if (!ids.insert(t.id).second) throw SuiteError("duplicate test id '" + t.id + "'");
  }
  std::vector<TestVerdict> verdicts;
  verdicts.reserve(suite.size());
  for (const auto& t : suite) verdicts.push_back(run_test(p, t, step_limit));
  return verdicts;
}

namespace {

Value literal_from_json(const nlohmann::json& j, const std::string& origin) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) return j.get<std::string>();
  throw SuiteError(origin + ": literal must be an integer, bool, or string");
}

}  // namespace

TaskSuite parse_suite_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SuiteError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("task_id") || !j.contains("tests")) {
    throw SuiteError(origin + ": expected { \"task_id\", \"tests\" }");
  }
  TaskSuite suite;
  suite.task_id = j.at("task_id").get<std::string>();
  std::set<std::string> ids;
  for (const auto& tj : j.at("tests")) {
    TestCase t;
    t.id = tj.at("id").get<std::string>();
    t.entry = tj.at("entry").get<std::string>();
    for (const auto& aj : tj.at("args")) t.args.push_back(literal_from_json(aj, origin));
    if (tj.contains("expected_value")) {
      t.expected_value = literal_from_json(tj.at("expected_value"), origin);
    }
    if (tj.contains("expected_stdout")) {
      t.expected_stdout = tj.at("expected_stdout").get<std::string>();
    }
    if (!t.expected_value && !t.expected_stdout) {
      throw SuiteError(origin + ": test '" + t.id + "' has no expectation");
    }
    if (!ids.insert(t.id).second) {
      throw SuiteError(origin + ": duplicate test id '" + t.id + "'");
    }
    suite.tests.push_back(std::move(t));
  }
  return suite;
}

TaskSuite load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SuiteError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_suite_json(buf.str(), path);
}

const TestCase* find_test(const TaskSuite& suite, const std::string& id) {
  for (const auto& t : suite.tests) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

}  // namespace bpa
