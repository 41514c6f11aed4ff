#include <doctest.h>

#include "bpa/parser.hpp"
#include "bpa/testing.hpp"
#include "support/reference.hpp"

using namespace bpa;

namespace {

TestCase make_test(std::string id, std::string entry, std::vector<Value> args, Value expected) {
  TestCase t;
  t.id = std::move(id);
  t.entry = std::move(entry);
  t.args = std::move(args);
  t.expected_value = std::move(expected);
  return t;
}

}  // namespace

TEST_CASE("run_call: fixed sum(3) is 6 within 20 steps") {
  Program fix = parse(testref::kFixedSum);
  ExecResult r = run_call(fix, "sum", {Value{3LL}}, 10000);
  CHECK(r.value == Value{6LL});
  CHECK(r.stdout_text.empty());
  CHECK(r.steps <= 20);
}

TEST_CASE("run_call: student sum(3) is 3 (strict bound sums 1+2)") {
  Program stu = parse(testref::kStudentSum);
  ExecResult r = run_call(stu, "sum", {Value{3LL}});
  CHECK(r.value == Value{3LL});
}

TEST_CASE("run_call: hand-traced sum(1) on both versions") {
  // student: loop body never runs, returns 0; fixed: one iteration, returns 1
  CHECK(run_call(parse(testref::kStudentSum), "sum", {Value{1LL}}).value == Value{0LL});
  CHECK(run_call(parse(testref::kFixedSum), "sum", {Value{1LL}}).value == Value{1LL});
}

TEST_CASE("run_call: division by zero carries the line") {
  Program p = parse("fun f(){ return 1/0; }");
  try {
    run_call(p, "f", {}, 100);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.line == 1);
    CHECK(e.reason == "division by zero");
  }
}

TEST_CASE("run_call: runtime error taxonomy") {
  CHECK_THROWS_AS(run_call(parse("fun f(){ return x; }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(){ return 1 % 0; }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(){ return 1 + true; }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(){ return g(); }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(x){ return x; }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(){ x = 1; return x; }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(){ if (1) { } return 0; }"), "f", {}), EvalError);
  CHECK_THROWS_AS(run_call(parse("fun f(){ return \"a\" == 1; }"), "f", {}), EvalError);
}

TEST_CASE("run_call: falling off the end yields unit") {
  Program p = parse("fun f(){ let x = 1; }");
  CHECK(run_call(p, "f", {}).value == Value{Unit{}});
}

TEST_CASE("run_call: print produces canonical text plus newline") {
  Program p = parse("fun f(){ print(1 + 2); print(true); print(\"hi\"); return 0; }");
  ExecResult r = run_call(p, "f", {});
  CHECK(r.stdout_text == "3\ntrue\nhi\n");
}

TEST_CASE("run_call: short-circuit evaluation skips the poisoned operand") {
  Program p = parse("fun f(){ return false && 1 / 0 == 0; }");
  CHECK(run_call(p, "f", {}).value == Value{false});
  Program q = parse("fun g(){ return true || 1 / 0 == 0; }");
  CHECK(run_call(q, "g", {}).value == Value{true});
}

TEST_CASE("run_call: for-loop bounds inclusive and evaluated once") {
  Program p = parse(
      "fun f() {\n"
      "  let b = 3;\n"
      "  let count = 0;\n"
      "  for (i in 1..b) {\n"
      "    b = 10;\n"
      "    count = count + 1;\n"
      "  }\n"
      "  return count;\n"
      "}\n");
  CHECK(run_call(p, "f", {}).value == Value{3LL});
}

TEST_CASE("run_call: recursion works and runaway depth is caught") {
  Program p = parse("fun fact(n){ if (n <= 1) { return 1; } return n * fact(n - 1); }");
  CHECK(run_call(p, "fact", {Value{10LL}}).value == Value{3628800LL});
  Program q = parse("fun f(n){ return f(n); }");
  CHECK_THROWS(run_call(q, "f", {Value{1LL}}));
}

TEST_CASE("run_test: student fails sum_3 with actual 3, fix passes") {
  TestCase t = make_test("sum_3", "sum", {Value{3LL}}, Value{6LL});
  TestVerdict stu = run_test(parse(testref::kStudentSum), t);
  CHECK(stu.status == TestStatus::Fail);
  REQUIRE(stu.actual_value.has_value());
  CHECK(*stu.actual_value == Value{3LL});
  TestVerdict fix = run_test(parse(testref::kFixedSum), t);
  CHECK(fix.status == TestStatus::Pass);
}

TEST_CASE("run_test: infinite loop times out") {
  Program p = parse("fun spin(){ while (true) { let x = 1; } return 0; }");
  TestCase t = make_test("spin", "spin", {}, Value{0LL});
  TestVerdict v = run_test(p, t, 1000);
  CHECK(v.status == TestStatus::Timeout);
  CHECK(!v.actual_value.has_value());
}

TEST_CASE("run_test: stdout expectation") {
  Program p = parse("fun f(){ print(7); }");
  TestCase t;
  t.id = "t";
  t.entry = "f";
  t.expected_stdout = "7\n";
  CHECK(run_test(p, t).status == TestStatus::Pass);
  t.expected_stdout = "8\n";
  CHECK(run_test(p, t).status == TestStatus::Fail);
}

TEST_CASE("run_test: partial stdout survives a runtime error") {
  Program p = parse("fun f(){ print(1); return 1 / 0; }");
  TestCase t;
  t.id = "t";
  t.entry = "f";
  t.expected_stdout = "1\n";
  TestVerdict v = run_test(p, t);
  CHECK(v.status == TestStatus::RuntimeError);
  CHECK(v.actual_stdout == "1\n");
}

TEST_CASE("run_suite: reference suite verdicts in order") {
  std::vector<TestCase> suite = {make_test("sum_3", "sum", {Value{3LL}}, Value{6LL}),
                                 make_test("sum_0", "sum", {Value{0LL}}, Value{0LL})};
  auto fix = run_suite(parse(testref::kFixedSum), suite);
  REQUIRE(fix.size() == 2);
  CHECK(fix[0].status == TestStatus::Pass);
  CHECK(fix[1].status == TestStatus::Pass);
  auto stu = run_suite(parse(testref::kStudentSum), suite);
  CHECK(stu[0].status == TestStatus::Fail);
  CHECK(stu[1].status == TestStatus::Pass);
}

TEST_CASE("run_suite: runtime error program fails every test") {
  Program p = parse("fun f(x){ return x / 0; }");
  std::vector<TestCase> suite = {make_test("a", "f", {Value{1LL}}, Value{1LL}),
                                 make_test("b", "f", {Value{2LL}}, Value{2LL})};
  auto verdicts = run_suite(p, suite);
  CHECK(verdicts[0].status == TestStatus::RuntimeError);
  CHECK(verdicts[1].status == TestStatus::RuntimeError);
}

TEST_CASE("run_suite: duplicate ids rejected") {
  Program p = parse("fun f(){ return 0; }");
  std::vector<TestCase> suite = {make_test("x", "f", {}, Value{0LL}),
                                 make_test("x", "f", {}, Value{0LL})};
  CHECK_THROWS_AS(run_suite(p, suite), SuiteError);
}

TEST_CASE("determinism: identical runs give identical verdicts") {
  Program p = parse(testref::kStudentSum);
  TestCase t = make_test("sum_3", "sum", {Value{3LL}}, Value{6LL});
  TestVerdict a = run_test(p, t, 5000);
  TestVerdict b = run_test(p, t, 5000);
  CHECK(a.status == b.status);
  CHECK(a.actual_value == b.actual_value);
  CHECK(a.steps_used == b.steps_used);
}

TEST_CASE("step monotonicity: higher limits do not change completed runs") {
  Program p = parse(testref::kFixedSum);
  ExecResult tight = run_call(p, "sum", {Value{5LL}}, 50);
  for (long long limit : {60LL, 500LL, 100000LL}) {
    ExecResult wide = run_call(p, "sum", {Value{5LL}}, limit);
    CHECK(wide.value == tight.value);
    CHECK(wide.steps == tight.steps);
  }
}

TEST_CASE("suite JSON parsing round trip") {
  const char* doc = R"({
    "task_id": "sum",
    "tests": [
      { "id": "sum_3", "entry": "sum", "args": [3], "expected_value": 6 },
      { "id": "flag", "entry": "check", "args": [true, "name"], "expected_stdout": "ok\n" }
    ]
  })";
  TaskSuite suite = parse_suite_json(doc, "inline");
  CHECK(suite.task_id == "sum");
  REQUIRE(suite.tests.size() == 2);
  CHECK(suite.tests[0].args[0] == Value{3LL});
  CHECK(suite.tests[1].args[0] == Value{true});
  CHECK(suite.tests[1].args[1] == Value{std::string("name")});
  CHECK(find_test(suite, "sum_3") != nullptr);
  CHECK(find_test(suite, "nope") == nullptr);
}

TEST_CASE("suite JSON rejects malformed documents") {
  CHECK_THROWS_AS(parse_suite_json("{}", "x"), SuiteError);
  CHECK_THROWS_AS(parse_suite_json("not json", "x"), SuiteError);
  CHECK_THROWS_AS(
      parse_suite_json(R"({"task_id":"t","tests":[{"id":"a","entry":"f","args":[]}]})", "x"),
      SuiteError);
  CHECK_THROWS_AS(
      parse_suite_json(
          R"({"task_id":"t","tests":[{"id":"a","entry":"f","args":[1.5],"expected_value":1}]})",
          "x"),
      SuiteError);
}
