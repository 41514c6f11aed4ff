#include "bpa/explain.hpp"

#include <algorithm>
#include <ostream>

namespace bpa {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

std::string escape_for_display(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string expected_text(const TestCase& t) {
  if (t.expected_value) return value_text(*t.expected_value);
  if (t.expected_stdout) return "output \"" + escape_for_display(*t.expected_stdout) + "\"";
  return "a different result";
}

std::optional<std::string> actual_text(const ExplanationContext& ctx) {
  if (!ctx.student_verdict) return std::nullopt;
  const TestVerdict& v = *ctx.student_verdict;
  switch (v.status) {
    case TestStatus::RuntimeError: return std::string("a runtime error");
    case TestStatus::Timeout: return std::string("a timeout");
    default: break;
  }
  if (ctx.failed_test.expected_value && v.actual_value) return value_text(*v.actual_value);
  if (ctx.failed_test.expected_stdout) {
    return "output \"" + escape_for_display(v.actual_stdout) + "\"";
  }
  return std::nullopt;
}

std::string cap_length(std::string text) {
  constexpr std::size_t kMax = 280;
  if (text.size() <= kMax) return text;
  text.resize(kMax - 3);
  return text + "...";
}

}  // namespace

std::string dominant_tag(const Breakpoint& bp) {
  static const char* precedence[] = {"H2:var-write",       "H2:var-after-write",
                                     "H1:branch-entry",    "H1:after-construct",
                                     "H3:function-entry",  "H3:call-site"};
  for (const char* tag : precedence) {
    if (bp.provenance.count(tag)) return tag;
  }
  return "";
}

std::string explain_breakpoint(const ExplanationContext& ctx) {
  const std::string id = ctx.failed_test.id;
  const std::string vars = join(ctx.variables_in_scope);

  if (ctx.breakpoint.kind == BreakpointKind::BugSite) {
    std::string text = "This line needs to change. Test " + id + " expected " +
                       expected_text(ctx.failed_test);
    if (auto actual = actual_text(ctx)) text += " but got " + *actual;
    text += ".";
    if (!vars.empty()) {
      text += " Inspect " + vars + " here and compare against what the test requires.";
    } else {
      text += " Compare what happens here against what the test requires.";
    }
    return cap_length(text);
  }

  std::string tag = dominant_tag(ctx.breakpoint);
  std::string text;
  if (tag == "H2:var-write") {
    text = "Pause here to see " + (vars.empty() ? std::string("the state") : vars) +
           " before this line writes, then step once to watch the value after the update; "
           "follow how it feeds test " + id + ".";
  } else if (tag == "H2:var-after-write") {
    text = "The write just above has taken effect by this line; check " +
           (vars.empty() ? std::string("the state") : vars) + " after that update while test " +
           id + " runs.";
  } else if (tag == "H1:branch-entry") {
    text = "Execution reaches this line only when the condition above allows it; with test " +
           id + "'s inputs, watch " + (vars.empty() ? std::string("the control flow") : vars) +
           " to see whether this path should run.";
  } else if (tag == "H1:after-construct") {
    text = "Execution continues here once the block above finishes; check " +
           (vars.empty() ? std::string("the state") : vars) + " at this point against what test " +
           id + " expects.";
  } else if (tag == "H3:function-entry") {
    text = "First stop inside " + ctx.enclosing_function + "; verify the arguments test " + id +
           " passes in look right before the body runs.";
  } else if (tag == "H3:call-site") {
    std::string callee = ctx.called_functions.empty() ? std::string("the helper")
                                                      : join(ctx.called_functions);
    text = "This line calls " + callee +
           "; watch the arguments going in and the value coming back while test " + id + " runs.";
  } else {
    text = "This line sits in the dependence region of the bug; watch " +
           (vars.empty() ? std::string("it") : vars) + " while test " + id + " runs.";
  }
  return cap_length(text);
}

void explain_plan(BreakpointPlan& plan, const std::vector<ExplanationContext>& contexts,
                  TextProvider* provider, std::ostream* log) {
  if (contexts.size() != plan.breakpoints.size()) {
    throw std::invalid_argument("explain_plan needs one context per breakpoint");
  }
  for (std::size_t i = 0; i < plan.breakpoints.size(); ++i) {
    Breakpoint& bp = plan.breakpoints[i];
    std::string text;
    if (provider) {
      ExplainRequest req;
      req.line = bp.line;
      req.kind = to_string(bp.kind);
      req.dominant_tag = dominant_tag(bp);
      req.failed_test_id = contexts[i].failed_test.id;
      req.variables = contexts[i].variables_in_scope;
      req.enclosing_function = contexts[i].enclosing_function;
      try {
        text = provider->explain(req);
      } catch (const std::exception& e) {
        if (log) *log << "explain provider failed for line " << bp.line << ": " << e.what()
                      << "; using template\n";
        text.clear();
      }
    }
    if (text.empty()) text = explain_breakpoint(contexts[i]);
    bp.explanation = text;
  }
}

std::vector<ExplanationContext> build_contexts(const BreakpointPlan& plan, const Program& student,
                                               const TestCase& failed_test,
                                               std::optional<TestVerdict> student_verdict) {
  std::vector<ExplanationContext> contexts;
  contexts.reserve(plan.breakpoints.size());
  for (const auto& bp : plan.breakpoints) {
    ExplanationContext ctx;
    ctx.breakpoint = bp;
    ctx.failed_test = failed_test;
    ctx.variables_in_scope = vars_read_at_line(student, bp.line);
    std::string written = var_written_at_line(student, bp.line);
    if (!written.empty() &&
        std::find(ctx.variables_in_scope.begin(), ctx.variables_in_scope.end(), written) ==
            ctx.variables_in_scope.end()) {
      ctx.variables_in_scope.insert(ctx.variables_in_scope.begin(), written);
    }
    ctx.called_functions = calls_at_line(student, bp.line);
    const FunctionDef* f = function_at_line(student, bp.line);
    ctx.enclosing_function = f ? f->name : "";
    ctx.student_verdict = student_verdict;
    contexts.push_back(std::move(ctx));
  }
  return contexts;
}

}  // namespace bpa
