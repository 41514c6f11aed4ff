#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpa/providers.hpp"
#include "bpa/recommend.hpp"

namespace bpa {

/// Everything the templates need about one breakpoint: the failed test, the
/// variables the line touches, and (when the student program was executed)
/// what actually came out.
struct ExplanationContext {
  Breakpoint breakpoint;
  TestCase failed_test;
  std::vector<std::string> variables_in_scope;  // read or written at the line
  std::vector<std::string> called_functions;    // callees at the line
  std::string enclosing_function;
  std::optional<TestVerdict> student_verdict;  // actual outcome, when known
};

/// Deterministic template text: bug-site lines say what must change; affected
/// lines say what to watch, keyed by the dominant provenance tag. Plain
/// single-paragraph text, at most 280 characters.
std::string explain_breakpoint(const ExplanationContext& ctx);

/// Fills every breakpoint's explanation. A configured provider overrides the
/// template per breakpoint but degrades to it on any provider error.
void explain_plan(BreakpointPlan& plan, const std::vector<ExplanationContext>& contexts,
                  TextProvider* provider = nullptr, std::ostream* log = nullptr);

/// Derives one context per plan breakpoint from the student program.
std::vector<ExplanationContext> build_contexts(const BreakpointPlan& plan, const Program& student,
                                               const TestCase& failed_test,
                                               std::optional<TestVerdict> student_verdict);

/// The provenance tag that picks the affected-line template.
std::string dominant_tag(const Breakpoint& bp);

}  // namespace bpa
