#pragma once

#include <set>
#include <string>
#include <vector>

#include "bpa/heuristics.hpp"
#include "bpa/testing.hpp"

namespace bpa {

enum class BreakpointKind { BugSite, Affected };

const char* to_string(BreakpointKind k);

struct Breakpoint {
  int line = 0;
  BreakpointKind kind = BreakpointKind::BugSite;
  std::set<std::string> provenance;  // "diff", "slice", "H1:branch-entry", ...
  std::string explanation;
};

struct BreakpointPlan {
  std::string task_id;
  std::string failed_test_id;
  std::vector<Breakpoint> breakpoints;  // bug sites ascending, then affected ascending
  std::string fixed_source_digest;      // content hash of the fixed program used
};

struct RecommenderConfig {
  int max_breakpoints = 10;
  HeuristicsConfig heuristics;
  long long step_limit = kDefaultStepLimit;
};

struct FixDoesNotPass : std::runtime_error {
  explicit FixDoesNotPass(const std::string& test_id)
      : std::runtime_error("fixed program does not pass test '" + test_id + "'") {}
};

/// Builds the plan: bug-site breakpoints at every diff anchor, affected
/// breakpoints at (slice region ∩ heuristic candidates) \ bug sites, ordered
/// and capped. An empty diff yields an empty plan. Breakpoint lines refer to
/// the canonical form of the student program (inputs are renumbered onto it).
/// Explanations are left blank; fill them with explain_plan.
BreakpointPlan recommend(const Program& student, const Program& fixed,
                         const TestCase& failed_test, const RecommenderConfig& cfg,
                         const std::string& task_id);

/// Canonical JSON serialization (fixed field order, byte-stable).
std::string plan_to_json(const BreakpointPlan& plan);

}  // namespace bpa
