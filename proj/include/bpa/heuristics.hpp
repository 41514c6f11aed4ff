#pragma once

#include <map>
#include <string>
#include <vector>

#include "bpa/dependence.hpp"
#include "bpa/diff.hpp"

namespace bpa {

enum class HeuristicSource { H1Conditional, H2Variable, H3Function };

const char* to_string(HeuristicSource s);

struct HeuristicCandidate {
  int line = 0;
  HeuristicSource source = HeuristicSource::H1Conditional;
  std::string reason;  // branch-entry | after-construct | var-write | var-after-write
                       // | function-entry | call-site

  bool operator<(const HeuristicCandidate& o) const {
    return std::tie(line, source, reason) < std::tie(o.line, o.source, o.reason);
  }
  bool operator==(const HeuristicCandidate& o) const {
    return line == o.line && source == o.source && reason == o.reason;
  }
};

struct HeuristicsConfig {
  bool h1_include_exit = true;  // include the first statement after the construct
};

/// Conditional-statement heuristic: entry line of every branch block of the
/// conditional construct at (or enclosing) the anchor, plus the first
/// statement after the whole construct. Caller filters for ConditionChange.
std::vector<HeuristicCandidate> conditional_heuristic(const ChangeSite& site, const Program& p,
                                                      const HeuristicsConfig& cfg = {});

/// Variable-modification heuristic: for each triggered variable, every write
/// line in the enclosing function and the next statement line after each
/// write. Caller filters for VariableModification.
std::vector<HeuristicCandidate> variable_heuristic(const ChangeSite& site, const Program& p,
                                                   const DependenceGraph& g);

/// Function-scope heuristic: the changed function's first body line and every
/// call site of it in the program.
std::vector<HeuristicCandidate> function_heuristic(const ChangeSite& site, const Program& p);

/// Union over all sites of every applicable heuristic, deduplicated, with
/// per-line provenance retained for explanations.
struct HeuristicPool {
  LineSet lines;
  std::map<int, std::vector<HeuristicCandidate>> provenance;  // (line, source, reason) sorted
};

HeuristicPool heuristic_candidates(const std::vector<ChangeSite>& sites, const Program& p,
                                   const DependenceGraph& g, const HeuristicsConfig& cfg = {});

}  // namespace bpa
