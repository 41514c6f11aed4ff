#include "bpa/recommend.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "bpa/diff.hpp"
#include "bpa/hash.hpp"
#include "bpa/parser.hpp"
#include "bpa/printer.hpp"

namespace bpa {

const char* to_string(BreakpointKind k) {
  return k == BreakpointKind::BugSite ? "bug-site" : "affected";
}

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

BreakpointPlan recommend(const Program& student_raw, const Program& fixed_raw,
                         const TestCase& failed_test, const RecommenderConfig& cfg,
                         const std::string& task_id) {
  // Plan lines refer to the canonical text, so renumber both programs onto it
  // up front; already-canonical input re-parses to itself.
  Program student = parse(pretty_print(student_raw));
  Program fixed = parse(pretty_print(fixed_raw));
  std::string fixed_canonical = pretty_print(fixed);

  BreakpointPlan plan;
  plan.task_id = task_id;
  plan.failed_test_id = failed_test.id;
  plan.fixed_source_digest = fnv1a64_hex(fixed_canonical);

  if (run_test(fixed, failed_test, cfg.step_limit).status != TestStatus::Pass) {
    throw FixDoesNotPass(failed_test.id);
  }

  std::vector<DiffHunk> hunks = diff_lines(student, fixed);
  if (hunks.empty()) return plan;  // nothing to change, nothing to recommend

  std::vector<ChangeSite> sites = anchor_and_classify(hunks, student, fixed);
  LineSet bug_sites;
  for (const auto& site : sites) bug_sites.insert(site.anchor_line);

  DependenceGraph g = build_dependence_graph(student);
  LineSet region = slice_region(g, bug_sites);
  HeuristicPool pool = heuristic_candidates(sites, student, g, cfg.heuristics);

  LineSet affected;
  for (int line : region) {
    if (pool.lines.count(line) && !bug_sites.count(line)) affected.insert(line);
  }

  // truncation priority: bug sites first (ascending line), then affected by
  // ascending dependence distance from the nearest bug site, ties by line
  std::map<int, int> dist = forward_distances(g, bug_sites);
  std::vector<int> affected_ranked(affected.begin(), affected.end());
  std::stable_sort(affected_ranked.begin(), affected_ranked.end(), [&](int a, int b) {
    int da = dist.count(a) ? dist.at(a) : std::numeric_limits<int>::max();
    int db = dist.count(b) ? dist.at(b) : std::numeric_limits<int>::max();
    return std::tie(da, a) < std::tie(db, b);
  });

  std::size_t cap = cfg.max_breakpoints < 0 ? 0 : static_cast<std::size_t>(cfg.max_breakpoints);
  std::vector<int> bug_kept(bug_sites.begin(), bug_sites.end());
  if (bug_kept.size() > cap) bug_kept.resize(cap);
  std::size_t affected_budget = cap - bug_kept.size();
  if (affected_ranked.size() > affected_budget) affected_ranked.resize(affected_budget);
  std::sort(affected_ranked.begin(), affected_ranked.end());

  for (int line : bug_kept) {
    Breakpoint bp;
    bp.line = line;
    bp.kind = BreakpointKind::BugSite;
    bp.provenance.insert("diff");
    plan.breakpoints.push_back(std::move(bp));
  }
  for (int line : affected_ranked) {
    Breakpoint bp;
    bp.line = line;
    bp.kind = BreakpointKind::Affected;
    bp.provenance.insert("slice");
    auto it = pool.provenance.find(line);
    if (it != pool.provenance.end()) {
      for (const auto& cand : it->second) {
        bp.provenance.insert(std::string(to_string(cand.source)) + ":" + cand.reason);
      }
    }
    plan.breakpoints.push_back(std::move(bp));
  }
  return plan;
}

std::string plan_to_json(const BreakpointPlan& plan) {
  nlohmann::ordered_json j;
  j["task_id"] = plan.task_id;
  j["failed_test_id"] = plan.failed_test_id;
  j["breakpoints"] = nlohmann::ordered_json::array();
  for (const auto& bp : plan.breakpoints) {
    nlohmann::ordered_json bj;
    bj["line"] = bp.line;
    bj["kind"] = to_string(bp.kind);
    bj["provenance"] = bp.provenance;  // std::set keeps this sorted and stable
    bj["explanation"] = bp.explanation;
    j["breakpoints"].push_back(std::move(bj));
  }
  return j.dump(2) + "\n";
}

}  // namespace bpa
