#include "bpa/heuristics.hpp"

#include <algorithm>
#include <set>

namespace bpa {

const char* to_string(HeuristicSource s) {
  switch (s) {
    case HeuristicSource::H1Conditional: return "H1";
    case HeuristicSource::H2Variable: return "H2";
    case HeuristicSource::H3Function: return "H3";
  }
  return "?";
}

namespace {

// Innermost If/While/For whose span contains `line` (the construct's own
// line counts as inside).
const Stmt* enclosing_conditional(const Program& p, int line) {
  const Stmt* best = nullptr;
  for_each_stmt(p, [&](const Stmt& s) {
    bool conditional = std::holds_alternative<IfStmt>(s.node) ||
                       std::holds_alternative<WhileStmt>(s.node) ||
                       std::holds_alternative<ForStmt>(s.node);
    if (!conditional) return;
    if (s.line <= line && line <= last_line_of(s)) {
      if (!best || s.line > best->line) best = &s;
    }
  });
  return best;
}

// Entry lines of every branch block in an if/else-if chain.
void chain_branch_entries(const IfStmt& s, std::vector<int>& entries) {
  if (!s.then_block.empty()) entries.push_back(s.then_block.first_stmt_line());
  if (!s.else_arm) return;
  if (s.else_arm->is_chain()) {
    chain_branch_entries(std::get<IfStmt>(s.else_arm->else_if->node), entries);
  } else if (!s.else_arm->block.empty()) {
    entries.push_back(s.else_arm->block.first_stmt_line());
  }
}

}  // namespace

std::vector<HeuristicCandidate> conditional_heuristic(const ChangeSite& site, const Program& p,
                                                      const HeuristicsConfig& cfg) {
  std::vector<HeuristicCandidate> out;
  const Stmt* construct = enclosing_conditional(p, site.anchor_line);
  if (!construct) return out;

  std::vector<int> entries;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IfStmt>) {
          chain_branch_entries(node, entries);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          if (!node.body.empty()) entries.push_back(node.body.first_stmt_line());
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          if (!node.body.empty()) entries.push_back(node.body.first_stmt_line());
        }
      },
      construct->node);
  for (int line : entries) {
    out.push_back({line, HeuristicSource::H1Conditional, "branch-entry"});
  }

  if (cfg.h1_include_exit) {
    int after = next_statement_line(p, last_line_of(*construct));
    if (after != 0) out.push_back({after, HeuristicSource::H1Conditional, "after-construct"});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HeuristicCandidate> variable_heuristic(const ChangeSite& site, const Program& p,
                                                   const DependenceGraph&) {
  std::vector<HeuristicCandidate> out;
  const FunctionDef* f = function_at_line(p, site.anchor_line);
  if (!f) return out;

  for (const auto& var : site.modified_variables()) {
    std::set<int> writes;
    for_each_stmt(f->body, [&](const Stmt& s) {
      if (const auto* let = std::get_if<LetStmt>(&s.node)) {
        if (let->name == var) writes.insert(s.line);
      } else if (const auto* asg = std::get_if<AssignStmt>(&s.node)) {
        if (asg->name == var) writes.insert(s.line);
      } else if (const auto* fr = std::get_if<ForStmt>(&s.node)) {
        if (fr->var == var) writes.insert(s.line);
      }
    });
    for (int w : writes) {
      // a breakpoint pauses before its line runs, so the write line itself is
      // the "before" observation and the next statement the "after" one
      out.push_back({w, HeuristicSource::H2Variable, "var-write"});
      int after = next_statement_line(p, w);
      if (after != 0) out.push_back({after, HeuristicSource::H2Variable, "var-after-write"});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HeuristicCandidate> function_heuristic(const ChangeSite& site, const Program& p) {
  std::vector<HeuristicCandidate> out;
  const FunctionDef* f = find_function(p, site.enclosing_function());
  if (!f) return out;
  if (!f->body.empty()) {
    out.push_back({f->first_body_line, HeuristicSource::H3Function, "function-entry"});
  }
  for (int site_line : call_site_lines(p, f->name)) {
    out.push_back({site_line, HeuristicSource::H3Function, "call-site"});
  }
  std::sort(out.begin(), out.end());
  return out;
}

HeuristicPool heuristic_candidates(const std::vector<ChangeSite>& sites, const Program& p,
                                   const DependenceGraph& g, const HeuristicsConfig& cfg) {
  std::set<HeuristicCandidate> all;
  for (const auto& site : sites) {
    if (site.has(EditKindTag::ConditionChange)) {
      for (auto& c : conditional_heuristic(site, p, cfg)) all.insert(c);
    }
    if (site.has(EditKindTag::VariableModification)) {
      for (auto& c : variable_heuristic(site, p, g)) all.insert(c);
    }
    if (site.has(EditKindTag::FunctionScopeChange)) {
      for (auto& c : function_heuristic(site, p)) all.insert(c);
    }
  }
  HeuristicPool pool;
  for (const auto& c : all) {
    pool.lines.insert(c.line);
    pool.provenance[c.line].push_back(c);
  }
  return pool;
}

}  // namespace bpa
