#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpa/cfg.hpp"

namespace bpa {

/// Lines of a specific program.
using LineSet = std::set<int>;

/// Forward may-analysis result: for each (line, variable-use), the defining
/// lines that reach it. Definitions come from let/assign statements, for-loop
/// variables, and function parameters (defined at the header line).
class ReachingDefinitions {
 public:
  std::set<int> defs_for_use(int line, const std::string& var) const;

  std::map<std::pair<int, std::string>, std::set<int>> use_to_defs;
};

ReachingDefinitions reaching_definitions(const Cfg& cfg, const Program& p);

/// Line-keyed dependence graph:
///  - data edges (def line -> use line, variable) from reaching definitions;
///  - control edges (construct line -> directly nested statement line), with
///    nested constructs relaying control to their own bodies;
///  - call edges (call site -> callee header) and (callee return -> call site).
struct DependenceGraph {
  struct DataEdge {
    int from = 0;
    int to = 0;
    std::string var;
    bool operator<(const DataEdge& o) const {
      return std::tie(from, to, var) < std::tie(o.from, o.to, o.var);
    }
    bool operator==(const DataEdge& o) const {
      return from == o.from && to == o.to && var == o.var;
    }
  };

  std::set<int> nodes;
  std::set<DataEdge> data_edges;
  std::set<std::pair<int, int>> control_edges;
  std::set<std::pair<int, int>> call_edges;

  // union adjacency over all three edge kinds
  std::map<int, std::set<int>> successors;
  std::map<int, std::set<int>> predecessors;

  bool has_data_edge(int from, int to, const std::string& var) const {
    return data_edges.count(DataEdge{from, to, var}) > 0;
  }
};

struct UnknownLine : std::runtime_error {
  int line;
  explicit UnknownLine(int line_)
      : std::runtime_error("line " + std::to_string(line_) + " is not a dependence-graph node"),
        line(line_) {}
};

DependenceGraph build_dependence_graph(const Program& p);

/// Least set containing `seeds` closed under predecessors across data,
/// control, and call edges.
LineSet backward_slice(const DependenceGraph& g, const LineSet& seeds);

/// Dual closure under successors.
LineSet forward_slice(const DependenceGraph& g, const LineSet& seeds);

/// backward_slice(seeds) ∪ forward_slice(seeds).
LineSet slice_region(const DependenceGraph& g, const LineSet& seeds);

/// Multi-source BFS distance from `sources` following successor edges;
/// unreachable lines are absent from the map.
std::map<int, int> forward_distances(const DependenceGraph& g, const LineSet& sources);

/// DOT dump: data edges solid, control edges dashed, call edges dotted.
std::string to_dot(const DependenceGraph& g);

}  // namespace bpa
