#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bpa/ast.hpp"

namespace bpa {

/// Intraprocedural control-flow graph. One node per statement plus a virtual
/// entry and exit per function; While/For nodes re-execute on the back edge.
struct Cfg {
  struct Node {
    int line = 0;                    // 0 for virtual entry/exit
    const Stmt* stmt = nullptr;      // null for virtual nodes
    std::string function;
    bool is_entry = false;
    bool is_exit = false;
  };

  std::vector<Node> nodes;
  std::vector<std::vector<int>> successors;

  struct FunctionNodes {
    int entry = -1;
    int exit = -1;
    std::vector<int> body;  // statement nodes in pre-order
  };
  std::map<std::string, FunctionNodes> functions;

  std::vector<int> predecessors_of(int node) const;

  /// Line-level successor view (virtual nodes excluded), for tests and dumps.
  std::set<int> line_successors(int line) const;
};

Cfg build_cfg(const Program& p);

}  // namespace bpa
