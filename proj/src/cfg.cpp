#include "bpa/cfg.hpp"

#include <algorithm>

namespace bpa {

std::vector<int> Cfg::predecessors_of(int node) const {
  std::vector<int> preds;
  for (std::size_t from = 0; from < successors.size(); ++from) {
    for (int to : successors[from]) {
      if (to == node) preds.push_back(static_cast<int>(from));
    }
  }
  return preds;
}

std::set<int> Cfg::line_successors(int line) const {
  std::set<int> out;
  for (std::size_t from = 0; from < nodes.size(); ++from) {
    if (nodes[from].line != line || nodes[from].stmt == nullptr) continue;
    for (int to : successors[from]) {
      if (nodes[to].stmt != nullptr) out.insert(nodes[to].line);
    }
  }
  return out;
}

namespace {

class CfgBuilder {
 public:
  explicit CfgBuilder(const Program& p) : program_(p) {}

  Cfg build() {
    for (const auto& f : program_.functions) {
      current_function_ = f.name;
      Cfg::FunctionNodes fn;
      fn.entry = add_virtual(true, false);
      fn.exit = add_virtual(false, true);
      exit_ = fn.exit;
      int first = wire_block(f.body, fn.exit, &fn.body);
      add_edge(fn.entry, first);
      cfg_.functions[f.name] = std::move(fn);
    }
    return std::move(cfg_);
  }

 private:
  const Program& program_;
  Cfg cfg_;
  std::string current_function_;
  int exit_ = -1;

  int add_virtual(bool entry, bool exit) {
    Cfg::Node n;
    n.function = current_function_;
    n.is_entry = entry;
    n.is_exit = exit;
    cfg_.nodes.push_back(n);
    cfg_.successors.emplace_back();
    return static_cast<int>(cfg_.nodes.size()) - 1;
  }

  int add_stmt_node(const Stmt& s, std::vector<int>* order) {
    Cfg::Node n;
    n.line = s.line;
    n.stmt = &s;
    n.function = current_function_;
    cfg_.nodes.push_back(n);
    cfg_.successors.emplace_back();
    int id = static_cast<int>(cfg_.nodes.size()) - 1;
    if (order) order->push_back(id);
    return id;
  }

  void add_edge(int from, int to) {
    auto& succ = cfg_.successors[from];
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) succ.push_back(to);
  }

  // Wires `block` so control falls through to `after`; returns the node id
  // execution enters first (`after` when the block is empty).
  int wire_block(const Block& block, int after, std::vector<int>* order) {
    auto [entry, tails] = wire_subblock(block, order);
    if (entry == -1) return after;
    for (int t : tails) add_edge(t, after);
    return entry;
  }

  // Builds the node(s) for one statement; sets current_tails_ to the nodes
  // whose fallthrough leads to whatever follows the statement.
  int wire_stmt(const Stmt& s, std::vector<int>* order) {
    int node = add_stmt_node(s, order);
    current_tails_.clear();
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, ReturnStmt>) {
            add_edge(node, exit_);
            // no fallthrough
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            wire_if(node, st, order);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            wire_loop(node, st.body, order);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            wire_loop(node, st.body, order);
          } else {
            current_tails_.push_back(node);
          }
        },
        s.node);
    return node;
  }

  void wire_if(int node, const IfStmt& st, std::vector<int>* order) {
    std::vector<int> join_tails;

    auto wire_branch = [&](const Block& b) {
      if (b.empty()) {
        join_tails.push_back(node);
        return;
      }
      auto [first, tails] = wire_subblock(b, order);
      add_edge(node, first);
      join_tails.insert(join_tails.end(), tails.begin(), tails.end());
    };

    wire_branch(st.then_block);
    if (!st.else_arm) {
      join_tails.push_back(node);  // condition false falls through
    } else if (st.else_arm->is_chain()) {
      int inner = wire_stmt(*st.else_arm->else_if, order);
      add_edge(node, inner);
      join_tails.insert(join_tails.end(), current_tails_.begin(), current_tails_.end());
    } else {
      wire_branch(st.else_arm->block);
    }
    current_tails_ = std::move(join_tails);
  }

  void wire_loop(int node, const Block& body, std::vector<int>* order) {
    if (body.empty()) {
      add_edge(node, node);  // condition true loops straight back
    } else {
      auto [first, tails] = wire_subblock(body, order);
      add_edge(node, first);
      for (int t : tails) add_edge(t, node);  // back edge
    }
    current_tails_ = {node};  // condition false exits the loop
  }

  // Like wire_block but returns (entry node, fallthrough tails) without
  // binding them to a successor yet.
  std::pair<int, std::vector<int>> wire_subblock(const Block& block, std::vector<int>* order) {
    int entry = -1;
    std::vector<int> prev_tails;
    for (const auto& sp : block.stmts) {
      int node = wire_stmt(*sp, order);
      if (entry == -1) {
        entry = node;
      } else {
        for (int t : prev_tails) add_edge(t, node);
      }
      prev_tails = current_tails_;
    }
    return {entry, prev_tails};
  }

  std::vector<int> current_tails_;
};

}  // namespace

Cfg build_cfg(const Program& p) {
  CfgBuilder builder(p);
  return builder.build();
}

}  // namespace bpa
