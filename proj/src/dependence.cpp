#include "bpa/dependence.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace bpa {

std::set<int> ReachingDefinitions::defs_for_use(int line, const std::string& var) const {
  auto it = use_to_defs.find({line, var});
  return it == use_to_defs.end() ? std::set<int>{} : it->second;
}

namespace {

struct Definition {
  int line;
  std::string var;
  bool operator<(const Definition& o) const {
    return std::tie(line, var) < std::tie(o.line, o.var);
  }
  bool operator==(const Definition& o) const { return line == o.line && var == o.var; }
};

// GEN for a CFG node: the definition it creates, if any.
std::vector<Definition> node_defs(const Cfg::Node& n, const Program& p) {
  std::vector<Definition> defs;
  if (n.is_entry) {
    const FunctionDef* f = find_function(p, n.function);
    if (f) {
      for (const auto& param : f->params) defs.push_back({f->header_line, param});
    }
    return defs;
  }
  if (!n.stmt) return defs;
  if (const auto* let = std::get_if<LetStmt>(&n.stmt->node)) {
    defs.push_back({n.line, let->name});
  } else if (const auto* asg = std::get_if<AssignStmt>(&n.stmt->node)) {
    defs.push_back({n.line, asg->name});
  } else if (const auto* fr = std::get_if<ForStmt>(&n.stmt->node)) {
    defs.push_back({n.line, fr->var});
  }
  return defs;
}

// Variables the node's own expressions read (not nested blocks).
std::vector<std::string> node_uses(const Cfg::Node& n) {
  std::vector<std::string> uses;
  if (!n.stmt) return uses;
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt>) {
          collect_var_reads(*st.value, uses);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          collect_var_reads(*st.cond, uses);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          collect_var_reads(*st.cond, uses);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          collect_var_reads(*st.from, uses);
          collect_var_reads(*st.to, uses);
        } else if constexpr (std::is_same_v<T, ReturnStmt> || std::is_same_v<T, PrintStmt>) {
          collect_var_reads(*st.value, uses);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          collect_var_reads(*st.expr, uses);
        }
      },
      n.stmt->node);
  return uses;
}

}  // namespace

ReachingDefinitions reaching_definitions(const Cfg& cfg, const Program& p) {
  const std::size_t n = cfg.nodes.size();
  std::vector<std::set<Definition>> in(n), out(n);
  std::vector<std::vector<Definition>> gen(n);
  for (std::size_t i = 0; i < n; ++i) gen[i] = node_defs(cfg.nodes[i], p);

  // Classic worklist fixpoint; a def of v kills every other def of v.
  std::deque<int> worklist;
  for (std::size_t i = 0; i < n; ++i) worklist.push_back(static_cast<int>(i));
  std::vector<std::vector<int>> preds(n);
  for (std::size_t from = 0; from < n; ++from) {
    for (int to : cfg.successors[from]) preds[to].push_back(static_cast<int>(from));
  }

  while (!worklist.empty()) {
    int node = worklist.front();
    worklist.pop_front();
    std::set<Definition> new_in;
    for (int pr : preds[node]) new_in.insert(out[pr].begin(), out[pr].end());
    std::set<Definition> new_out = new_in;
    for (const auto& d : gen[node]) {
      for (auto it = new_out.begin(); it != new_out.end();) {
        it = (it->var == d.var) ? new_out.erase(it) : std::next(it);
      }
    }
    for (const auto& d : gen[node]) new_out.insert(d);
    if (new_in != in[node] || new_out != out[node]) {
      in[node] = std::move(new_in);
      out[node] = std::move(new_out);
      for (int succ : cfg.successors[node]) worklist.push_back(succ);
    }
  }

  ReachingDefinitions rd;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& use : node_uses(cfg.nodes[i])) {
      auto& defs = rd.use_to_defs[{cfg.nodes[i].line, use}];
      for (const auto& d : in[i]) {
        if (d.var == use) defs.insert(d.line);
      }
    }
  }
  return rd;
}

namespace {

void add_control_edges(const Block& block, int controller, DependenceGraph& g);

void control_edges_for_stmt(const Stmt& s, int controller, DependenceGraph& g) {
  if (controller != 0) g.control_edges.insert({controller, s.line});
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, IfStmt>) {
          add_control_edges(st.then_block, s.line, g);
          if (st.else_arm) {
            if (st.else_arm->is_chain()) {
              control_edges_for_stmt(*st.else_arm->else_if, s.line, g);
            } else {
              add_control_edges(st.else_arm->block, s.line, g);
            }
          }
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          add_control_edges(st.body, s.line, g);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          add_control_edges(st.body, s.line, g);
        }
      },
      s.node);
}

void add_control_edges(const Block& block, int controller, DependenceGraph& g) {
  for (const auto& s : block.stmts) control_edges_for_stmt(*s, controller, g);
}

std::set<int> return_lines(const FunctionDef& f) {
  std::set<int> out;
  for_each_stmt(f.body, [&](const Stmt& s) {
    if (std::holds_alternative<ReturnStmt>(s.node)) out.insert(s.line);
  });
  return out;
}

}  // namespace

DependenceGraph build_dependence_graph(const Program& p) {
  DependenceGraph g;

  // nodes: every statement line plus every function header line
  g.nodes = statement_lines(p);
  for (const auto& f : p.functions) g.nodes.insert(f.header_line);

  Cfg cfg = build_cfg(p);
  ReachingDefinitions rd = reaching_definitions(cfg, p);
  for (const auto& [use, defs] : rd.use_to_defs) {
    for (int def_line : defs) {
      g.data_edges.insert({def_line, use.first, use.second});
    }
  }

  for (const auto& f : p.functions) add_control_edges(f.body, 0, g);

  for (const auto& f : p.functions) {
    std::set<int> sites = call_site_lines(p, f.name);
    if (sites.empty()) continue;
    std::set<int> returns = return_lines(f);
    for (int site : sites) {
      g.call_edges.insert({site, f.header_line});
      for (int ret : returns) g.call_edges.insert({ret, site});
    }
  }

  auto link = [&](int from, int to) {
    g.successors[from].insert(to);
    g.predecessors[to].insert(from);
  };
  for (const auto& e : g.data_edges) link(e.from, e.to);
  for (const auto& [from, to] : g.control_edges) link(from, to);
  for (const auto& [from, to] : g.call_edges) link(from, to);
  return g;
}

namespace {

LineSet closure(const DependenceGraph& g, const LineSet& seeds,
                const std::map<int, std::set<int>>& adjacency) {
  for (int seed : seeds) {
    if (!g.nodes.count(seed)) throw UnknownLine(seed);
  }
  LineSet visited = seeds;
  std::deque<int> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    int line = queue.front();
    queue.pop_front();
    auto it = adjacency.find(line);
    if (it == adjacency.end()) continue;
    for (int next : it->second) {
      if (visited.insert(next).second) queue.push_back(next);
    }
  }
  return visited;
}

}  // namespace

LineSet backward_slice(const DependenceGraph& g, const LineSet& seeds) {
  return closure(g, seeds, g.predecessors);
}

LineSet forward_slice(const DependenceGraph& g, const LineSet& seeds) {
  return closure(g, seeds, g.successors);
}

LineSet slice_region(const DependenceGraph& g, const LineSet& seeds) {
  LineSet back = backward_slice(g, seeds);
  LineSet fwd = forward_slice(g, seeds);
  back.insert(fwd.begin(), fwd.end());
  return back;
}

std::map<int, int> forward_distances(const DependenceGraph& g, const LineSet& sources) {
  std::map<int, int> dist;
  std::deque<int> queue;
  for (int s : sources) {
    if (g.nodes.count(s)) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int line = queue.front();
    queue.pop_front();
    auto it = g.successors.find(line);
    if (it == g.successors.end()) continue;
    for (int next : it->second) {
      if (!dist.count(next)) {
        dist[next] = dist[line] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

std::string to_dot(const DependenceGraph& g) {
  std::ostringstream out;
  out << "digraph dependence {\n";
  for (int node : g.nodes) {
    out << "  L" << node << " [label=\"" << node << "\"];\n";
  }
  for (const auto& e : g.data_edges) {
    out << "  L" << e.from << " -> L" << e.to << " [style=solid, label=\"" << e.var << "\"];\n";
  }
  for (const auto& [from, to] : g.control_edges) {
    out << "  L" << from << " -> L" << to << " [style=dashed];\n";
  }
  for (const auto& [from, to] : g.call_edges) {
    out << "  L" << from << " -> L" << to << " [style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bpa
