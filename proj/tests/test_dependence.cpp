#include <doctest.h>

#include <random>

#include "bpa/dependence.hpp"
#include "bpa/parser.hpp"
#include "bpa/printer.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"
#include "support/slice_oracle.hpp"

using namespace bpa;

TEST_CASE("cfg: reference sum successors") {
  Program p = parse(testref::kStudentSum);
  Cfg cfg = build_cfg(p);
  CHECK(cfg.line_successors(2) == std::set<int>{3});
  CHECK(cfg.line_successors(3) == std::set<int>{4});
  CHECK(cfg.line_successors(4) == std::set<int>{5, 8});
  CHECK(cfg.line_successors(5) == std::set<int>{6});
  CHECK(cfg.line_successors(6) == std::set<int>{4});
  CHECK(cfg.line_successors(8).empty());  // return edges to virtual exit only
}

TEST_CASE("cfg: straight-line function is a chain") {
  Program p = parse("fun f(a) {\n  let x = a;\n  let y = x;\n  return y;\n}\n");
  Cfg cfg = build_cfg(p);
  CHECK(cfg.line_successors(2) == std::set<int>{3});
  CHECK(cfg.line_successors(3) == std::set<int>{4});
  CHECK(cfg.line_successors(4).empty());
}

TEST_CASE("cfg: if without else branches to body and continuation") {
  Program p = parse(
      "fun f(x) {\n"
      "  if (x > 0) {\n"
      "    x = 1;\n"
      "  }\n"
      "  return x;\n"
      "}\n");
  Cfg cfg = build_cfg(p);
  CHECK(cfg.line_successors(2) == std::set<int>{3, 5});
  CHECK(cfg.line_successors(3) == std::set<int>{5});
}

TEST_CASE("cfg: every statement node is reachable from its entry") {
  for (const char* src : {testref::kStudentSum, testref::kFactorial}) {
    Program p = parse(src);
    Cfg cfg = build_cfg(p);
    for (const auto& [name, fn] : cfg.functions) {
      std::set<int> seen{fn.entry};
      std::vector<int> stack{fn.entry};
      while (!stack.empty()) {
        int node = stack.back();
        stack.pop_back();
        for (int succ : cfg.successors[static_cast<std::size_t>(node)]) {
          if (seen.insert(succ).second) stack.push_back(succ);
        }
      }
      for (int node : fn.body) CHECK(seen.count(node));
    }
  }
}

TEST_CASE("reaching definitions on the reference program") {
  Program p = parse(testref::kStudentSum);
  Cfg cfg = build_cfg(p);
  ReachingDefinitions rd = reaching_definitions(cfg, p);
  CHECK(rd.defs_for_use(4, "i") == std::set<int>{3, 6});
  CHECK(rd.defs_for_use(4, "n") == std::set<int>{1});
  CHECK(rd.defs_for_use(8, "s") == std::set<int>{2, 5});
  CHECK(rd.defs_for_use(5, "s") == std::set<int>{2, 5});
  CHECK(rd.defs_for_use(5, "i") == std::set<int>{3, 6});
}

TEST_CASE("reaching definitions: single def, single use") {
  Program p = parse("fun f() {\n  let x = 1;\n  return x;\n}\n");
  Cfg cfg = build_cfg(p);
  ReachingDefinitions rd = reaching_definitions(cfg, p);
  CHECK(rd.defs_for_use(3, "x") == std::set<int>{2});
}

TEST_CASE("reaching definitions: redefinition kills the earlier def") {
  Program p = parse("fun f() {\n  let x = 1;\n  x = 2;\n  return x;\n}\n");
  Cfg cfg = build_cfg(p);
  ReachingDefinitions rd = reaching_definitions(cfg, p);
  CHECK(rd.defs_for_use(4, "x") == std::set<int>{3});
}

TEST_CASE("dependence graph: reference edges") {
  Program p = parse(testref::kStudentSum);
  DependenceGraph g = build_dependence_graph(p);
  CHECK(g.control_edges.count({4, 5}));
  CHECK(g.control_edges.count({4, 6}));
  CHECK(g.has_data_edge(3, 4, "i"));
  CHECK(g.has_data_edge(6, 4, "i"));
  CHECK(g.has_data_edge(5, 8, "s"));
  CHECK(g.has_data_edge(2, 5, "s"));
  CHECK(g.has_data_edge(5, 5, "s"));
  CHECK(g.has_data_edge(1, 4, "n"));
  CHECK(g.call_edges.empty());
  CHECK(g.nodes == std::set<int>{1, 2, 3, 4, 5, 6, 8});
}

TEST_CASE("dependence graph: let c = a + b draws edges from both defs") {
  Program p = parse(
      "fun f() {\n"
      "  let a = 1;\n"
      "  let b = 2;\n"
      "  let c = a + b;\n"
      "  return c;\n"
      "}\n");
  DependenceGraph g = build_dependence_graph(p);
  CHECK(g.has_data_edge(2, 4, "a"));
  CHECK(g.has_data_edge(3, 4, "b"));
}

TEST_CASE("dependence graph: non-interacting functions stay separate") {
  Program p = parse(
      "fun f(a) {\n"
      "  return a + 1;\n"
      "}\n"
      "fun g(b) {\n"
      "  return b * 2;\n"
      "}\n");
  DependenceGraph g = build_dependence_graph(p);
  for (const auto& e : g.data_edges) {
    bool both_f = e.from <= 3 && e.to <= 3;
    bool both_g = e.from >= 4 && e.to >= 4;
    CHECK((both_f || both_g));
  }
  CHECK(g.call_edges.empty());
}

TEST_CASE("dependence graph: call edges link sites, headers, and returns") {
  Program p = parse(
      "fun add(a, b) {\n"
      "  return a + b;\n"
      "}\n"
      "fun main(x) {\n"
      "  let r = add(x, 1);\n"
      "  return r;\n"
      "}\n");
  DependenceGraph g = build_dependence_graph(p);
  CHECK(g.call_edges.count({5, 1}));  // call site -> header
  CHECK(g.call_edges.count({2, 5}));  // return -> call site
}

TEST_CASE("backward slice of the reference loop condition") {
  Program p = parse(testref::kStudentSum);
  DependenceGraph g = build_dependence_graph(p);
  CHECK(backward_slice(g, {4}) == LineSet{1, 3, 4, 6});
}

TEST_CASE("forward slice of the reference loop condition") {
  Program p = parse(testref::kStudentSum);
  DependenceGraph g = build_dependence_graph(p);
  CHECK(forward_slice(g, {4}) == LineSet{4, 5, 6, 8});
}

TEST_CASE("slice region is the union of both directions") {
  Program p = parse(testref::kStudentSum);
  DependenceGraph g = build_dependence_graph(p);
  CHECK(slice_region(g, {4}) == LineSet{1, 3, 4, 5, 6, 8});
}

TEST_CASE("slices: empty seeds, full seeds, isolated seed") {
  Program p = parse(testref::kStudentSum);
  DependenceGraph g = build_dependence_graph(p);
  CHECK(backward_slice(g, {}).empty());
  CHECK(forward_slice(g, {}).empty());
  CHECK(slice_region(g, {}).empty());
  CHECK(backward_slice(g, g.nodes) == g.nodes);
  CHECK(forward_slice(g, g.nodes) == g.nodes);

  Program iso = parse("fun f() {\n  return 1;\n}\n");
  DependenceGraph gi = build_dependence_graph(iso);
  CHECK(forward_slice(gi, {2}) == LineSet{2});
}

TEST_CASE("slices: unknown seed line throws") {
  Program p = parse(testref::kStudentSum);
  DependenceGraph g = build_dependence_graph(p);
  CHECK_THROWS_AS(backward_slice(g, {99}), UnknownLine);
  CHECK_THROWS_AS(forward_slice(g, {7}), UnknownLine);  // brace-only line
}

TEST_CASE("slice properties over random programs") {
  std::mt19937_64 seed_rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    testgen::ProgramGenerator gen(seed_rng());
    Program p = parse(pretty_print(gen.generate()));
    DependenceGraph g = build_dependence_graph(p);
    if (g.nodes.empty()) continue;
    std::vector<int> nodes(g.nodes.begin(), g.nodes.end());

    LineSet a, b;
    for (int node : nodes) {
      if (seed_rng() % 3 == 0) a.insert(node);
      if (seed_rng() % 3 == 0) b.insert(node);
    }
    b.insert(a.begin(), a.end());  // a ⊆ b

    // containment
    LineSet back = backward_slice(g, a);
    LineSet fwd = forward_slice(g, a);
    for (int s : a) {
      CHECK(back.count(s));
      CHECK(fwd.count(s));
    }
    // monotonicity
    LineSet back_b = backward_slice(g, b);
    LineSet fwd_b = forward_slice(g, b);
    for (int v : back) CHECK(back_b.count(v));
    for (int v : fwd) CHECK(fwd_b.count(v));
    LineSet region_a = slice_region(g, a);
    LineSet region_b = slice_region(g, b);
    for (int v : region_a) CHECK(region_b.count(v));
    // idempotence
    CHECK(backward_slice(g, back) == back);
    CHECK(forward_slice(g, fwd) == fwd);
  }
}

TEST_CASE("slices agree with the adjacency-matrix closure oracle") {
  std::mt19937_64 seed_rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    testgen::ProgramGenerator gen(seed_rng());
    Program p = parse(pretty_print(gen.generate()));
    DependenceGraph g = build_dependence_graph(p);
    if (g.nodes.empty()) continue;
    testoracle::ReachabilityMatrix oracle(g);
    std::vector<int> nodes(g.nodes.begin(), g.nodes.end());
    for (int rep = 0; rep < 10; ++rep) {
      LineSet seeds;
      for (int node : nodes) {
        if (seed_rng() % 4 == 0) seeds.insert(node);
      }
      CHECK(backward_slice(g, seeds) == oracle.backward(seeds));
      CHECK(forward_slice(g, seeds) == oracle.forward(seeds));
    }
  }
}

TEST_CASE("dataflow soundness: every data edge has a def-clear CFG path") {
  const char* sources[] = {testref::kStudentSum, testref::kFixedSum, testref::kFactorial};
  for (const char* src : sources) {
    Program p = parse(src);
    Cfg cfg = build_cfg(p);
    DependenceGraph g = build_dependence_graph(p);
    for (const auto& edge : g.data_edges) {
      // DFS from the def node looking for the use without passing another
      // def of the same variable (the def node itself may be revisited).
      std::vector<int> def_nodes, use_nodes;
      for (std::size_t i = 0; i < cfg.nodes.size(); ++i) {
        const auto& n = cfg.nodes[i];
        int line = n.is_entry ? (find_function(p, n.function)
                                     ? find_function(p, n.function)->header_line
                                     : 0)
                              : n.line;
        if (line == edge.from) def_nodes.push_back(static_cast<int>(i));
        if (n.line == edge.to && n.stmt) use_nodes.push_back(static_cast<int>(i));
      }
      auto redefines = [&](int node) {
        const auto& n = cfg.nodes[static_cast<std::size_t>(node)];
        if (!n.stmt) return false;
        if (const auto* let = std::get_if<LetStmt>(&n.stmt->node)) return let->name == edge.var;
        if (const auto* asg = std::get_if<AssignStmt>(&n.stmt->node)) return asg->name == edge.var;
        if (const auto* fr = std::get_if<ForStmt>(&n.stmt->node)) return fr->var == edge.var;
        return false;
      };
      bool found = false;
      for (int start : def_nodes) {
        std::set<int> seen;
        std::vector<int> stack;
        for (int succ : cfg.successors[static_cast<std::size_t>(start)]) stack.push_back(succ);
        while (!stack.empty() && !found) {
          int node = stack.back();
          stack.pop_back();
          if (!seen.insert(node).second) continue;
          for (int use : use_nodes) {
            if (node == use) found = true;
          }
          if (found) break;
          if (redefines(node)) continue;  // path is cut here
          for (int succ : cfg.successors[static_cast<std::size_t>(node)]) stack.push_back(succ);
        }
        if (found) break;
      }
      CAPTURE(edge.from);
      CAPTURE(edge.to);
      CAPTURE(edge.var);
      CHECK(found);
    }
  }
}

TEST_CASE("DOT dump uses the three edge styles") {
  Program p = parse(
      "fun add(a, b) {\n"
      "  return a + b;\n"
      "}\n"
      "fun main(x) {\n"
      "  if (x > 0) {\n"
      "    x = add(x, 1);\n"
      "  }\n"
      "  return x;\n"
      "}\n");
  DependenceGraph g = build_dependence_graph(p);
  std::string dot = to_dot(g);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("style=dotted") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}
