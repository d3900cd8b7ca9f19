#pragma once

// Directed relations on a small vertex set: transitive unions of posets given
// by their arcs, cycle detection, and enumeration of linear extensions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hbo/errors.hpp"

namespace hbo {

class RelationGraph {
 public:
  RelationGraph() = default;
  explicit RelationGraph(int vertices) : vertices_(vertices) {
    if (vertices < 0) throw argument_error("RelationGraph: negative vertex count");
  }

  /// The chain c[0] < c[1] < ... as covering arcs.
  static RelationGraph chain(int vertices, const std::vector<int>& c) {
    RelationGraph g(vertices);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) g.add_arc(c[i], c[i + 1]);
    return g;
  }

  int vertex_count() const { return vertices_; }
  const std::set<std::pair<int, int>>& arcs() const { return arcs_; }

  void add_arc(int from, int to) {
    if (from < 0 || to < 0 || from >= vertices_ || to >= vertices_)
      throw argument_error("RelationGraph: arc endpoint out of range");
    arcs_.emplace(from, to);
  }

  std::vector<std::vector<int>> successors() const {
    std::vector<std::vector<int>> out(vertices_);
    for (const auto& [a, b] : arcs_) out[a].push_back(b);
    return out;
  }

  /// a < b: a directed path of positive length from a to b.
  bool reaches(int a, int b) const {
    const auto succ = successors();
    std::vector<bool> seen(vertices_, false);
    std::vector<int> stack{a};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : succ[v]) {
        if (w == b) return true;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  /// Vertices of some directed cycle, in cycle order, or empty if acyclic.
  std::vector<int> find_cycle() const {
    const auto succ = successors();
    std::vector<int> color(vertices_, 0), parent(vertices_, -1);
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int v) {
      color[v] = 1;
      for (int w : succ[v]) {
        if (color[w] == 1) {
          for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
          cycle.push_back(w);
          std::reverse(cycle.begin(), cycle.end());
          return true;
        }
        if (color[w] == 0) {
          parent[w] = v;
          if (dfs(w)) return true;
        }
      }
      color[v] = 2;
      return false;
    };
    for (int v = 0; v < vertices_; ++v)
      if (color[v] == 0 && dfs(v)) return cycle;
    return {};
  }

  bool acyclic() const { return find_cycle().empty(); }

 private:
  int vertices_ = 0;
  std::set<std::pair<int, int>> arcs_;
};

struct UnionResult {
  std::optional<RelationGraph> poset;  // set when the union is antisymmetric
  std::vector<int> cycle;              // witness otherwise
};

/// Union of the arc sets; the reachability relation of the result is the
/// transitive closure of all the inputs together.
inline UnionResult transitive_union(const std::vector<RelationGraph>& rels) {
  if (rels.empty()) throw argument_error("transitive_union: no relations");
  RelationGraph merged(rels.front().vertex_count());
  for (const auto& r : rels) {
    if (r.vertex_count() != merged.vertex_count())
      throw argument_error("transitive_union: relations on different vertex sets");
    for (const auto& [a, b] : r.arcs()) merged.add_arc(a, b);
  }
  UnionResult out;
  out.cycle = merged.find_cycle();
  if (out.cycle.empty()) out.poset = std::move(merged);
  return out;
}

/// Every linear extension, as vertex sequences in lexicographic order.
inline std::vector<std::vector<int>> linear_extensions(const RelationGraph& g, std::size_t limit = 10'000'000) {
  if (!g.acyclic()) throw argument_error("linear_extensions: relation has a cycle");
  const int m = g.vertex_count();
  const auto succ = g.successors();
  std::vector<int> indegree(m, 0);
  for (const auto& [a, b] : g.arcs()) ++indegree[b];
  std::vector<bool> used(m, false);
  std::vector<int> current;
  std::vector<std::vector<int>> out;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) == m) {
      if (out.size() >= limit) throw node_limit_exceeded("too many linear extensions");
      out.push_back(current);
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[v] || indegree[v] != 0) continue;
      used[v] = true;
      current.push_back(v);
      for (int w : succ[v]) --indegree[w];
      extend();
      for (int w : succ[v]) ++indegree[w];
      current.pop_back();
      used[v] = false;
    }
  };
  extend();
  return out;
}

}  // namespace hbo
