#pragma once

// The flip posets B(I_n,k) and B_B(J_n,k): nodes are elementary-equivalence
// classes keyed by canonical form, edges are packet flips that add one element
// to the inversion set.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hbo/errors.hpp"
#include "hbo/ground_set.hpp"
#include "hbo/orders.hpp"

namespace hbo {

struct PosetNode {
  Order canon;
  std::vector<int> inv;  // ascending upper indices
  int rank = 0;
};

struct PosetEdge {
  int src = 0;
  int dst = 0;
  int label = 0;  // upper index of the flipped element
  friend bool operator==(const PosetEdge&, const PosetEdge&) = default;
};

class BruhatPoset {
 public:
  BruhatPoset() = default;
  explicit BruhatPoset(GroundSet ground) : ground_(std::move(ground)) {}

  const GroundSet& ground() const { return ground_; }
  const std::vector<PosetNode>& nodes() const { return nodes_; }
  const std::vector<PosetEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int node) const { return out_.at(node); }
  const std::vector<int>& in_edges(int node) const { return in_.at(node); }

  /// Node id of the class [rho_min]; 0 for posets built by build_poset.
  int min_node() const { return 0; }

  int find(const Order& canon) const {
    auto it = index_.find(canon);
    return it == index_.end() ? -1 : it->second;
  }

  int add_node(PosetNode node) {
    const int id = static_cast<int>(nodes_.size());
    index_.emplace(node.canon, id);
    nodes_.push_back(std::move(node));
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  void add_edge(PosetEdge e) {
    out_.at(e.src).push_back(static_cast<int>(edges_.size()));
    in_.at(e.dst).push_back(static_cast<int>(edges_.size()));
    edges_.push_back(e);
  }

  /// r < r' in the flip order, by reachability.
  bool less(int a, int b) const {
    if (a == b) return false;
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<int> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : out_[v]) {
        const int w = edges_[e].dst;
        if (w == b) return true;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

 private:
  GroundSet ground_;
  std::vector<PosetNode> nodes_;
  std::vector<PosetEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::unordered_map<Order, int, OrderHash> index_;
};

/// Node budget for closures; the BRUHAT_MAX_NODES environment variable
/// overrides the default of 10^6.
inline std::size_t default_max_nodes() {
  if (const char* env = std::getenv("BRUHAT_MAX_NODES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

struct BuildOptions {
  std::size_t max_nodes = default_max_nodes();
};

inline void check_poset_scope(Family family, int n, int k) {
  if (n < 1 || k < 1) throw argument_error("poset needs n >= 1 and k >= 1");
  if (family == Family::A && k > n) throw argument_error("B(I_n,k) needs k <= n");
  if (family == Family::B && k > 2)
    throw unsupported_level("B_B(J_n,k) is constructed only for k = 1, 2; level " + std::to_string(k) +
                            " is beyond the scope of the type B construction");
}

/// Breadth-first closure from [rho_min]: from each class r apply p_K for every
/// K in N(r) \ Inv(r), keyed by canonical form.
inline BruhatPoset build_poset(Family family, int n, int k, BuildOptions options = {}) {
  check_poset_scope(family, n, k);
  BruhatPoset poset{GroundSet(family, n, k)};
  const GroundSet& gs = poset.ground();

  const Order start = rho_min(gs);
  poset.add_node({canonical_form(gs, start).canon, inversion_set(gs, start), 0});
  for (std::size_t head = 0; head < poset.nodes().size(); ++head) {
    const Order canon = poset.nodes()[head].canon;
    const std::vector<int> inv = poset.nodes()[head].inv;
    std::vector<Order> witness;
    const auto candidates = class_flip_candidates(gs, canon, &witness);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const int K = candidates[c];
      if (std::binary_search(inv.begin(), inv.end(), K)) continue;
      const Order flipped = packet_flip(gs, witness[c], K);
      Order key = canonical_form(gs, flipped).canon;
      int id = poset.find(key);
      if (id < 0) {
        if (poset.nodes().size() >= options.max_nodes)
          throw node_limit_exceeded("poset exceeds " + std::to_string(options.max_nodes) +
                                    " nodes (raise BRUHAT_MAX_NODES)");
        std::vector<int> next_inv = inversion_set(gs, flipped);
        const int rank = static_cast<int>(next_inv.size());
        id = poset.add_node({std::move(key), std::move(next_inv), rank});
      }
      poset.add_edge({static_cast<int>(head), id, K});
    }
  }
  return poset;
}

// ---------------------------------------------------------------------------

struct ExtremaReport {
  bool unique_min = false;
  bool unique_max = false;
  bool graded = false;
  bool all() const { return unique_min && unique_max && graded; }
};

inline ExtremaReport check_extrema(const BruhatPoset& p) {
  const std::size_t full = p.ground().upper().size();
  ExtremaReport r;
  int empties = 0, fulls = 0;
  bool graded = true;
  for (std::size_t v = 0; v < p.nodes().size(); ++v) {
    const auto& node = p.nodes()[v];
    if (node.inv.empty()) ++empties;
    if (node.inv.size() == full) ++fulls;
    if (node.rank != static_cast<int>(node.inv.size())) graded = false;
    if (node.inv.size() != full && p.out_edges(static_cast<int>(v)).empty()) graded = false;
    if (v != 0 && p.in_edges(static_cast<int>(v)).empty()) graded = false;
  }
  for (const auto& e : p.edges()) {
    const auto& a = p.nodes()[e.src];
    const auto& b = p.nodes()[e.dst];
    std::vector<int> expect = a.inv;
    expect.insert(std::upper_bound(expect.begin(), expect.end(), e.label), e.label);
    if (b.rank != a.rank + 1 || b.inv != expect) graded = false;
  }
  r.unique_min = empties == 1 && p.nodes()[0].inv.empty();
  r.unique_max = fulls == 1;
  r.graded = graded;
  return r;
}

/// Distinct classes have distinct inversion sets.
inline bool inv_injectivity_check(const BruhatPoset& p) {
  std::set<std::vector<int>> seen;
  for (const auto& node : p.nodes())
    if (!seen.insert(node.inv).second) return false;
  return true;
}

namespace detail {

inline int unique_top(const BruhatPoset& p) {
  const std::size_t full = p.ground().upper().size();
  int top = -1;
  for (std::size_t v = 0; v < p.nodes().size(); ++v)
    if (p.nodes()[v].inv.size() == full) {
      if (top >= 0) return -1;
      top = static_cast<int>(v);
    }
  return top;
}

}  // namespace detail

/// Number of source-to-sink paths (saturates at uint64 max).
inline std::uint64_t count_maximal_chains(const BruhatPoset& p) {
  const int top = detail::unique_top(p);
  if (top < 0 || p.nodes().empty()) throw argument_error("maximal chains need unique extrema");
  // Nodes are discovered in BFS order, which respects rank, so sweep by rank.
  std::vector<int> by_rank(p.nodes().size());
  for (std::size_t v = 0; v < by_rank.size(); ++v) by_rank[v] = static_cast<int>(v);
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](int a, int b) { return p.nodes()[a].rank < p.nodes()[b].rank; });
  std::vector<std::uint64_t> paths(p.nodes().size(), 0);
  paths[0] = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (int v : by_rank)
    for (int e : p.out_edges(v)) {
      auto& dst = paths[p.edges()[e].dst];
      dst = (cap - dst < paths[v]) ? cap : dst + paths[v];
    }
  return paths[top];
}

/// Edge-label sequences K_1..K_m of all maximal chains, depth-first with
/// labels taken in standard order.
inline std::vector<std::vector<int>> maximal_chains(const BruhatPoset& p, std::size_t limit = 1'000'000) {
  const int top = detail::unique_top(p);
  if (top < 0 || !check_extrema(p).unique_min) throw argument_error("maximal chains need unique extrema");
  std::vector<std::vector<int>> out;
  std::vector<int> labels;
  std::function<void(int)> walk = [&](int v) {
    if (v == top) {
      if (out.size() >= limit) throw node_limit_exceeded("too many maximal chains");
      out.push_back(labels);
      return;
    }
    std::vector<int> edges = p.out_edges(v);
    std::sort(edges.begin(), edges.end(),
              [&](int a, int b) { return p.edges()[a].label < p.edges()[b].label; });
    for (int e : edges) {
      labels.push_back(p.edges()[e].label);
      walk(p.edges()[e].dst);
      labels.pop_back();
    }
  };
  walk(0);
  return out;
}

struct ChainBijectionReport {
  std::size_t chains = 0;
  std::size_t admissible_orders = 0;  // |A(., k+1)|
  bool images_admissible = false;
  bool injective = false;
  bool surjective = false;
  std::vector<int> counterexample;  // first offending chain, if any
  bool ok() const { return images_admissible && injective && surjective; }
};

/// Maximal chains map bijectively onto the admissible orderings of level k+1.
inline ChainBijectionReport chains_bijection_report(const BruhatPoset& p) {
  const GroundSet& gs = p.ground();
  ChainBijectionReport r;
  if (gs.upper().empty()) {
    // Nothing to flip: the single trivial chain matches the empty ordering.
    r.chains = r.admissible_orders = 1;
    r.images_admissible = r.injective = r.surjective = true;
    return r;
  }
  const GroundSet next(gs.family(), gs.rank(), gs.level() + 1);
  const auto chains = maximal_chains(p);
  r.chains = chains.size();
  r.images_admissible = true;
  std::set<Order> images;
  for (const auto& labels : chains) {
    // Labels index gs.upper(), which lists level k+1 in standard order, so the
    // label sequence is already an order over `next`.
    Order o(labels.begin(), labels.end());
    if (!is_admissible(next, o)) {
      if (r.counterexample.empty()) r.counterexample = labels;
      r.images_admissible = false;
    }
    images.insert(std::move(o));
  }
  r.injective = images.size() == chains.size();
  const auto all = enumerate_admissible(next);
  r.admissible_orders = all.size();
  r.surjective = std::all_of(all.begin(), all.end(), [&](const Order& o) { return images.count(o) > 0; });
  return r;
}

inline bool chains_bijection_check(const BruhatPoset& p) { return chains_bijection_report(p).ok(); }

}  // namespace hbo
