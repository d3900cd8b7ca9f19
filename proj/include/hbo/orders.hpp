#pragma once

// Admissible orderings of a ground set, inversion sets, packet flips and the
// elementary-equivalence (commutation) classes.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hbo/errors.hpp"
#include "hbo/ground_set.hpp"

namespace hbo {

/// A total order of a ground set: seq[p] is the ground index at position p.
using Order = std::vector<int>;

/// Representative of an elementary-equivalence class (see canonical_form).
struct OrderClass {
  Order canon;
  friend bool operator==(const OrderClass&, const OrderClass&) = default;
};

struct OrderHash {
  std::size_t operator()(const Order& o) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : o) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

inline Order rho_min(const GroundSet& gs) {
  Order o(gs.size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = static_cast<int>(i);
  return o;
}

inline Order rho_max(const GroundSet& gs) {
  Order o = rho_min(gs);
  std::reverse(o.begin(), o.end());
  return o;
}

/// position[x] = place of ground element x in `order`. Throws unless `order`
/// is a permutation of the ground set.
inline std::vector<int> positions(const GroundSet& gs, const Order& order) {
  if (order.size() != gs.size()) throw argument_error("order length does not match the ground set");
  std::vector<int> pos(order.size(), -1);
  for (std::size_t p = 0; p < order.size(); ++p) {
    const int x = order[p];
    if (x < 0 || x >= static_cast<int>(order.size()) || pos[x] != -1)
      throw argument_error("order is not a permutation of the ground set");
    pos[x] = static_cast<int>(p);
  }
  return pos;
}

enum class Orientation { Standard, Reversed, Mixed };

/// How `pos` orders one packet: every chain increasing, every chain decreasing, or neither.
inline Orientation packet_orientation(const IndexedPacket& packet, const std::vector<int>& pos) {
  bool forward = true, backward = true;
  for (const auto& chain : packet.components)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (pos[chain[i]] < pos[chain[i + 1]])
        backward = false;
      else
        forward = false;
    }
  if (forward) return Orientation::Standard;
  if (backward) return Orientation::Reversed;
  return Orientation::Mixed;
}

inline bool is_admissible(const GroundSet& gs, const Order& order) {
  const auto pos = positions(gs, order);
  for (const auto& p : gs.packets())
    if (packet_orientation(p, pos) == Orientation::Mixed) return false;
  return true;
}

inline void require_admissible(const GroundSet& gs, const Order& order) {
  if (!is_admissible(gs, order)) throw not_admissible("ordering is not admissible");
}

/// Inv(rho): level-(k+1) elements whose packet appears reversed. Ascending upper indices.
inline std::vector<int> inversion_set(const GroundSet& gs, const Order& order) {
  const auto pos = positions(gs, order);
  std::vector<int> inv;
  for (std::size_t u = 0; u < gs.packets().size(); ++u) {
    switch (packet_orientation(gs.packets()[u], pos)) {
      case Orientation::Reversed: inv.push_back(static_cast<int>(u)); break;
      case Orientation::Mixed: throw not_admissible("inversion_set: ordering is not admissible");
      case Orientation::Standard: break;
    }
  }
  return inv;
}

namespace detail {

inline bool occupies_interval(const std::vector<int>& chain, const std::vector<int>& pos) {
  int lo = pos[chain[0]], hi = lo;
  for (int x : chain) {
    lo = std::min(lo, pos[x]);
    hi = std::max(hi, pos[x]);
  }
  return hi - lo + 1 == static_cast<int>(chain.size());
}

inline bool forms_chains(const IndexedPacket& packet, const std::vector<int>& pos) {
  for (const auto& chain : packet.components)
    if (!occupies_interval(chain, pos)) return false;
  return true;
}

}  // namespace detail

/// N(rho): level-(k+1) elements whose every comparable component occupies
/// consecutive positions.
inline std::vector<int> flip_candidates(const GroundSet& gs, const Order& order) {
  require_admissible(gs, order);
  const auto pos = positions(gs, order);
  std::vector<int> out;
  for (std::size_t u = 0; u < gs.packets().size(); ++u)
    if (detail::forms_chains(gs.packets()[u], pos)) out.push_back(static_cast<int>(u));
  return out;
}

/// p_K(rho): reverse each comparable component of P(K) in place. K is an upper index.
inline Order packet_flip(const GroundSet& gs, const Order& order, int K) {
  const auto pos = positions(gs, order);
  if (K < 0 || K >= static_cast<int>(gs.packets().size())) throw argument_error("packet_flip: bad packet index");
  const auto& packet = gs.packets()[K];
  if (!detail::forms_chains(packet, pos))
    throw flip_error("packet of " + to_string(gs.upper()[K]) + " does not form chains in the ordering");
  Order out = order;
  for (const auto& chain : packet.components) {
    int lo = pos[chain[0]], hi = lo;
    for (int x : chain) {
      lo = std::min(lo, pos[x]);
      hi = std::max(hi, pos[x]);
    }
    std::reverse(out.begin() + lo, out.begin() + hi + 1);
  }
  return out;
}

inline bool commutes(const GroundSet& gs, int a, int b) { return gs.commutes(a, b); }

/// Every ordering reachable by swapping adjacent commuting elements, in BFS
/// order starting from `order` itself.
inline std::vector<Order> equivalence_class(const GroundSet& gs, const Order& order,
                                            std::size_t limit = 1'000'000) {
  positions(gs, order);
  std::vector<Order> members{order};
  std::set<Order> seen{order};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t p = 0; p + 1 < gs.size(); ++p) {
      const Order& cur = members[head];
      if (!gs.commutes(cur[p], cur[p + 1])) continue;
      Order next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(next).second) {
        if (members.size() >= limit) throw node_limit_exceeded("equivalence class exceeds limit");
        members.push_back(std::move(next));
      }
    }
  }
  return members;
}

/// Lexicographically least member of the class: the greedy linearization of
/// the dependence order (non-commuting pairs keep their relative order),
/// always emitting the smallest available ground index.
inline OrderClass canonical_form(const GroundSet& gs, const Order& order) {
  positions(gs, order);
  const std::size_t m = order.size();
  // blockers[p] = number of earlier, not yet emitted, non-commuting elements.
  std::vector<int> blockers(m, 0);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (!gs.commutes(order[q], order[p])) ++blockers[p];
  std::vector<bool> emitted(m, false);
  OrderClass out;
  out.canon.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t p = 0; p < m; ++p)
      if (!emitted[p] && blockers[p] == 0 && (best == m || order[p] < order[best])) best = p;
    emitted[best] = true;
    out.canon.push_back(order[best]);
    for (std::size_t p = best + 1; p < m; ++p)
      if (!emitted[p] && !gs.commutes(order[best], order[p])) --blockers[p];
  }
  return out;
}

inline bool equivalent(const GroundSet& gs, const Order& a, const Order& b) {
  return canonical_form(gs, a) == canonical_form(gs, b);
}

/// N([rho]) = union of N(rho') over the class, found by enumerating the class.
/// `witness`, when given, receives for each returned K the first class member
/// in which P(K) forms chains.
inline std::vector<int> class_flip_candidates(const GroundSet& gs, const Order& order,
                                              std::vector<Order>* witness = nullptr) {
  require_admissible(gs, order);
  const auto members = equivalence_class(gs, order);
  std::vector<int> found_in(gs.packets().size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto pos = positions(gs, members[i]);
    for (std::size_t u = 0; u < gs.packets().size(); ++u)
      if (found_in[u] < 0 && detail::forms_chains(gs.packets()[u], pos)) found_in[u] = static_cast<int>(i);
  }
  std::vector<int> out;
  if (witness) witness->clear();
  for (std::size_t u = 0; u < found_in.size(); ++u)
    if (found_in[u] >= 0) {
      out.push_back(static_cast<int>(u));
      if (witness) witness->push_back(members[found_in[u]]);
    }
  return out;
}

/// All admissible orderings of the ground set, by backtracking with packet
/// orientations fixed as soon as a pair of one chain has been placed.
/// Orders are produced in lexicographic order.
inline std::vector<Order> enumerate_admissible(const GroundSet& gs, std::size_t limit = 5'000'000) {
  const int m = static_cast<int>(gs.size());
  const int packets = static_cast<int>(gs.packets().size());
  // chain_rank[u][x] = (component, position in component) of x in packet u.
  std::vector<std::vector<std::pair<int, int>>> chain_rank(packets, std::vector<std::pair<int, int>>(m, {-1, -1}));
  for (int u = 0; u < packets; ++u) {
    const auto& comps = gs.packets()[u].components;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      for (int i = 0; i < static_cast<int>(comps[c].size()); ++i) chain_rank[u][comps[c][i]] = {c, i};
  }
  std::vector<int> orientation(packets, 0);  // 0 unknown, +1 standard, -1 reversed
  std::vector<bool> placed(m, false);
  Order current;
  std::vector<Order> out;

  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) == m) {
      if (out.size() >= limit) throw node_limit_exceeded("too many admissible orderings");
      out.push_back(current);
      return;
    }
    for (int x = 0; x < m; ++x) {
      if (placed[x]) continue;
      std::vector<int> fixed_here;
      bool ok = true;
      for (int u : gs.packets_containing(x)) {
        const auto [cx, ix] = chain_rank[u][x];
        if (cx < 0) continue;
        const auto& chain = gs.packets()[u].components[cx];
        int dir = orientation[u];
        for (int y : chain) {
          if (y == x || !placed[y]) continue;
          // y precedes x in the ordering.
          const int want = chain_rank[u][y].second < ix ? +1 : -1;
          if (dir == 0)
            dir = want;
          else if (dir != want)
            ok = false;
        }
        // Once the direction is known, everything before x along it must be placed.
        if (ok && dir != 0)
          for (int y : chain) {
            const int iy = chain_rank[u][y].second;
            if (!placed[y] && y != x && (dir > 0 ? iy < ix : iy > ix)) ok = false;
          }
        if (!ok) break;
        if (orientation[u] == 0 && dir != 0) {
          orientation[u] = dir;
          fixed_here.push_back(u);
        }
      }
      if (ok) {
        placed[x] = true;
        current.push_back(x);
        extend();
        current.pop_back();
        placed[x] = false;
      }
      for (int u : fixed_here) orientation[u] = 0;
    }
  };
  extend();
  return out;
}

}  // namespace hbo
