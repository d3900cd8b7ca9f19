#pragma once

// Crossing, blocking and the structural lemmas behind the existence of upward
// flips in B_B(J_n,2). Everything that quantifies over a commutation class has
// a direct class-enumeration version; faster criteria are kept alongside so
// tests can compare the two.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hbo/errors.hpp"
#include "hbo/ground_set.hpp"
#include "hbo/orders.hpp"
#include "hbo/relation_graph.hpp"

namespace hbo {

/// S-bar(rho): the interval of `order` from the first to the last member of S.
inline std::vector<int> minimal_chain(const GroundSet& gs, const Order& order, const std::vector<int>& S) {
  if (S.empty()) throw argument_error("minimal_chain: empty set");
  const auto pos = positions(gs, order);
  int lo = pos.at(S.front()), hi = lo;
  for (int s : S) {
    lo = std::min(lo, pos.at(s));
    hi = std::max(hi, pos.at(s));
  }
  return {order.begin() + lo, order.begin() + hi + 1};
}

namespace detail {

inline std::pair<int, int> span_of(const std::vector<int>& pos, const std::vector<int>& S) {
  int lo = pos[S.front()], hi = lo;
  for (int s : S) {
    lo = std::min(lo, pos[s]);
    hi = std::max(hi, pos[s]);
  }
  return {lo, hi};
}

inline bool inside_minimal_chain(const std::vector<int>& pos, int x, const std::vector<int>& S) {
  const auto [lo, hi] = span_of(pos, S);
  return lo < pos[x] && pos[x] < hi;
}

}  // namespace detail

/// Crossing test on an arbitrary sequence: scan from a towards b, collecting in
/// `right` every element that fails to commute with something already there;
/// a crosses b iff b commutes with all of `right`.
template <class Commutes>
bool crosses_in_sequence(const std::vector<int>& seq, int a, int b, Commutes&& commutes) {
  if (a == b) throw argument_error("crosses: a and b must differ");
  auto ia = std::find(seq.begin(), seq.end(), a);
  auto ib = std::find(seq.begin(), seq.end(), b);
  if (ia == seq.end() || ib == seq.end()) throw argument_error("crosses: element not in the ordering");
  std::vector<int> between;
  if (ia < ib)
    between.assign(ia + 1, ib);
  else
    between.assign(std::make_reverse_iterator(ia), std::make_reverse_iterator(ib + 1));
  std::vector<int> right{a};
  for (int q : between) {
    const bool free = std::all_of(right.begin(), right.end(), [&](int r) { return commutes(q, r); });
    if (!free) right.push_back(q);
  }
  return std::all_of(right.begin(), right.end(), [&](int r) { return commutes(b, r); });
}

/// Some ordering equivalent to `order` puts a and b the other way round.
inline bool crosses(const GroundSet& gs, const Order& order, int a, int b) {
  positions(gs, order);
  return crosses_in_sequence(order, a, b, [&](int u, int v) { return gs.commutes(u, v); });
}

/// Same question answered by listing the class.
inline bool crosses_by_enumeration(const GroundSet& gs, const Order& order, int a, int b) {
  if (a == b) throw argument_error("crosses: a and b must differ");
  const auto pos0 = positions(gs, order);
  const bool a_first = pos0[a] < pos0[b];
  for (const auto& member : equivalence_class(gs, order)) {
    const auto pos = positions(gs, member);
    if ((pos[a] < pos[b]) != a_first) return true;
  }
  return false;
}

/// For a whole class at once: crossing[a*m+b] is set when a and b appear in
/// both relative orders among `members`.
inline std::vector<bool> crossing_table(const GroundSet& gs, const std::vector<Order>& members) {
  const int m = static_cast<int>(gs.size());
  std::vector<bool> before(static_cast<std::size_t>(m) * m, false);
  for (const auto& member : members)
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) before[member[p] * m + member[q]] = true;
  std::vector<bool> out(before.size(), false);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out[a * m + b] = a != b && before[a * m + b] && before[b * m + a];
  return out;
}

/// less[a*m+b]: a precedes b in every member of the class of `order`, i.e. a
/// chain of pairwise non-commuting elements leads from a to b.
inline std::vector<bool> dependence_order(const GroundSet& gs, const Order& order) {
  positions(gs, order);
  const int m = static_cast<int>(gs.size());
  std::vector<bool> less(static_cast<std::size_t>(m) * m, false);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < p; ++q) {
      const int a = order[q], b = order[p];
      if (gs.commutes(a, b) && !less[a * m + b]) continue;
      less[a * m + b] = true;
      for (int c = 0; c < m; ++c)
        if (less[c * m + a]) less[c * m + b] = true;
    }
  return less;
}

namespace detail {

inline void require_outside(int x, const std::vector<int>& S) {
  if (S.empty()) throw argument_error("blocks: empty set");
  if (std::find(S.begin(), S.end(), x) != S.end()) throw argument_error("blocks: x belongs to S");
}

inline bool blocks_in_class(const GroundSet& gs, const std::vector<Order>& members, int x, const std::vector<int>& S) {
  for (const auto& member : members)
    if (!inside_minimal_chain(positions(gs, member), x, S)) return false;
  return true;
}

}  // namespace detail

/// x lies strictly inside S-bar in every member of the class.
inline bool blocks(const GroundSet& gs, const Order& order, int x, const std::vector<int>& S) {
  detail::require_outside(x, S);
  return detail::blocks_in_class(gs, equivalence_class(gs, order), x, S);
}

/// Fast criterion: x blocks S iff s1 < x < s2 in the dependence order for some s1, s2 in S.
inline bool blocks_by_closure(const GroundSet& gs, const Order& order, int x, const std::vector<int>& S) {
  detail::require_outside(x, S);
  const int m = static_cast<int>(gs.size());
  const auto less = dependence_order(gs, order);
  bool below = false, above = false;
  for (int s : S) {
    below = below || less[s * m + x];
    above = above || less[x * m + s];
  }
  return below && above;
}

/// Elements that block P(K), K an upper index of a level-2 type B ground set.
inline std::vector<int> blockers(const GroundSet& gs, const Order& order, int K) {
  const auto& S = gs.packet(K).members;
  const auto members = equivalence_class(gs, order);
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(gs.size()); ++x)
    if (std::find(S.begin(), S.end(), x) == S.end() && detail::blocks_in_class(gs, members, x, S)) out.push_back(x);
  return out;
}

/// K in N([rho]) decided by the absence of blockers of P(K).
inline bool n_membership_via_blocking(const GroundSet& gs, const Order& order, int K) {
  require_admissible(gs, order);
  return blockers(gs, order, K).empty();
}

// ---------------------------------------------------------------------------
// Moving x out of S-bar without enlarging it.

namespace detail {

/// Adjacent commuting swaps leading from `order` to the first class member
/// accepted by `goal`, as the pairs of elements exchanged.
template <class Goal>
std::optional<std::pair<Order, std::vector<std::pair<int, int>>>> swap_path(const GroundSet& gs, const Order& order,
                                                                            Goal&& goal) {
  std::map<Order, std::pair<Order, std::pair<int, int>>> parent;
  std::deque<Order> queue{order};
  parent.emplace(order, std::make_pair(Order{}, std::make_pair(-1, -1)));
  while (!queue.empty()) {
    Order cur = std::move(queue.front());
    queue.pop_front();
    if (goal(cur)) {
      std::vector<std::pair<int, int>> swaps;
      for (Order o = cur; o != order;) {
        const auto& [prev, sw] = parent.at(o);
        swaps.push_back(sw);
        o = prev;
      }
      std::reverse(swaps.begin(), swaps.end());
      return std::make_pair(cur, swaps);
    }
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (!gs.commutes(cur[p], cur[p + 1])) continue;
      Order next = cur;
      std::swap(next[p], next[p + 1]);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, std::make_pair(cur[p], cur[p + 1])));
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Given x outside S that does not block S, build rho' ~ rho with
/// S-bar(rho') inside S-bar(rho) and x outside S-bar(rho'): take any class
/// member rho-hat that has x outside, and replay only those of its swaps that
/// stay within T, the part of S-bar(rho) on x's side. Returns nullopt when x blocks S.
inline std::optional<Order> unblock_by_swaps(const GroundSet& gs, const Order& order, const std::vector<int>& S,
                                              int x) {
  detail::require_outside(x, S);
  const auto pos = positions(gs, order);
  if (!detail::inside_minimal_chain(pos, x, S)) return order;
  const auto found = detail::swap_path(gs, order, [&](const Order& o) {
    return !detail::inside_minimal_chain(positions(gs, o), x, S);
  });
  if (!found) return std::nullopt;
  const auto& [hat, swaps] = *found;
  const auto hat_pos = positions(gs, hat);
  const bool x_on_left = hat_pos[x] < detail::span_of(hat_pos, S).first;

  const auto [lo, hi] = detail::span_of(pos, S);
  std::vector<bool> in_T(gs.size(), false);
  for (int p = lo; p <= hi; ++p)
    if (x_on_left ? p <= pos[x] : p >= pos[x]) in_T[order[p]] = true;

  Order out = order;
  auto where = positions(gs, out);
  for (const auto& [u, v] : swaps) {
    if (!in_T[u] || !in_T[v]) continue;
    std::swap(out[where[u]], out[where[v]]);
    std::swap(where[u], where[v]);
  }
  return out;
}

/// The constructed ordering really has the claimed properties.
inline bool unblock_by_swaps_holds(const GroundSet& gs, const Order& order, const std::vector<int>& S, int x) {
  const auto built = unblock_by_swaps(gs, order, S, x);
  if (!built) return blocks(gs, order, x, S);
  if (!equivalent(gs, order, *built)) return false;
  const auto before = detail::span_of(positions(gs, order), S);
  const auto pos = positions(gs, *built);
  const auto after = detail::span_of(pos, S);
  // S-bar(rho') as a set must sit inside S-bar(rho) as a set.
  std::set<int> old_chain(order.begin() + before.first, order.begin() + before.second + 1);
  for (int p = after.first; p <= after.second; ++p)
    if (!old_chain.count((*built)[p])) return false;
  return !detail::inside_minimal_chain(pos, x, S);
}

// ---------------------------------------------------------------------------
// Where the blockers of a non-flippable packet sit.

enum class BlockingCase {
  OrbitIJ_IX_IK = 1,    // [i,j] < [i,x] < [i,k]
  OrbitIK_KX_JK = 2,    // [i,k] < [k,x] < [j,k]
  OrbitIJ_JX_JK = 3,    // [i,j] < [j,x] < [j,k]
  StarIJ_IX_IS = 4,     // [i,j] < [i,x] < [i,*]
  StarIS_IX_INJ = 5,    // [i,*] < [i,x] < [i,-j]
  StarINJ_JX_JS = 6,    // [i,-j] < [j,x] < [j,*]
  StarIJ_JX_INJ = 7,    // [i,j] < [j,x] < [i,-j]
};

inline std::string pattern_text(BlockingCase c) {
  switch (c) {
    case BlockingCase::OrbitIJ_IX_IK: return "[i,j] < [i,x] < [i,k]";
    case BlockingCase::OrbitIK_KX_JK: return "[i,k] < [k,x] < [j,k]";
    case BlockingCase::OrbitIJ_JX_JK: return "[i,j] < [j,x] < [j,k]";
    case BlockingCase::StarIJ_IX_IS: return "[i,j] < [i,x] < [i,*]";
    case BlockingCase::StarIS_IX_INJ: return "[i,*] < [i,x] < [i,-j]";
    case BlockingCase::StarINJ_JX_JS: return "[i,-j] < [j,x] < [j,*]";
    case BlockingCase::StarIJ_JX_INJ: return "[i,j] < [j,x] < [i,-j]";
  }
  return "";
}

inline std::vector<BlockingCase> cases_for(const BElem& K) {
  if (K.is_orbit())
    return {BlockingCase::OrbitIJ_IX_IK, BlockingCase::OrbitIK_KX_JK, BlockingCase::OrbitIJ_JX_JK};
  return {BlockingCase::StarIJ_IX_IS, BlockingCase::StarIS_IX_INJ, BlockingCase::StarINJ_JX_JS,
          BlockingCase::StarIJ_JX_INJ};
}

/// The labels i, j, k used by the case patterns. Orbits: the representative
/// with at least two negative entries, ascending (so i < j < 0). Stars
/// [a1,a2,*]: i = -a1, j = -a2.
struct CaseLabels {
  int i = 0, j = 0, k = 0;
  bool star = false;
};

inline CaseLabels case_labels(const BElem& K) {
  if (K.level() != 3) throw argument_error("case_labels: need a level-3 element");
  if (K.is_star()) return {-K.entries()[0], -K.entries()[1], 0, true};
  std::vector<int> e = K.entries();
  if (std::count_if(e.begin(), e.end(), [](int v) { return v < 0; }) < 2)
    for (int& v : e) v = -v;
  std::sort(e.begin(), e.end());
  return {e[0], e[1], e[2], false};
}

/// The level-2 element written [a,b]; [a,-a] and [a,*] both denote the star of |a|.
inline Element pair_element(int a, int b) {
  if (a == -b) return BElem::star({std::abs(a)});
  return BElem::orbit({a, b});
}

inline Element star_element(int a) { return BElem::star({std::abs(a)}); }

struct CasePattern {
  Element low, blocker, high;
};

inline CasePattern case_pattern(BlockingCase c, const CaseLabels& L, int x) {
  const int i = L.i, j = L.j, k = L.k;
  switch (c) {
    case BlockingCase::OrbitIJ_IX_IK: return {pair_element(i, j), pair_element(i, x), pair_element(i, k)};
    case BlockingCase::OrbitIK_KX_JK: return {pair_element(i, k), pair_element(k, x), pair_element(j, k)};
    case BlockingCase::OrbitIJ_JX_JK: return {pair_element(i, j), pair_element(j, x), pair_element(j, k)};
    case BlockingCase::StarIJ_IX_IS: return {pair_element(i, j), pair_element(i, x), star_element(i)};
    case BlockingCase::StarIS_IX_INJ: return {star_element(i), pair_element(i, x), pair_element(i, -j)};
    case BlockingCase::StarINJ_JX_JS: return {pair_element(i, -j), pair_element(j, x), star_element(j)};
    case BlockingCase::StarIJ_JX_INJ: return {pair_element(i, j), pair_element(j, x), pair_element(i, -j)};
  }
  throw argument_error("unknown case");
}

/// Admissible values of x: J_n minus {i,j,k} for orbits, minus {+-i,+-j} for stars.
inline std::vector<int> case_x_values(const CaseLabels& L, int n) {
  std::vector<int> out;
  for (int x = -n; x <= n; ++x) {
    if (x == 0) continue;
    const bool excluded = L.star ? (std::abs(x) == std::abs(L.i) || std::abs(x) == std::abs(L.j))
                                 : (x == L.i || x == L.j || x == L.k);
    if (!excluded) out.push_back(x);
  }
  return out;
}

struct CaseMatch {
  BlockingCase which{};
  int x = 0;
};

/// For K outside N([rho]) and Inv([rho]), a case pattern and x such that
/// low < blocker < high holds in every member of the class.
inline std::optional<CaseMatch> lemma13_classify(const GroundSet& gs, const Order& order, int K) {
  if (gs.family() != Family::B || gs.level() != 2) throw argument_error("lemma13_classify: need type B level 2");
  require_admissible(gs, order);
  const auto inv = inversion_set(gs, order);
  if (std::binary_search(inv.begin(), inv.end(), K))
    throw argument_error("lemma13_classify: K is in Inv([rho])");
  const auto candidates = class_flip_candidates(gs, order);
  if (std::binary_search(candidates.begin(), candidates.end(), K))
    throw argument_error("lemma13_classify: K is in N([rho])");

  const auto& Kelem = std::get<BElem>(gs.upper().at(K));
  const CaseLabels L = case_labels(Kelem);
  const auto members = equivalence_class(gs, order);
  std::vector<std::vector<int>> member_pos;
  for (const auto& m : members) member_pos.push_back(positions(gs, m));
  for (BlockingCase c : cases_for(Kelem))
    for (int x : case_x_values(L, gs.rank())) {
      const CasePattern p = case_pattern(c, L, x);
      const int lo = gs.index_of(p.low), mid = gs.index_of(p.blocker), hi = gs.index_of(p.high);
      const bool always = std::all_of(member_pos.begin(), member_pos.end(), [&](const std::vector<int>& pos) {
        return pos[lo] < pos[mid] && pos[mid] < pos[hi];
      });
      if (always) return CaseMatch{c, x};
    }
  return std::nullopt;
}

/// Some K' outside Inv([rho]) has S_K'-bar strictly inside S_K-bar in every
/// class member, or has its minimum above the minimum of S_K in every member.
inline bool better_packet_exists(const GroundSet& gs, const Order& order, int K) {
  const auto inv = inversion_set(gs, order);
  const auto members = equivalence_class(gs, order);
  std::vector<std::vector<int>> member_pos;
  for (const auto& m : members) member_pos.push_back(positions(gs, m));
  const auto& SK = gs.packet(K).members;
  for (int other = 0; other < static_cast<int>(gs.upper().size()); ++other) {
    if (other == K || std::binary_search(inv.begin(), inv.end(), other)) continue;
    const auto& S = gs.packet(other).members;
    bool nested = true, higher_min = true;
    for (const auto& pos : member_pos) {
      const auto [klo, khi] = detail::span_of(pos, SK);
      const auto [lo, hi] = detail::span_of(pos, S);
      if (!(klo <= lo && hi <= khi && (klo < lo || hi < khi))) nested = false;
      if (!(lo > klo)) higher_min = false;
      if (!nested && !higher_min) break;
    }
    if (nested || higher_min) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

/// Union of all packet chains, each reversed when its element is in `inv`.
/// Its linear extensions are exactly the class with that inversion set.
inline RelationGraph packet_relation(const GroundSet& gs, const std::vector<int>& inv) {
  RelationGraph g(static_cast<int>(gs.size()));
  for (std::size_t u = 0; u < gs.packets().size(); ++u) {
    const bool reversed = std::binary_search(inv.begin(), inv.end(), static_cast<int>(u));
    for (auto chain : gs.packets()[u].components) {
      if (reversed) std::reverse(chain.begin(), chain.end());
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) g.add_arc(chain[i], chain[i + 1]);
    }
  }
  return g;
}

}  // namespace hbo
