#pragma once

// Brute-force reference computations used to check the library. They share
// only the element and packet definitions with it and are deliberately naive.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hbo/combinatorics.hpp"
#include "hbo/ground_set.hpp"
#include "hbo/relation_graph.hpp"

namespace oracle {

using hbo::Element;
using hbo::GroundSet;
using Seq = std::vector<int>;

// --- reduced words of the longest element, by trying every word ------------

/// Window of a signed permutation after applying `word` as left
/// multiplications; generator 0 negates the value 1, generator g swaps the
/// values g and g+1 (and their negatives).
inline Seq apply_signed(int n, const Seq& word) {
  Seq w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int g : word)
    for (int& v : w) {
      const int a = std::abs(v), s = v < 0 ? -1 : 1;
      if (g == 0 && a == 1)
        v = -v;
      else if (g > 0 && a == g)
        v = s * (g + 1);
      else if (g > 0 && a == g + 1)
        v = s * g;
    }
  return w;
}

inline Seq apply_unsigned(int n, const Seq& word) {
  Seq w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int g : word)
    for (int& v : w) {
      if (v == g)
        v = g + 1;
      else if (v == g + 1)
        v = g;
    }
  return w;
}

/// Every word of length l(w0) whose product is w0 (such words are reduced).
inline std::set<Seq> reduced_words_longest(bool type_b, int n) {
  const int len = type_b ? n * n : n * (n - 1) / 2;
  const int first = type_b ? 0 : 1;
  const int gens = type_b ? n : n - 1;
  Seq target(n);
  for (int i = 0; i < n; ++i) target[i] = type_b ? -(i + 1) : n - i;
  std::set<Seq> out;
  Seq word(len, first);
  if (gens <= 0) {
    if (len == 0) out.insert({});
    return out;
  }
  while (true) {
    if ((type_b ? apply_signed(n, word) : apply_unsigned(n, word)) == target) out.insert(word);
    int i = len - 1;
    while (i >= 0 && word[i] == first + gens - 1) word[i--] = first;
    if (i < 0) break;
    ++word[i];
  }
  return out;
}

// --- packets and commutation straight from the element definitions ---------

struct NaivePackets {
  std::vector<std::vector<std::vector<int>>> chains;  // per upper element, its chains as ground indices
};

inline NaivePackets naive_packets(const GroundSet& gs) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < gs.size(); ++i) index[hbo::to_string(gs.elements()[i])] = static_cast<int>(i);
  NaivePackets p;
  for (const auto& K : hbo::all_elements(gs.family(), gs.rank(), gs.level() + 1)) {
    std::vector<std::vector<int>> chains;
    for (const auto& comp : hbo::packet_of(K).components) {
      std::vector<int> c;
      for (const auto& e : comp) c.push_back(index.at(hbo::to_string(e)));
      chains.push_back(c);
    }
    p.chains.push_back(chains);
  }
  return p;
}

inline bool naive_commute(const NaivePackets& p, int a, int b) {
  for (const auto& packet : p.chains)
    for (const auto& chain : packet)
      if (std::count(chain.begin(), chain.end(), a) && std::count(chain.begin(), chain.end(), b)) return false;
  return a != b;
}

inline bool naive_admissible(const NaivePackets& p, const Seq& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (const auto& packet : p.chains) {
    int up = 0, down = 0;
    for (const auto& chain : packet)
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) (pos[chain[i]] < pos[chain[i + 1]] ? up : down)++;
    if (up && down) return false;
  }
  return true;
}

/// Admissible orderings by filtering every permutation of the ground set.
inline std::set<Seq> admissible_by_filter(const GroundSet& gs) {
  const auto p = naive_packets(gs);
  Seq o(gs.size());
  std::iota(o.begin(), o.end(), 0);
  std::set<Seq> out;
  do {
    if (naive_admissible(p, o)) out.insert(o);
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

/// Class of `order` by exploring adjacent commuting swaps.
inline std::set<Seq> class_of(const NaivePackets& p, const Seq& order) {
  std::set<Seq> seen{order};
  std::vector<Seq> todo{order};
  while (!todo.empty()) {
    Seq cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!naive_commute(p, cur[i], cur[i + 1])) continue;
      Seq next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

inline bool crosses(const NaivePackets& p, const Seq& order, int a, int b) {
  auto before = [](const Seq& o, int x, int y) {
    return std::find(o.begin(), o.end(), x) < std::find(o.begin(), o.end(), y);
  };
  const bool ab = before(order, a, b);
  for (const auto& member : class_of(p, order))
    if (before(member, a, b) != ab) return true;
  return false;
}

/// N([rho]) as indices of upper elements, from the class listing.
inline std::set<int> class_flips(const NaivePackets& p, const Seq& order) {
  std::set<int> out;
  for (const auto& member : class_of(p, order)) {
    std::vector<int> pos(member.size());
    for (std::size_t i = 0; i < member.size(); ++i) pos[member[i]] = static_cast<int>(i);
    for (std::size_t u = 0; u < p.chains.size(); ++u) {
      bool contiguous = true;
      for (const auto& chain : p.chains[u]) {
        int lo = pos[chain[0]], hi = lo;
        for (int x : chain) {
          lo = std::min(lo, pos[x]);
          hi = std::max(hi, pos[x]);
        }
        contiguous = contiguous && hi - lo + 1 == static_cast<int>(chain.size());
      }
      if (contiguous) out.insert(static_cast<int>(u));
    }
  }
  return out;
}

// --- linear extensions by filtering permutations -----------------------------

inline std::size_t count_linear_extensions(const hbo::RelationGraph& g) {
  Seq o(g.vertex_count());
  std::iota(o.begin(), o.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<int> pos(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) pos[o[i]] = static_cast<int>(i);
    bool ok = true;
    for (const auto& [a, b] : g.arcs()) ok = ok && pos[a] < pos[b];
    count += ok;
  } while (std::next_permutation(o.begin(), o.end()));
  return count;
}

}  // namespace oracle
