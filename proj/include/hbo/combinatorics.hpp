#pragma once

// Ground sets C(I_n,k) and C_B(J_n,k), their standard orders, and packets.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "hbo/elements.hpp"
#include "hbo/errors.hpp"

namespace hbo {

/// All k-element subsequences of `pool`, in lexicographic order of positions.
inline std::vector<std::vector<int>> combinations(std::span<const int> pool, int k) {
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    out.push_back(std::move(pick));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::vector<int> iota_vector(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

/// C(I_n,k) in lexicographic order (rho_min); reverse it for rho_max.
inline std::vector<KSubset> enumerate_A(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw argument_error("enumerate_A: need 1 <= k <= n, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  std::vector<KSubset> out;
  const auto pool = iota_vector(1, n);
  for (auto& c : combinations(pool, k)) out.emplace_back(std::move(c));
  return out;
}

/// All level-k elements of C_B(J_n,k). Standard order for k <= 3; for larger k
/// a fixed generation order (orbits by absolute values, then stars).
inline std::vector<Element> elements_B(int n, int k) {
  if (n < 1 || k < 1) throw argument_error("elements_B: need n >= 1 and k >= 1");
  std::vector<Element> out;
  if (k == 1) {
    for (int v = -n; v <= n; ++v)
      if (v != 0) out.push_back(SignedIndex{v});
    return out;
  }
  const auto pool = iota_vector(1, n);
  for (const auto& abs_values : combinations(pool, k)) {
    // The largest value is always negative in the preferred representative,
    // so enumerate signs of the others.
    for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
      std::vector<int> raw(abs_values);
      raw[k - 1] = -raw[k - 1];
      for (int b = 0; b < k - 1; ++b)
        if (mask & (1 << b)) raw[b] = -raw[b];
      out.push_back(BElem::orbit(std::move(raw)));
    }
  }
  for (auto& support : combinations(pool, k - 1)) out.push_back(BElem::star(std::move(support)));
  if (k <= 3) std::stable_sort(out.begin(), out.end(), standard_less);
  return out;
}

/// The standard order rho_min of C_B(J_n,k), k in {1,2,3}.
inline std::vector<Element> enumerate_B(int n, int k) {
  if (k < 1 || k > 3)
    throw unsupported_level("standard orders on C_B(J_n,k) are defined only for k = 1, 2, 3 (got k=" +
                            std::to_string(k) + ")");
  return elements_B(n, k);
}

// ---------------------------------------------------------------------------

/// A packet: its members, and its partial order as a list of chains.
struct Packet {
  Element label;
  std::vector<Element> elements;                 // standard order where defined
  std::vector<std::vector<Element>> components;  // each chain increasing
};

/// P(K) for a type A subset with |K| >= 2: all (|K|-1)-subsets, lex order.
inline std::vector<KSubset> packet_A(const KSubset& K) {
  if (K.level() < 2) throw argument_error("packet_A: |K| must be at least 2");
  std::vector<KSubset> out;
  for (auto& c : combinations(K.members(), K.level() - 1)) out.emplace_back(std::move(c));
  return out;
}

namespace detail {

inline void sort_standard(std::vector<Element>& v) { std::stable_sort(v.begin(), v.end(), standard_less); }

}  // namespace detail

/// P_B(K) for a type B element of level 2, 3 or 4, with its comparable components.
inline Packet packet_B(const BElem& K) {
  const int level = K.level();
  if (level < 2 || level > 4)
    throw unsupported_level("packet_B: packets are built for levels 2..4 (got " + std::to_string(level) + ")");
  const auto& e = K.entries();
  Packet p{K, {}, {}};

  if (level == 2) {
    if (K.is_star()) {
      // [k,*]: single chain -k < k.
      const int k = e[0];
      p.elements = {SignedIndex{-k}, SignedIndex{k}};
      p.components = {p.elements};
    } else {
      // [j,i] with j the negative entry of largest magnitude: chains j < i and -i < -j.
      const int j = e[0], i = e[1];
      p.components = {{SignedIndex{j}, SignedIndex{i}}, {SignedIndex{-i}, SignedIndex{-j}}};
      p.elements = {SignedIndex{j}, SignedIndex{i}, SignedIndex{-i}, SignedIndex{-j}};
      std::sort(p.elements.begin(), p.elements.end(),
                [](const Element& a, const Element& b) {
                  return std::get<SignedIndex>(a).value < std::get<SignedIndex>(b).value;
                });
    }
    return p;
  }

  const int k = level - 1;
  if (K.is_orbit()) {
    // Negation orbits of the k-subsets of a representative.
    for (auto& sub : combinations(e, k)) p.elements.push_back(BElem::orbit(std::move(sub)));
  } else {
    // C_B(T u -T, k) where |T| = k: signed versions of T, and (k-1)-subsets of T with a star.
    const int t = static_cast<int>(e.size());
    for (int mask = 0; mask < (1 << t); ++mask) {
      std::vector<int> raw(e);
      for (int b = 0; b < t; ++b)
        if (mask & (1 << b)) raw[b] = -raw[b];
      Element cand = BElem::orbit(std::move(raw));
      if (std::find(p.elements.begin(), p.elements.end(), cand) == p.elements.end())
        p.elements.push_back(std::move(cand));
    }
    for (auto& sub : combinations(e, k - 1)) p.elements.push_back(BElem::star(std::move(sub)));
  }
  detail::sort_standard(p.elements);
  p.components = {p.elements};
  return p;
}

/// Packet of any element of level >= 2 in either family.
inline Packet packet_of(const Element& K) {
  if (auto* a = std::get_if<KSubset>(&K)) {
    Packet p{K, {}, {}};
    for (auto& s : packet_A(*a)) p.elements.emplace_back(std::move(s));
    p.components = {p.elements};
    return p;
  }
  if (auto* b = std::get_if<BElem>(&K)) return packet_B(*b);
  throw argument_error("packet_of: level-1 elements have no packet");
}

/// Level-k ground set of a family in standard order.
inline std::vector<Element> enumerate(Family f, int n, int k) {
  if (f == Family::A) {
    std::vector<Element> out;
    for (auto& s : enumerate_A(n, k)) out.emplace_back(std::move(s));
    return out;
  }
  return enumerate_B(n, k);
}

/// Level-k elements in a deterministic order; standard order whenever one is defined.
inline std::vector<Element> all_elements(Family f, int n, int k) {
  if (f == Family::A) {
    if (k > n) return {};
    return enumerate(f, n, k);
  }
  return elements_B(n, k);
}

}  // namespace hbo
