#pragma once

// Realizations of B(I_n,1) and B_B(J_n,1) as the symmetric group S_n and the
// hyperoctahedral group B_n: permutations of orders, root systems, inversion
// sets, the weak left order, and the reduced words carried by maximal chains.
//
// Sign conventions follow each family's own choice of positive roots:
//   type A  Phi+ = { e_i - e_j : i < j },  s_i = (i, i+1),  1 <= i < n
//   type B  Phi+ = { e_i } u { e_i +- e_j : i > j },
//           s_0 = s_{e_1} = (-1, 1),  s_i = s_{e_{i+1} - e_i} = (i, i+1)(-i, -i-1)
// Words list generators in the order the left multiplications are applied;
// the group element is the reverse product s_{a_m} ... s_{a_1}.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hbo/combinatorics.hpp"
#include "hbo/errors.hpp"
#include "hbo/ground_set.hpp"
#include "hbo/orders.hpp"
#include "hbo/poset.hpp"

namespace hbo {

// ---------------------------------------------------------------------------
// Group elements

/// Element of B_n acting on J_n, stored in window notation images[i-1] = pi(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = rank();
    std::vector<bool> hit(n + 1, false);
    for (int v : images_) {
      const int a = std::abs(v);
      if (v == 0 || a > n || hit[a]) throw argument_error("not a signed permutation");
      hit[a] = true;
    }
  }

  static SignedPermutation identity(int n) { return SignedPermutation(iota_vector(1, n)); }
  static SignedPermutation longest(int n) {
    auto v = iota_vector(1, n);
    for (int& x : v) x = -x;
    return SignedPermutation(std::move(v));
  }
  /// Simple reflection s_g: g = 0 is the sign change of 1, g >= 1 swaps g and g+1.
  static SignedPermutation simple(int n, int g) {
    if (g < 0 || g >= n) throw argument_error("simple reflection index out of range");
    auto v = iota_vector(1, n);
    if (g == 0)
      v[0] = -1;
    else
      std::swap(v[g - 1], v[g]);
    return SignedPermutation(std::move(v));
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  /// pi(x) for x in J_n, extended by pi(-i) = -pi(i).
  int operator()(int x) const { return x > 0 ? images_.at(x - 1) : -images_.at(-x - 1); }

  /// Composition (*this after rhs).
  SignedPermutation operator*(const SignedPermutation& rhs) const {
    std::vector<int> v(rhs.rank());
    for (int i = 1; i <= rhs.rank(); ++i) v[i - 1] = (*this)(rhs(i));
    return SignedPermutation(std::move(v));
  }

  SignedPermutation inverse() const {
    std::vector<int> v(rank());
    for (int i = 1; i <= rank(); ++i) {
      const int y = images_[i - 1];
      v[std::abs(y) - 1] = y > 0 ? i : -i;
    }
    return SignedPermutation(std::move(v));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Element of S_n, images[i-1] = w(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = rank();
    std::vector<bool> hit(n + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || hit[v]) throw argument_error("not a permutation");
      hit[v] = true;
    }
  }

  static Permutation identity(int n) { return Permutation(iota_vector(1, n)); }
  static Permutation longest(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - i;
    return Permutation(std::move(v));
  }
  /// s_g = (g, g+1), 1 <= g < n.
  static Permutation simple(int n, int g) {
    if (g < 1 || g >= n) throw argument_error("simple reflection index out of range");
    auto v = iota_vector(1, n);
    std::swap(v[g - 1], v[g]);
    return Permutation(std::move(v));
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int x) const { return images_.at(x - 1); }

  Permutation operator*(const Permutation& rhs) const {
    std::vector<int> v(rhs.rank());
    for (int i = 1; i <= rhs.rank(); ++i) v[i - 1] = (*this)(rhs(i));
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(rank());
    for (int i = 1; i <= rank(); ++i) v[images_[i - 1] - 1] = i;
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Window notation, e.g. "[2, 1]" or "[-1, 2]".
template <class Perm>
std::string window(const Perm& p) {
  std::string s = "[";
  for (int i = 0; i < p.rank(); ++i) {
    if (i) s += ", ";
    s += std::to_string(p.images()[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Roots

/// A root +-e_i or +-(e_i +- e_j), as integer coordinates in the standard basis.
class Root {
 public:
  enum class Kind { Short, Long };

  Root() = default;
  explicit Root(std::vector<int> coefficients) : c_(std::move(coefficients)) {
    int support = 0;
    for (int x : c_) {
      if (x < -1 || x > 1) throw argument_error("root coefficients must be -1, 0 or 1");
      support += x != 0;
    }
    if (support < 1 || support > 2) throw argument_error("a root has one or two nonzero coordinates");
  }

  /// sign * e_i
  static Root unit(int n, int i, int sign = 1) {
    std::vector<int> c(n, 0);
    c.at(i - 1) = sign;
    return Root(std::move(c));
  }
  /// e_i + other_sign * e_j
  static Root pair(int n, int i, int j, int other_sign) {
    std::vector<int> c(n, 0);
    c.at(i - 1) = 1;
    c.at(j - 1) = other_sign;
    return Root(std::move(c));
  }

  const std::vector<int>& coefficients() const { return c_; }
  int rank() const { return static_cast<int>(c_.size()); }
  Kind kind() const {
    return std::count(c_.begin(), c_.end(), 0) == static_cast<long>(c_.size()) - 1 ? Kind::Short : Kind::Long;
  }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.c_ <=> b.c_; }

 private:
  std::vector<int> c_;
};

inline std::string to_string(const Root& r) {
  std::string s;
  auto emit = [&](int i, int c) {
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += "e" + std::to_string(i);
  };
  for (int i = r.rank(); i >= 1; --i)
    if (r.coefficients()[i - 1] > 0) emit(i, 1);
  for (int i = r.rank(); i >= 1; --i)
    if (r.coefficients()[i - 1] < 0) emit(i, -1);
  return s;
}

/// Type B positivity: the coordinate of largest index is +1.
inline bool is_positive_B(const Root& r) {
  for (int i = r.rank() - 1; i >= 0; --i)
    if (r.coefficients()[i] != 0) return r.coefficients()[i] > 0;
  return false;
}

/// Type A positivity: the coordinate of smallest index is +1.
inline bool is_positive_A(const Root& r) {
  for (int c : r.coefficients())
    if (c != 0) return c > 0;
  return false;
}

inline std::vector<Root> positive_roots_B(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) out.push_back(Root::unit(n, i));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      out.push_back(Root::pair(n, i, j, -1));
      out.push_back(Root::pair(n, i, j, +1));
    }
  return out;
}

inline std::vector<Root> positive_roots_A(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Root::pair(n, i, j, -1));
  return out;
}

/// e_i -> sign(pi(i)) e_{|pi(i)|}, extended linearly.
inline Root act(const SignedPermutation& pi, const Root& alpha) {
  if (pi.rank() != alpha.rank()) throw argument_error("act: rank mismatch");
  std::vector<int> c(alpha.rank(), 0);
  for (int i = 1; i <= alpha.rank(); ++i) {
    const int coef = alpha.coefficients()[i - 1];
    if (coef == 0) continue;
    const int img = pi(i);
    c[std::abs(img) - 1] += coef * (img > 0 ? 1 : -1);
  }
  return Root(std::move(c));
}

/// e_i -> e_{w(i)}.
inline Root act(const Permutation& w, const Root& alpha) {
  if (w.rank() != alpha.rank()) throw argument_error("act: rank mismatch");
  std::vector<int> c(alpha.rank(), 0);
  for (int i = 1; i <= alpha.rank(); ++i) c[w(i) - 1] += alpha.coefficients()[i - 1];
  return Root(std::move(c));
}

inline std::vector<Root> weyl_inversions(const SignedPermutation& pi) {
  std::vector<Root> out;
  for (const auto& a : positive_roots_B(pi.rank()))
    if (!is_positive_B(act(pi, a))) out.push_back(a);
  return out;
}

inline std::vector<Root> weyl_inversions(const Permutation& w) {
  std::vector<Root> out;
  for (const auto& a : positive_roots_A(w.rank()))
    if (!is_positive_A(act(w, a))) out.push_back(a);
  return out;
}

template <class Perm>
int weyl_length(const Perm& w) {
  return static_cast<int>(weyl_inversions(w).size());
}

/// The positive root attached to a level-2 element:
///   [-i,-j] -> e_i - e_j,  [-i,j] -> e_i + e_j,  [k,*] -> e_k   (type B, i > j > 0)
///   {i,j}   -> e_i - e_j                                      (type A, i < j)
inline Root root_of(const Element& K, int n) {
  if (level_of(K) != 2) throw argument_error("root_of: need a level-2 element");
  if (auto* a = std::get_if<KSubset>(&K)) return Root::pair(n, a->members()[0], a->members()[1], -1);
  const auto& b = std::get<BElem>(K);
  if (b.is_star()) return Root::unit(n, b.entries()[0]);
  const int i = -b.entries()[0];
  const int second = b.entries()[1];
  return second < 0 ? Root::pair(n, i, -second, -1) : Root::pair(n, i, second, +1);
}

// ---------------------------------------------------------------------------
// Orders of level 1 as group elements

/// pi_rho for an admissible ordering of J_n: the element at position p is sent
/// to the p-th slot of -n < ... < -1 < 1 < ... < n.
inline SignedPermutation order_to_perm_B(const GroundSet& gs, const Order& order) {
  if (gs.family() != Family::B || gs.level() != 1) throw argument_error("order_to_perm_B: need type B level 1");
  positions(gs, order);
  const int n = gs.rank();
  std::vector<int> slot_of(2 * n + 1, 0);  // indexed by value + n
  for (int p = 0; p < 2 * n; ++p) {
    const int value = std::get<SignedIndex>(gs.element(order[p])).value;
    slot_of[value + n] = p < n ? p - n : p - n + 1;
  }
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) {
    if (slot_of[-i + n] != -slot_of[i + n])
      throw not_admissible("ordering of J_n is not reversed by negation, so it is not admissible");
    images[i - 1] = slot_of[i + n];
  }
  return SignedPermutation(std::move(images));
}

/// w for the ordering a_1 < ... < a_n of I_n: a_p -> p.
inline Permutation order_to_perm_A(const GroundSet& gs, const Order& order) {
  if (gs.family() != Family::A || gs.level() != 1) throw argument_error("order_to_perm_A: need type A level 1");
  positions(gs, order);
  std::vector<int> images(gs.rank());
  for (int p = 0; p < gs.rank(); ++p) images[std::get<KSubset>(gs.element(order[p])).members()[0] - 1] = p + 1;
  return Permutation(std::move(images));
}

/// The admissible ordering realizing a group element (inverse of order_to_perm_B).
inline Order perm_to_order_B(const GroundSet& gs, const SignedPermutation& pi) {
  const int n = gs.rank();
  Order o(2 * n);
  for (int x = -n; x <= n; ++x) {
    if (x == 0) continue;
    const int slot = pi(x);
    const int p = slot < 0 ? slot + n : slot + n - 1;
    o[p] = gs.index_of(SignedIndex{x});
  }
  return o;
}

// ---------------------------------------------------------------------------
// Lemma: K in Inv(rho) iff pi_rho(alpha_K) is negative.

struct InstanceCount {
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

inline InstanceCount lemma17_check_B(int n) {
  const GroundSet gs(Family::B, n, 1);
  InstanceCount r;
  for (const auto& rho : enumerate_admissible(gs)) {
    const auto pi = order_to_perm_B(gs, rho);
    const auto inv = inversion_set(gs, rho);
    for (std::size_t u = 0; u < gs.upper().size(); ++u) {
      const bool in_inv = std::binary_search(inv.begin(), inv.end(), static_cast<int>(u));
      const bool negative = !is_positive_B(act(pi, root_of(gs.upper()[u], n)));
      ++r.instances;
      if (in_inv != negative) ++r.failures;
    }
  }
  return r;
}

/// Same statement for S_n with e_i - e_j (i < j).
inline InstanceCount lemma17_check_A(int n) {
  const GroundSet gs(Family::A, n, 1);
  InstanceCount r;
  for (const auto& rho : enumerate_admissible(gs)) {
    const auto w = order_to_perm_A(gs, rho);
    const auto inv = inversion_set(gs, rho);
    for (std::size_t u = 0; u < gs.upper().size(); ++u) {
      const bool in_inv = std::binary_search(inv.begin(), inv.end(), static_cast<int>(u));
      const bool negative = !is_positive_A(act(w, root_of(gs.upper()[u], n)));
      ++r.instances;
      if (in_inv != negative) ++r.failures;
    }
  }
  return r;
}

inline bool lemma17_check(int n) { return lemma17_check_B(n).ok(); }

// ---------------------------------------------------------------------------
// Weak left order

struct WeakEdge {
  int src = 0;
  int dst = 0;
  int generator = 0;
};

template <class Perm>
struct WeakOrder {
  std::vector<Perm> elements;  // breadth-first from the identity
  std::vector<int> length;
  std::vector<WeakEdge> edges;
  std::map<Perm, int> index;
};

namespace detail {

template <class Perm>
WeakOrder<Perm> build_weak_order(const Perm& id, const std::vector<Perm>& gens, int first_generator) {
  WeakOrder<Perm> g;
  g.elements.push_back(id);
  g.length.push_back(weyl_length(id));
  g.index.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Perm next = gens[s] * g.elements[head];
      auto [it, inserted] = g.index.emplace(next, static_cast<int>(g.elements.size()));
      if (inserted) {
        g.elements.push_back(next);
        g.length.push_back(weyl_length(next));
      }
      if (g.length[it->second] == g.length[head] + 1)
        g.edges.push_back({static_cast<int>(head), it->second, static_cast<int>(s) + first_generator});
    }
  }
  return g;
}

}  // namespace detail

inline std::vector<SignedPermutation> simple_reflections_B(int n) {
  std::vector<SignedPermutation> out;
  for (int g = 0; g < n; ++g) out.push_back(SignedPermutation::simple(n, g));
  return out;
}

inline std::vector<Permutation> simple_reflections_A(int n) {
  std::vector<Permutation> out;
  for (int g = 1; g < n; ++g) out.push_back(Permutation::simple(n, g));
  return out;
}

/// B_n with covers w -> s w whenever l(s w) = l(w) + 1.
inline WeakOrder<SignedPermutation> weak_order_poset(int n) {
  if (n < 1) throw argument_error("weak_order_poset: n >= 1");
  return detail::build_weak_order(SignedPermutation::identity(n), simple_reflections_B(n), 0);
}

inline WeakOrder<Permutation> weak_order_poset_A(int n) {
  if (n < 1) throw argument_error("weak_order_poset_A: n >= 1");
  return detail::build_weak_order(Permutation::identity(n), simple_reflections_A(n), 1);
}

/// Index of the simple reflection equal to q, or nullopt.
inline std::optional<int> simple_index(const SignedPermutation& q) {
  for (int g = 0; g < q.rank(); ++g)
    if (q == SignedPermutation::simple(q.rank(), g)) return g;
  return std::nullopt;
}

inline std::optional<int> simple_index(const Permutation& q) {
  for (int g = 1; g < q.rank(); ++g)
    if (q == Permutation::simple(q.rank(), g)) return g;
  return std::nullopt;
}

struct IsoReport {
  std::size_t poset_nodes = 0;
  std::size_t group_order = 0;
  std::size_t poset_edges = 0;
  std::size_t weak_edges = 0;
  bool bijective = false;
  bool ranks_match = false;
  bool edges_match = false;
  std::string counterexample;
  bool ok() const { return bijective && ranks_match && edges_match; }
};

namespace detail {

template <class Perm, class ToPerm>
IsoReport iso_report(const BruhatPoset& p, const WeakOrder<Perm>& wo, ToPerm to_perm) {
  const GroundSet& gs = p.ground();
  IsoReport r;
  r.poset_nodes = p.nodes().size();
  r.group_order = wo.elements.size();
  r.poset_edges = p.edges().size();
  r.weak_edges = wo.edges.size();

  std::vector<int> image(p.nodes().size(), -1);
  std::set<int> hit;
  r.ranks_match = true;
  for (std::size_t v = 0; v < p.nodes().size(); ++v) {
    const Perm w = to_perm(gs, p.nodes()[v].canon);
    auto it = wo.index.find(w);
    if (it == wo.index.end()) {
      r.counterexample = "node " + std::to_string(v) + " maps outside the group";
      return r;
    }
    image[v] = it->second;
    hit.insert(it->second);
    if (wo.length[it->second] != p.nodes()[v].rank) r.ranks_match = false;
  }
  r.bijective = hit.size() == p.nodes().size() && hit.size() == wo.elements.size();

  std::set<std::tuple<int, int, int>> weak;
  for (const auto& e : wo.edges) weak.emplace(e.src, e.dst, e.generator);
  r.edges_match = p.edges().size() == wo.edges.size();
  for (const auto& e : p.edges()) {
    const Perm a = wo.elements[image[e.src]];
    const Perm b = wo.elements[image[e.dst]];
    const auto g = simple_index(b * a.inverse());
    if (!g || !weak.count({image[e.src], image[e.dst], *g})) {
      r.edges_match = false;
      if (r.counterexample.empty())
        r.counterexample = "flip by " + to_string(gs.upper()[e.label]) + " at " + window(a) +
                           " is not a left multiplication by a simple reflection";
    }
  }
  return r;
}

}  // namespace detail

/// order_to_perm is a poset isomorphism B_B(J_n,1) -> (B_n, weak left order),
/// packet flips matching left multiplications by simple reflections edge by edge.
inline IsoReport iso_report_B(int n) {
  return detail::iso_report(build_poset(Family::B, n, 1), weak_order_poset(n), order_to_perm_B);
}

inline IsoReport iso_report_A(int n) {
  return detail::iso_report(build_poset(Family::A, n, 1), weak_order_poset_A(n), order_to_perm_A);
}

inline bool iso_check(int n) { return iso_report_B(n).ok(); }

// ---------------------------------------------------------------------------
// Words

struct ReducedWord {
  Family family = Family::B;
  int n = 0;
  std::vector<int> letters;  // application order of left multiplications

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) { return a.letters <=> b.letters; }
};

/// "s0 s1 s0 s1"
inline std::string to_string(const ReducedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += "s" + std::to_string(w.letters[i]);
  }
  return s;
}

/// The same word written as a product, leftmost factor applied last:
/// "s1 s0 s1 s0" for letters (0, 1, 0, 1).
inline std::string product_expression(const ReducedWord& w) {
  ReducedWord rev = w;
  std::reverse(rev.letters.begin(), rev.letters.end());
  return to_string(rev);
}

inline ReducedWord parse_word(Family family, int n, std::string_view text) {
  ReducedWord w{family, n, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    if (text[i] != 's') throw argument_error("word letters look like s0, s1, ...");
    std::size_t j = i + 1;
    while (j < text.size() && text[j] != ' ') ++j;
    w.letters.push_back(detail::parse_int(text.substr(i + 1, j - i - 1)));
    i = j;
  }
  return w;
}

inline SignedPermutation evaluate_B(int n, const std::vector<int>& letters) {
  auto w = SignedPermutation::identity(n);
  for (int g : letters) w = SignedPermutation::simple(n, g) * w;
  return w;
}

inline Permutation evaluate_A(int n, const std::vector<int>& letters) {
  auto w = Permutation::identity(n);
  for (int g : letters) w = Permutation::simple(n, g) * w;
  return w;
}

inline bool is_reduced(const ReducedWord& w) {
  const int len = w.family == Family::B ? weyl_length(evaluate_B(w.n, w.letters))
                                        : weyl_length(evaluate_A(w.n, w.letters));
  return len == static_cast<int>(w.letters.size());
}

inline bool evaluates_to_longest(const ReducedWord& w) {
  return w.family == Family::B ? evaluate_B(w.n, w.letters) == SignedPermutation::longest(w.n)
                               : evaluate_A(w.n, w.letters) == Permutation::longest(w.n);
}

/// Word realized by a maximal chain of B(.,1): the generators whose left
/// multiplications the successive flips perform.
inline ReducedWord chain_to_word(const GroundSet& gs, const std::vector<int>& labels) {
  if (gs.level() != 1) throw argument_error("chain_to_word: chains of level-1 posets only");
  if (labels.size() != gs.upper().size())
    throw argument_error("chain_to_word: chain is not maximal (wrong length)");
  ReducedWord w{gs.family(), gs.rank(), {}};
  Order cur = rho_min(gs);
  for (int K : labels) {
    const auto inv = inversion_set(gs, cur);
    if (std::binary_search(inv.begin(), inv.end(), K))
      throw argument_error("chain_to_word: label " + to_string(gs.upper().at(K)) + " repeats");
    const Order next = packet_flip(gs, cur, K);
    std::optional<int> g;
    if (gs.family() == Family::B)
      g = simple_index(order_to_perm_B(gs, next) * order_to_perm_B(gs, cur).inverse());
    else
      g = simple_index(order_to_perm_A(gs, next) * order_to_perm_A(gs, cur).inverse());
    if (!g) throw argument_error("chain_to_word: flip is not a simple reflection");
    w.letters.push_back(*g);
    cur = next;
  }
  if (cur != rho_max(gs)) throw argument_error("chain_to_word: chain does not end at rho_max");
  return w;
}

/// Coxeter exponent m(s,t).
inline int coxeter_m(Family family, int s, int t) {
  if (s == t) return 1;
  if (family == Family::B && std::min(s, t) == 0 && std::max(s, t) == 1) return 4;
  return std::abs(s - t) == 1 ? 3 : 2;
}

enum class BraidArity { M3 = 3, M4 = 4 };

/// Braid relation realized by flipping the packet of a level-3 element.
inline BraidArity braid_classify(const Element& K) {
  if (level_of(K) != 3) throw argument_error("braid_classify: need a level-3 element");
  if (auto* b = std::get_if<BElem>(&K)) return b->is_star() ? BraidArity::M4 : BraidArity::M3;
  return BraidArity::M3;
}

struct WordMove {
  int position = 0;
  int length = 0;  // 2: commutation, 3 or 4: braid relation
};

/// If the two words differ by one commutation or braid move, describe it.
inline std::optional<WordMove> word_move(const ReducedWord& a, const ReducedWord& b) {
  if (a.letters.size() != b.letters.size() || a.family != b.family) return std::nullopt;
  const int len = static_cast<int>(a.letters.size());
  int lo = 0, hi = len - 1;
  while (lo < len && a.letters[lo] == b.letters[lo]) ++lo;
  if (lo == len) return std::nullopt;
  while (a.letters[hi] == b.letters[hi]) --hi;
  const int width = hi - lo + 1;
  const int s = a.letters[lo], t = a.letters[lo + 1 < len ? lo + 1 : lo];
  if (width < 2 || s == t || coxeter_m(a.family, s, t) != width) return std::nullopt;
  for (int i = 0; i < width; ++i) {
    const int expect_a = i % 2 == 0 ? s : t;
    const int expect_b = i % 2 == 0 ? t : s;
    if (a.letters[lo + i] != expect_a || b.letters[lo + i] != expect_b) return std::nullopt;
  }
  return WordMove{lo, width};
}

/// All reduced words of the longest element, as paths through the weak order.
inline std::vector<ReducedWord> reduced_words_of_longest(Family family, int n, std::size_t limit = 1'000'000) {
  std::vector<ReducedWord> out;
  auto collect = [&](const auto& wo) {
    std::vector<std::vector<int>> succ(wo.elements.size());
    for (std::size_t e = 0; e < wo.edges.size(); ++e) succ[wo.edges[e].src].push_back(static_cast<int>(e));
    int top = 0;
    for (std::size_t v = 0; v < wo.elements.size(); ++v)
      if (wo.length[v] > wo.length[top]) top = static_cast<int>(v);
    std::vector<int> letters;
    std::function<void(int)> walk = [&](int v) {
      if (v == top) {
        if (out.size() >= limit) throw node_limit_exceeded("too many reduced words");
        out.push_back({family, n, letters});
        return;
      }
      for (int e : succ[v]) {
        letters.push_back(wo.edges[e].generator);
        walk(wo.edges[e].dst);
        letters.pop_back();
      }
    };
    walk(0);
  };
  if (family == Family::B)
    collect(weak_order_poset(n));
  else
    collect(weak_order_poset_A(n));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Maximal chains of B(.,1) as reduced words: admissible orderings of level 2
// map bijectively to reduced words of w_0; elementary swaps become
// commutations and packet flips become braid moves.

struct WordCorrespondenceReport {
  std::size_t orderings = 0;
  std::size_t reduced_words = 0;
  std::size_t flips_checked = 0;
  std::size_t swaps_checked = 0;
  bool words_reduced = false;
  bool bijective = false;
  bool flips_are_braids = false;
  bool swaps_are_commutations = false;
  std::string counterexample;
  bool ok() const { return words_reduced && bijective && flips_are_braids && swaps_are_commutations; }
};

inline WordCorrespondenceReport word_correspondence_report(Family family, int n) {
  const GroundSet level1(family, n, 1);
  const GroundSet level2(family, n, 2);
  WordCorrespondenceReport r;
  const auto orders = enumerate_admissible(level2);
  r.orderings = orders.size();
  std::map<Order, ReducedWord> word_of;
  std::set<ReducedWord> words;
  r.words_reduced = true;
  for (const auto& rho : orders) {
    // Level-2 ground indices coincide with level-1 upper indices.
    const ReducedWord w = chain_to_word(level1, std::vector<int>(rho.begin(), rho.end()));
    if (!is_reduced(w) || !evaluates_to_longest(w)) {
      r.words_reduced = false;
      if (r.counterexample.empty()) r.counterexample = "word " + to_string(w) + " is not a reduced word of w0";
    }
    words.insert(w);
    word_of.emplace(rho, w);
  }
  const auto all_words = reduced_words_of_longest(family, n);
  r.reduced_words = all_words.size();
  r.bijective = words.size() == orders.size() &&
                std::set<ReducedWord>(all_words.begin(), all_words.end()) == words;

  r.flips_are_braids = true;
  r.swaps_are_commutations = true;
  for (const auto& rho : orders) {
    const ReducedWord& w = word_of.at(rho);
    for (int K : flip_candidates(level2, rho)) {
      ++r.flips_checked;
      const Order flipped = packet_flip(level2, rho, K);
      const auto mv = word_move(w, word_of.at(flipped));
      const int want = static_cast<int>(braid_classify(level2.upper()[K]));
      if (!mv || mv->length != want) {
        r.flips_are_braids = false;
        if (r.counterexample.empty())
          r.counterexample = "flip by " + to_string(level2.upper()[K]) + " changes " + to_string(w) + " into " +
                             to_string(word_of.at(flipped));
      }
    }
    for (std::size_t p = 0; p + 1 < rho.size(); ++p) {
      ++r.swaps_checked;
      const bool elements_commute = level2.commutes(rho[p], rho[p + 1]);
      const bool letters_commute = coxeter_m(family, w.letters[p], w.letters[p + 1]) == 2;
      bool ok = elements_commute == letters_commute;
      if (ok && elements_commute) {
        Order swapped = rho;
        std::swap(swapped[p], swapped[p + 1]);
        const auto mv = word_move(w, word_of.at(swapped));
        ok = mv && mv->length == 2 && mv->position == static_cast<int>(p);
      }
      if (!ok) {
        r.swaps_are_commutations = false;
        if (r.counterexample.empty())
          r.counterexample = "positions " + std::to_string(p) + "," + std::to_string(p + 1) + " of " + to_string(w);
      }
    }
  }
  return r;
}

}  // namespace hbo
