#pragma once

// Ground-set elements for both families:
//   type A, level k : k-subsets of {1..n}                      (KSubset)
//   type B, level 1 : nonzero integers in [-n, n]               (SignedIndex)
//   type B, level k : negation orbits of k-sets with distinct
//                     absolute values, or T u {*}               (BElem)

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hbo/errors.hpp"

namespace hbo {

enum class Family { A, B };

inline const char* to_string(Family f) { return f == Family::A ? "A" : "B"; }

struct SignedIndex {
  int value = 0;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

inline SignedIndex negate(SignedIndex x) { return SignedIndex{-x.value}; }

class KSubset {
 public:
  KSubset() = default;

  explicit KSubset(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw argument_error("KSubset: empty subset");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] < 1) throw argument_error("KSubset: members must be positive");
      if (i > 0 && members_[i - 1] >= members_[i])
        throw argument_error("KSubset: members must be strictly increasing");
    }
  }

  const std::vector<int>& members() const { return members_; }
  int level() const { return static_cast<int>(members_.size()); }

  friend bool operator==(const KSubset&, const KSubset&) = default;

 private:
  std::vector<int> members_;
};

class BElem {
 public:
  enum class Kind { Orbit, Star };

  /// Orbit class of `raw` under negation, stored as its preferred representative
  /// (largest magnitude negative) in display order: negatives ascending, then
  /// positives descending.
  static BElem orbit(std::vector<int> raw) {
    if (raw.empty()) throw argument_error("orbit: empty set");
    for (int v : raw)
      if (v == 0) throw argument_error("orbit: zero is not a signed index");
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = i + 1; j < raw.size(); ++j)
        if (std::abs(raw[i]) == std::abs(raw[j]))
          throw argument_error("orbit: repeated absolute value");
    auto top = std::max_element(raw.begin(), raw.end(),
                                [](int a, int b) { return std::abs(a) < std::abs(b); });
    if (*top > 0)
      for (int& v : raw) v = -v;
    std::sort(raw.begin(), raw.end(), display_less);
    return BElem(Kind::Orbit, std::move(raw));
  }

  /// T u {*} for a set T of distinct positive indices (stored descending).
  static BElem star(std::vector<int> support) {
    for (int v : support)
      if (v <= 0) throw argument_error("star: support must be positive");
    std::sort(support.begin(), support.end(), std::greater<>());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
      throw argument_error("star: repeated index");
    return BElem(Kind::Star, std::move(support));
  }

  Kind kind() const { return kind_; }
  bool is_orbit() const { return kind_ == Kind::Orbit; }
  bool is_star() const { return kind_ == Kind::Star; }

  /// Orbit: preferred representative in display order. Star: support, descending.
  const std::vector<int>& entries() const { return entries_; }

  int level() const {
    return static_cast<int>(entries_.size()) + (kind_ == Kind::Star ? 1 : 0);
  }

  friend bool operator==(const BElem&, const BElem&) = default;

  static bool display_less(int a, int b) {
    if ((a < 0) != (b < 0)) return a < 0;
    return a < 0 ? a < b : a > b;
  }

 private:
  BElem(Kind kind, std::vector<int> entries) : kind_(kind), entries_(std::move(entries)) {}

  Kind kind_ = Kind::Orbit;
  std::vector<int> entries_;
};

inline BElem normalize_orbit(std::vector<int> raw) { return BElem::orbit(std::move(raw)); }

using Element = std::variant<SignedIndex, KSubset, BElem>;

inline int level_of(const Element& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SignedIndex>)
          return 1;
        else
          return x.level();
      },
      e);
}

inline Family family_of(const Element& e) {
  return std::holds_alternative<KSubset>(e) ? Family::A : Family::B;
}

// ---------------------------------------------------------------------------
// Text syntax: "{1,2}" (type A), "-2" (type B level 1), "[-3,2]", "[2,1,*]".

inline std::string to_string(const Element& e) {
  auto join = [](const std::vector<int>& v, std::string& out) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
  };
  std::string out;
  if (auto* s = std::get_if<SignedIndex>(&e)) return std::to_string(s->value);
  if (auto* a = std::get_if<KSubset>(&e)) {
    out = "{";
    join(a->members(), out);
    return out + "}";
  }
  const auto& b = std::get<BElem>(e);
  out = "[";
  join(b.entries(), out);
  if (b.is_star()) out += b.entries().empty() ? "*" : ",*";
  return out + "]";
}

namespace detail {

inline int parse_int(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    throw argument_error("cannot parse integer '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split_commas(std::string_view body) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      out.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Element parse_element(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw argument_error("empty element text");
  if (text.front() == '{') {
    if (text.back() != '}') throw argument_error("unterminated '{'");
    std::vector<int> members;
    for (auto tok : detail::split_commas(text.substr(1, text.size() - 2)))
      members.push_back(detail::parse_int(tok));
    std::sort(members.begin(), members.end());
    return KSubset(std::move(members));
  }
  if (text.front() == '[') {
    if (text.back() != ']') throw argument_error("unterminated '['");
    std::vector<int> values;
    bool star = false;
    for (auto tok : detail::split_commas(text.substr(1, text.size() - 2))) {
      tok = detail::trim(tok);
      if (tok == "*" || tok == "★") {
        if (star) throw argument_error("repeated '*'");
        star = true;
      } else {
        if (star) throw argument_error("'*' must be last");
        values.push_back(detail::parse_int(tok));
      }
    }
    if (!star) return BElem::orbit(std::move(values));
    // The notation allows an all-negative support; normalize to positive.
    bool all_negative = !values.empty() &&
                        std::all_of(values.begin(), values.end(), [](int v) { return v < 0; });
    if (all_negative)
      for (int& v : values) v = -v;
    return BElem::star(std::move(values));
  }
  int v = detail::parse_int(text);
  if (v == 0) throw argument_error("0 is not a signed index");
  return SignedIndex{v};
}

// ---------------------------------------------------------------------------
// Standard orders. Each element maps to an integer key; the standard order on
// a level is the lexicographic order of keys.

namespace detail {

inline std::vector<int> belem_key(const BElem& b) {
  const auto& e = b.entries();
  const int level = b.level();
  if (level == 2) {
    // [a,*] sits in the single-negative block as [-a, a].
    if (b.is_star()) return {1, -e[0], -e[0]};
    if (e[1] < 0) return {0, e[0], e[1]};
    return {1, e[0], -e[1]};
  }
  if (level == 3) {
    // [a1,a2,*] sits in the two-negative block as [-a1,-a2,a2].
    if (b.is_star()) return {1, -e[0], -e[1], -e[1]};
    int negatives = static_cast<int>(std::count_if(e.begin(), e.end(), [](int v) { return v < 0; }));
    if (negatives == 3) return {0, e[0], e[1], e[2]};
    if (negatives == 2) return {1, e[0], e[1], -e[2]};
    return {2, -e[0], -e[1], -e[2]};
  }
  throw unsupported_level("no standard order on type B level " + std::to_string(level));
}

}  // namespace detail

inline std::vector<int> standard_key(const Element& e) {
  if (auto* s = std::get_if<SignedIndex>(&e)) return {s->value};
  if (auto* a = std::get_if<KSubset>(&e)) return a->members();
  const auto& b = std::get<BElem>(e);
  if (b.level() == 1) throw argument_error("level-1 type B elements are signed indices");
  return detail::belem_key(b);
}

/// The standard order on one level; comparing elements of different levels or
/// families is a usage error.
inline bool standard_less(const Element& a, const Element& b) {
  if (a.index() != b.index() || level_of(a) != level_of(b))
    throw argument_error("standard_less: elements of different levels");
  return standard_key(a) < standard_key(b);
}

}  // namespace hbo
