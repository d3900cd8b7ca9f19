#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hbo/combinatorics.hpp"
#include "hbo/elements.hpp"
#include "hbo/errors.hpp"

namespace hbo {

/// A packet expressed through ground-set indices.
struct IndexedPacket {
  std::vector<int> members;                  // ascending ground index
  std::vector<std::vector<int>> components;  // each chain in increasing packet order
};

/// One level of one family, fully indexed: ground elements in standard order,
/// the level-(k+1) elements with their packets, and the commutation relation.
/// Orders over this ground set are permutations of 0..size()-1.
class GroundSet {
 public:
  GroundSet() = default;

  GroundSet(Family family, int n, int k) : family_(family), n_(n), k_(k) {
    if (n < 1 || k < 1) throw argument_error("ground set needs n >= 1 and k >= 1");
    if (family == Family::A && k > n)
      throw argument_error("C(I_n,k) is empty for k > n");
    if (family == Family::B && k > 3)
      throw unsupported_level("type B orders are defined only up to level 3 (got k=" +
                              std::to_string(k) + ")");
    elements_ = enumerate(family, n, k);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(to_string(elements_[i]), static_cast<int>(i));

    upper_ = all_elements(family, n, k + 1);
    const int m = static_cast<int>(elements_.size());
    comparable_.assign(static_cast<std::size_t>(m) * m, false);
    containing_.assign(m, {});
    for (std::size_t u = 0; u < upper_.size(); ++u) {
      Packet p = packet_of(upper_[u]);
      IndexedPacket ip;
      for (const auto& e : p.elements) ip.members.push_back(index_of(e));
      std::sort(ip.members.begin(), ip.members.end());
      for (const auto& comp : p.components) {
        std::vector<int> chain;
        for (const auto& e : comp) chain.push_back(index_of(e));
        for (std::size_t a = 0; a < chain.size(); ++a)
          for (std::size_t b = a + 1; b < chain.size(); ++b) {
            comparable_[chain[a] * m + chain[b]] = true;
            comparable_[chain[b] * m + chain[a]] = true;
          }
        ip.components.push_back(std::move(chain));
      }
      for (int x : ip.members) containing_[x].push_back(static_cast<int>(u));
      packets_.push_back(std::move(ip));
    }
    for (std::size_t u = 0; u < upper_.size(); ++u) upper_index_.emplace(to_string(upper_[u]), static_cast<int>(u));
  }

  Family family() const { return family_; }
  int rank() const { return n_; }
  int level() const { return k_; }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(int i) const { return elements_.at(i); }

  int index_of(const Element& e) const {
    auto it = index_.find(to_string(e));
    if (it == index_.end()) throw argument_error("element " + to_string(e) + " is not in the ground set");
    return it->second;
  }

  /// Level-(k+1) elements; packet i of packets() belongs to upper()[i].
  const std::vector<Element>& upper() const { return upper_; }
  const std::vector<IndexedPacket>& packets() const { return packets_; }
  const IndexedPacket& packet(int u) const { return packets_.at(u); }

  int upper_index_of(const Element& e) const {
    auto it = upper_index_.find(to_string(e));
    if (it == upper_index_.end())
      throw argument_error("element " + to_string(e) + " is not a level-" + std::to_string(k_ + 1) + " element");
    return it->second;
  }

  /// Indices of the packets that contain ground element x.
  const std::vector<int>& packets_containing(int x) const { return containing_.at(x); }

  /// Incomparable in every packet containing both (no common packet in type A).
  bool commutes(int a, int b) const {
    const int m = static_cast<int>(elements_.size());
    return a != b && !comparable_[a * m + b];
  }

 private:
  Family family_ = Family::A;
  int n_ = 0;
  int k_ = 0;
  std::vector<Element> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<Element> upper_;
  std::unordered_map<std::string, int> upper_index_;
  std::vector<IndexedPacket> packets_;
  std::vector<std::vector<int>> containing_;
  std::vector<bool> comparable_;
};

}  // namespace hbo
