#pragma once

#include <string>
#include <vector>

#include "hbo/ground_set.hpp"
#include "hbo/orders.hpp"

namespace testing_helpers {

inline hbo::Order order_of(const hbo::GroundSet& gs, const std::vector<std::string>& names) {
  hbo::Order o;
  for (const auto& s : names) o.push_back(gs.index_of(hbo::parse_element(s)));
  return o;
}

inline std::vector<std::string> names_of(const hbo::GroundSet& gs, const hbo::Order& o) {
  std::vector<std::string> out;
  for (int x : o) out.push_back(hbo::to_string(gs.element(x)));
  return out;
}

inline std::vector<std::string> upper_names(const hbo::GroundSet& gs, const std::vector<int>& ks) {
  std::vector<std::string> out;
  for (int k : ks) out.push_back(hbo::to_string(gs.upper()[k]));
  return out;
}

inline int upper(const hbo::GroundSet& gs, const std::string& name) {
  return gs.upper_index_of(hbo::parse_element(name));
}

inline std::vector<std::string> texts(const std::vector<hbo::Element>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(hbo::to_string(e));
  return out;
}

}  // namespace testing_helpers
