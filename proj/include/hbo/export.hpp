#pragma once

// Poset serialization: Graphviz DOT for viewing, JSON for round trips.
// Elements are written in their text syntax so files are self-describing.

#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hbo/errors.hpp"
#include "hbo/poset.hpp"

namespace hbo {

namespace detail {

inline std::string sequence_text(const GroundSet& gs, const std::vector<int>& seq, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += sep;
    s += to_string(gs.element(seq[i]));
  }
  return s;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// One node per class labelled "rank: canonical sequence", one edge per cover
/// labelled by the flipped element. Node and edge order follow construction order.
inline std::string export_dot(const BruhatPoset& p) {
  const GroundSet& gs = p.ground();
  std::ostringstream out;
  out << "digraph bruhat_" << to_string(gs.family()) << '_' << gs.rank() << '_' << gs.level() << " {\n";
  out << "  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < p.nodes().size(); ++v) {
    const auto& node = p.nodes()[v];
    out << "  n" << v << " [label=\"" << node.rank << ": "
        << detail::dot_escape(detail::sequence_text(gs, node.canon, " ")) << "\"];\n";
  }
  for (const auto& e : p.edges())
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << detail::dot_escape(to_string(gs.upper()[e.label]))
        << "\"];\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::json to_json(const BruhatPoset& p) {
  const GroundSet& gs = p.ground();
  nlohmann::json j;
  j["family"] = to_string(gs.family());
  j["n"] = gs.rank();
  j["k"] = gs.level();
  j["nodes"] = nlohmann::json::array();
  for (std::size_t v = 0; v < p.nodes().size(); ++v) {
    const auto& node = p.nodes()[v];
    nlohmann::json canon = nlohmann::json::array(), inv = nlohmann::json::array();
    for (int x : node.canon) canon.push_back(to_string(gs.element(x)));
    for (int u : node.inv) inv.push_back(to_string(gs.upper()[u]));
    j["nodes"].push_back({{"id", v}, {"canon", canon}, {"inv", inv}, {"rank", node.rank}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : p.edges())
    j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"label", to_string(gs.upper()[e.label])}});
  return j;
}

inline Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  throw argument_error("family must be A or B, got '" + s + "'");
}

/// Rebuilds a poset from to_json output; element names are resolved against
/// a freshly built ground set, so malformed files fail loudly.
inline BruhatPoset from_json(const nlohmann::json& j) {
  try {
    BruhatPoset p{GroundSet(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>(), j.at("k").get<int>())};
    const GroundSet& gs = p.ground();
    for (const auto& node : j.at("nodes")) {
      if (node.at("id").get<std::size_t>() != p.nodes().size()) throw argument_error("node ids must be 0,1,2,...");
      PosetNode pn;
      for (const auto& s : node.at("canon")) pn.canon.push_back(gs.index_of(parse_element(s.get<std::string>())));
      for (const auto& s : node.at("inv")) pn.inv.push_back(gs.upper_index_of(parse_element(s.get<std::string>())));
      pn.rank = node.at("rank").get<int>();
      positions(gs, pn.canon);
      p.add_node(std::move(pn));
    }
    const int count = static_cast<int>(p.nodes().size());
    for (const auto& e : j.at("edges")) {
      PosetEdge pe{e.at("src").get<int>(), e.at("dst").get<int>(),
                   gs.upper_index_of(parse_element(e.at("label").get<std::string>()))};
      if (pe.src < 0 || pe.dst < 0 || pe.src >= count || pe.dst >= count)
        throw argument_error("edge endpoint out of range");
      p.add_edge(pe);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw argument_error(std::string("malformed poset JSON: ") + e.what());
  }
}

/// Same ground set, same node list and same edge set.
inline bool same_poset(const BruhatPoset& a, const BruhatPoset& b) {
  const auto& ga = a.ground();
  const auto& gb = b.ground();
  if (ga.family() != gb.family() || ga.rank() != gb.rank() || ga.level() != gb.level()) return false;
  if (a.nodes().size() != b.nodes().size()) return false;
  for (std::size_t v = 0; v < a.nodes().size(); ++v) {
    const auto& x = a.nodes()[v];
    const auto& y = b.nodes()[v];
    if (x.canon != y.canon || x.inv != y.inv || x.rank != y.rank) return false;
  }
  auto edge_set = [](const BruhatPoset& p) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& e : p.edges()) s.emplace(e.src, e.dst, e.label);
    return s;
  };
  return edge_set(a) == edge_set(b);
}

}  // namespace hbo
