#pragma once

// Exhaustive check that every blocking configuration admits a better packet:
// from a case sequence Q, fix the orientations of the 2-packets forced by Q,
// try every orientation of the rest, and inspect every linear extension of
// each consistent combination for a packet P* that is either nested inside
// P(K) from the left or starts later, without the relevant crossing.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbo/combinatorics.hpp"
#include "hbo/errors.hpp"
#include "hbo/ground_set.hpp"
#include "hbo/relation_graph.hpp"
#include "hbo/verify.hpp"

namespace hbo {

struct CaseSpec {
  BlockingCase which{};
  int n = 0;
  Element K;                // level 3
  int x = 0;
  std::vector<Element> seq;  // Q, level-2 elements in asserted order
};

inline std::string describe(const CaseSpec& c) {
  std::string s = "case " + std::to_string(static_cast<int>(c.which)) + " (" + pattern_text(c.which) +
                  ") K=" + to_string(c.K) + " x=" + std::to_string(c.x) + " Q=(";
  for (std::size_t i = 0; i < c.seq.size(); ++i) s += (i ? " " : "") + to_string(c.seq[i]);
  return s + ")";
}

/// Every instantiation of one case at rank n: each level-3 element of the
/// matching kind, each admissible x, and each position of the blocker strictly
/// between the pattern's endpoints within P(K) in standard order.
inline std::vector<CaseSpec> case_instances(BlockingCase which, int n) {
  if (n < 3) throw argument_error("case_instances: the cases need n >= 3");
  const bool star_case = static_cast<int>(which) >= 4;
  std::vector<CaseSpec> out;
  for (const auto& e : elements_B(n, 3)) {
    const auto& K = std::get<BElem>(e);
    if (K.is_star() != star_case) continue;
    const CaseLabels L = case_labels(K);
    const auto packet = packet_B(K).elements;
    for (int x : case_x_values(L, n)) {
      const CasePattern p = case_pattern(which, L, x);
      const auto lo = std::find(packet.begin(), packet.end(), p.low) - packet.begin();
      const auto hi = std::find(packet.begin(), packet.end(), p.high) - packet.begin();
      if (lo >= hi || hi == static_cast<long>(packet.size()))
        throw argument_error("case_instances: pattern endpoints out of packet order for " + to_string(e));
      for (auto at = lo + 1; at <= hi; ++at) {
        CaseSpec c{which, n, e, x, packet};
        c.seq.insert(c.seq.begin() + at, p.blocker);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

struct Algorithm2Report {
  bool pass = false;
  std::string R;                       // the level-4 element whose 2-packets cover Q
  std::size_t forced_packets = 0;      // packets whose orientation Q records
  std::size_t free_packets = 0;        // |U|
  std::size_t orientations = 0;        // 2^|U|
  std::size_t acyclic = 0;             // orientations whose union is a poset
  std::size_t extensions = 0;          // linear extensions inspected
  std::vector<std::string> failing_extension;
};

inline Algorithm2Report algorithm2_run(const CaseSpec& c) {
  if (level_of(c.K) != 3 || !std::holds_alternative<BElem>(c.K))
    throw argument_error("algorithm2: K must be a type B level-3 element");
  const GroundSet gs(Family::B, c.n, 2);
  const int uK = gs.upper_index_of(c.K);
  std::vector<int> Q;
  for (const auto& e : c.seq) {
    if (level_of(e) != 2) throw argument_error("algorithm2: Q must consist of level-2 elements");
    Q.push_back(gs.index_of(e));
  }
  if (std::set<int>(Q.begin(), Q.end()).size() != Q.size()) throw argument_error("algorithm2: Q repeats an element");

  // The unique R in C_B(J_n,4) whose 2-packets cover Q.
  std::optional<BElem> R;
  std::vector<int> R_packets;
  for (const auto& cand : elements_B(c.n, 4)) {
    std::vector<int> ups;
    std::set<int> cover;
    for (const auto& S : packet_B(std::get<BElem>(cand)).elements) {
      const int u = gs.upper_index_of(S);
      ups.push_back(u);
      cover.insert(gs.packet(u).members.begin(), gs.packet(u).members.end());
    }
    if (!std::all_of(Q.begin(), Q.end(), [&](int q) { return cover.count(q) > 0; })) continue;
    if (R) throw argument_error("algorithm2: Q lies in the 2-packets of more than one level-4 element");
    R = std::get<BElem>(cand);
    R_packets = std::move(ups);
  }
  if (!R) throw argument_error("algorithm2: no level-4 element covers Q");
  if (std::find(R_packets.begin(), R_packets.end(), uK) == R_packets.end())
    throw argument_error("algorithm2: P(K) is not among the packets of R");

  Algorithm2Report rep;
  rep.R = to_string(Element{*R});

  // Local vertices: the union T of the 2-packets of R.
  std::vector<int> T;
  for (int u : R_packets) T.insert(T.end(), gs.packet(u).members.begin(), gs.packet(u).members.end());
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());
  std::map<int, int> local;
  for (std::size_t v = 0; v < T.size(); ++v) local[T[v]] = static_cast<int>(v);
  const int tv = static_cast<int>(T.size());
  auto chain_of = [&](int u, bool standard) {
    std::vector<int> ch;
    for (int g : gs.packet(u).components.front()) ch.push_back(local.at(g));
    if (!standard) std::reverse(ch.begin(), ch.end());
    return RelationGraph::chain(tv, ch);
  };

  // Orientations forced by pairs of Q.
  std::vector<RelationGraph> L;
  std::set<int> recorded;
  for (std::size_t a = 0; a < Q.size(); ++a)
    for (std::size_t b = a + 1; b < Q.size(); ++b) {
      std::vector<int> common;
      for (int u : gs.packets_containing(Q[a]))
        if (std::binary_search(gs.packet(u).members.begin(), gs.packet(u).members.end(), Q[b])) common.push_back(u);
      if (common.empty()) continue;
      if (common.size() > 1) throw argument_error("algorithm2: a pair of Q shares two packets");
      const int u = common.front();
      if (std::find(R_packets.begin(), R_packets.end(), u) == R_packets.end())
        throw argument_error("algorithm2: a pair of Q lies in a packet outside R");
      const auto& chain = gs.packet(u).components.front();
      const auto pa = std::find(chain.begin(), chain.end(), Q[a]) - chain.begin();
      const auto pb = std::find(chain.begin(), chain.end(), Q[b]) - chain.begin();
      L.push_back(chain_of(u, pa < pb));
      recorded.insert(u);
    }
  rep.forced_packets = recorded.size();

  std::vector<int> U;
  for (int u : R_packets)
    if (!recorded.count(u)) U.push_back(u);
  rep.free_packets = U.size();
  rep.orientations = std::size_t{1} << U.size();

  auto commutes = [&](int a, int b) { return gs.commutes(T[a], T[b]); };
  const auto& PK = gs.packet(uK).members;

  rep.pass = true;
  for (std::uint64_t mask = 0; mask < rep.orientations; ++mask) {
    std::vector<RelationGraph> Lp = L;
    for (std::size_t b = 0; b < U.size(); ++b) Lp.push_back(chain_of(U[b], (mask >> b) & 1));
    const UnionResult un = transitive_union(Lp);
    if (!un.poset) continue;
    ++rep.acyclic;
    for (const auto& ext : linear_extensions(*un.poset)) {
      ++rep.extensions;
      std::vector<int> pos(tv);
      for (int p = 0; p < tv; ++p) pos[ext[p]] = p;
      auto extreme = [&](const std::vector<int>& members, bool want_min) {
        int best = local.at(members.front());
        for (int g : members) {
          const int v = local.at(g);
          if (want_min ? pos[v] < pos[best] : pos[v] > pos[best]) best = v;
        }
        return best;
      };
      const int minK = extreme(PK, true), maxK = extreme(PK, false);
      bool witness = false;
      for (int u : R_packets) {
        const auto& chain = gs.packet(u).components.front();
        bool standard = true;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
          if (pos[local.at(chain[i])] > pos[local.at(chain[i + 1])]) standard = false;
        if (!standard) continue;
        const auto& P = gs.packet(u).members;
        const int minP = extreme(P, true), maxP = extreme(P, false);
        if (pos[minP] > pos[minK] && !crosses_in_sequence(ext, minK, minP, commutes)) witness = true;
        if (minP == minK && pos[maxP] < pos[maxK] && !crosses_in_sequence(ext, maxP, maxK, commutes)) witness = true;
        if (witness) break;
      }
      if (!witness) {
        rep.pass = false;
        for (int v : ext) rep.failing_extension.push_back(to_string(gs.element(T[v])));
        return rep;
      }
    }
  }
  return rep;
}

inline bool algorithm2_check(const CaseSpec& c) { return algorithm2_run(c).pass; }

/// Negative control: exchange the first two elements of P(K) inside Q. The
/// pairs of Q then demand both orientations of P(K), so no orientation choice
/// is consistent and the check holds only vacuously (acyclic == 0).
inline CaseSpec falsified(const CaseSpec& c) {
  const auto packet = packet_of(c.K).elements;
  CaseSpec out = c;
  const auto first = std::find(out.seq.begin(), out.seq.end(), packet[0]);
  const auto second = std::find(out.seq.begin(), out.seq.end(), packet[1]);
  if (first == out.seq.end() || second == out.seq.end()) throw argument_error("falsified: Q does not contain P(K)");
  std::iter_swap(first, second);
  return out;
}

/// Negative control: move the blocker in front of P(K), where it no longer
/// separates anything. The witness search is expected to fail (pass == false).
inline CaseSpec displaced_blocker(const CaseSpec& c) {
  const auto packet = packet_of(c.K).elements;
  CaseSpec out = c;
  const auto b = std::find_if(out.seq.begin(), out.seq.end(), [&](const Element& e) {
    return std::find(packet.begin(), packet.end(), e) == packet.end();
  });
  if (b == out.seq.end()) throw argument_error("displaced_blocker: Q has no blocker");
  std::rotate(out.seq.begin(), b, b + 1);
  return out;
}

}  // namespace hbo
