#pragma once

// Named groups of exhaustive checks with machine-readable reports. Each check
// is independent, so a suite can be spread over threads; reports always come
// back in suite order.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hbo/algorithm2.hpp"
#include "hbo/poset.hpp"
#include "hbo/verify.hpp"
#include "hbo/weyl.hpp"

namespace hbo {

struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string name, nlohmann::json p, bool ok, std::optional<nlohmann::json> ce = std::nullopt)
      : check(std::move(name)), params(std::move(p)), result(ok), counterexample(std::move(ce)) {}

  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool result = false;
  std::optional<nlohmann::json> counterexample;
  nlohmann::json stats = nlohmann::json::object();
};

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"check", r.check}, {"params", r.params}, {"result", r.result}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.stats.empty()) j["stats"] = r.stats;
  return j;
}

struct Check {
  std::string name;
  nlohmann::json params;
  std::function<CheckReport()> run;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ms-typeA", "typeB-k1", "typeB-k2", "weyl", "appendix", "all"};
  return names;
}

namespace detail {

inline nlohmann::json fkn(Family f, int n, int k) { return {{"family", to_string(f)}, {"n", n}, {"k", k}}; }

inline std::vector<std::string> names_of(const GroundSet& gs, const std::vector<int>& seq, bool upper = false) {
  std::vector<std::string> out;
  for (int x : seq) out.push_back(to_string(upper ? gs.upper().at(x) : gs.element(x)));
  return out;
}

inline std::vector<Check> poset_checks(Family f, int n, int k) {
  std::vector<Check> out;
  const auto params = fkn(f, n, k);
  out.push_back({"poset-extrema", params, [=] {
                   const auto p = build_poset(f, n, k);
                   const auto e = check_extrema(p);
                   CheckReport r{"poset-extrema", params, e.all()};
                   r.stats = {{"nodes", p.nodes().size()},
                              {"edges", p.edges().size()},
                              {"unique_min", e.unique_min},
                              {"unique_max", e.unique_max},
                              {"graded", e.graded}};
                   return r;
                 }});
  out.push_back({"inv-injective", params, [=] {
                   const auto p = build_poset(f, n, k);
                   CheckReport r{"inv-injective", params, inv_injectivity_check(p)};
                   r.stats = {{"classes", p.nodes().size()}};
                   return r;
                 }});
  out.push_back({"chain-bijection", params, [=] {
                   const auto p = build_poset(f, n, k);
                   const auto b = chains_bijection_report(p);
                   CheckReport r{"chain-bijection", params, b.ok()};
                   r.stats = {{"maximal_chains", b.chains},
                              {"admissible_next_level", b.admissible_orders},
                              {"images_admissible", b.images_admissible},
                              {"injective", b.injective},
                              {"surjective", b.surjective}};
                   if (!b.ok() && !b.counterexample.empty())
                     r.counterexample = nlohmann::json{{"chain", names_of(p.ground(), b.counterexample, true)}};
                   return r;
                 }});
  return out;
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Breadth-first distance from the identity under left multiplication by generators.
template <class Perm>
std::map<Perm, int> generator_distances(const Perm& id, const std::vector<Perm>& gens) {
  std::map<Perm, int> dist{{id, 0}};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        const Perm v = s * w;
        if (dist.emplace(v, dist.at(w) + 1).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return dist;
}

inline CheckReport word_report(Family f, int n) {
  const auto w = word_correspondence_report(f, n);
  CheckReport r{"reduced-words", fkn(f, n, 1), w.ok()};
  r.stats = {{"admissible_level2", w.orderings},   {"reduced_words_w0", w.reduced_words},
             {"flips_checked", w.flips_checked},   {"swaps_checked", w.swaps_checked},
             {"words_reduced", w.words_reduced},   {"bijective", w.bijective},
             {"flips_are_braids", w.flips_are_braids}, {"swaps_are_commutations", w.swaps_are_commutations}};
  if (!w.ok()) r.counterexample = nlohmann::json{{"detail", w.counterexample}};
  return r;
}

inline CheckReport iso_check_report(Family f, int n) {
  const auto rep = f == Family::B ? iso_report_B(n) : iso_report_A(n);
  CheckReport r{"weak-order-iso", fkn(f, n, 1), rep.ok()};
  r.stats = {{"poset_nodes", rep.poset_nodes}, {"group_order", rep.group_order},
             {"poset_edges", rep.poset_edges}, {"weak_edges", rep.weak_edges}};
  if (!rep.ok()) r.counterexample = nlohmann::json{{"detail", rep.counterexample}};
  return r;
}

inline CheckReport root_report(Family f, int n) {
  const auto c = f == Family::B ? lemma17_check_B(n) : lemma17_check_A(n);
  CheckReport r{"inversions-are-negative-roots", fkn(f, n, 1), c.ok()};
  r.stats = {{"instances", c.instances}, {"failures", c.failures}};
  return r;
}

/// Orderings over which per-ordering properties are checked: every admissible
/// ordering while that stays small, one representative per class beyond.
inline std::pair<std::vector<Order>, std::string> appendix_orders(const GroundSet& gs) {
  if (gs.rank() <= 3) return {enumerate_admissible(gs), "all admissible orderings"};
  std::vector<Order> reps;
  for (const auto& node : build_poset(Family::B, gs.rank(), 2).nodes()) reps.push_back(node.canon);
  return {reps, "one ordering per class"};
}

}  // namespace detail

/// Checks of the type A constructions for ranks 2..n.
inline std::vector<Check> suite_ms_typeA(int n) {
  std::vector<Check> out;
  for (int m = 2; m <= n; ++m) {
    for (int k = 1; k <= std::min(2, m - 1); ++k) {
      auto c = detail::poset_checks(Family::A, m, k);
      out.insert(out.end(), c.begin(), c.end());
    }
    out.push_back({"weak-order-iso", detail::fkn(Family::A, m, 1), [m] { return detail::iso_check_report(Family::A, m); }});
    out.push_back({"inversions-are-negative-roots", detail::fkn(Family::A, m, 1),
                   [m] { return detail::root_report(Family::A, m); }});
    out.push_back({"reduced-words", detail::fkn(Family::A, m, 1), [m] { return detail::word_report(Family::A, m); }});
  }
  return out;
}

inline std::vector<Check> suite_typeB_k1(int n) {
  std::vector<Check> out;
  for (int m = 1; m <= n; ++m) {
    auto c = detail::poset_checks(Family::B, m, 1);
    out.insert(out.end(), c.begin(), c.end());
    const auto params = detail::fkn(Family::B, m, 1);
    out.push_back({"node-count", params, [m, params] {
                     const auto p = build_poset(Family::B, m, 1);
                     const std::uint64_t want = (std::uint64_t{1} << m) * detail::factorial(m);
                     CheckReport r{"node-count", params, p.nodes().size() == want};
                     r.stats = {{"nodes", p.nodes().size()}, {"expected", want}};
                     return r;
                   }});
  }
  return out;
}

inline std::vector<Check> suite_typeB_k2(int n) {
  std::vector<Check> out;
  for (int m = 2; m <= n; ++m) {
    auto c = detail::poset_checks(Family::B, m, 2);
    out.insert(out.end(), c.begin(), c.end());
    const auto params = detail::fkn(Family::B, m, 2);
    out.push_back({"upward-flip-exists", params, [m, params] {
                     const auto p = build_poset(Family::B, m, 2);
                     const GroundSet& gs = p.ground();
                     CheckReport r{"upward-flip-exists", params, true};
                     std::size_t below_top = 0;
                     for (const auto& node : p.nodes()) {
                       if (node.inv.size() == gs.upper().size()) continue;
                       ++below_top;
                       const auto cand = class_flip_candidates(gs, node.canon);
                       const bool any = std::any_of(cand.begin(), cand.end(), [&](int K) {
                         return !std::binary_search(node.inv.begin(), node.inv.end(), K);
                       });
                       if (!any && r.result) {
                         r.result = false;
                         r.counterexample = nlohmann::json{{"class", detail::names_of(gs, node.canon)}};
                       }
                     }
                     r.stats = {{"classes_below_top", below_top}};
                     return r;
                   }});
    out.push_back({"flips-match-blocking", params, [m, params] {
                     const auto p = build_poset(Family::B, m, 2);
                     const GroundSet& gs = p.ground();
                     CheckReport r{"flips-match-blocking", params, true};
                     std::size_t pairs = 0;
                     for (const auto& node : p.nodes()) {
                       const auto cand = class_flip_candidates(gs, node.canon);
                       for (int K = 0; K < static_cast<int>(gs.upper().size()); ++K) {
                         ++pairs;
                         const bool by_class = std::binary_search(cand.begin(), cand.end(), K);
                         if (by_class != n_membership_via_blocking(gs, node.canon, K) && r.result) {
                           r.result = false;
                           r.counterexample = nlohmann::json{{"class", detail::names_of(gs, node.canon)},
                                                             {"K", to_string(gs.upper()[K])}};
                         }
                       }
                     }
                     r.stats = {{"class_element_pairs", pairs}};
                     return r;
                   }});
  }
  return out;
}

inline std::vector<Check> suite_weyl(int n) {
  std::vector<Check> out;
  for (int m = 1; m <= n; ++m) {
    out.push_back({"weak-order-iso", detail::fkn(Family::B, m, 1), [m] { return detail::iso_check_report(Family::B, m); }});
    out.push_back({"inversions-are-negative-roots", detail::fkn(Family::B, m, 1),
                   [m] { return detail::root_report(Family::B, m); }});
    out.push_back({"reduced-words", detail::fkn(Family::B, m, 1), [m] { return detail::word_report(Family::B, m); }});
    const nlohmann::json params{{"family", "B"}, {"n", m}};
    out.push_back({"length-equals-distance", params, [m, params] {
                     const auto dist = detail::generator_distances(SignedPermutation::identity(m), simple_reflections_B(m));
                     CheckReport r{"length-equals-distance", params, true};
                     for (const auto& [w, d] : dist)
                       if (weyl_length(w) != d && r.result) {
                         r.result = false;
                         r.counterexample = nlohmann::json{{"element", window(w)}, {"length", weyl_length(w)}, {"distance", d}};
                       }
                     r.stats = {{"elements", dist.size()}};
                     return r;
                   }});
    out.push_back({"roots-biject", params, [m, params] {
                     std::set<Root> seen;
                     bool ok = true;
                     for (const auto& K : elements_B(m, 2)) {
                       const Root a = root_of(K, m);
                       ok = ok && is_positive_B(a) && seen.insert(a).second;
                     }
                     CheckReport r{"roots-biject", params, ok && seen.size() == static_cast<std::size_t>(m * m)};
                     r.stats = {{"roots", seen.size()}};
                     return r;
                   }});
  }
  return out;
}

inline std::vector<Check> suite_appendix(int n) {
  std::vector<Check> out;
  for (int m = 2; m <= n; ++m) {
    const auto params = detail::fkn(Family::B, m, 2);

    out.push_back({"crossing-algorithm", params, [m, params] {
                     const GroundSet gs(Family::B, m, 2);
                     const auto orders = enumerate_admissible(gs);
                     const int size = static_cast<int>(gs.size());
                     CheckReport r{"crossing-algorithm", params, true};
                     std::set<Order> done;
                     std::size_t instances = 0;
                     for (const auto& rho : orders) {
                       if (done.count(rho)) continue;
                       const auto members = equivalence_class(gs, rho);
                       const auto table = crossing_table(gs, members);
                       for (const auto& o : members) {
                         done.insert(o);
                         for (int a = 0; a < size; ++a)
                           for (int b = 0; b < size; ++b) {
                             if (a == b) continue;
                             ++instances;
                             if (crosses(gs, o, a, b) != table[a * size + b] && r.result) {
                               r.result = false;
                               r.counterexample = nlohmann::json{{"order", detail::names_of(gs, o)},
                                                                 {"a", to_string(gs.element(a))},
                                                                 {"b", to_string(gs.element(b))}};
                             }
                           }
                       }
                     }
                     r.stats = {{"orderings", orders.size()}, {"instances", instances}};
                     return r;
                   }});

    out.push_back({"lemmas-blocking", params, [m, params] {
                     const GroundSet gs(Family::B, m, 2);
                     const auto [orders, scope] = detail::appendix_orders(gs);
                     CheckReport r{"lemmas-blocking", params, true};
                     std::size_t l11 = 0, l12 = 0, l13 = 0, fast = 0;
                     std::map<std::string, std::size_t> case_hits;
                     auto fail = [&](const std::string& what, const Order& rho, const std::string& extra) {
                       if (!r.result) return;
                       r.result = false;
                       r.counterexample = nlohmann::json{{"property", what}, {"order", detail::names_of(gs, rho)}, {"detail", extra}};
                     };
                     for (const auto& rho : orders) {
                       const auto inv = inversion_set(gs, rho);
                       const auto cand = class_flip_candidates(gs, rho);
                       for (int K = 0; K < static_cast<int>(gs.upper().size()); ++K) {
                         const auto& S = gs.packet(K).members;
                         const std::string kname = to_string(gs.upper()[K]);
                         for (int x = 0; x < static_cast<int>(gs.size()); ++x) {
                           if (std::find(S.begin(), S.end(), x) != S.end()) continue;
                           ++fast;
                           if (blocks(gs, rho, x, S) != blocks_by_closure(gs, rho, x, S))
                             fail("blocking criterion", rho, kname + " x=" + to_string(gs.element(x)));
                           ++l11;
                           if (!unblock_by_swaps_holds(gs, rho, S, x))
                             fail("blocker removal", rho, kname + " x=" + to_string(gs.element(x)));
                         }
                         ++l12;
                         const bool inN = std::binary_search(cand.begin(), cand.end(), K);
                         if (inN != n_membership_via_blocking(gs, rho, K)) fail("flip iff no blocker", rho, kname);
                         if (inN || std::binary_search(inv.begin(), inv.end(), K)) continue;
                         ++l13;
                         const auto match = lemma13_classify(gs, rho, K);
                         if (!match)
                           fail("blocker case pattern", rho, kname);
                         else
                           ++case_hits[std::to_string(static_cast<int>(match->which))];
                         if (!better_packet_exists(gs, rho, K)) fail("better packet exists", rho, kname);
                       }
                     }
                     r.stats = {{"scope", scope},          {"orderings", orders.size()},
                                {"blocking_pairs", fast},  {"removal_instances", l11},
                                {"flip_instances", l12},   {"non_flippable", l13},
                                {"case_hits", case_hits}};
                     return r;
                   }});

    if (m == 3) {
      out.push_back({"crossing-total-orders", params, [m, params] {
                       // Every total order of C_B(J_3,2), admissible or not: the
                       // commutation classes are still well defined.
                       const GroundSet gs(Family::B, m, 2);
                       const int size = static_cast<int>(gs.size());
                       Order o = rho_min(gs);
                       std::set<Order> done;
                       std::size_t instances = 0, classes = 0;
                       CheckReport r{"crossing-total-orders", params, true};
                       do {
                         if (done.count(o)) continue;
                         const auto members = equivalence_class(gs, o);
                         ++classes;
                         const auto table = crossing_table(gs, members);
                         for (const auto& mem : members) {
                           done.insert(mem);
                           for (int a = 0; a < size; ++a)
                             for (int b = 0; b < size; ++b)
                               if (a != b) {
                                 ++instances;
                                 if (crosses(gs, mem, a, b) != table[a * size + b] && r.result) {
                                   r.result = false;
                                   r.counterexample = nlohmann::json{{"order", detail::names_of(gs, mem)},
                                                                     {"a", to_string(gs.element(a))},
                                                                     {"b", to_string(gs.element(b))}};
                                 }
                               }
                         }
                       } while (std::next_permutation(o.begin(), o.end()));
                       r.stats = {{"orders", done.size()}, {"classes", classes}, {"instances", instances}};
                       return r;
                     }});
    }

    if (m >= 3) {
      for (int c = 1; c <= 7; ++c) {
        const auto which = static_cast<BlockingCase>(c);
        nlohmann::json cp{{"n", m}, {"case", c}, {"pattern", pattern_text(which)}};
        out.push_back({"better-packet-cases", cp, [m, which, cp] {
                         CheckReport r{"better-packet-cases", cp, true};
                         std::size_t instances = 0, acyclic = 0, extensions = 0, falsified_vacuous = 0,
                                     displaced_rejected = 0;
                         for (const auto& spec : case_instances(which, m)) {
                           ++instances;
                           const auto rep = algorithm2_run(spec);
                           acyclic += rep.acyclic;
                           extensions += rep.extensions;
                           if (!rep.pass && r.result) {
                             r.result = false;
                             r.counterexample = nlohmann::json{{"case", describe(spec)}, {"R", rep.R},
                                                               {"extension", rep.failing_extension}};
                           }
                           const auto f = algorithm2_run(falsified(spec));
                           falsified_vacuous += f.pass && f.acyclic == 0;
                           displaced_rejected += !algorithm2_run(displaced_blocker(spec)).pass;
                         }
                         const bool controls = falsified_vacuous == instances && displaced_rejected == instances;
                         if (!controls && r.result) {
                           r.result = false;
                           r.counterexample = nlohmann::json{{"detail", "negative control misbehaved"}};
                         }
                         r.stats = {{"instances", instances},
                                    {"acyclic_orientations", acyclic},
                                    {"extensions", extensions},
                                    {"falsified_vacuous", falsified_vacuous},
                                    {"displaced_rejected", displaced_rejected}};
                         return r;
                       }});
      }
    }
  }
  return out;
}

inline std::vector<Check> suite(const std::string& name, int n) {
  if (n < 1) throw argument_error("suite rank must be at least 1");
  if (name == "ms-typeA") return suite_ms_typeA(n);
  if (name == "typeB-k1") return suite_typeB_k1(n);
  if (name == "typeB-k2") return suite_typeB_k2(n);
  if (name == "weyl") return suite_weyl(n);
  if (name == "appendix") return suite_appendix(n);
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& part : {"ms-typeA", "typeB-k1", "typeB-k2", "weyl", "appendix"}) {
      auto c = suite(part, n);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }
  throw argument_error("unknown suite '" + name + "'");
}

/// Runs the checks on up to `jobs` threads. A check that throws is reported as
/// failed with the exception message as its counterexample.
inline std::vector<CheckReport> run_checks(const std::vector<Check>& checks, int jobs = 1) {
  std::vector<CheckReport> out(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        out[i] = checks[i].run();
      } catch (const std::exception& e) {
        out[i] = CheckReport{checks[i].name, checks[i].params, false, nlohmann::json{{"error", e.what()}}};
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace hbo
