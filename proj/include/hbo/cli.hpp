#pragma once

// Command-line front end. Every verb only parses, calls the library and
// formats; exit codes: 0 success, 1 a verification failed, 2 usage or scope error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hbo/export.hpp"
#include "hbo/poset.hpp"
#include "hbo/suites.hpp"
#include "hbo/weyl.hpp"

namespace hbo::cli {

enum Exit { ok = 0, verification_failed = 1, usage = 2 };

struct Target {
  std::string family = "B";
  int n = 2;
  int k = 1;
  std::string format = "text";
  std::string out;
};

namespace detail {

inline void add_target(CLI::App* cmd, Target& t, const std::vector<std::string>& formats) {
  cmd->add_option("--family,-f", t.family, "A or B")->check(CLI::IsMember({"A", "B", "a", "b"}));
  cmd->add_option("--n,-n", t.n, "rank");
  cmd->add_option("--k,-k", t.k, "level");
  cmd->add_option("--format", t.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out,-o", t.out, "write to this file instead of standard output");
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw argument_error("cannot open '" + path + "' for writing");
  f << text;
}

inline std::string seq_text(const GroundSet& gs, const std::vector<int>& seq, bool upper) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ' ';
    s += to_string(upper ? gs.upper()[seq[i]] : gs.element(seq[i]));
  }
  return s;
}

inline std::string enumerate_text(const Target& t) {
  const auto elements = enumerate(parse_family(t.family), t.n, t.k);
  if (t.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : elements) j.push_back(to_string(e));
    return j.dump(2) + "\n";
  }
  std::string s;
  for (const auto& e : elements) s += to_string(e) + "\n";
  return s;
}

inline std::string poset_text(const BruhatPoset& p, const std::string& format) {
  if (format == "json") return to_json(p).dump(2) + "\n";
  if (format == "dot") return export_dot(p);
  const GroundSet& gs = p.ground();
  std::ostringstream s;
  s << "nodes " << p.nodes().size() << "\nedges " << p.edges().size() << "\n";
  for (std::size_t v = 0; v < p.nodes().size(); ++v)
    s << "node " << v << " rank " << p.nodes()[v].rank << ": " << seq_text(gs, p.nodes()[v].canon, false) << "\n";
  for (const auto& e : p.edges()) s << "edge " << e.src << " -> " << e.dst << " " << to_string(gs.upper()[e.label]) << "\n";
  return s.str();
}

inline std::string chains_text(const Target& t, bool words, std::size_t limit) {
  const auto p = build_poset(parse_family(t.family), t.n, t.k);
  const GroundSet& gs = p.ground();
  const auto chains = maximal_chains(p, limit);
  const bool with_words = words && t.k == 1;
  if (words && t.k != 1) throw argument_error("--words needs --k 1");
  if (t.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : chains) {
      nlohmann::json labels = nlohmann::json::array();
      for (int K : c) labels.push_back(to_string(gs.upper()[K]));
      nlohmann::json entry{{"labels", labels}};
      if (with_words) {
        const auto w = chain_to_word(gs, c);
        entry["word"] = to_string(w);
        entry["product"] = product_expression(w);
      }
      j.push_back(entry);
    }
    return j.dump(2) + "\n";
  }
  std::string s;
  for (const auto& c : chains) {
    s += seq_text(gs, c, true);
    if (with_words) {
      const auto w = chain_to_word(gs, c);
      s += " | " + to_string(w) + " | product " + product_expression(w);
    }
    s += "\n";
  }
  return s;
}

}  // namespace detail

/// Parses argv and runs one verb; diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Enumerate and verify higher Bruhat orders of types A and B"};
  app.require_subcommand(1);

  Target enumerate_t, poset_t, chains_t, export_t, verify_t;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list a ground set in standard order");
  detail::add_target(enumerate_cmd, enumerate_t, {"text", "json"});

  auto* poset_cmd = app.add_subcommand("poset", "build the flip poset of equivalence classes");
  detail::add_target(poset_cmd, poset_t, {"text", "json", "dot"});

  bool words = false;
  std::size_t limit = 1'000'000;
  auto* chains_cmd = app.add_subcommand("chains", "list maximal chains by their flip labels");
  detail::add_target(chains_cmd, chains_t, {"text", "json"});
  chains_cmd->add_flag("--words", words, "also print the reduced word of each chain (k = 1)");
  chains_cmd->add_option("--limit", limit, "stop with an error beyond this many chains");

  export_t.format = "json";
  auto* export_cmd = app.add_subcommand("export", "write a poset as JSON or DOT");
  detail::add_target(export_cmd, export_t, {"json", "dot"});

  std::string suite_name = "all";
  int jobs = 1;
  verify_t.n = 3;
  auto* verify_cmd = app.add_subcommand("verify", "run a suite of exhaustive checks");
  verify_cmd->add_option("--suite", suite_name, "check suite")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n,-n", verify_t.n, "largest rank to check");
  verify_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_t.format, "output format")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out,-o", verify_t.out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*enumerate_cmd) {
      detail::emit(detail::enumerate_text(enumerate_t), enumerate_t.out, out);
    } else if (*poset_cmd || *export_cmd) {
      const Target& t = *poset_cmd ? poset_t : export_t;
      const auto p = build_poset(parse_family(t.family), t.n, t.k);
      detail::emit(detail::poset_text(p, t.format), t.out, out);
    } else if (*chains_cmd) {
      detail::emit(detail::chains_text(chains_t, words, limit), chains_t.out, out);
    } else if (*verify_cmd) {
      const Target& target = verify_t;
      const auto reports = run_checks(suite(suite_name, target.n), jobs);
      bool all = true;
      std::ostringstream s;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        all = all && r.result;
        arr.push_back(to_json(r));
        if (target.format == "text")
          s << (r.result ? "PASS " : "FAIL ") << r.check << ' ' << r.params.dump() << ' ' << r.stats.dump() << "\n";
      }
      if (target.format == "json") {
        s << arr.dump(2) << "\n";
      } else {
        for (const auto& r : reports)
          if (!r.result) s << to_json(r).dump() << "\n";
        s << (all ? "all " : "failed: some of ") << reports.size() << " checks" << (all ? " passed" : "") << "\n";
      }
      detail::emit(s.str(), target.out, out);
      return all ? Exit::ok : Exit::verification_failed;
    }
  } catch (const argument_error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const unsupported_level& e) {
    err << "unsupported: " << e.what() << "\n";
    return Exit::usage;
  } catch (const node_limit_exceeded& e) {
    err << "limit: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::ok;
}

}  // namespace hbo::cli
