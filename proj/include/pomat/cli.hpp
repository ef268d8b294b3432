#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pomat/error.hpp"
#include "pomat/greedy.hpp"
#include "pomat/independence.hpp"
#include "pomat/io.hpp"
#include "pomat/simplicial.hpp"
#include "pomat/verify.hpp"

namespace pomat::cli {

/// Exit codes: 0 success, 1 domain-level negative, 2 input error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

using nlohmann::json;

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadDocument, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::BadDocument, "'" + path + "': " + e.what());
  }
}

inline CommandResult ok(const json& doc, int code = 0) { return {code, doc.dump() + "\n", {}}; }

inline CommandResult check_matroid(const std::string& system_path, std::size_t cap) {
  const PoIndependenceSystem sys = io::parse_system(read_json(system_path));
  const auto& labels = sys.poset().labels();
  json out = {{"is_poset_matroid", false}, {"violation", nullptr}};
  if (auto bad = check_hereditary(sys, cap)) {
    out["hereditary_violation"] = {{"X", io::subset_to_json(labels, bad->smaller)},
                                   {"Y", io::subset_to_json(labels, bad->larger)}};
    return ok(out, 1);
  }
  if (auto v = axiom_ii_witness(sys, cap)) {
    out["violation"] = io::violation_to_json(labels, *v);
    out["adversarial_weights"] = io::weights_to_json(labels, adversarial_weight(sys, *v));
    return ok(out, 1);
  }
  out["is_poset_matroid"] = true;
  return ok(out);
}

inline CommandResult run_pgreedy(const std::string& system_path, const std::string& weight_path, bool trace,
                                 bool unchecked) {
  const PoIndependenceSystem sys = io::parse_system(read_json(system_path));
  const WeightFunction w = io::parse_weights(read_json(weight_path), sys.poset());
  GreedyOptions opts;
  opts.unchecked_weights = unchecked;
  const GreedyTrace t = pgreedy(sys, w, opts);
  const auto& labels = sys.poset().labels();
  json out = {{"result", io::subset_to_json(labels, t.result)}, {"total", format_rational(t.total)}};
  if (trace) out["trace"] = io::trace_to_json(labels, t);
  if (unchecked) out["unchecked_weights"] = true;
  return ok(out);
}

inline CommandResult span_complex(const std::string& complex_path, const std::string& weight_path, std::size_t h,
                                  bool trace, bool unchecked) {
  const SimplicialComplex c = io::parse_complex(read_json(complex_path));
  const WeightFunction w = io::parse_face_weights(read_json(weight_path), c);
  GreedyOptions opts;
  opts.unchecked_weights = unchecked;
  const SpanningResult r = max_spanning_acyclic(c, h, w, opts);
  json faces = json::object();
  r.faces.for_each([&](std::size_t id) {
    json f = json::array();
    for (auto v : c.face(id)) f.push_back(c.vertex_labels()[v]);
    faces[std::to_string(c.face(id).size())].push_back(f);
  });
  const bool spanning = is_spanning(c, r.faces);
  json out = {{"h", h}, {"faces", faces}, {"total", format_rational(r.trace.total)}, {"spanning", spanning}};
  if (trace) out["trace"] = io::trace_to_json(c.face_poset().labels(), r.trace);
  return ok(out, spanning ? 0 : 1);
}

inline CommandResult oracle(const std::string& system_path, const std::string& weight_path, std::size_t cap) {
  const PoIndependenceSystem sys = io::parse_system(read_json(system_path));
  const WeightFunction w = io::parse_weights(read_json(weight_path), sys.poset());
  const OptimumReport r = brute_force_optimum(sys, w, cap);
  json witnesses = json::array();
  for (const auto& s : r.witnesses) witnesses.push_back(io::subset_to_json(sys.poset().labels(), s));
  return ok({{"optimum", format_rational(r.optimum)}, {"witnesses", witnesses}, {"family_size", r.family_size}});
}

struct CorpusEntry {
  std::string id;
  PoIndependenceSystem system;
};

inline CommandResult edmonds_rado(const std::string& corpus_path, bool exhaustive3, std::size_t random_count,
                                  std::uint64_t seed, std::size_t trials, std::size_t cap) {
  std::vector<CorpusEntry> corpus;
  if (!corpus_path.empty()) {
    const json doc = read_json(corpus_path);
    if (doc.contains("systems")) {
      std::size_t i = 0;
      for (const auto& s : doc.at("systems")) corpus.push_back({"file:" + std::to_string(i++), io::parse_system(s)});
    } else {
      corpus.push_back({"file:0", io::parse_system(doc)});
    }
  }
  if (exhaustive3) {
    for (std::size_t n = 0; n <= 3; ++n) {
      std::size_t pi = 0;
      for (const auto& p : all_posets(n)) {
        std::size_t fi = 0;
        for (const auto& fam : all_hereditary_families(p))
          corpus.push_back({"n" + std::to_string(n) + ".p" + std::to_string(pi) + ".f" + std::to_string(fi++),
                            PoIndependenceSystem::explicit_family(p, fam)});
        ++pi;
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(4, 6)(rng);
    const std::size_t gens = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::uint64_t sys_seed = rng();
    corpus.push_back({"random:" + std::to_string(i), random_system(size, gens, sys_seed, cap)});
  }

  std::ostringstream out;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const EquivalenceReport r = edmonds_rado_check(corpus[i].system, trials, seed + i, corpus[i].id, cap);
    if (r.theorem_violation) ++violations;
    out << io::report_to_json(corpus[i].system.poset().labels(), r).dump() << "\n";
  }
  out << json{{"systems", corpus.size()}, {"violations", violations}, {"seed", seed}}.dump() << "\n";
  return {violations == 0 ? 0 : 1, out.str(), {}};
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline CommandResult run(std::vector<std::string> args) {
  CLI::App app{"Greedy algorithms on poset matroids and simplicial complexes", "pomat"};
  app.require_subcommand(1);
  std::size_t cap = kDefaultEnumerationCap;
  app.add_option("--cap", cap, "Largest ground set the exhaustive routines will enumerate")->capture_default_str();

  std::string system_path, weight_path, complex_path, corpus_path;
  bool trace = false, unchecked = false, exhaustive3 = false;
  std::size_t h = 0, trials = 100, random_count = 0;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check-matroid", "Decide the poset-matroid axioms");
  check->add_option("system", system_path, "Independence document")->required();

  auto* greedy_cmd = app.add_subcommand("pgreedy", "Run PGREEDY on a system");
  greedy_cmd->add_option("system", system_path, "Independence document")->required();
  greedy_cmd->add_option("weights", weight_path, "Weight document")->required();
  greedy_cmd->add_flag("--trace", trace, "Include the step-by-step trace");
  greedy_cmd->add_flag("--unchecked-weights", unchecked, "Accept weights that are not order-preserving");

  auto* span = app.add_subcommand("span-complex", "Maximum-weight spanning h-acyclic subcomplex");
  span->set_help_flag("--help", "Print this help message and exit");
  span->add_option("complex", complex_path, "Complex document")->required();
  span->add_option("weights", weight_path, "Face weight document")->required();
  span->add_option("--h", h, "Cycle cardinality h (at least 2)")->required();
  span->add_flag("--trace", trace, "Include the step-by-step trace");
  span->add_flag("--unchecked-weights", unchecked, "Accept weights that are not order-reversing");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum over all independent sets");
  oracle_cmd->add_option("system", system_path, "Independence document")->required();
  oracle_cmd->add_option("weights", weight_path, "Weight document")->required();

  auto* er = app.add_subcommand("edmonds-rado", "Check greedy optimality against the matroid axioms");
  er->add_option("corpus", corpus_path, "System document or {\"systems\": [...]}");
  er->add_flag("--exhaustive-3", exhaustive3, "Every hereditary family on every poset with at most 3 elements");
  er->add_option("--random", random_count, "Number of seeded random systems on 4-6 elements");
  er->add_option("--seed", seed, "Seed for random systems and weights")->capture_default_str();
  er->add_option("--trials", trials, "Random weights per poset matroid")->capture_default_str();

  for (auto* sub : {check, greedy_cmd, span, oracle_cmd, er}) sub->add_option("--cap", cap, "Enumeration cap");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return {2, {}, std::string(e.what()) + "\n" + app.help()};
  }

  try {
    if (*check) return detail::check_matroid(system_path, cap);
    if (*greedy_cmd) return detail::run_pgreedy(system_path, weight_path, trace, unchecked);
    if (*span) return detail::span_complex(complex_path, weight_path, h, trace, unchecked);
    if (*oracle_cmd) return detail::oracle(system_path, weight_path, cap);
    if (*er) return detail::edmonds_rado(corpus_path, exhaustive3, random_count, seed, trials, cap);
  } catch (const Error& e) {
    return {2, {}, std::string(e.what()) + "\n"};
  } catch (const nlohmann::json::exception& e) {
    return {2, {}, std::string("BadDocument: ") + e.what() + "\n"};
  }
  return {2, {}, "no subcommand\n"};
}

}  // namespace pomat::cli
