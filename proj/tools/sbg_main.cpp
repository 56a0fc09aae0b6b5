// Command line front end: catalog ingestion, command dispatch and JSON or
// text report emission.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 resource cap.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbg/serialize.hpp"
#include "sbg/suites.hpp"
#include "sbg/version.hpp"

using namespace sbg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct Emitter {
  bool as_json = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }

  void emit(const std::string& command, const json& inputs, const json& results,
            std::optional<std::uint64_t> seed = std::nullopt) const {
    json report{{"command", command},
                {"inputs", inputs},
                {"results", results},
                {"timing_ms", elapsed_ms()},
                {"version", kVersion}};
    if (seed) {
      report["seed"] = *seed;
    }
    if (as_json) {
      std::printf("%s\n", report.dump(2).c_str());
    } else {
      std::printf("%s: %s\n", command.c_str(), results.dump().c_str());
    }
  }
};

Catalog load(const std::string& catalog_path) {
  return catalog_path.empty() ? Catalog::builtin() : load_catalog(catalog_path);
}

int cmd_analyze(const Catalog& cat, const std::string& label, const Emitter& out) {
  const CatalogEntry& entry = cat.find(label);
  json results = to_json(central_series(entry.group));
  results["label"] = entry.label;
  results["order"] = entry.group.order();
  if (entry.expected_perfect && *entry.expected_perfect != results["perfect"]) {
    results["expected_mismatch"] = "perfect";
  }
  if (entry.expected_nilpotent && *entry.expected_nilpotent != results["nilpotent"]) {
    results["expected_mismatch"] = "nilpotent";
  }
  out.emit("analyze", json{{"group", label}}, results);
  return results.contains("expected_mismatch") ? kExitPropertyFailure : kExitOk;
}

int cmd_witness(const Catalog& cat, const std::string& label, int max_len,
                const Emitter& out) {
  const FiniteGroup& g = cat.find(label).group;
  const json inputs{{"group", label}, {"max_len", max_len}};
  try {
    const Witness w = find_witness(g);
    json results = to_json(w);
    results["group"] = label;
    results["verified"] = w.b != 0 && evaluate(g, w.f, {w.a, w.b}) == w.b &&
                          is_homogeneous(g, w.f);
    out.emit("witness", inputs, results);
    return results["verified"].get<bool>() ? kExitOk : kExitPropertyFailure;
  } catch (const GroupIsNilpotent&) {
    const bool clean = exhaust_no_witness(g, max_len);
    json results{{"group", label}, {"nilpotent", true}};
    if (clean) {
      results["no_witness_up_to_length"] = max_len;
    } else {
      results["witness_found_within_length"] = max_len;
    }
    out.emit("witness", inputs, results);
    return clean ? kExitOk : kExitPropertyFailure;
  }
}

int cmd_diameter(const Catalog& cat, const std::string& label, int n,
                 const std::string& gens_json, bool require_generates,
                 const Emitter& out) {
  const FiniteGroup& g = cat.find(label).group;
  json inputs{{"group", label}, {"n", n}};
  GeneratingSet gens;
  if (gens_json.empty()) {
    gens = GeneratingSet::union_of_factors(g, n);
    inputs["generators"] = "union-of-factors";
  } else {
    gens = generating_set_from_json(g, n, json::parse(gens_json));
    inputs["generators"] = json::parse(gens_json);
  }
  const DiameterReport r = cayley_diameter(g, n, gens);
  out.emit("diameter", inputs, to_json(r));
  return require_generates && !r.generates ? kExitPropertyFailure : kExitOk;
}

int cmd_relations(const Catalog& cat, const std::string& label, int n,
                  const Emitter& out) {
  const FiniteGroup& g = cat.find(label).group;
  const Witness w = find_witness(g);
  const RelationsReport r = verify_relations(w, n);
  json results = to_json(r);
  results["witness"] = to_json(w);
  out.emit("relations", json{{"group", label}, {"n", n}}, results);
  return r.all_passed() ? kExitOk : kExitPropertyFailure;
}

int cmd_suite(const Catalog& cat, const std::string& name, std::uint64_t seed,
              int trials, const Emitter& out) {
  SuiteReport report;
  bool randomized = true;
  if (name == "rnd2n") {
    report = run_rnd2n_suite(seed, trials);
  } else if (name == "relations") {
    report = run_relations_suite(cat);
    randomized = false;
  } else if (name == "balls") {
    report = run_balls_suite(cat);
    randomized = false;
  } else if (name == "central-vanishing") {
    report = run_central_vanishing_suite(cat, seed, trials);
  } else {
    throw UnknownSuite("no suite named " + name +
                       " (rnd2n, relations, balls, central-vanishing)");
  }
  out.emit("suite", json{{"suite", name}, {"trials", report.trials}},
           report.to_json(),
           randomized ? std::optional<std::uint64_t>(report.seed) : std::nullopt);
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

// Closure growth from a witness-derived seed family: all supports of a, the
// full-support b and every diagonal constant; target is the normal closure
// of b.  Tabulated per power, nothing asserted.
int cmd_exhaust(const Catalog& cat, const std::string& label, int max_n,
                const Emitter& out) {
  const FiniteGroup& g = cat.find(label).group;
  const json inputs{{"group", label}, {"max_n", max_n}};
  json results;
  try {
    const Witness w = find_witness(g);
    ElementSet b_seed(g);
    b_seed.insert(w.b);
    const ElementSet target = normal_closure(g, b_seed);
    results["a"] = w.a;
    results["b"] = w.b;
    results["target"] = to_json(target);
    json rows = json::array();
    for (int n = 1; n <= max_n; ++n) {
      std::vector<ProductElement> seed;
      const std::uint32_t full = (std::uint32_t{1} << n) - 1;
      for (std::uint32_t J = 0; J <= full; ++J) {
        seed.push_back(embed_mask(g, n, w.a, J));
      }
      seed.push_back(embed_mask(g, n, w.b, full));
      for (int c = 1; c < g.order(); ++c) {
        seed.push_back(embed_mask(g, n, c, full));
      }
      const ExhaustionResult r = exhaustion_experiment(g, n, seed, target);
      json row{{"n", n},
               {"closure_size", r.closure_size},
               {"iterations", r.iterations}};
      if (r.steps) {
        row["steps"] = *r.steps;
      } else {
        row["unreachable"] = true;
      }
      rows.push_back(std::move(row));
    }
    results["table"] = std::move(rows);
  } catch (const GroupIsNilpotent&) {
    results["nilpotent"] = true;
  }
  out.emit("exhaust", inputs, results);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group word, power and closure experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // --json and --catalog may follow the subcommand

  std::string catalog_path;
  Emitter out;
  app.add_option("--catalog", catalog_path, "JSON catalog file replacing the built-in one");
  app.add_flag("--json", out.as_json, "emit the full JSON run report");

  std::string group_label;
  int power_n = 2;
  int max_len = 4;
  int max_n = 3;
  std::string gens_json;
  bool require_generates = false;
  std::uint64_t seed = 2026;
  int trials = 200;
  std::string suite_name;

  CLI::App* analyze = app.add_subcommand("analyze", "series, center and flags of a group");
  analyze->add_option("group", group_label, "catalog label")->required();

  CLI::App* witness = app.add_subcommand("witness", "fixed-point word certificate");
  witness->add_option("group", group_label, "catalog label")->required();
  witness->add_option("--max-len", max_len,
                      "word length bound for the negative search (nilpotent groups)");

  CLI::App* diameter = app.add_subcommand("diameter", "Cayley diameter of a power");
  diameter->add_option("group", group_label, "catalog label")->required();
  diameter->add_option("--n", power_n, "power of the group")->required();
  diameter->add_option("--gens", gens_json,
                       "generating set as JSON (default: union of factors)");
  diameter->add_flag("--require-generates", require_generates,
                     "fail when the set does not generate");

  CLI::App* relations = app.add_subcommand("relations", "support arithmetic of a witness");
  relations->add_option("group", group_label, "catalog label")->required();
  relations->add_option("--n", power_n, "number of support coordinates");

  CLI::App* suite = app.add_subcommand("suite", "randomized and exhaustive property suites");
  suite->add_option("name", suite_name, "rnd2n | relations | balls | central-vanishing")
      ->required();
  suite->add_option("--seed", seed, "base seed for randomized suites");
  suite->add_option("--trials", trials, "trial count for randomized suites");

  CLI::App* exhaust = app.add_subcommand("exhaust", "closure growth from a witness seed");
  exhaust->add_option("group", group_label, "catalog label")->required();
  exhaust->add_option("--max-n", max_n, "largest power to tabulate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const Catalog cat = load(catalog_path);
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(cat, group_label, out);
    }
    if (app.got_subcommand(witness)) {
      return cmd_witness(cat, group_label, max_len, out);
    }
    if (app.got_subcommand(diameter)) {
      return cmd_diameter(cat, group_label, power_n, gens_json, require_generates, out);
    }
    if (app.got_subcommand(relations)) {
      return cmd_relations(cat, group_label, power_n, out);
    }
    if (app.got_subcommand(suite)) {
      return cmd_suite(cat, suite_name, seed, trials, out);
    }
    if (app.got_subcommand(exhaust)) {
      return cmd_exhaust(cat, group_label, max_n, out);
    }
    std::fprintf(stderr, "no command dispatched\n");
    return kExitInputError;
  } catch (const TooLarge& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kExitResourceCap;
  } catch (const SearchSpaceTooLarge& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kExitResourceCap;
  } catch (const StateSpaceTooLarge& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kExitResourceCap;
  } catch (const SizeCap& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kExitResourceCap;
  } catch (const BoundTooLarge& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kExitResourceCap;
  } catch (const Error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInputError;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInputError;
  }
}
