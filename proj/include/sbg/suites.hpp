#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sbg/boolean.hpp"
#include "sbg/catalog.hpp"
#include "sbg/monomial.hpp"
#include "sbg/power.hpp"
#include "sbg/serialize.hpp"

namespace sbg {

// Stable identifiers for the statements each randomized suite exercises;
// reports carry them so a log line can be tied to a specific claim.
inline constexpr char kStmtRnD2nPart1[] = "lemma:RnD2n.1";
inline constexpr char kStmtRnD2nPart2[] = "lemma:RnD2n.2";
inline constexpr char kStmtRelations[] = "mainlemma:relations.1-4";
inline constexpr char kStmtBallPower[] = "prop:ball-power";
inline constexpr char kStmtCentralVanishing[] = "remark:central-vanishing";
inline constexpr char kStmtWitness[] = "lemma:f(a,b)";
inline constexpr char kStmtDiameter[] = "remark:diameter-exactly-n";

struct SuiteReport {
  std::string suite;
  std::vector<std::string> statements;
  std::uint64_t seed = 0;
  int trials = 0;
  std::uint64_t checks = 0;
  json failures = json::array();

  bool passed() const { return failures.empty(); }

  json to_json() const {
    return json{{"suite", suite},   {"statements", statements}, {"seed", seed},
                {"trials", trials}, {"checks", checks},         {"failures", failures},
                {"passed", passed()}};
  }
};

namespace detail {

// splitmix64, used to derive one independent stream per trial.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Random family over a universe of the given size: every subset is included
/// independently with probability 1/2, then the family is symmetrized so the
/// closure-law hypotheses hold.
inline BoolFamily random_symmetric_family(int universe, std::mt19937_64& rng) {
  BoolFamily f(universe);
  const std::uint32_t full = f.full_mask();
  for (std::uint32_t m = 0;; ++m) {
    if (rng() & 1) {
      f.insert(m);
    }
    if (m == full) {
      break;
    }
  }
  return symmetrize(f);
}

/// Randomized check of both closure inclusions: part 1 on universes of size
/// 3..8 and part 2 on universes of size 3..6, each for n in {1, 2}.
inline SuiteReport run_rnd2n_suite(std::uint64_t seed, int trials) {
  SuiteReport report{"rnd2n", {kStmtRnD2nPart1, kStmtRnD2nPart2}, seed, trials};
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(t)));
    const int n = 1 + static_cast<int>(rng() % 2);
    {
      const int universe = 3 + static_cast<int>(rng() % 6);
      const BoolFamily f = random_symmetric_family(universe, rng);
      ++report.checks;
      if (!check_RnD2n_part1(f, n)) {
        report.failures.push_back(json{{"statement", kStmtRnD2nPart1},
                                       {"trial", t},
                                       {"n", n},
                                       {"family", to_json(f)}});
      }
    }
    {
      const int universe = 3 + static_cast<int>(rng() % 4);
      const BoolFamily f = random_symmetric_family(universe, rng);
      ++report.checks;
      if (!check_RnD2n_part2(f, n)) {
        report.failures.push_back(json{{"statement", kStmtRnD2nPart2},
                                       {"trial", t},
                                       {"n", n},
                                       {"family", to_json(f)}});
      }
    }
  }
  return report;
}

/// Support-arithmetic relations for the witnesses of the named groups.
inline SuiteReport run_relations_suite(const Catalog& catalog,
                                       const std::vector<std::pair<std::string, int>>&
                                           cases = {{"S3", 4}, {"A5", 3}}) {
  SuiteReport report{"relations", {kStmtRelations}, 0, static_cast<int>(cases.size())};
  for (const auto& [label, n] : cases) {
    const Witness w = find_witness(catalog.find(label).group);
    const RelationsReport r = verify_relations(w, n);
    report.checks += r.eq1.checked + r.eq2.checked + r.eq3.checked + r.eq4.checked;
    if (!r.all_passed()) {
      report.failures.push_back(to_json(r));
    }
  }
  return report;
}

/// Ball-power implication over standard two-generator sets.
inline SuiteReport run_balls_suite(const Catalog& catalog, int max_nm = 6) {
  SuiteReport report{"balls", {kStmtBallPower}, 0, 0};
  for (const std::string label : {"S3", "A4", "S4"}) {
    const CatalogEntry& entry = catalog.find(label);
    for (int n = 1; n <= max_nm; ++n) {
      for (int m = 1; m <= max_nm; ++m) {
        ++report.checks;
        ++report.trials;
        if (!check_ball_power(entry.group, entry.generators, n, m)) {
          report.failures.push_back(
              json{{"statement", kStmtBallPower}, {"group", label}, {"n", n}, {"m", m}});
        }
      }
    }
  }
  return report;
}

/// Random homogeneous words: products, inverses, conjugates and commutators
/// of homogeneous words are homogeneous, so growing expressions from the
/// commutator atoms stays inside the homogeneous words by construction.
inline Monomial random_homogeneous_word(const FiniteGroup& g, std::mt19937_64& rng,
                                        int steps = 4) {
  const Monomial x(2, {Letter::variable(0, 1)});
  const Monomial y(2, {Letter::variable(1, 1)});
  const bool flip = rng() & 1;
  Monomial cur = commutator_word(g, flip ? x : y, flip ? y : x);
  for (int s = 0; s < steps; ++s) {
    switch (rng() % 4) {
      case 0: {
        const bool use_x = rng() & 1;
        cur = commutator_word(g, cur, use_x ? x : y);
        break;
      }
      case 1:
        cur = cur.inverse(g);
        break;
      case 2: {
        const int c = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        cur = concat(g, concat(g, Monomial(2, {Letter::constant(c)}), cur),
                     Monomial(2, {Letter::constant(g.inv(c))}));
        break;
      }
      default:
        cur = concat(g, cur, commutator_word(g, x, y));
        break;
    }
  }
  return cur;
}

/// Central-coordinate vanishing for homogeneous words over the catalog
/// groups of order <= 24, on random homogeneous words plus each group's own
/// witness word where one exists.
inline SuiteReport run_central_vanishing_suite(const Catalog& catalog,
                                               std::uint64_t seed, int trials) {
  SuiteReport report{"central-vanishing", {kStmtCentralVanishing}, seed, trials};
  std::uint64_t group_index = 0;
  for (const CatalogEntry& entry : catalog.entries()) {
    ++group_index;
    if (entry.group.order() > 24) {
      continue;
    }
    std::vector<Monomial> words;
    try {
      words.push_back(find_witness(entry.group).f);
    } catch (const GroupIsNilpotent&) {
    }
    std::mt19937_64 rng(detail::mix_seed(seed, group_index));
    for (int t = 0; t < trials; ++t) {
      words.push_back(random_homogeneous_word(entry.group, rng));
    }
    for (const Monomial& f : words) {
      ++report.checks;
      if (!check_central_vanishing(entry.group, f)) {
        report.failures.push_back(json{{"statement", kStmtCentralVanishing},
                                       {"group", entry.label},
                                       {"f", to_json(f)}});
      }
    }
  }
  return report;
}

}  // namespace sbg
