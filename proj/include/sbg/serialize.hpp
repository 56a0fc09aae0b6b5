#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sbg/boolean.hpp"
#include "sbg/catalog.hpp"
#include "sbg/error.hpp"
#include "sbg/group.hpp"
#include "sbg/monomial.hpp"
#include "sbg/power.hpp"

namespace sbg {

using nlohmann::json;

inline json to_json(const ElementSet& s) { return json(s.to_indices()); }

inline json to_json(const CentralSeriesReport& r) {
  json descending = json::array(), ascending = json::array();
  for (const auto& t : r.descending) {
    descending.push_back(t.to_indices());
  }
  for (const auto& t : r.ascending) {
    ascending.push_back(t.to_indices());
  }
  return json{{"descending", descending},     {"ascending", ascending},
              {"last_term", r.last_term.to_indices()},
              {"hypercenter", r.hypercenter.to_indices()},
              {"nilpotent", r.nilpotent},     {"perfect", r.perfect}};
}

inline json to_json(const Monomial& f) {
  json word = json::array();
  for (const Letter& l : f.word()) {
    if (l.is_const) {
      word.push_back(json{{"const", l.elem}});
    } else {
      word.push_back(json{{"var", l.var}, {"exp", l.exp}});
    }
  }
  return json{{"arity", f.arity()}, {"word", word}};
}

inline Monomial monomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("word")) {
    throw Error("monomial JSON needs \"arity\" and \"word\"");
  }
  std::vector<Letter> word;
  for (const auto& l : j.at("word")) {
    if (l.contains("const")) {
      word.push_back(Letter::constant(l.at("const").get<int>()));
    } else {
      word.push_back(Letter::variable(l.at("var").get<int>(), l.at("exp").get<int>()));
    }
  }
  return Monomial(j.at("arity").get<int>(), word);
}

inline json to_json(const Witness& w) {
  return json{{"a", w.a},
              {"b", w.b},
              {"f", to_json(w.f)},
              {"trace", json{{"m", w.trace.m},
                             {"m_prime", w.trace.m_prime},
                             {"a_seq", w.trace.a_seq},
                             {"b_seq", w.trace.b_seq}}}};
}

inline json to_json(const BoolFamily& f) {
  return json{{"universe", f.universe()}, {"sets", f.masks()}};
}

inline BoolFamily family_from_json(const json& j) {
  BoolFamily f(j.at("universe").get<int>());
  for (const auto& m : j.at("sets")) {
    f.insert(m.get<std::uint32_t>());
  }
  return f;
}

inline json to_json(const DiameterReport& r) {
  return json{{"group", r.group},         {"n", r.n},
              {"generator_count", r.generator_count},
              {"generates", r.generates}, {"diameter", r.diameter},
              {"histogram", r.histogram}, {"states_visited", r.states_visited}};
}

inline json to_json(const RelationCheck& c) {
  json out{{"passed", c.passed}, {"checked", c.checked}};
  if (c.counterexample) {
    out["counterexample"] = json{{"J", c.counterexample->first},
                                 {"K", c.counterexample->second}};
  }
  return out;
}

inline json to_json(const RelationsReport& r) {
  return json{{"group", r.group},       {"n", r.n},
              {"eq1", to_json(r.eq1)},  {"eq2", to_json(r.eq2)},
              {"eq3", to_json(r.eq3)},  {"eq4", to_json(r.eq4)},
              {"all_passed", r.all_passed()}};
}

/// Parses one group description: either {"label", "order", "table"} or
/// {"label", "degree", "generators"}, optionally with expected flags
/// {"expected": {"perfect": bool, "nilpotent": bool}} and a standard
/// generating set {"generators_of_interest": [indices]} for table input.
inline CatalogEntry group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("label")) {
    throw Error("group JSON needs a \"label\"");
  }
  const std::string label = j.at("label").get<std::string>();
  std::optional<CatalogEntry> entry;
  if (j.contains("table")) {
    const auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") &&
        j.at("order").get<std::size_t>() != table.size()) {
      throw NotAGroup("declared order does not match the table");
    }
    std::vector<int> gens;
    if (j.contains("generators_of_interest")) {
      gens = j.at("generators_of_interest").get<std::vector<int>>();
    }
    entry = CatalogEntry{label, FiniteGroup::from_table(table, label), std::move(gens),
                         std::nullopt, std::nullopt};
  } else if (j.contains("generators")) {
    const int degree = j.at("degree").get<int>();
    auto real = close_permutations(
        degree, j.at("generators").get<std::vector<std::vector<int>>>(), label);
    entry = CatalogEntry{label, std::move(real.group),
                         std::move(real.generator_indices), std::nullopt, std::nullopt};
  } else {
    throw Error("group JSON needs either a \"table\" or \"generators\"");
  }
  if (j.contains("expected")) {
    const auto& e = j.at("expected");
    if (e.contains("perfect")) {
      entry->expected_perfect = e.at("perfect").get<bool>();
    }
    if (e.contains("nilpotent")) {
      entry->expected_nilpotent = e.at("nilpotent").get<bool>();
    }
  }
  return std::move(*entry);
}

/// Accepts {"groups": [...]} or a bare array of group descriptions.
inline Catalog catalog_from_json(const json& j) {
  Catalog c;
  const json& list = j.is_array() ? j : j.at("groups");
  for (const auto& g : list) {
    c.add(group_from_json(g));
  }
  return c;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open catalog file " + path);
  }
  json j;
  in >> j;
  return catalog_from_json(j);
}

/// Parses a generating set for G^n: entries are either {"x": element,
/// "J": [coordinates]} or explicit coordinate vectors.
inline GeneratingSet generating_set_from_json(const FiniteGroup& g, int n, const json& j) {
  GeneratingSet out;
  out.power = n;
  for (const auto& item : j) {
    if (item.is_object()) {
      out.add(embed_xJ(g, n, item.at("x").get<int>(),
                       item.at("J").get<std::vector<int>>()));
    } else {
      const auto coords = item.get<std::vector<int>>();
      if (static_cast<int>(coords.size()) != n) {
        throw ArityMismatch("generator tuple has wrong length");
      }
      for (int c : coords) {
        if (c < 0 || c >= g.order()) {
          throw UnknownGroup("element index " + std::to_string(c) + " out of range");
        }
      }
      out.add(ProductElement{coords});
    }
  }
  return out;
}

}  // namespace sbg
