#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbg/error.hpp"
#include "sbg/group.hpp"

namespace sbg {

/// Z/n with table (i, j) -> (i + j) mod n.
inline FiniteGroup cyclic_group(int n, std::string label = "") {
  if (n < 1) {
    throw NotAGroup("cyclic group needs order >= 1");
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    }
  }
  return FiniteGroup::from_table(table, label.empty() ? "Z/" + std::to_string(n)
                                                      : std::move(label));
}

/// Quaternion group {1, -1, i, -i, j, -j, k, -k} in that index order.
inline FiniteGroup quaternion_group() {
  // Axis products for 1, i, j, k with the sign they produce.
  static constexpr int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, bx = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ax][bx];
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          2 * axis[ax][bx] + (s < 0 ? 1 : 0);
    }
  }
  return FiniteGroup::from_table(table, "Q8", std::move(names));
}

struct CatalogEntry {
  std::string label;
  FiniteGroup group;
  std::vector<int> generators;  // indices of a standard generating set
  std::optional<bool> expected_perfect;
  std::optional<bool> expected_nilpotent;
};

class Catalog {
 public:
  void add(CatalogEntry entry) {
    for (const auto& e : entries_) {
      if (e.label == entry.label) {
        throw UnknownGroup("duplicate catalog label " + entry.label);
      }
    }
    entries_.push_back(std::move(entry));
  }

  bool has(const std::string& label) const {
    for (const auto& e : entries_) {
      if (e.label == label) {
        return true;
      }
    }
    return false;
  }

  const CatalogEntry& find(const std::string& label) const {
    for (const auto& e : entries_) {
      if (e.label == label) {
        return e;
      }
    }
    throw UnknownGroup("no catalog entry named " + label);
  }

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  /// The built-in desk catalog.
  static Catalog builtin() {
    Catalog c;
    auto add_perms = [&c](const std::string& label, int degree,
                          const std::vector<std::vector<int>>& gens, bool perfect,
                          bool nilpotent) {
      auto real = close_permutations(degree, gens, label);
      c.add(CatalogEntry{label, std::move(real.group), std::move(real.generator_indices),
                         perfect, nilpotent});
    };
    for (int n = 1; n <= 12; ++n) {
      CatalogEntry e{"Z/" + std::to_string(n), cyclic_group(n),
                     n > 1 ? std::vector<int>{1} : std::vector<int>{}, n == 1, true};
      c.add(std::move(e));
    }
    add_perms("S3", 3, {{1, 0, 2}, {1, 2, 0}}, false, false);
    add_perms("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, false, true);
    add_perms("D5", 5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, false, false);
    add_perms("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, false, false);
    add_perms("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, false, false);
    add_perms("A5", 5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, true, false);
    add_perms("S3xZ/2", 5, {{1, 0, 2, 3, 4}, {1, 2, 0, 3, 4}, {0, 1, 2, 4, 3}}, false,
              false);
    c.add(CatalogEntry{"Q8", quaternion_group(), {2, 4}, false, true});
    // SL(2,3) acting on the eight nonzero vectors of F_3^2, with the shear
    // (x, y) -> (x+y, y) and the rotation (x, y) -> (-y, x) as generators.
    {
      std::vector<std::pair<int, int>> vecs;
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          if (x || y) {
            vecs.push_back({x, y});
          }
        }
      }
      auto index_of = [&vecs](int x, int y) {
        for (std::size_t i = 0; i < vecs.size(); ++i) {
          if (vecs[i] == std::pair<int, int>{x, y}) {
            return static_cast<int>(i);
          }
        }
        throw InternalContradiction("vector lookup");
      };
      std::vector<int> shear(8), rot(8);
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        const auto [x, y] = vecs[i];
        shear[i] = index_of((x + y) % 3, y);
        rot[i] = index_of((3 - y) % 3, x);
      }
      add_perms("SL(2,3)", 8, {shear, rot}, false, false);
    }
    return c;
  }

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace sbg
