#pragma once

// Hand-rolled reference implementations used to cross-check the library.
// Everything here recomputes results from the raw multiplication table with
// its own loops; none of it calls the closure machinery under test.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sbg/group.hpp"

namespace oracles {

using Perm = std::vector<int>;

// Apply p first, then q, matching the composition used by the library.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    r[x] = q[static_cast<std::size_t>(p[x])];
  }
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  }
  return r;
}

// The symmetric group on 3 points in a fixed element order: identity, the
// three transpositions, then the two 3-cycles.
inline std::vector<Perm> s3_elements() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

inline std::vector<std::vector<int>> table_from_perms(const std::vector<Perm>& elems) {
  const auto index_of = [&elems](const Perm& p) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      table[a][b] = index_of(compose(elems[a], elems[b]));
    }
  }
  return table;
}

// Worklist subgroup closure, deliberately shaped differently from the
// library's growing-scan loop: saturate products and inverses until stable.
inline std::set<int> subgroup_closure(const sbg::FiniteGroup& g, std::set<int> seed) {
  seed.insert(0);
  for (;;) {
    std::set<int> next = seed;
    for (int a : seed) {
      next.insert(g.inv(a));
      for (int b : seed) {
        next.insert(g.mul(a, b));
      }
    }
    if (next == seed) {
      return seed;
    }
    seed.swap(next);
  }
}

inline std::set<int> normal_closure(const sbg::FiniteGroup& g, std::set<int> seed) {
  for (;;) {
    std::set<int> next = subgroup_closure(g, seed);
    for (int a : next) {
      for (int c = 0; c < g.order(); ++c) {
        next.insert(g.mul(g.mul(c, a), g.inv(c)));
      }
    }
    if (next == seed) {
      return seed;
    }
    seed.swap(next);
  }
}

inline int commutator(const sbg::FiniteGroup& g, int a, int b) {
  return g.mul(g.mul(g.mul(g.inv(a), g.inv(b)), a), b);
}

inline std::set<int> commutator_subgroup(const sbg::FiniteGroup& g,
                                         const std::set<int>& lhs,
                                         const std::set<int>& rhs) {
  std::set<int> comms;
  for (int a : lhs) {
    for (int b : rhs) {
      comms.insert(oracles::commutator(g, a, b));
    }
  }
  return subgroup_closure(g, comms);
}

inline std::vector<std::set<int>> lower_central_series(const sbg::FiniteGroup& g,
                                                       const std::set<int>& a) {
  std::vector<std::set<int>> series{a};
  for (;;) {
    std::set<int> next = commutator_subgroup(g, a, series.back());
    if (next == series.back()) {
      return series;
    }
    series.push_back(std::move(next));
  }
}

inline std::vector<std::set<int>> upper_central_series(const sbg::FiniteGroup& g,
                                                       const std::set<int>& a) {
  std::vector<std::set<int>> series{{0}};
  for (;;) {
    std::set<int> next;
    for (int x : a) {
      bool ok = true;
      for (int y : a) {
        ok = ok && series.back().count(oracles::commutator(g, x, y)) > 0;
      }
      if (ok) {
        next.insert(x);
      }
    }
    if (next == series.back()) {
      return series;
    }
    series.push_back(std::move(next));
  }
}

// All sums of exactly k members of `masks` that are pairwise disjoint,
// enumerated by brute force over k-tuples with repetition.
inline std::set<std::uint32_t> naive_op_V(int k, const std::vector<std::uint32_t>& masks) {
  std::set<std::uint32_t> out;
  std::vector<std::uint32_t> tuple;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == k) {
      std::uint32_t sum = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
          if (tuple[i] & tuple[j]) {
            return;
          }
        }
        sum ^= tuple[i];
      }
      out.insert(sum);
      return;
    }
    for (auto m : masks) {
      tuple.push_back(m);
      self(self);
      tuple.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace oracles
