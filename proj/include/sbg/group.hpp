#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sbg/error.hpp"

namespace sbg {

inline constexpr int kMaxGroupOrder = 512;

/// Finite group presented by its complete multiplication table.  Element
/// indices run from 0 to order()-1 and index 0 is always the identity.
/// Construction validates the identity law, existence of inverses and full
/// associativity, so any live instance really is a group.
class FiniteGroup {
 public:
  /// Wraps a multiplication table after exhaustive validation.  Throws
  /// NotAGroup with a counterexample in the message, or TooLarge when the
  /// order exceeds kMaxGroupOrder.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::string label = "",
                                std::vector<std::string> element_names = {}) {
    const std::size_t n = table.size();
    if (n == 0) {
      throw NotAGroup("empty multiplication table");
    }
    if (n > static_cast<std::size_t>(kMaxGroupOrder)) {
      throw TooLarge("group order " + std::to_string(n) + " exceeds cap " +
                     std::to_string(kMaxGroupOrder));
    }
    FiniteGroup g;
    g.order_ = static_cast<int>(n);
    g.label_ = std::move(label);
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw NotAGroup("table row " + std::to_string(a) + " has length " +
                        std::to_string(table[a].size()));
      }
      for (std::size_t b = 0; b < n; ++b) {
        const int v = table[a][b];
        if (v < 0 || v >= g.order_) {
          throw NotAGroup("table[" + std::to_string(a) + "][" + std::to_string(b) +
                          "] = " + std::to_string(v) + " is out of range");
        }
        g.table_[a * n + b] = static_cast<std::uint16_t>(v);
      }
    }
    for (int a = 0; a < g.order_; ++a) {
      if (g.mul(0, a) != a || g.mul(a, 0) != a) {
        throw NotAGroup("element 0 is not a two-sided identity at " + std::to_string(a));
      }
    }
    g.inverses_.assign(n, 0);
    for (int a = 0; a < g.order_; ++a) {
      int found = -1;
      for (int b = 0; b < g.order_; ++b) {
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          found = b;
          break;
        }
      }
      if (found < 0) {
        throw NotAGroup("element " + std::to_string(a) + " has no inverse");
      }
      g.inverses_[a] = static_cast<std::uint16_t>(found);
    }
    for (int a = 0; a < g.order_; ++a) {
      for (int b = 0; b < g.order_; ++b) {
        const int ab = g.mul(a, b);
        for (int c = 0; c < g.order_; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
            throw NotAGroup("associativity fails at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (!element_names.empty()) {
      if (element_names.size() != n) {
        throw NotAGroup("element name list does not match the order");
      }
      g.element_names_ = std::move(element_names);
    }
    return g;
  }

  int order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  int inv(int a) const { return inverses_[a]; }

  /// c g c^-1.
  int conjugate(int g, int c) const { return mul(mul(c, g), inv(c)); }

  std::vector<std::vector<int>> table_rows() const {
    std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        rows[a][b] = mul(a, b);
      }
    }
    return rows;
  }

  /// Display names, e.g. cycle notation for permutation-built groups.
  /// Empty when the group was built from a bare table.
  const std::vector<std::string>& element_names() const noexcept {
    return element_names_;
  }

 private:
  FiniteGroup() = default;

  int order_ = 1;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverses_;
  std::string label_;
  std::vector<std::string> element_names_;
};

/// [g, h] = g^-1 h^-1 g h.
inline int commutator(const FiniteGroup& g, int a, int b) {
  return g.mul(g.mul(g.mul(g.inv(a), g.inv(b)), a), b);
}

namespace detail {

// Composition acts left to right: (p * q)(x) = q(p(x)).
inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    r[x] = q[p[x]];
  }
  return r;
}

inline void check_permutation(int degree, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != degree) {
    throw NotAGroup("generator has length " + std::to_string(p.size()) +
                    ", expected degree " + std::to_string(degree));
  }
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)]) {
      throw NotAGroup("generator is not a permutation of 0.." +
                      std::to_string(degree - 1));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

inline std::string cycle_notation(const std::vector<int>& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) {
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace detail

/// Result of closing a set of permutations under composition.  `elements`
/// lists the permutation realising each group index and `generator_indices`
/// locates the input generators inside the closure.
struct PermutationRealization {
  FiniteGroup group;
  std::vector<std::vector<int>> elements;
  std::vector<int> generator_indices;
};

/// Breadth-first closure of `generators` under composition.  Index 0 is the
/// identity and the remaining indices follow discovery order (generators in
/// input order, then products), which makes the numbering deterministic.
inline PermutationRealization close_permutations(
    int degree, const std::vector<std::vector<int>>& generators,
    std::string label = "") {
  if (degree < 0) {
    throw NotAGroup("negative degree");
  }
  for (const auto& p : generators) {
    detail::check_permutation(degree, p);
  }
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    id[static_cast<std::size_t>(i)] = i;
  }
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = detail::compose(elements[head], gen);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (elements.size() == static_cast<std::size_t>(kMaxGroupOrder)) {
          throw TooLarge("permutation closure exceeds order cap " +
                         std::to_string(kMaxGroupOrder));
        }
        elements.push_back(std::move(next));
      }
    }
  }
  const int order = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                      std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index.at(detail::compose(elements[static_cast<std::size_t>(a)],
                                   elements[static_cast<std::size_t>(b)]));
    }
  }
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (const auto& p : elements) {
    names.push_back(detail::cycle_notation(p));
  }
  PermutationRealization out{
      FiniteGroup::from_table(table, std::move(label), std::move(names)),
      std::move(elements),
      {}};
  out.generator_indices.reserve(generators.size());
  for (const auto& gen : generators) {
    out.generator_indices.push_back(index.at(gen));
  }
  return out;
}

inline FiniteGroup from_permutations(int degree,
                                     const std::vector<std::vector<int>>& generators,
                                     std::string label = "") {
  return close_permutations(degree, generators, std::move(label)).group;
}

/// Subset of a group's elements, stored as a bitset over indices.  Sets
/// produced by the closure operations below carry flags recording that they
/// were certified as subgroups (and normal subgroups).
class ElementSet {
 public:
  explicit ElementSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}
  explicit ElementSet(const FiniteGroup& g) : ElementSet(g.order()) {}

  static ElementSet full(const FiniteGroup& g) {
    ElementSet s(g);
    for (int i = 0; i < g.order(); ++i) {
      s.insert(i);
    }
    return s;
  }

  static ElementSet of(const FiniteGroup& g, const std::vector<int>& indices) {
    ElementSet s(g);
    for (int i : indices) {
      s.insert(i);
    }
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int x) const {
    return (words_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1;
  }
  void insert(int x) { words_[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63); }

  int count() const {
    int n = 0;
    for (auto w : words_) {
      n += std::popcount(w);
    }
    return n;
  }
  bool empty() const { return count() == 0; }

  bool operator==(const ElementSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) {
        return false;
      }
    }
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
    }
    return *this;
  }

  ElementSet minus(const ElementSet& o) const {
    ElementSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      r.words_[i] &= ~o.words_[i];
    }
    r.subgroup_flag_ = false;
    r.normal_flag_ = false;
    return r;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < universe_; ++i) {
      if (contains(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool subgroup_flag() const noexcept { return subgroup_flag_; }
  bool normal_flag() const noexcept { return normal_flag_; }
  void set_subgroup_flag(bool v) noexcept { subgroup_flag_ = v; }
  void set_normal_flag(bool v) noexcept { normal_flag_ = v; }

 private:
  int universe_;
  std::vector<std::uint64_t> words_;
  bool subgroup_flag_ = false;
  bool normal_flag_ = false;
};

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) {
    return false;
  }
  const auto elems = s.to_indices();
  for (int a : elems) {
    if (!s.contains(g.inv(a))) {
      return false;
    }
    for (int b : elems) {
      if (!s.contains(g.mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) {
    return false;
  }
  for (int a : s.to_indices()) {
    for (int c = 0; c < g.order(); ++c) {
      if (!s.contains(g.conjugate(a, c))) {
        return false;
      }
    }
  }
  return true;
}

/// Smallest subgroup containing `seed`.  Always contains the identity.
inline ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& seed) {
  std::vector<int> elems{0};
  ElementSet in(g);
  in.insert(0);
  for (int s : seed.to_indices()) {
    if (!in.contains(s)) {
      in.insert(s);
      elems.push_back(s);
    }
  }
  // Scanning pairs against a growing list covers every pair eventually;
  // closure under products yields inverses for free in a finite group.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      for (int p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
        if (!in.contains(p)) {
          in.insert(p);
          elems.push_back(p);
        }
      }
    }
  }
  in.set_subgroup_flag(true);
  return in;
}

/// Smallest normal subgroup containing `seed`: the subgroup generated by all
/// conjugates of the seed elements.
inline ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seed) {
  ElementSet conjugates(g);
  for (int s : seed.to_indices()) {
    for (int c = 0; c < g.order(); ++c) {
      conjugates.insert(g.conjugate(s, c));
    }
  }
  ElementSet out = subgroup_generated(g, conjugates);
  out.set_normal_flag(true);
  return out;
}

/// Subgroup generated by all commutators [a, b] with a in `lhs`, b in `rhs`.
inline ElementSet commutator_span(const FiniteGroup& g, const ElementSet& lhs,
                                  const ElementSet& rhs) {
  ElementSet comms(g);
  for (int a : lhs.to_indices()) {
    for (int b : rhs.to_indices()) {
      comms.insert(commutator(g, a, b));
    }
  }
  return subgroup_generated(g, comms);
}

inline ElementSet derived_subgroup(const FiniteGroup& g) {
  ElementSet full = ElementSet::full(g);
  ElementSet out = commutator_span(g, full, full);
  out.set_normal_flag(true);
  return out;
}

inline ElementSet center(const FiniteGroup& g) {
  ElementSet z(g);
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        break;
      }
    }
    if (central) {
      z.insert(a);
    }
  }
  z.set_subgroup_flag(true);
  z.set_normal_flag(true);
  return z;
}

inline bool is_perfect(const FiniteGroup& g) {
  return derived_subgroup(g).count() == g.order();
}

/// Both central series of a group (or of a subgroup viewed as a group in its
/// own right), with the stabilised duplicate term kept at the end of each
/// list so stabilisation itself is visible to callers.
struct CentralSeriesReport {
  std::vector<ElementSet> descending;  // A, [A,A], [A,[A,A]], ...
  std::vector<ElementSet> ascending;   // 1, Z1, Z2, ...
  ElementSet last_term;
  ElementSet hypercenter;
  bool nilpotent = false;
  bool perfect = false;
};

/// Series of the subgroup `a` of `g`, expressed in g's element numbering.
/// Throws NotASubgroup when `a` fails the subgroup laws.
inline CentralSeriesReport relative_central_series(const FiniteGroup& g,
                                                   const ElementSet& a) {
  if (!is_subgroup(g, a)) {
    throw NotASubgroup("central series requested for a non-subgroup");
  }
  const auto members = a.to_indices();

  std::vector<ElementSet> descending{a};
  descending.front().set_subgroup_flag(true);
  for (;;) {
    ElementSet next = commutator_span(g, a, descending.back());
    const bool stable = next == descending.back();
    descending.push_back(std::move(next));
    if (stable) {
      break;
    }
  }

  ElementSet bottom(g);
  bottom.insert(0);
  bottom.set_subgroup_flag(true);
  std::vector<ElementSet> ascending{bottom};
  for (;;) {
    // Z_{i+1} collects the members whose commutator with every member of `a`
    // already lies in Z_i; no quotient group needs to be materialised.
    ElementSet next(g);
    const ElementSet& prev = ascending.back();
    for (int x : members) {
      bool in_next = true;
      for (int y : members) {
        if (!prev.contains(commutator(g, x, y))) {
          in_next = false;
          break;
        }
      }
      if (in_next) {
        next.insert(x);
      }
    }
    next.set_subgroup_flag(true);
    const bool stable = next == ascending.back();
    ascending.push_back(std::move(next));
    if (stable) {
      break;
    }
  }

  CentralSeriesReport report{std::move(descending), std::move(ascending),
                             ElementSet(g), ElementSet(g), false, false};
  report.last_term = report.descending.back();
  report.hypercenter = report.ascending.back();
  report.nilpotent = report.last_term.count() == 1;
  report.perfect = report.descending[1] == report.descending[0];
  return report;
}

inline CentralSeriesReport central_series(const FiniteGroup& g) {
  return relative_central_series(g, ElementSet::full(g));
}

inline bool is_nilpotent(const FiniteGroup& g) {
  return central_series(g).nilpotent;
}

/// Direct product with index (a, b) -> a * |H| + b, so (0, 0) stays at 0.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  std::string label = "") {
  const long long order = static_cast<long long>(g.order()) * h.order();
  if (order > kMaxGroupOrder) {
    throw TooLarge("direct product order " + std::to_string(order) +
                   " exceeds cap " + std::to_string(kMaxGroupOrder));
  }
  const int n = static_cast<int>(order);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ga = a / h.order(), ha = a % h.order();
      const int gb = b / h.order(), hb = b % h.order();
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          g.mul(ga, gb) * h.order() + h.mul(ha, hb);
    }
  }
  return FiniteGroup::from_table(table, std::move(label));
}

}  // namespace sbg
