#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sbg/error.hpp"
#include "sbg/group.hpp"
#include "sbg/monomial.hpp"

namespace sbg {

inline constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 28;
inline constexpr std::uint64_t kDefaultClosureCap = std::uint64_t{1} << 22;

/// Element of G^n as a coordinate vector.
struct ProductElement {
  std::vector<int> coords;

  bool operator==(const ProductElement& o) const { return coords == o.coords; }
  bool operator!=(const ProductElement& o) const { return !(*this == o); }
};

inline ProductElement identity_tuple(int n) {
  return ProductElement{std::vector<int>(static_cast<std::size_t>(n), 0)};
}

/// x_J: x in the coordinates listed in J, identity elsewhere.
inline ProductElement embed_xJ(const FiniteGroup& g, int n, int x,
                               const std::vector<int>& J) {
  if (x < 0 || x >= g.order()) {
    throw UnknownGroup("element index " + std::to_string(x) + " out of range");
  }
  ProductElement out = identity_tuple(n);
  for (int j : J) {
    if (j < 0 || j >= n) {
      throw StateSpaceTooLarge("coordinate " + std::to_string(j) +
                               " outside power " + std::to_string(n));
    }
    out.coords[static_cast<std::size_t>(j)] = x;
  }
  return out;
}

inline ProductElement embed_mask(const FiniteGroup& g, int n, int x, std::uint32_t J) {
  if (x < 0 || x >= g.order()) {
    throw UnknownGroup("element index " + std::to_string(x) + " out of range");
  }
  ProductElement out = identity_tuple(n);
  for (int j = 0; j < n; ++j) {
    if ((J >> j) & 1) {
      out.coords[static_cast<std::size_t>(j)] = x;
    }
  }
  return out;
}

inline ProductElement mul(const FiniteGroup& g, const ProductElement& a,
                          const ProductElement& b) {
  if (a.coords.size() != b.coords.size()) {
    throw ArityMismatch("product elements of different powers");
  }
  ProductElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = g.mul(a.coords[i], b.coords[i]);
  }
  return out;
}

inline ProductElement inverse(const FiniteGroup& g, const ProductElement& a) {
  ProductElement out = a;
  for (auto& c : out.coords) {
    c = g.inv(c);
  }
  return out;
}

/// Mixed-radix encoding of G^n with coordinate 0 least significant.
/// Total state count is capped at 2^28.
class PowerGroup {
 public:
  PowerGroup(const FiniteGroup& g, int n) : group_(&g), n_(n) {
    if (n < 0) {
      throw StateSpaceTooLarge("negative power");
    }
    std::uint64_t size = 1;
    pow_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      pow_.push_back(size);
      if (size > kMaxStates / static_cast<std::uint64_t>(g.order())) {
        throw StateSpaceTooLarge("order^" + std::to_string(n) + " exceeds 2^28 states");
      }
      size *= static_cast<std::uint64_t>(g.order());
    }
    size_ = size;
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  int power() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t encode(const ProductElement& e) const {
    std::uint64_t s = 0;
    for (int i = 0; i < n_; ++i) {
      s += static_cast<std::uint64_t>(e.coords[static_cast<std::size_t>(i)]) *
           pow_[static_cast<std::size_t>(i)];
    }
    return s;
  }

  ProductElement decode(std::uint64_t s) const {
    ProductElement e = identity_tuple(n_);
    for (int i = 0; i < n_; ++i) {
      e.coords[static_cast<std::size_t>(i)] =
          static_cast<int>(s / pow_[static_cast<std::size_t>(i)] %
                           static_cast<std::uint64_t>(group_->order()));
    }
    return e;
  }

  std::uint64_t mul_states(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    const auto order = static_cast<std::uint64_t>(group_->order());
    for (int i = 0; i < n_; ++i) {
      const auto p = pow_[static_cast<std::size_t>(i)];
      out += static_cast<std::uint64_t>(group_->mul(static_cast<int>(a / p % order),
                                                    static_cast<int>(b / p % order))) *
             p;
    }
    return out;
  }

  std::uint64_t inv_state(std::uint64_t a) const {
    std::uint64_t out = 0;
    const auto order = static_cast<std::uint64_t>(group_->order());
    for (int i = 0; i < n_; ++i) {
      const auto p = pow_[static_cast<std::size_t>(i)];
      out += static_cast<std::uint64_t>(group_->inv(static_cast<int>(a / p % order))) * p;
    }
    return out;
  }

 private:
  const FiniteGroup* group_;
  int n_;
  std::uint64_t size_;
  std::vector<std::uint64_t> pow_;
};

/// Deduplicated list of generators of (a subgroup of) G^n.
struct GeneratingSet {
  int power = 0;
  std::vector<ProductElement> members;

  void add(const ProductElement& e) {
    if (static_cast<int>(e.coords.size()) != power) {
      throw ArityMismatch("generator has wrong power");
    }
    if (std::find(members.begin(), members.end(), e) == members.end()) {
      members.push_back(e);
    }
  }

  /// All x_{i} for x != identity: every factor of G^n separately.
  static GeneratingSet union_of_factors(const FiniteGroup& g, int n) {
    GeneratingSet out;
    out.power = n;
    for (int i = 0; i < n; ++i) {
      for (int x = 1; x < g.order(); ++x) {
        out.add(embed_xJ(g, n, x, {i}));
      }
    }
    return out;
  }
};

struct DiameterReport {
  std::string group;
  int n = 0;
  int generator_count = 0;
  bool generates = false;
  int diameter = 0;
  std::vector<std::uint64_t> histogram;  // histogram[d] = elements at distance d
  std::uint64_t states_visited = 0;
};

namespace detail {

// Distances from the identity over gens and their inverses, as a flat byte
// array with 255 meaning unvisited.  Distances of 255 or more do not fit the
// encoding and abort.
inline std::vector<std::uint8_t> power_distances(const PowerGroup& pg,
                                                 const GeneratingSet& gens) {
  const FiniteGroup& g = pg.group();
  std::vector<std::int64_t> pow(static_cast<std::size_t>(pg.power()));
  for (int i = 0; i < pg.power(); ++i) {
    pow[static_cast<std::size_t>(i)] = i == 0
        ? 1
        : pow[static_cast<std::size_t>(i - 1)] * g.order();
  }
  // Right multiplication by a generator only touches its support, so
  // neighbours are computed by adjusting the affected digits of the state.
  struct Move {
    std::vector<std::pair<int, int>> support;  // (coordinate, factor element)
  };
  std::vector<Move> moves;
  std::unordered_set<std::uint64_t> seen;
  auto add_move = [&](const ProductElement& e) {
    if (pg.encode(e) == 0 || !seen.insert(pg.encode(e)).second) {
      return;
    }
    Move m;
    for (int i = 0; i < pg.power(); ++i) {
      if (e.coords[static_cast<std::size_t>(i)] != 0) {
        m.support.push_back({i, e.coords[static_cast<std::size_t>(i)]});
      }
    }
    moves.push_back(std::move(m));
  };
  for (const auto& e : gens.members) {
    add_move(e);
    add_move(inverse(g, e));
  }

  std::vector<std::uint8_t> dist(pg.size(), 255);
  dist[0] = 0;
  std::vector<std::uint64_t> frontier{0}, next;
  int level = 0;
  while (!frontier.empty()) {
    if (level >= 254) {
      throw StateSpaceTooLarge("distance exceeds the byte encoding");
    }
    next.clear();
    for (auto s : frontier) {
      const ProductElement e = pg.decode(s);
      for (const Move& m : moves) {
        std::int64_t t = static_cast<std::int64_t>(s);
        for (const auto& [i, x] : m.support) {
          const int old = e.coords[static_cast<std::size_t>(i)];
          t += (g.mul(old, x) - old) * pow[static_cast<std::size_t>(i)];
        }
        const auto u = static_cast<std::uint64_t>(t);
        if (dist[u] == 255) {
          dist[u] = static_cast<std::uint8_t>(level + 1);
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
    ++level;
  }
  return dist;
}

}  // namespace detail

/// Breadth-first search over the Cayley graph of G^n with respect to
/// gens together with their inverses.  Reports whether the set generates
/// and the exact diameter with its distance histogram.
inline DiameterReport cayley_diameter(const FiniteGroup& g, int n,
                                      const GeneratingSet& gens) {
  if (gens.power != n) {
    throw ArityMismatch("generating set is for a different power");
  }
  const PowerGroup pg(g, n);
  const auto dist = detail::power_distances(pg, gens);
  DiameterReport report;
  report.group = g.label();
  report.n = n;
  report.generator_count = static_cast<int>(gens.members.size());
  int diameter = 0;
  std::uint64_t visited = 0;
  for (auto d : dist) {
    if (d != 255) {
      ++visited;
      diameter = std::max(diameter, static_cast<int>(d));
    }
  }
  report.states_visited = visited;
  report.generates = visited == pg.size();
  report.diameter = diameter;
  report.histogram.assign(static_cast<std::size_t>(diameter) + 1, 0);
  for (auto d : dist) {
    if (d != 255) {
      ++report.histogram[d];
    }
  }
  return report;
}

/// Coordinatewise application of a monomial to tuples in G^n.
class LiftedMonomial {
 public:
  LiftedMonomial(const FiniteGroup& g, Monomial f, int n)
      : group_(&g), f_(std::move(f)), n_(n) {}

  ProductElement operator()(const std::vector<ProductElement>& args) const {
    if (static_cast<int>(args.size()) != f_.arity()) {
      throw ArityMismatch("lifted monomial applied to wrong argument count");
    }
    ProductElement out = identity_tuple(n_);
    std::vector<int> slot(args.size());
    for (int i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < args.size(); ++k) {
        slot[k] = args[k].coords[static_cast<std::size_t>(i)];
      }
      out.coords[static_cast<std::size_t>(i)] = evaluate(*group_, f_, slot);
    }
    return out;
  }

  const Monomial& monomial() const noexcept { return f_; }
  int power() const noexcept { return n_; }

 private:
  const FiniteGroup* group_;
  Monomial f_;
  int n_;
};

inline LiftedMonomial lift_monomial(const FiniteGroup& g, const Monomial& f, int n) {
  return LiftedMonomial(g, f, n);
}

struct RelationCheck {
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;  // (J, K)

  void record(bool ok, std::uint32_t J, std::uint32_t K) {
    ++checked;
    if (!ok && passed) {
      passed = false;
      counterexample = {{J, K}};
    }
  }
};

/// Outcome of checking the four support-arithmetic identities for a witness
/// (a, b, f) in G^n over all pairs of supports J, K:
///   1. a_I a_J^-1 = a_{I-J}
///   2. lift(f)(a_J, b_K) = b_{J cap K}
///   3. lift(f)(a_J, b_I) = b_J
///   4. b_J b_K = b_{J union K} when J and K are disjoint.
struct RelationsReport {
  std::string group;
  int n = 0;
  RelationCheck eq1, eq2, eq3, eq4;

  bool all_passed() const {
    return eq1.passed && eq2.passed && eq3.passed && eq4.passed;
  }
};

inline RelationsReport verify_relations(const Witness& w, int n) {
  if (n < 0 || n > 12) {
    throw StateSpaceTooLarge("relation check over 2^" + std::to_string(n) +
                             " supports is out of range");
  }
  const FiniteGroup& g = w.group;
  RelationsReport report;
  report.group = g.label();
  report.n = n;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const LiftedMonomial lifted(g, w.f, n);
  std::vector<ProductElement> a_of, b_of;
  a_of.reserve(static_cast<std::size_t>(all) + 1);
  b_of.reserve(static_cast<std::size_t>(all) + 1);
  for (std::uint32_t J = 0; J <= all; ++J) {
    a_of.push_back(embed_mask(g, n, w.a, J));
    b_of.push_back(embed_mask(g, n, w.b, J));
  }
  for (std::uint32_t J = 0; J <= all; ++J) {
    report.eq1.record(mul(g, a_of[all], inverse(g, a_of[J])) == a_of[all & ~J], J, 0);
    report.eq3.record(lifted({a_of[J], b_of[all]}) == b_of[J], J, all);
    for (std::uint32_t K = 0; K <= all; ++K) {
      report.eq2.record(lifted({a_of[J], b_of[K]}) == b_of[J & K], J, K);
      if ((J & K) == 0) {
        report.eq4.record(mul(g, b_of[J], b_of[K]) == b_of[J | K], J, K);
      }
    }
  }
  return report;
}

/// One closure step X -> X union {1} union X^-1 union X X.
/// Throws SizeCap when the result would exceed `cap` elements.
inline std::vector<ProductElement> group_closure_step(
    const FiniteGroup& g, int n, const std::vector<ProductElement>& x,
    std::uint64_t cap = kDefaultClosureCap) {
  const PowerGroup pg(g, n);
  std::unordered_set<std::uint64_t> out;
  auto guarded_insert = [&](std::uint64_t s) {
    out.insert(s);
    if (out.size() > cap) {
      throw SizeCap("closure step exceeds " + std::to_string(cap) + " elements");
    }
  };
  guarded_insert(0);
  std::vector<std::uint64_t> xs;
  xs.reserve(x.size());
  for (const auto& e : x) {
    xs.push_back(pg.encode(e));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (auto s : xs) {
    guarded_insert(s);
    guarded_insert(pg.inv_state(s));
  }
  for (auto s : xs) {
    for (auto t : xs) {
      guarded_insert(pg.mul_states(s, t));
    }
  }
  std::vector<std::uint64_t> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ProductElement> result;
  result.reserve(sorted.size());
  for (auto s : sorted) {
    result.push_back(pg.decode(s));
  }
  return result;
}

/// BFS distances in G itself with respect to gens and their inverses;
/// throws NotGenerating when the set does not generate G.
inline std::vector<int> word_distances(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<int> edges;
  for (int x : gens) {
    if (x < 0 || x >= g.order()) {
      throw UnknownGroup("generator index " + std::to_string(x) + " out of range");
    }
    edges.push_back(x);
    edges.push_back(g.inv(x));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int x : edges) {
      const int v = g.mul(queue[head], x);
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(queue[head])] + 1;
        queue.push_back(v);
      }
    }
  }
  for (int d : dist) {
    if (d < 0) {
      throw NotGenerating("generating set does not reach the whole group");
    }
  }
  return dist;
}

/// K_r = elements of word length strictly below r, so K_1 = {identity}.
inline ElementSet word_ball(const FiniteGroup& g, const std::vector<int>& gens, int r) {
  const auto dist = word_distances(g, gens);
  ElementSet ball(g);
  for (int x = 0; x < g.order(); ++x) {
    if (dist[static_cast<std::size_t>(x)] < r) {
      ball.insert(x);
    }
  }
  return ball;
}

/// Verifies the implication "G = (K_n)^m implies G = K_{nm}" by exact
/// computation of both sides.  Vacuously true when m-fold products of the
/// ball fail to cover G.
inline bool check_ball_power(const FiniteGroup& g, const std::vector<int>& gens, int n,
                             int m) {
  const auto dist = word_distances(g, gens);
  ElementSet ball(g);
  int max_dist = 0;
  for (int x = 0; x < g.order(); ++x) {
    max_dist = std::max(max_dist, dist[static_cast<std::size_t>(x)]);
    if (dist[static_cast<std::size_t>(x)] < n) {
      ball.insert(x);
    }
  }
  ElementSet product = ball;
  for (int step = 1; step < m; ++step) {
    ElementSet next(g);
    for (int x : product.to_indices()) {
      for (int y : ball.to_indices()) {
        next.insert(g.mul(x, y));
      }
    }
    product = next;
  }
  const bool covers = product.count() == g.order();
  return !covers || max_dist < n * m;
}

struct ExhaustionResult {
  std::optional<int> steps;       // least m with target^n inside the m-fold closure
  std::uint64_t closure_size = 0; // size of the final set inspected
  int iterations = 0;             // closure steps actually taken
};

/// Iterates closure steps from `seed` until every tuple over `target` is
/// covered, or a fixpoint is reached first (steps empty = unreachable).
inline ExhaustionResult exhaustion_experiment(const FiniteGroup& g, int n,
                                              const std::vector<ProductElement>& seed,
                                              const ElementSet& target,
                                              std::uint64_t cap = kDefaultClosureCap) {
  if (!is_normal(g, target)) {
    throw NotASubgroup("exhaustion target must be a normal subgroup");
  }
  const PowerGroup pg(g, n);
  const auto target_list = target.to_indices();
  std::unordered_set<std::uint64_t> current;
  for (const auto& e : seed) {
    current.insert(pg.encode(e));
  }
  auto covered = [&]() {
    // Odometer over target^n.
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::uint64_t s = 0;
      for (int i = 0; i < n; ++i) {
        s = s * static_cast<std::uint64_t>(g.order()) +
            static_cast<std::uint64_t>(
                target_list[digit[static_cast<std::size_t>(n - 1 - i)]]);
      }
      if (!current.count(s)) {
        return false;
      }
      int i = n - 1;
      while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == target_list.size()) {
        digit[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) {
        return true;
      }
    }
  };
  ExhaustionResult result;
  std::vector<ProductElement> xs = seed;
  for (int m = 0;; ++m) {
    result.iterations = m;
    result.closure_size = current.size();
    if (covered()) {
      result.steps = m;
      return result;
    }
    std::vector<ProductElement> next = group_closure_step(g, n, xs, cap);
    std::unordered_set<std::uint64_t> next_set;
    for (const auto& e : next) {
      next_set.insert(pg.encode(e));
    }
    if (next_set == current) {
      return result;  // fixpoint without coverage
    }
    xs = std::move(next);
    current = std::move(next_set);
  }
}

}  // namespace sbg
