#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sbg/error.hpp"

namespace sbg {

inline constexpr int kMaxUniverse = 16;

/// Family of subsets of a universe E with |E| <= 16.  Subsets are bitmasks
/// over the points of E and the family itself is a dense bitset over all
/// 2^|E| masks, so membership and unions are O(1) words.  Viewed as a subset
/// of the Boolean ring P(E): symmetric difference is the sum, intersection
/// the product, and complement is x -> 1 + x.
class BoolFamily {
 public:
  explicit BoolFamily(int universe) : universe_(universe) {
    if (universe < 0 || universe > kMaxUniverse) {
      throw TooLarge("universe size " + std::to_string(universe) +
                     " outside 0.." + std::to_string(kMaxUniverse));
    }
    bits_.assign(universe < 6 ? 1 : (std::size_t{1} << (universe - 6)), 0);
  }

  static BoolFamily of(int universe, const std::vector<std::uint32_t>& masks) {
    BoolFamily f(universe);
    for (auto m : masks) {
      f.insert(m);
    }
    return f;
  }

  int universe() const noexcept { return universe_; }
  std::uint32_t full_mask() const noexcept {
    return universe_ == 0 ? 0u : (std::uint32_t{0xFFFFFFFF} >> (32 - universe_));
  }

  bool contains(std::uint32_t mask) const {
    return (bits_[mask >> 6] >> (mask & 63)) & 1;
  }
  void insert(std::uint32_t mask) {
    if (mask > full_mask()) {
      throw TooLarge("mask outside the universe");
    }
    bits_[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : bits_) {
      n += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return n;
  }

  std::vector<std::uint32_t> masks() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    const std::uint32_t limit = full_mask();
    for (std::uint32_t m = 0;; ++m) {
      if (contains(m)) {
        out.push_back(m);
      }
      if (m == limit) {
        break;
      }
    }
    return out;
  }

  bool operator==(const BoolFamily& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }
  bool operator!=(const BoolFamily& o) const { return !(*this == o); }

  bool is_subset_of(const BoolFamily& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~o.bits_[i]) {
        return false;
      }
    }
    return true;
  }

  BoolFamily& operator|=(const BoolFamily& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] |= o.bits_[i];
    }
    return *this;
  }

 private:
  int universe_;
  std::vector<std::uint64_t> bits_;
};

/// One ring-closure step: adds 0, 1 (= E) and all pairwise sums and products.
/// In characteristic 2 the constant -1 coincides with 1.
inline BoolFamily op_R(const BoolFamily& f) {
  BoolFamily out = f;
  out.insert(0);
  out.insert(f.full_mask());
  const auto ms = f.masks();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i; j < ms.size(); ++j) {
      out.insert(ms[i] ^ ms[j]);
      out.insert(ms[i] & ms[j]);
    }
  }
  return out;
}

/// Like op_R but sums are only taken over disjoint pairs.
inline BoolFamily op_D(const BoolFamily& f) {
  BoolFamily out = f;
  out.insert(0);
  out.insert(f.full_mask());
  const auto ms = f.masks();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i; j < ms.size(); ++j) {
      if ((ms[i] & ms[j]) == 0) {
        out.insert(ms[i] ^ ms[j]);
      }
      out.insert(ms[i] & ms[j]);
    }
  }
  return out;
}

inline BoolFamily iterate(BoolFamily (*op)(const BoolFamily&), const BoolFamily& f,
                          int times) {
  BoolFamily out = f;
  for (int i = 0; i < times; ++i) {
    out = op(out);
  }
  return out;
}

inline BoolFamily ring_closure(const BoolFamily& f) {
  BoolFamily cur = f;
  for (;;) {
    BoolFamily next = op_R(cur);
    if (next == cur) {
      return cur;
    }
    cur = next;
  }
}

/// Products of exactly k members (repetition allowed).  Since intersection
/// is idempotent this is the set of intersections of up to k members, built
/// by k-1 rounds of folding against f.
inline BoolFamily op_I(int k, const BoolFamily& f) {
  if (k < 1) {
    throw BoundTooLarge("op_I needs k >= 1");
  }
  BoolFamily cur = f;
  const auto base = f.masks();
  for (int round = 1; round < k; ++round) {
    BoolFamily next(f.universe());
    for (auto x : cur.masks()) {
      for (auto y : base) {
        next.insert(x & y);
      }
    }
    if (next == cur) {
      break;
    }
    cur = next;
  }
  return cur;
}

/// Sums of exactly k members that are pairwise disjoint; only 0 may repeat,
/// since any repeated nonzero member would meet itself.  Layer j holds the
/// sums of j distinct pairwise disjoint nonzero members; because such a sum
/// equals the union, disjointness from the partial sum is disjointness from
/// every summand, so layers fold against the nonzero members one at a time
/// instead of scanning k-tuples.
inline BoolFamily op_V(int k, const BoolFamily& f) {
  if (k < 1) {
    throw BoundTooLarge("op_V needs k >= 1");
  }
  const bool has_zero = f.contains(0);
  std::vector<std::uint32_t> nonzero;
  for (auto m : f.masks()) {
    if (m != 0) {
      nonzero.push_back(m);
    }
  }
  BoolFamily out(f.universe());
  BoolFamily layer(f.universe());
  layer.insert(0);
  for (int j = 0; j <= k; ++j) {
    if (j == k || (j < k && has_zero)) {
      out |= layer;
    }
    if (j == k || layer.size() == 0) {
      break;
    }
    BoolFamily next(f.universe());
    for (auto x : layer.masks()) {
      for (auto y : nonzero) {
        if ((x & y) == 0) {
          next.insert(x ^ y);
        }
      }
    }
    layer = next;
  }
  return out;
}

/// Adds 0 and closes under complement; the result always contains 0 and E.
inline BoolFamily symmetrize(const BoolFamily& f) {
  BoolFamily out = f;
  out.insert(0);
  const auto full = out.full_mask();
  for (auto m : out.masks()) {
    out.insert(full ^ m);
  }
  return out;
}

inline bool is_symmetric_with_zero(const BoolFamily& f) {
  if (!f.contains(0)) {
    return false;
  }
  for (auto m : f.masks()) {
    if (!f.contains(f.full_mask() ^ m)) {
      return false;
    }
  }
  return true;
}

/// Checks R^n(F) subset of D^{2n}(F) for a family containing 0 and closed
/// under complement.  Throws HypothesisViolated otherwise, BoundTooLarge
/// for n > 3.
inline bool check_RnD2n_part1(const BoolFamily& f, int n) {
  if (n < 1 || n > 3) {
    throw BoundTooLarge("part 1 supports 1 <= n <= 3");
  }
  if (!is_symmetric_with_zero(f)) {
    throw HypothesisViolated("family must contain 0 and be closed under complement");
  }
  return iterate(&op_R, f, n).is_subset_of(iterate(&op_D, f, 2 * n));
}

/// Checks D^n(F) subset of V_{2^{2^n}}(I_{2^n}(F)) under the same
/// hypothesis.  Throws BoundTooLarge for n > 2, where 2^{2^n} exceeds the
/// supported sum length.
inline bool check_RnD2n_part2(const BoolFamily& f, int n) {
  if (n < 1 || n > 2) {
    throw BoundTooLarge("part 2 supports 1 <= n <= 2");
  }
  if (!is_symmetric_with_zero(f)) {
    throw HypothesisViolated("family must contain 0 and be closed under complement");
  }
  const int prods = 1 << n;
  const int summands = 1 << prods;
  return iterate(&op_D, f, n).is_subset_of(op_V(summands, op_I(prods, f)));
}

}  // namespace sbg
