#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sbg/error.hpp"
#include "sbg/group.hpp"

namespace sbg {

/// One letter of a monomial word: either a fixed group element or an
/// argument slot with exponent +1 or -1.
struct Letter {
  bool is_const;
  int elem;  // element index when is_const
  int var;   // argument position otherwise
  int exp;   // +1 or -1, meaningful for variables only

  static Letter constant(int element) { return Letter{true, element, 0, 1}; }
  static Letter variable(int position, int exponent) {
    return Letter{false, 0, position, exponent};
  }

  bool operator==(const Letter& o) const {
    if (is_const != o.is_const) {
      return false;
    }
    return is_const ? elem == o.elem : (var == o.var && exp == o.exp);
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }
};

/// Word in constants and arguments, evaluated left to right as a product in
/// a fixed group.  Stored in normal form: identity constants are dropped and
/// adjacent mutually inverse occurrences of the same argument cancel.
class Monomial {
 public:
  Monomial() : arity_(0) {}
  Monomial(int arity, const std::vector<Letter>& word) : arity_(arity) {
    if (arity < 0) {
      throw ArityMismatch("negative arity");
    }
    for (const Letter& l : word) {
      push(l);
    }
  }

  int arity() const noexcept { return arity_; }
  const std::vector<Letter>& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  bool operator==(const Monomial& o) const {
    return arity_ == o.arity_ && word_ == o.word_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Word for the pointwise inverse: reversed, with every letter inverted.
  /// Needs the group to invert constant letters.
  Monomial inverse(const FiniteGroup& g) const {
    std::vector<Letter> out;
    out.reserve(word_.size());
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
      out.push_back(it->is_const ? Letter::constant(g.inv(it->elem))
                                 : Letter::variable(it->var, -it->exp));
    }
    return Monomial(arity_, out);
  }

 private:
  void push(const Letter& l) {
    if (l.is_const) {
      if (l.elem != 0) {
        word_.push_back(l);
      }
      return;
    }
    if (!word_.empty()) {
      const Letter& top = word_.back();
      if (!top.is_const && top.var == l.var && top.exp == -l.exp) {
        word_.pop_back();
        return;
      }
    }
    word_.push_back(l);
  }

  int arity_;
  std::vector<Letter> word_;
};

inline Monomial concat(const FiniteGroup& /*unused*/, const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch("concat of arities " + std::to_string(a.arity()) + " and " +
                        std::to_string(b.arity()));
  }
  std::vector<Letter> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return Monomial(a.arity(), word);
}

/// Word for [u, v] = u^-1 v^-1 u v, pointwise.
inline Monomial commutator_word(const FiniteGroup& g, const Monomial& u, const Monomial& v) {
  return concat(g, concat(g, u.inverse(g), v.inverse(g)), concat(g, u, v));
}

inline int evaluate(const FiniteGroup& g, const Monomial& f, const std::vector<int>& args) {
  if (static_cast<int>(args.size()) != f.arity()) {
    throw ArityMismatch("monomial of arity " + std::to_string(f.arity()) +
                        " applied to " + std::to_string(args.size()) + " arguments");
  }
  int acc = 0;
  for (const Letter& l : f.word()) {
    if (l.is_const) {
      acc = g.mul(acc, l.elem);
    } else {
      const int x = args[static_cast<std::size_t>(l.var)];
      acc = g.mul(acc, l.exp > 0 ? x : g.inv(x));
    }
  }
  return acc;
}

namespace detail {

// Enumerates argument tuples whose first coordinate drawn from `special`
// occurs at position p, with earlier coordinates outside `special` and later
// ones unrestricted; every tuple containing a special coordinate appears
// exactly once.  Visitor returns false to abort.
template <typename Visit>
bool scan_special_slabs(const FiniteGroup& g, int arity, const ElementSet& special,
                        Visit visit) {
  std::vector<int> args(static_cast<std::size_t>(arity), 0);
  std::vector<int> ordinary;
  std::vector<int> special_list = special.to_indices();
  for (int x = 0; x < g.order(); ++x) {
    if (!special.contains(x)) {
      ordinary.push_back(x);
    }
  }
  for (int p = 0; p < arity; ++p) {
    // Odometer over: positions < p from `ordinary`, position p from
    // `special_list`, positions > p from the whole group.
    std::vector<int> radix(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) {
      radix[static_cast<std::size_t>(i)] =
          i < p ? static_cast<int>(ordinary.size())
                : (i == p ? static_cast<int>(special_list.size()) : g.order());
    }
    bool any_empty = false;
    for (int r : radix) {
      any_empty |= r == 0;
    }
    if (any_empty) {
      continue;
    }
    std::vector<int> digit(static_cast<std::size_t>(arity), 0);
    for (;;) {
      for (int i = 0; i < arity; ++i) {
        const int d = digit[static_cast<std::size_t>(i)];
        args[static_cast<std::size_t>(i)] =
            i < p ? ordinary[static_cast<std::size_t>(d)]
                  : (i == p ? special_list[static_cast<std::size_t>(d)] : d);
      }
      if (!visit(args)) {
        return false;
      }
      int i = arity - 1;
      while (i >= 0 && ++digit[static_cast<std::size_t>(i)] ==
                           radix[static_cast<std::size_t>(i)]) {
        digit[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) {
        break;
      }
    }
  }
  return true;
}

}  // namespace detail

/// True when f evaluates to the identity on every tuple that has at least
/// one identity coordinate.  Checked exhaustively.
inline bool is_homogeneous(const FiniteGroup& g, const Monomial& f) {
  ElementSet id_only(g);
  id_only.insert(0);
  return detail::scan_special_slabs(
      g, f.arity(), id_only,
      [&](const std::vector<int>& args) { return evaluate(g, f, args) == 0; });
}

/// True when f evaluates to the identity on every tuple with at least one
/// central coordinate.  Requires f homogeneous and arity >= 2.
inline bool check_central_vanishing(const FiniteGroup& g, const Monomial& f) {
  if (f.arity() < 2) {
    throw ArityMismatch("central vanishing needs arity >= 2");
  }
  if (!is_homogeneous(g, f)) {
    throw NotHomogeneous("central vanishing requested for a non-homogeneous word");
  }
  const ElementSet z = center(g);
  return detail::scan_special_slabs(
      g, f.arity(), z,
      [&](const std::vector<int>& args) { return evaluate(g, f, args) == 0; });
}

/// Arity-1 word expressing `target` as a product of conjugates c g^e c^-1 of
/// the sole argument, with the fewest factors breadth-first search finds.
/// Throws NotInClosure when `target` lies outside the normal closure of `g0`.
inline Monomial conjugate_expression(const FiniteGroup& g, int g0, int target) {
  struct Step {
    int prev;
    int conj;
    int exp;
  };
  std::vector<Step> how(static_cast<std::size_t>(g.order()), Step{-1, -1, 0});
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[0] = 0;
  std::vector<int> queue{0};
  // Factor values c g0^e c^-1; scanning c ascending with e = +1 before -1
  // keeps the reconstruction deterministic.
  std::vector<std::pair<int, std::pair<int, int>>> factors;
  for (int c = 0; c < g.order(); ++c) {
    for (int e : {1, -1}) {
      factors.push_back({g.conjugate(e > 0 ? g0 : g.inv(g0), c), {c, e}});
    }
  }
  for (std::size_t head = 0; head < queue.size() && dist[static_cast<std::size_t>(target)] < 0;
       ++head) {
    const int u = queue[head];
    for (const auto& [value, who] : factors) {
      const int v = g.mul(u, value);
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        how[static_cast<std::size_t>(v)] = Step{u, who.first, who.second};
        queue.push_back(v);
      }
    }
  }
  if (dist[static_cast<std::size_t>(target)] < 0) {
    throw NotInClosure("element " + std::to_string(target) +
                       " is not a product of conjugates of " + std::to_string(g0));
  }
  std::vector<Step> chain;
  for (int v = target; v != 0; v = how[static_cast<std::size_t>(v)].prev) {
    chain.push_back(how[static_cast<std::size_t>(v)]);
  }
  std::vector<Letter> word;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    word.push_back(Letter::constant(it->conj));
    word.push_back(Letter::variable(0, it->exp));
    word.push_back(Letter::constant(g.inv(it->conj)));
  }
  return Monomial(1, word);
}

/// Smallest element index whose normal closure is not nilpotent.
/// Throws GroupIsNilpotent when the whole group is nilpotent.
inline int find_non_nilpotent_generator(const FiniteGroup& g) {
  if (central_series(g).nilpotent) {
    throw GroupIsNilpotent("group " + (g.label().empty() ? "?" : g.label()) +
                           " is nilpotent");
  }
  for (int a = 1; a < g.order(); ++a) {
    ElementSet seed(g);
    seed.insert(a);
    const ElementSet closure = normal_closure(g, seed);
    if (!relative_central_series(g, closure).nilpotent) {
      return a;
    }
  }
  // A finite group with only nilpotent cyclic normal closures is nilpotent.
  throw InternalContradiction("non-nilpotent group with all closures nilpotent");
}

struct WitnessTrace {
  int m = 0;
  int m_prime = 0;
  std::vector<int> a_seq;
  std::vector<int> b_seq;
};

/// Certificate that a group admits a homogeneous arity-2 word fixing a
/// nontrivial element: f(a, b) = b with b != identity.
struct Witness {
  FiniteGroup group;
  int a;
  int b;
  Monomial f;
  WitnessTrace trace;
};

/// Builds a witness for a non-nilpotent group.
///
/// Let A be the normal closure of the smallest element a with non-nilpotent
/// closure and A1 the hypercenter of A.  Starting from the smallest
/// b0 in A - A1, repeatedly pick the smallest a_i in A with [a_i, b_i]
/// outside A1 and set b_{i+1} = [a_i, b_i]; the sequence stays in the finite
/// set A - A1 so some value repeats, say b_m = b_{m'}.  Writing each a_i as a
/// conjugate expression f_i of a, the nested commutator
/// [f_{m'-1}(x), [f_{m'-2}(x), ..., [f_m(x), y]...]] sends (a, b_m) back to
/// b_m and is homogeneous by construction.  All three properties are
/// re-checked before returning.
inline Witness find_witness(const FiniteGroup& g) {
  const int a = find_non_nilpotent_generator(g);
  ElementSet seed(g);
  seed.insert(a);
  const ElementSet closure_a = normal_closure(g, seed);
  const CentralSeriesReport series = relative_central_series(g, closure_a);
  const ElementSet& a1 = series.hypercenter;
  const ElementSet outside = closure_a.minus(a1);
  if (outside.empty()) {
    throw InternalContradiction("non-nilpotent closure equals its hypercenter");
  }
  const auto members = closure_a.to_indices();

  WitnessTrace trace;
  std::unordered_map<int, int> first_seen;
  std::vector<int> b_seq{outside.to_indices().front()};
  std::vector<int> a_seq;
  std::optional<std::pair<int, int>> repeat;
  for (int i = 0; i <= closure_a.count(); ++i) {
    const int b = b_seq.back();
    const auto seen = first_seen.find(b);
    if (seen != first_seen.end()) {
      repeat = {seen->second, i};
      break;
    }
    first_seen.emplace(b, i);
    int ai = -1;
    for (int x : members) {
      if (!a1.contains(commutator(g, x, b))) {
        ai = x;
        break;
      }
    }
    if (ai < 0) {
      throw InternalContradiction("element outside the hypercenter commutes into it");
    }
    a_seq.push_back(ai);
    b_seq.push_back(commutator(g, ai, b));
  }
  if (!repeat) {
    throw InternalContradiction("no repetition within the pigeonhole bound");
  }
  trace.m = repeat->first;
  trace.m_prime = repeat->second;
  trace.a_seq = a_seq;
  trace.b_seq = b_seq;

  const int b = b_seq[static_cast<std::size_t>(trace.m)];
  Monomial nested(2, {Letter::variable(1, 1)});
  for (int i = trace.m; i < trace.m_prime; ++i) {
    const Monomial fi =
        conjugate_expression(g, a, a_seq[static_cast<std::size_t>(i)]);
    // Re-read the arity-1 expression as an arity-2 word in the first slot.
    Monomial fi2(2, fi.word());
    nested = commutator_word(g, fi2, nested);
  }

  if (b == 0 || evaluate(g, nested, {a, b}) != b || !is_homogeneous(g, nested)) {
    throw InternalContradiction("assembled witness failed verification");
  }
  return Witness{g, a, b, std::move(nested), std::move(trace)};
}

inline constexpr std::uint64_t kDefaultWordCap = 10'000'000;

namespace detail {

// Number of normal-form words of each length up to max_len, where the
// alphabet has n_const constant letters and four variable letters of which
// exactly one is barred after any given variable letter.
inline std::uint64_t count_normal_words(int n_const, int max_len, std::uint64_t cap) {
  // States: last letter was a constant (or none), or one of the 4 variables.
  std::uint64_t total = 0;
  std::vector<std::uint64_t> from_const{1}, from_var(4, 0);
  for (int len = 1; len <= max_len; ++len) {
    std::uint64_t all = from_const[0];
    for (auto v : from_var) {
      all += v;
    }
    std::vector<std::uint64_t> nf_var(4, 0);
    for (int v = 0; v < 4; ++v) {
      nf_var[static_cast<std::size_t>(v)] =
          all - from_var[static_cast<std::size_t>(v ^ 1)];
    }
    const std::uint64_t nf_const = all * static_cast<std::uint64_t>(n_const);
    from_const[0] = nf_const;
    from_var = nf_var;
    std::uint64_t level = nf_const;
    for (auto v : nf_var) {
      level += v;
    }
    total += level;
    if (total > cap) {
      return total;
    }
  }
  return total;
}

}  // namespace detail

/// Exhaustively verifies that no arity-2 normal-form word of length at most
/// `max_len` is homogeneous and fixes some b != identity; true when none is.
/// Throws SearchSpaceTooLarge when the number of candidate words exceeds
/// `word_cap`.
inline bool exhaust_no_witness(const FiniteGroup& g, int max_len,
                               std::uint64_t word_cap = kDefaultWordCap) {
  const int n_const = g.order() - 1;
  if (detail::count_normal_words(n_const, max_len, word_cap) > word_cap) {
    throw SearchSpaceTooLarge("more than " + std::to_string(word_cap) +
                              " words of length up to " + std::to_string(max_len));
  }
  // Letters: constants 1..order-1 then the four variable letters, encoded so
  // that letter x^e and its inverse differ in the lowest bit.
  std::vector<Letter> alphabet;
  for (int c = 1; c < g.order(); ++c) {
    alphabet.push_back(Letter::constant(c));
  }
  for (int v = 0; v < 2; ++v) {
    alphabet.push_back(Letter::variable(v, 1));
    alphabet.push_back(Letter::variable(v, -1));
  }

  std::vector<Letter> word;
  bool ok = true;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!ok) {
      return;
    }
    if (!word.empty()) {
      const Monomial f(2, word);
      if (f.length() == word.size() && is_homogeneous(g, f)) {
        for (int aa = 0; aa < g.order() && ok; ++aa) {
          for (int bb = 1; bb < g.order(); ++bb) {
            if (evaluate(g, f, {aa, bb}) == bb) {
              ok = false;
              break;
            }
          }
        }
      }
    }
    if (remaining == 0 || !ok) {
      return;
    }
    for (const Letter& l : alphabet) {
      if (!word.empty() && !l.is_const) {
        const Letter& top = word.back();
        if (!top.is_const && top.var == l.var && top.exp == -l.exp) {
          continue;  // would cancel, not in normal form
        }
      }
      word.push_back(l);
      self(self, remaining - 1);
      word.pop_back();
    }
  };
  rec(rec, max_len);
  return ok;
}

}  // namespace sbg
