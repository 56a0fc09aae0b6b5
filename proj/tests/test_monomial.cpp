#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "sbg/catalog.hpp"
#include "sbg/monomial.hpp"

using namespace sbg;

namespace {

Monomial var_x() { return Monomial(2, {Letter::variable(0, 1)}); }
Monomial var_y() { return Monomial(2, {Letter::variable(1, 1)}); }

}  // namespace

TEST_CASE("words are kept in normal form") {
  const FiniteGroup z4 = cyclic_group(4, "Z/4");

  const Monomial cancel(1, {Letter::variable(0, 1), Letter::variable(0, -1)});
  CHECK(cancel.length() == 0);

  const Monomial drop(1, {Letter::constant(0), Letter::variable(0, 1), Letter::constant(0)});
  CHECK(drop.length() == 1);

  // Cancellation cascades through letters exposed by earlier cancellations.
  const Monomial cascade(1, {Letter::variable(0, 1), Letter::variable(0, 1),
                             Letter::variable(0, -1), Letter::variable(0, -1)});
  CHECK(cascade.length() == 0);

  // A constant between the pair blocks cancellation.
  const Monomial blocked(1, {Letter::variable(0, 1), Letter::constant(2),
                             Letter::variable(0, -1)});
  CHECK(blocked.length() == 3);

  const Monomial w(1, {Letter::constant(3), Letter::variable(0, -1)});
  const Monomial wi = w.inverse(z4);
  REQUIRE(wi.length() == 2);
  CHECK(wi.word()[0] == Letter::variable(0, 1));
  CHECK(wi.word()[1] == Letter::constant(1));
  // Inverting twice gives the original word back.
  CHECK(wi.inverse(z4) == w);

  CHECK_THROWS_AS(Monomial(-1, {}), ArityMismatch);
}

TEST_CASE("evaluation folds the word left to right") {
  const FiniteGroup g = FiniteGroup::from_table(
      oracles::table_from_perms(oracles::s3_elements()), "S3-fixed");

  const Monomial w(2, {Letter::constant(4), Letter::variable(0, 1),
                       Letter::variable(1, -1)});
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      CHECK(evaluate(g, w, {a, b}) == g.mul(g.mul(4, a), g.inv(b)));
    }
  }

  CHECK(evaluate(g, Monomial(0, {Letter::constant(5)}), {}) == 5);
  CHECK_THROWS_AS(evaluate(g, w, {1}), ArityMismatch);
  CHECK_THROWS_AS(concat(g, w, Monomial(1, {Letter::variable(0, 1)})), ArityMismatch);
}

TEST_CASE("commutator words evaluate to group commutators") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& g = cat.find("S4").group;
  const Monomial comm = commutator_word(g, var_x(), var_y());
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      CHECK(evaluate(g, comm, {a, b}) == oracles::commutator(g, a, b));
    }
  }
}

TEST_CASE("homogeneity is decided over all identity slabs") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;

  CHECK(is_homogeneous(s3, commutator_word(s3, var_x(), var_y())));
  CHECK(is_homogeneous(s3, Monomial(2, {})));
  // Single variables are homogeneous only in the trivial group.
  CHECK_FALSE(is_homogeneous(s3, var_x()));
  CHECK_FALSE(is_homogeneous(s3, concat(s3, var_x(), var_y())));
  CHECK(is_homogeneous(cyclic_group(1), Monomial(2, {Letter::variable(0, 1)})));
}

TEST_CASE("homogeneous words vanish on central coordinates") {
  const Catalog cat = Catalog::builtin();
  for (const auto label : {"S3", "Q8", "D4", "A4"}) {
    const FiniteGroup& g = cat.find(label).group;
    INFO(label);
    CHECK(check_central_vanishing(g, commutator_word(g, var_x(), var_y())));
  }

  const FiniteGroup& s3 = cat.find("S3").group;
  CHECK_THROWS_AS(check_central_vanishing(s3, Monomial(1, {Letter::variable(0, 1)})),
                  ArityMismatch);
  CHECK_THROWS_AS(check_central_vanishing(s3, concat(s3, var_x(), var_y())),
                  NotHomogeneous);
}

TEST_CASE("conjugate expressions reach exactly the normal closure") {
  const FiniteGroup z6 = cyclic_group(6, "Z/6");
  // The normal closure of 2 in Z/6 is {0, 2, 4}.
  for (int target : {0, 2, 4}) {
    const Monomial e = conjugate_expression(z6, 2, target);
    CHECK(e.arity() == 1);
    CHECK(evaluate(z6, e, {2}) == target);
  }
  CHECK_THROWS_AS(conjugate_expression(z6, 2, 1), NotInClosure);

  const Catalog cat = Catalog::builtin();
  const FiniteGroup& q8 = cat.find("Q8").group;
  // Conjugates of i stay inside {1, -1, i, -i}; j is out of reach.
  CHECK_THROWS_AS(conjugate_expression(q8, 2, 4), NotInClosure);

  const FiniteGroup& s4 = cat.find("S4").group;
  for (int target = 0; target < s4.order(); ++target) {
    CHECK(evaluate(s4, conjugate_expression(s4, 1, target), {1}) == target);
  }
}

TEST_CASE("witness for the smallest non-nilpotent catalog group") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;

  const Witness w = find_witness(s3);
  CHECK(w.a == 1);
  CHECK(w.b == 2);
  // b is a 3-cycle: it has order three.
  CHECK(s3.mul(w.b, w.b) != 0);
  CHECK(s3.mul(w.b, s3.mul(w.b, w.b)) == 0);

  CHECK(w.trace.m == 1);
  CHECK(w.trace.m_prime == 3);
  CHECK(w.trace.a_seq == std::vector<int>{2, 1, 1});
  CHECK(w.trace.b_seq == std::vector<int>{1, 2, 5, 2});

  CHECK(w.f.arity() == 2);
  CHECK(w.f.length() == 8);
  CHECK(evaluate(s3, w.f, {w.a, w.b}) == w.b);
  CHECK(is_homogeneous(s3, w.f));

  // The walk is deterministic.
  const Witness again = find_witness(s3);
  CHECK(again.a == w.a);
  CHECK(again.b == w.b);
  CHECK(again.f == w.f);
}

TEST_CASE("witnesses verify on every non-nilpotent catalog group") {
  const Catalog cat = Catalog::builtin();
  for (const auto label : {"S3", "D5", "A4", "S4", "A5", "SL(2,3)", "S3xZ/2"}) {
    INFO(label);
    const FiniteGroup& g = cat.find(label).group;
    const Witness w = find_witness(g);
    CHECK(w.b != 0);
    CHECK(evaluate(g, w.f, {w.a, w.b}) == w.b);
    CHECK(is_homogeneous(g, w.f));
    CHECK(w.trace.b_seq[static_cast<std::size_t>(w.trace.m)] == w.b);
    CHECK(w.trace.b_seq[static_cast<std::size_t>(w.trace.m_prime)] == w.b);
  }
}

TEST_CASE("nilpotent groups admit no witness") {
  const Catalog cat = Catalog::builtin();
  for (const auto label : {"Z/2", "Z/12", "Q8", "D4"}) {
    INFO(label);
    CHECK_THROWS_AS(find_witness(cat.find(label).group), GroupIsNilpotent);
  }
}

TEST_CASE("exhaustive word search finds no witness in nilpotent groups") {
  const Catalog cat = Catalog::builtin();
  CHECK(exhaust_no_witness(cyclic_group(4), 5));
  CHECK(exhaust_no_witness(cat.find("Q8").group, 3));

  // The cap counts candidate words before the search starts.
  CHECK_THROWS_AS(exhaust_no_witness(cat.find("S4").group, 6, 1000),
                  SearchSpaceTooLarge);
}

TEST_CASE("the word search does find witnesses where they exist") {
  // S3 has the nested commutator witness at length 8, but already the
  // four-letter word y^-1 x y x^-1 fixes a 3-cycle b when x inverts it by
  // conjugation, so the exhaustive search must report a hit.
  const Catalog cat = Catalog::builtin();
  CHECK_FALSE(exhaust_no_witness(cat.find("S3").group, 4));
}
