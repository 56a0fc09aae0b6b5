#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "sbg/catalog.hpp"
#include "sbg/power.hpp"

using namespace sbg;

TEST_CASE("tuple arithmetic and embeddings") {
  const FiniteGroup z4 = cyclic_group(4, "Z/4");

  const ProductElement e = identity_tuple(3);
  CHECK(e.coords == std::vector<int>{0, 0, 0});

  const ProductElement a = embed_xJ(z4, 3, 3, {0, 2});
  CHECK(a.coords == std::vector<int>{3, 0, 3});
  CHECK(embed_mask(z4, 3, 3, 0b101) == a);

  const ProductElement b = embed_xJ(z4, 3, 2, {1});
  CHECK(mul(z4, a, b).coords == std::vector<int>{3, 2, 3});
  CHECK(inverse(z4, a).coords == std::vector<int>{1, 0, 1});
  CHECK(mul(z4, a, inverse(z4, a)) == identity_tuple(3));

  CHECK_THROWS_AS(embed_xJ(z4, 3, 9, {0}), UnknownGroup);
  CHECK_THROWS_AS(embed_xJ(z4, 3, 1, {3}), StateSpaceTooLarge);
  CHECK_THROWS_AS(mul(z4, a, identity_tuple(2)), ArityMismatch);
}

TEST_CASE("mixed-radix state encoding round trips") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;
  const PowerGroup pg(s3, 3);
  REQUIRE(pg.size() == 216);

  for (std::uint64_t s = 0; s < pg.size(); ++s) {
    CHECK(pg.encode(pg.decode(s)) == s);
  }
  // Coordinate 0 is the least significant digit.
  CHECK(pg.encode(embed_xJ(s3, 3, 5, {0})) == 5);
  CHECK(pg.encode(embed_xJ(s3, 3, 1, {2})) == 36);

  const ProductElement u = ProductElement{{1, 2, 3}};
  const ProductElement v = ProductElement{{5, 0, 4}};
  CHECK(pg.decode(pg.mul_states(pg.encode(u), pg.encode(v))) == mul(s3, u, v));
  CHECK(pg.decode(pg.inv_state(pg.encode(u))) == inverse(s3, u));

  CHECK_THROWS_AS(PowerGroup(cat.find("A5").group, 6), StateSpaceTooLarge);
}

TEST_CASE("factor-union generating sets") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;

  const GeneratingSet gens = GeneratingSet::union_of_factors(s3, 2);
  CHECK(gens.power == 2);
  CHECK(gens.members.size() == 10);  // 2 coordinates, 5 non-identity elements

  GeneratingSet dedup;
  dedup.power = 2;
  dedup.add(embed_xJ(s3, 2, 1, {0}));
  dedup.add(embed_xJ(s3, 2, 1, {0}));
  CHECK(dedup.members.size() == 1);
  CHECK_THROWS_AS(dedup.add(identity_tuple(3)), ArityMismatch);
}

TEST_CASE("diameter of small powers with factor-union generators") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;

  const DiameterReport r1 = cayley_diameter(s3, 1, GeneratingSet::union_of_factors(s3, 1));
  CHECK(r1.generates);
  CHECK(r1.diameter == 1);
  CHECK(r1.histogram == std::vector<std::uint64_t>{1, 5});

  const DiameterReport r2 = cayley_diameter(s3, 2, GeneratingSet::union_of_factors(s3, 2));
  CHECK(r2.generates);
  CHECK(r2.diameter == 2);
  CHECK(r2.states_visited == 36);
  // At distance k the support has k coordinates: pick them, then pick any
  // non-identity entry for each.
  CHECK(r2.histogram == std::vector<std::uint64_t>{1, 10, 25});

  const FiniteGroup& a4 = cat.find("A4").group;
  const DiameterReport r3 = cayley_diameter(a4, 2, GeneratingSet::union_of_factors(a4, 2));
  CHECK(r3.diameter == 2);
  CHECK(r3.histogram == std::vector<std::uint64_t>{1, 22, 121});
}

TEST_CASE("diameter reports cover only what the generators reach") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;

  GeneratingSet first_factor;
  first_factor.power = 2;
  for (int x = 1; x < s3.order(); ++x) {
    first_factor.add(embed_xJ(s3, 2, x, {0}));
  }
  const DiameterReport r = cayley_diameter(s3, 2, first_factor);
  CHECK_FALSE(r.generates);
  CHECK(r.states_visited == 6);
  CHECK(r.diameter == 1);

  CHECK_THROWS_AS(cayley_diameter(s3, 3, first_factor), ArityMismatch);
}

TEST_CASE("lifted words act coordinatewise") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;
  const Monomial comm = commutator_word(
      s3, Monomial(2, {Letter::variable(0, 1)}), Monomial(2, {Letter::variable(1, 1)}));
  const LiftedMonomial lifted = lift_monomial(s3, comm, 3);

  const ProductElement u = ProductElement{{1, 2, 4}};
  const ProductElement v = ProductElement{{3, 5, 0}};
  const ProductElement out = lifted({u, v});
  for (int i = 0; i < 3; ++i) {
    CHECK(out.coords[static_cast<std::size_t>(i)] ==
          evaluate(s3, comm, {u.coords[static_cast<std::size_t>(i)],
                              v.coords[static_cast<std::size_t>(i)]}));
  }
  CHECK_THROWS_AS(lifted({u}), ArityMismatch);
}

TEST_CASE("support relations hold for a genuine witness") {
  const Catalog cat = Catalog::builtin();
  const Witness w = find_witness(cat.find("S3").group);

  const RelationsReport r = verify_relations(w, 2);
  CHECK(r.all_passed());
  CHECK(r.eq1.checked == 4);
  CHECK(r.eq2.checked == 16);
  CHECK(r.eq3.checked == 4);
  CHECK(r.eq4.checked == 9);  // pairs of disjoint supports: 3^n
  CHECK_FALSE(r.eq2.counterexample.has_value());

  CHECK_THROWS_AS(verify_relations(w, 13), StateSpaceTooLarge);
  CHECK_THROWS_AS(verify_relations(w, -1), StateSpaceTooLarge);
}

TEST_CASE("support relations catch a bogus witness") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;
  // The plain commutator does not fix b, so equations 2 and 3 must fail.
  const Monomial comm = commutator_word(
      s3, Monomial(2, {Letter::variable(0, 1)}), Monomial(2, {Letter::variable(1, 1)}));
  const Witness fake{s3, 1, 2, comm, {}};

  const RelationsReport r = verify_relations(fake, 1);
  CHECK_FALSE(r.all_passed());
  CHECK(r.eq1.passed);
  CHECK(r.eq4.passed);
  CHECK_FALSE(r.eq2.passed);
  CHECK_FALSE(r.eq3.passed);
  REQUIRE(r.eq2.counterexample.has_value());
  CHECK(r.eq2.counterexample->first == 1);  // J = {0} already disagrees
}

TEST_CASE("closure steps and their cap") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;

  const auto seed = GeneratingSet::union_of_factors(s3, 2).members;
  const auto once = group_closure_step(s3, 2, seed);
  CHECK(once.size() == 36);  // products of the two factors fill the square

  CHECK_THROWS_AS(group_closure_step(s3, 2, seed, 10), SizeCap);

  const auto from_nothing = group_closure_step(s3, 2, {});
  CHECK(from_nothing.size() == 1);  // just the identity
}

TEST_CASE("word metric over the standard generators") {
  const Catalog cat = Catalog::builtin();
  const CatalogEntry& s3 = cat.find("S3");

  const auto dist = word_distances(s3.group, s3.generators);
  CHECK(dist == std::vector<int>{0, 1, 1, 2, 2, 1});

  CHECK(word_ball(s3.group, s3.generators, 1).to_indices() == std::vector<int>{0});
  CHECK(word_ball(s3.group, s3.generators, 2).to_indices() ==
        std::vector<int>{0, 1, 2, 5});
  CHECK(word_ball(s3.group, s3.generators, 3).count() == 6);

  // A 3-cycle alone only generates the alternating subgroup.
  CHECK_THROWS_AS(word_distances(s3.group, {2}), NotGenerating);
  CHECK_THROWS_AS(word_distances(s3.group, {99}), UnknownGroup);
}

TEST_CASE("ball-power implication on small cases") {
  const Catalog cat = Catalog::builtin();
  for (const auto label : {"S3", "A4"}) {
    const CatalogEntry& entry = cat.find(label);
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        INFO(label << " n=" << n << " m=" << m);
        CHECK(check_ball_power(entry.group, entry.generators, n, m));
      }
    }
  }
}

TEST_CASE("exhaustion over a normal target subgroup") {
  const Catalog cat = Catalog::builtin();
  const FiniteGroup& s3 = cat.find("S3").group;
  const ElementSet a3 = derived_subgroup(s3);

  const auto seed = GeneratingSet::union_of_factors(s3, 2).members;
  const ExhaustionResult reached = exhaustion_experiment(s3, 2, seed, a3);
  REQUIRE(reached.steps.has_value());
  CHECK(*reached.steps == 1);
  CHECK(reached.closure_size == 36);

  // A diagonal involution generates a two-element subgroup; tuples over the
  // alternating subgroup stay unreachable and the iteration hits a fixpoint.
  const ExhaustionResult stuck =
      exhaustion_experiment(s3, 2, {ProductElement{{1, 1}}}, a3);
  CHECK_FALSE(stuck.steps.has_value());
  CHECK(stuck.closure_size == 2);

  CHECK_THROWS_AS(exhaustion_experiment(s3, 2, seed, ElementSet::of(s3, {0, 1}), 1000),
                  NotASubgroup);
}
