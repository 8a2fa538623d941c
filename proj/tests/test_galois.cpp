#include <doctest.h>

#include "dessinum/enumeration.hpp"
#include "dessinum/galois.hpp"
#include "dessinum/surgery.hpp"
#include "dessinum/tree_code.hpp"
#include "dessinum/unitrees.hpp"

using namespace dessinum;

TEST_CASE("to_monodromy") {
  for (Weight n = 1; n <= 6; ++n) {
    const MonodromyModel m = to_monodromy(make_path(Color::Black, std::vector<Weight>{n}));
    CHECK(m.a.cycle_type() == Partition({n}));
    CHECK(m.b == m.a.inverse());
    CHECK(m.c.is_identity());
    CHECK(group_report(m).r == n - 1);
  }

  const MonodromyModel wbw = to_monodromy(make_path(Color::White, std::vector<Weight>{1, 1}));
  CHECK(wbw.a.cycle_type() == Partition({2}));
  CHECK(wbw.b.is_identity());
  CHECK(group_report(wbw).order == 2);

  const MonodromyModel published = MonodromyModel::from_pair(Permutation::parse("(1,7,6,5,4,8,3)", 8),
                                                             Permutation::parse("(1,2)(3,8)(6,7)", 8));
  CHECK(published.c == Permutation::parse("(1,2,3,4,5,6)", 8));
  int matches = 0;
  for (const auto& t : enumerate_passport(Passport::parse("7 1|2^3 1^2"))) matches += models_isomorphic(to_monodromy(t), published);
  CHECK(matches == 1);
}

TEST_CASE("group_report") {
  int special = 0, symmetric = 0;
  for (const auto& t : enumerate_passport(Passport::parse("7 1|2^3 1^2"))) {
    const GroupReport g = group_report(to_monodromy(t));
    if (g.order == 336) {
      ++special;
      CHECK(g.primitive);
      CHECK(g.tag == GroupTag::Special);
      CHECK(g.name == "PGL2(7)");
    } else {
      symmetric += g.order == 40320;
    }
  }
  CHECK(special == 1);
  CHECK(symmetric == 5);

  const GroupReport c4 = group_report(to_monodromy(make_path(Color::Black, std::vector<Weight>{4})));
  CHECK(c4.tag == GroupTag::Cyclic);
  CHECK(c4.order == 4);
  CHECK_FALSE(c4.primitive);
  CHECK(c4.block_size == 2);
}

TEST_CASE("is_composition") {
  CHECK(is_composition(family_member(Family::H, {{"k", 2}, {"l", 2}})));
  for (Weight p : {2, 3, 5, 7, 11}) {
    CHECK_FALSE(is_composition(make_star(Color::Black, std::vector<Weight>(static_cast<std::size_t>(p), 1))));
  }
  CHECK(is_composition(make_path(Color::Black, std::vector<Weight>{4})));
  const auto trees = enumerate_passport(Passport::parse("9^5|5^9"));
  CHECK_FALSE(trees.empty());
  for (const auto& t : trees) {
    CHECK(t.edge_count() == 13);
    CHECK_FALSE(is_composition(t));
  }
}

TEST_CASE("self-duality") {
  const auto five = enumerate_passport(Passport::parse("6 1^2|3^2 1^2"));
  REQUIRE(five.size() == 5);
  for (const auto& t : five) CHECK(is_self_dual(t));

  const auto three = enumerate_passport(Passport::parse("5 1^3|5 3"));
  REQUIRE(three.size() == 3);
  int dual = 0;
  for (const auto& t : three) dual += is_self_dual(t);
  CHECK(dual == 1);

  CHECK(is_self_dual(make_path(Color::Black, std::vector<Weight>{1})));
}

TEST_CASE("orbit_report") {
  const OrbitReport flagship = orbit_report(Passport::parse("3^10|2^15"), 2);
  CHECK(flagship.tree_count == 4);
  REQUIRE(flagship.classes.size() == 3);
  int pairs = 0;
  for (const auto& c : flagship.classes) {
    if (c.members.size() == 2) {
      CHECK(c.mirror_pair);
      ++pairs;
    }
  }
  CHECK(pairs == 1);

  const OrbitReport sevens = orbit_report(Passport::parse("7^3|3^7"));
  CHECK(sevens.tree_count == 2);
  CHECK(sevens.classes.size() == 2);

  const OrbitReport star = orbit_report(Passport::parse("6|1^6"));
  CHECK(star.tree_count == 1);
  CHECK(star.classes.size() == 1);

  for (const auto& c : orbit_report(Passport::parse("6 1^2|3^2 1^2")).classes) CHECK_FALSE(c.self_dual_mismatch);
}

TEST_CASE("monodromy properties for n <= 8") {
  for (Weight n = 1; n <= 8; ++n) {
    for (const TreeClass& tc : enumerate_weight(n)) {
      const WeightedTree t = tree_from_code(tc.code);
      const Passport pp = passport_of(t);
      const MonodromyModel m = to_monodromy(t);
      CHECK(m.a.cycle_type() == pp.black());
      CHECK(m.b.cycle_type() == pp.white());
      CHECK(m.c.cycle_type() == face_partition(pp));
      CHECK(m.a.then(m.b).then(m.c).is_identity());
      CHECK(is_transitive(m.generators(), m.n));

      const MonodromyModel dd = dual_model(dual_model(m));
      CHECK(models_isomorphic(dd, m));
      const MonodromyModel d = dual_model(m);
      CHECK(d.a.cycle_type() == m.c.cycle_type());
      CHECK(d.b.cycle_type() == m.b.cycle_type());
      CHECK(d.c.cycle_type() == m.a.cycle_type());

      // A single edge of weight n has extra symmetries in the labelled model.
      if (t.edge_count() >= 2) CHECK(centralizer_order(m.generators()) == tc.automorphisms);
    }
  }
}

TEST_CASE("geometric self-duality implies self-duality") {
  int accepted = 0;
  for (Weight n = 1; n <= 8; ++n) {
    for (const TreeClass& tc : enumerate_weight(n)) {
      const WeightedTree t = tree_from_code(tc.code);
      if (!is_self_dual_geometric(t)) continue;
      ++accepted;
      CHECK(is_self_dual(t));
    }
  }
  CHECK(accepted > 0);
}
