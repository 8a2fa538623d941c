#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"
#include "dessinum/surgery.hpp"
#include "dessinum/tree_code.hpp"
#include "dessinum/unitrees.hpp"

using namespace dessinum;

namespace {

WeightedTree star(Color center, std::vector<Weight> w) { return make_star(center, w); }
WeightedTree path(Color start, std::vector<Weight> w) { return make_path(start, w); }

}  // namespace

TEST_CASE("passport grammar") {
  CHECK(Passport::parse("7 1|2^3 1^2").to_string() == "7 1|2^3 1^2");
  CHECK(Passport::parse(" 2^3  1 | 7 ").white() == Partition({7}));
  CHECK(Partition::parse("5^2 2^3 1^2").parts() == std::vector<Weight>{5, 5, 2, 2, 2, 1, 1});
  CHECK_THROWS_AS(Passport::parse("4 2"), ParseError);
  CHECK_THROWS_AS(Passport::parse("4 2|2^"), ParseError);
  CHECK_THROWS_AS(Passport::parse("4 2|2^2"), ParseError);
  CHECK_THROWS_AS(Passport::parse("4 0|2^2"), ParseError);
  CHECK_THROWS_AS(Passport::parse("4 2|2^3|1"), ParseError);
}

TEST_CASE("tree code grammar") {
  const TreeCode c = TreeCode::parse("root=B; x2 x1 y1 y2");
  CHECK(c.to_string() == "root=B; x2 x1 y1 y2");
  CHECK_THROWS_AS(TreeCode::parse("x1 y1"), ParseError);
  CHECK_THROWS_AS(TreeCode::parse("root=B; x1 z1"), ParseError);
  CHECK_THROWS_AS(TreeCode::parse("root=B; x0 y0"), ParseError);
  CHECK_THROWS(tree_from_code(TreeCode::parse("root=B; x1 y2")));
  CHECK_THROWS(tree_from_code(TreeCode::parse("root=B; x1 x1 y1")));
}

TEST_CASE("passport_of") {
  CHECK(passport_of(star(Color::Black, {3})) == Passport::parse("3|3"));
  CHECK(passport_of(star(Color::Black, {1, 1, 1, 1})) == Passport::parse("4|1^4"));
}

TEST_CASE("face_partition") {
  CHECK(face_partition(Passport::parse("3 3|2 2 2")) == Partition({4, 1, 1}));
  CHECK(face_partition(Passport::parse("1|1")) == Partition({1}));
  CHECK(face_partition(Passport::parse("5^2 2^3 1^2|7 6 4 1")) == Partition::parse("10 1^8"));
  for (const WeightedTree& t : enumerate_passport(Passport::parse("5^2 2^3 1^2|7 6 4 1"), {1, 1})) {
    CHECK(t.total_weight() == 18);
    CHECK(face_partition(passport_of(t)) == Partition::parse("10 1^8"));
  }
}

TEST_CASE("canonical_code") {
  CHECK(canonical_code(star(Color::Black, {1})).to_string() == "root=B; x1 y1");
  const WeightedTree p = path(Color::Black, {1, 1});
  CHECK(rooted_code(p, 0) == rooted_code(p, 1));

  const auto trees = enumerate_passport(Passport::parse("7 1|2^3 1^2"));
  REQUIRE(trees.size() == 6);
  std::vector<TreeCode> codes;
  for (const auto& t : trees) codes.push_back(canonical_code(t));
  std::sort(codes.begin(), codes.end());
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("is_isomorphic") {
  const auto trees = enumerate_passport(Passport::parse("7 1|2^3 1^2"));
  CHECK(is_isomorphic(trees[0], trees[0]));
  int chiral = 0;
  for (const auto& t : trees) {
    if (automorphism_order(t) == 1 && !is_isomorphic(t, reflect(t))) ++chiral;
  }
  CHECK(chiral > 0);

  const WeightedTree s = star(Color::Black, {2, 1, 1});
  CHECK(is_isomorphic(s, star(Color::Black, {1, 2, 1})));
  CHECK(is_isomorphic(s, star(Color::Black, {1, 1, 2})));
}

TEST_CASE("automorphism_order") {
  CHECK(automorphism_order(star(Color::Black, {2, 2, 2, 2, 2})) == 5);
  CHECK(automorphism_order(family_member(Family::N)) == 3);
  CHECK(automorphism_order(family_member(Family::R)) == 2);
  CHECK(automorphism_order(family_member(Family::B, {{"s", 1}, {"t", 2}, {"length", 5}})) == 1);
  CHECK(automorphism_order(family_member(Family::B, {{"s", 2}, {"t", 3}, {"length", 3}})) == 1);
}

TEST_CASE("diameter") {
  CHECK(diameter(star(Color::White, {1})) == 1);
  CHECK(diameter(family_member(Family::C, {{"s", 1}, {"t", 2}, {"k", 2}, {"l", 3}})) == 3);
  CHECK(diameter(family_member(Family::C, {{"s", 2}, {"t", 1}, {"k", 1}, {"l", 1}})) == 3);
  CHECK(diameter(family_member(Family::H, {{"k", 2}, {"l", 2}})) == 6);
  CHECK(diameter(family_member(Family::H, {{"k", 3}, {"l", 4}})) == 6);
}

TEST_CASE("tree invariants over all trees of weight <= 7") {
  for (Weight n = 1; n <= 7; ++n) {
    for (const TreeClass& c : enumerate_weight(n)) {
      const WeightedTree t = tree_from_code(c.code);
      const Passport pp = passport_of(t);
      CHECK(pp.black().total() == n);
      CHECK(pp.white().total() == n);
      CHECK(t.total_weight() == n);

      Weight excess = 0;
      for (int e = 0; e < t.edge_count(); ++e) excess += t.weight(e) - 1;
      CHECK(excess == pp.r());
      CHECK(static_cast<std::size_t>(t.edge_count()) == pp.p() + pp.q() - 1);

      CHECK(canonical_code(tree_from_code(canonical_code(t))) == canonical_code(t));
      CHECK(canonical_code(t) == c.code);

      int minimal = 0;
      for (int e = 0; e < t.edge_count(); ++e) minimal += rooted_code(t, e, Color::Black) == c.code;
      CHECK(minimal == automorphism_order(t));
      CHECK(t.edge_count() % automorphism_order(t) == 0);

      const auto faces = face_partition(pp).parts();
      CHECK(std::count_if(faces.begin(), faces.end(), [](Weight f) { return f != 1; }) <= 1);
    }
  }
}
