#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"
#include "dessinum/surgery.hpp"
#include "dessinum/tree_code.hpp"
#include "dessinum/unitrees.hpp"

using namespace dessinum;

TEST_CASE("family names") {
  CHECK(all_families().size() == 23);
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("Z"), ParseError);
  CHECK(is_sporadic(Family::K));
  CHECK_FALSE(is_sporadic(Family::J));
}

TEST_CASE("match_family") {
  const auto a = match_family(make_star(Color::Black, std::vector<Weight>{2, 2, 2, 5}));
  REQUIRE(a);
  CHECK(a->family == Family::A);

  const auto o = enumerate_passport(Passport::parse("5^4|2^10"));
  REQUIRE(o.size() == 1);
  const auto tag = match_family(o.front());
  REQUIRE(tag);
  CHECK(tag->family == Family::O);

  for (const auto& t : enumerate_passport(Passport::parse("7 1|2^3 1^2"))) CHECK_FALSE(match_family(t));
}

TEST_CASE("is_unitree_bruteforce") {
  CHECK(is_unitree_bruteforce(Passport::parse("5^4|2^10")));
  CHECK_FALSE(is_unitree_bruteforce(Passport::parse("7 1|2^3 1^2")));
  CHECK(is_unitree_bruteforce(Passport::parse("9|1^9")));
  CHECK_FALSE(is_unitree_bruteforce(Passport::parse("4 2|2^3")));
}

TEST_CASE("sporadic trees are unitrees with the expected diameters") {
  const std::map<Family, int> diam{{Family::K, 5}, {Family::L, 6}, {Family::M, 6}, {Family::N, 6}, {Family::O, 6},
                                   {Family::P, 6}, {Family::Q, 8}, {Family::R, 8}, {Family::S, 8}, {Family::T, 10}};
  for (const auto& [f, d] : diam) {
    const WeightedTree t = family_member(f);
    CHECK(diameter(t) == d);
    CHECK(is_unitree_bruteforce(passport_of(t)));
    const auto tag = match_family(t);
    REQUIRE(tag);
    CHECK(tag->family == f);
  }
}

TEST_CASE("every family member up to weight 10 is a unitree and is matched") {
  for (const FamilyMember& m : family_members(10)) {
    CAPTURE(family_name(m.family));
    CHECK(is_unitree_bruteforce(passport_of(m.tree)));
    CHECK(match_family(m.tree).has_value());
  }
}

TEST_CASE("matching ignores colors and scaling") {
  for (const FamilyMember& m : family_members(8)) {
    const auto tag = match_family(m.tree);
    REQUIRE(tag);
    const auto swapped = match_family(color_swap(m.tree));
    const auto scaled = match_family(scale_weights(m.tree, 3));
    REQUIRE(swapped);
    REQUIRE(scaled);
    CHECK(swapped->family == tag->family);
    CHECK(scaled->family == tag->family);
    CHECK(scaled->scale == 3 * tag->scale);
  }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(family_member(Family::G, {{"k", 2}, {"m", 2}}), InvalidInput);
  CHECK_THROWS_AS(family_member(Family::A, {{"s", 1}}), InvalidInput);
}

TEST_CASE("catalog") {
  const auto cat = family_catalog();
  CHECK(cat.size() == 23);
  for (const CatalogEntry& e : cat) {
    CHECK_FALSE(e.description.empty());
    CHECK_FALSE(e.examples.empty());
    for (const TreeCode& c : e.examples) {
      const WeightedTree t = tree_from_code(c);
      CHECK(is_unitree_bruteforce(passport_of(t)));
      const auto tag = match_family(t);
      REQUIRE(tag);
    }
  }
}

TEST_CASE("catalog data file matches the code") {
  std::ifstream in(DESSINUM_CATALOG_FILE);
  REQUIRE(in);
  const auto data = nlohmann::json::parse(in);
  const auto cat = family_catalog();
  REQUIRE(data.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(data[i]["family"] == family_name(cat[i].family));
    CHECK(data[i]["parameters"] == cat[i].parameters);
    CHECK(data[i]["description"] == cat[i].description);
    REQUIRE(data[i]["examples"].size() == cat[i].examples.size());
    for (std::size_t j = 0; j < cat[i].examples.size(); ++j) CHECK(data[i]["examples"][j] == cat[i].examples[j].to_string());
  }
}
