#include <doctest.h>

#include <set>

#include "dessinum/dz_bounds.hpp"
#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"

using namespace dessinum;

TEST_CASE("min_deg_R") {
  const BoundReport k1 = min_deg_R(Passport::parse("3 3|2 2 2"));
  CHECK(k1.regime == Regime::Main);
  CHECK(k1.min_deg_R == 2);
  const BoundReport weak = min_deg_R(Passport::parse("4 2|2^3"));
  CHECK(weak.regime == Regime::Weak);
  CHECK(weak.min_deg_R == 3);
  CHECK(weak.d == 2);
  CHECK(regime_name(weak.regime) == "WEAK");
  const BoundReport one = min_deg_R(Passport::parse("1|1"));
  CHECK(one.regime == Regime::Main);
  CHECK(one.min_deg_R == 0);
}

TEST_CASE("is_realizable_as_tree") {
  CHECK_FALSE(is_realizable_as_tree(Passport::parse("4 2|2^3")));
  CHECK(is_realizable_as_tree(Passport::parse("3 3|2 2 2")));
  CHECK(is_realizable_as_tree(Passport::parse("2|1 1")));
}

TEST_CASE("construct_witness") {
  const WeightedTree single = construct_witness(Passport::parse("1|1"));
  CHECK(single.edge_count() == 1);
  CHECK(single.weight(0) == 1);
  CHECK(passport_of(construct_witness(Passport::parse("3 3|2 2 2"))) == Passport::parse("3 3|2 2 2"));
  CHECK_THROWS_AS(construct_witness(Passport::parse("4 2|2^3")), NotRealizable);
}

TEST_CASE("construct_forest") {
  const auto two = construct_forest(Passport::parse("2 2|2 2"));
  REQUIRE(two.size() == 2);
  for (const auto& t : two) {
    CHECK(t.edge_count() == 1);
    CHECK(t.weight(0) == 2);
  }

  const auto weak = construct_forest(Passport::parse("4 2|2^3"));
  CHECK(weak.size() == 2);
  for (const auto& t : weak) {
    for (int e = 0; e < t.edge_count(); ++e) CHECK(t.weight(e) % 2 == 0);
  }

  Forest f = construct_forest_raw(Passport::parse("3 3|2 2 2"));
  std::multiset<Weight> before_b, before_w;
  auto degrees = [](const Forest& g, Color c) {
    std::multiset<Weight> out;
    for (std::size_t v = 0; v < g.colors.size(); ++v) {
      if (g.colors[v] != c) continue;
      Weight d = 0;
      for (int e : g.rotations[v]) d += g.edges[static_cast<std::size_t>(e)].weight;
      out.insert(d);
    }
    return out;
  };
  before_b = degrees(f, Color::Black);
  before_w = degrees(f, Color::White);
  while (f.component_count() > 1) {
    const int count = f.component_count();
    // Any pair of edges with different weights in different components.
    const auto comp = f.component_of_vertices();
    int e1 = -1, e2 = -1;
    for (std::size_t a = 0; a < f.edges.size() && e1 < 0; ++a) {
      for (std::size_t b = 0; b < f.edges.size(); ++b) {
        const auto& x = f.edges[a];
        const auto& y = f.edges[b];
        if (x.weight < y.weight && comp[static_cast<std::size_t>(x.black)] != comp[static_cast<std::size_t>(y.black)]) {
          e1 = static_cast<int>(a);
          e2 = static_cast<int>(b);
          break;
        }
      }
    }
    REQUIRE(e1 >= 0);
    const int added = stitch_edges(f, e1, e2);
    CHECK(f.component_count() == count - 1);
    CHECK(f.edges[static_cast<std::size_t>(added)].weight == f.edges[static_cast<std::size_t>(e1)].weight);
    CHECK(degrees(f, Color::Black) == before_b);
    CHECK(degrees(f, Color::White) == before_w);
  }
  CHECK(passport_of(f.trees().front()) == Passport::parse("3 3|2 2 2"));
}

TEST_CASE("MAIN regime: the bound equals r") {
  for (Weight n = 1; n <= 8; ++n) {
    for (const Passport& p : passports_of_weight(n)) {
      if (!is_realizable_as_tree(p)) continue;
      const BoundReport r = min_deg_R(p);
      if (r.regime != Regime::Main) continue;
      CHECK(r.min_deg_R == p.r());
      const WeightedTree t = construct_witness(p);
      Weight excess = 0;
      for (int e = 0; e < t.edge_count(); ++e) excess += t.weight(e) - 1;
      CHECK(excess == r.min_deg_R);
    }
  }
}

TEST_CASE("realizability agrees with enumeration for n <= 7") {
  for (Weight n = 1; n <= 7; ++n) {
    for (const Passport& p : passports_of_weight(n)) {
      const bool real = is_realizable_as_tree(p);
      CHECK((count_classes(p, 1) > 0) == real);
      if (real) {
        CHECK(passport_of(construct_witness(p)) == p);
      } else {
        CHECK_THROWS_AS(construct_witness(p), NotRealizable);
      }
    }
  }
}
