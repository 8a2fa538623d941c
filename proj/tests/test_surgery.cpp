#include <doctest.h>

#include <map>
#include <set>
#include <random>

#include "dessinum/errors.hpp"
#include "dessinum/surgery.hpp"
#include "dessinum/tree_code.hpp"
#include "dessinum/unitrees.hpp"

using namespace dessinum;

namespace {

WeightedTree path(Color start, std::vector<Weight> w) { return make_path(start, w); }

std::multiset<Weight> degrees(const std::vector<WeightedTree>& trees, Color c) {
  std::multiset<Weight> out;
  for (const auto& t : trees) {
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (t.color(v) == c) out.insert(t.degree(v));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("color_swap") {
  const WeightedTree e = path(Color::Black, {1});
  CHECK(is_isomorphic(color_swap(e), e));
  CHECK(passport_of(color_swap(make_star(Color::Black, std::vector<Weight>{1, 1, 1, 1}))) == Passport::parse("1^4|4"));
  const WeightedTree chain = family_member(Family::B, {{"s", 1}, {"t", 2}, {"length", 5}});
  CHECK(canonical_code(color_swap(chain)) == canonical_code(chain));
}

TEST_CASE("scale and reduce") {
  const WeightedTree five = scale_weights(path(Color::Black, {1}), 5);
  CHECK(five.weight(0) == 5);

  const Reduced r = reduce_weights(path(Color::White, {2, 2, 2}));
  CHECK(r.d == 2);
  CHECK(is_isomorphic(r.tree, path(Color::White, {1, 1, 1})));

  const WeightedTree mixed = path(Color::Black, {2, 3});
  const Reduced same = reduce_weights(mixed);
  CHECK(same.d == 1);
  CHECK(is_isomorphic(same.tree, mixed));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const WeightedTree t = random_tree(rng, 12);
    const Reduced base = reduce_weights(t);
    const Reduced back = reduce_weights(scale_weights(t, 3));
    CHECK(back.d == 3 * base.d);
    CHECK(is_isomorphic(back.tree, base.tree));
  }
}

TEST_CASE("weight_exchange") {
  const WeightedTree p = path(Color::Black, {1, 2, 4});
  const WeightedTree q = weight_exchange_at(p, PathLocus{{0, 1, 2}});
  CHECK(is_isomorphic(q, path(Color::Black, {1, 3, 3})));
  CHECK(passport_of(q) == passport_of(p));
  CHECK(weight_distribution(q) != weight_distribution(p));

  const WeightedTree fixed = path(Color::Black, {1, 2, 3});
  const WeightedTree same = weight_exchange_at(fixed, PathLocus{{0, 1, 2}});
  CHECK(weight_distribution(same) == weight_distribution(fixed));

  CHECK_THROWS_AS(weight_exchange_at(path(Color::Black, {2, 1, 2}), PathLocus{{0, 1, 2}}), NotApplicable);
}

TEST_CASE("rip and stitch") {
  const WeightedTree p = path(Color::Black, {1, 2, 1});
  const RipResult r = sts_rip_at(p, 1);
  std::multiset<Weight> weights{r.first.weight(0), r.second.weight(0)};
  CHECK(r.first.edge_count() == 1);
  CHECK(r.second.edge_count() == 1);
  CHECK(weights == std::multiset<Weight>{1, 3});
  CHECK(degrees({r.first, r.second}, Color::Black) == degrees({p}, Color::Black));
  CHECK(degrees({r.first, r.second}, Color::White) == degrees({p}, Color::White));
  CHECK(is_isomorphic(sts_stitch_at(r.first, r.first_edge, r.second, r.second_edge).tree, p));

  const WeightedTree two = path(Color::Black, {2});
  const WeightedTree five = path(Color::Black, {5});
  CHECK(is_isomorphic(sts_stitch(two, 0, five, 0), path(Color::Black, {2, 3, 2})));
  CHECK_THROWS_AS(sts_stitch(two, 0, two, 0), NotApplicable);
}

TEST_CASE("random round trips keep passports") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const WeightedTree t = random_tree(rng, 20);
    for (const PathLocus& l : weight_exchange_loci(t)) CHECK(passport_of(weight_exchange_at(t, l)) == passport_of(t));
    for (int mid : sts_rip_loci(t)) {
      const RipResult r = sts_rip_at(t, mid);
      const StitchResult s = sts_stitch_at(r.first, r.first_edge, r.second, r.second_edge);
      CHECK(canonical_code(s.tree) == canonical_code(t));
    }
  }
}
