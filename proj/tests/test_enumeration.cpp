#include <doctest.h>

#include "dessinum/counting.hpp"
#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"

using namespace dessinum;

TEST_CASE("enumerate_passport") {
  for (Weight n = 1; n <= 9; ++n) {
    const Passport star(Partition({n}), Partition(std::vector<Weight>(static_cast<std::size_t>(n), 1)));
    CHECK(enumerate_passport(star).size() == 1);
  }
  CHECK(enumerate_passport(Passport::parse("7 1|2^3 1^2")).size() == 6);
  CHECK(enumerate_passport(Passport::parse("7^3|3^7")).size() == 2);
  CHECK(enumerate_passport(Passport::parse("4 2|2^3")).empty());
}

TEST_CASE("output does not depend on the number of workers") {
  const Passport p = Passport::parse("3^6|2^9");
  const auto one = enumerate_classes(p, {0, 1});
  const auto many = enumerate_classes(p, {0, 4});
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].code == many[i].code);
    CHECK(one[i].automorphisms == many[i].automorphisms);
  }
  CHECK(enumerate_weight(6, {0, 1}).size() == enumerate_weight(6, {0, 3}).size());
}

TEST_CASE("limit") {
  CHECK(enumerate_classes(Passport::parse("7 1|2^3 1^2"), {2, 4}).size() == 2);
  CHECK(count_classes(Passport::parse("7 1|2^3 1^2"), 2) == 2);
  CHECK(count_classes(Passport::parse("7 1|2^3 1^2")) == 6);
}

TEST_CASE("count_rooted") {
  CHECK(count_rooted(0) == 1);
  CHECK(count_rooted(1) == 1);
  CHECK(count_rooted(4) == 36);
  CHECK(count_rooted(8) == 9285);
  const auto series = count_rooted_series(8);
  REQUIRE(series.size() == 9);
  CHECK(series[5] == 137);
}

TEST_CASE("count_rooted_by_edges") {
  CHECK(count_rooted_by_edges(4, 2) == 6);
  CHECK(count_rooted_by_edges(4, 4) == 14);
  for (long n = 1; n <= 10; ++n) CHECK(count_rooted_by_edges(n, 1) == 1);
}

TEST_CASE("mass_count") {
  CHECK(mass_count(1) == 1);
  CHECK(mass_count(4) == mpq_class(25, 2));
  mpq_class sum = 0;
  for (const auto& c : enumerate_weight(7)) sum += mpq_class(1, c.automorphisms);
  sum.canonicalize();
  CHECK(sum == mass_count(7));
}

TEST_CASE("gj_count") {
  for (Weight n = 1; n <= 9; ++n) {
    CHECK(gj_count({Partition({n}), Partition(std::vector<Weight>(static_cast<std::size_t>(n), 1))}) ==
          mpq_class(1, n));
  }
  CHECK(gj_count({Partition::parse("2 2"), Partition::parse("2 1 1")}) == mpq_class(1, 2));
  CHECK(gj_count({Partition::parse("3 2 1^2"), Partition::parse("2^2 1^3"), Partition::parse("2 1^5")}) == 42);
}

TEST_CASE("asymptotics") {
  CHECK(std::abs(rooted_asymptotic_ratio(200) - 1.0) < 0.02);
}
