#pragma once

#include <cstddef>
#include <vector>

#include "dessinum/tree_code.hpp"

namespace dessinum {

struct EnumerationOptions {
  /// Stop after this many classes (0 = no limit). A limit forces a single worker.
  std::size_t limit = 0;
  /// Worker threads; the result does not depend on this value.
  int jobs = 1;
};

/// One isomorphism class: its canonical code and automorphism order.
struct TreeClass {
  TreeCode code;
  int automorphisms = 1;
};

/// All isomorphism classes of trees with the given passport, sorted by code.
std::vector<TreeClass> enumerate_classes(const Passport& passport, const EnumerationOptions& options = {});

/// Same, materialized as trees (each in canonical form).
std::vector<WeightedTree> enumerate_passport(const Passport& passport, const EnumerationOptions& options = {});

/// Number of classes, capped at `limit` when limit > 0.
std::size_t count_classes(const Passport& passport, std::size_t limit = 0);

/// All classes of total weight n, over every passport, sorted by code.
std::vector<TreeClass> enumerate_weight(Weight n, const EnumerationOptions& options = {});

}  // namespace dessinum
