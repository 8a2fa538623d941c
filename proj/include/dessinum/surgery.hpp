#pragma once

#include <array>
#include <random>
#include <vector>

#include "dessinum/weighted_tree.hpp"

namespace dessinum {

/// Same plane tree with black and white exchanged.
WeightedTree color_swap(const WeightedTree& tree);

/// Mirror image: every rotation reversed.
WeightedTree reflect(const WeightedTree& tree);

WeightedTree scale_weights(const WeightedTree& tree, Weight d);

struct Reduced {
  WeightedTree tree;
  Weight d;
};

/// Divides all weights by their gcd.
Reduced reduce_weights(const WeightedTree& tree);

/// Three consecutive edges e1, e2, e3 of a path v0 - v1 - v2 - v3.
struct PathLocus {
  std::array<int, 3> edges{};
};

/// Weights (s, t, u) with s < u become (s, u - s, s + t); the branches hanging
/// at v1 and v3 change places, so the passport is kept. Edge indices refer to
/// the tree as given. Throws NotApplicable if s >= u or the edges are not a path.
WeightedTree weight_exchange_at(const WeightedTree& tree, const PathLocus& locus);

/// Same, with edge indices taken in canonical_form(tree).
WeightedTree weight_exchange(const WeightedTree& tree, const PathLocus& locus);

/// Every applicable locus of `tree` (indices of the tree as given).
std::vector<PathLocus> weight_exchange_loci(const WeightedTree& tree);

struct RipResult {
  WeightedTree first;   // contains the black end of the first side edge
  WeightedTree second;  // contains the black end of the middle edge
  int first_edge = -1;   // the new edge x1-y1 in `first`
  int second_edge = -1;  // the middle edge, now of weight s + t, in `second`
};

/// Cuts the path x1 -(s)- y2 -(t)- x2 -(s)- y1 around the middle edge y2-x2.
/// The side edges default to the ccw successors of the middle edge at y2 and x2.
/// Produces the edges x1-y1 (weight s) and x2-y2 (weight s + t).
RipResult sts_rip_at(const WeightedTree& tree, int middle, int side1 = -1, int side2 = -1);
RipResult sts_rip(const WeightedTree& tree, int middle);

/// Middle edges at which sts_rip_at applies with default sides.
std::vector<int> sts_rip_loci(const WeightedTree& tree);

struct StitchResult {
  WeightedTree tree;
  int middle;  // index of the middle edge of the new path
};

/// Stitches edge e1 of t1 with edge e2 of t2 (weights differ; the lighter one is s).
StitchResult sts_stitch_at(const WeightedTree& t1, int e1, const WeightedTree& t2, int e2);
WeightedTree sts_stitch(const WeightedTree& t1, int e1, const WeightedTree& t2, int e2);

/// Random plane tree of total weight in [1, max_weight]; random colors, shape, order and weights.
WeightedTree random_tree(std::mt19937_64& rng, Weight max_weight);

}  // namespace dessinum
