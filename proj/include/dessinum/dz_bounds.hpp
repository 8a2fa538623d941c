#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dessinum/weighted_tree.hpp"

namespace dessinum {

enum class Regime { Main, Weak };

std::string regime_name(Regime r);

/// Minimum degree of R = P - Q for polynomials with root multiplicities (alpha, beta).
struct BoundReport {
  Weight n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  Weight d = 1;
  Regime regime = Regime::Main;
  std::int64_t min_deg_R = 0;
};

BoundReport min_deg_R(const Partition& alpha, const Partition& beta);
BoundReport min_deg_R(const Passport& passport);

/// p + q <= n/d + 1.
bool is_realizable_as_tree(const Passport& passport);

/// Bicolored plane forest: a rotation system that need not be connected.
struct Forest {
  std::vector<Color> colors;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotations;

  int add_vertex(Color c);
  int add_edge(int black, int white, Weight w);
  /// Copies `tree` in; returns the offset added to its edge indices.
  int add_tree(const WeightedTree& tree);

  /// Component index of every vertex; components numbered by smallest vertex.
  std::vector<int> component_of_vertices() const;
  int component_count() const;
  /// Components as trees, in component order; vertex and edge order preserved.
  std::vector<WeightedTree> trees() const;
};

/// Forest whose black and white degree multisets are the passport's.
/// Equal parts are joined first; otherwise the largest black and white parts are
/// joined by an edge of the smaller weight and the larger part keeps the rest.
Forest construct_forest_raw(const Passport& passport);
std::vector<WeightedTree> construct_forest(const Passport& passport);

/// Replaces edge e1 (weight s) and edge e2 (weight u > s), which must lie in
/// different components, by the path x1 -(s)- y2 -(u-s)- x2 -(s)- y1.
/// Edge e1 becomes x1-y2, e2 becomes the middle edge and the returned new
/// edge is x2-y1; each new edge sits right after the middle edge (ccw).
int stitch_edges(Forest& forest, int e1, int e2);

/// One tree with exactly this passport; throws NotRealizable otherwise.
WeightedTree construct_witness(const Passport& passport);

}  // namespace dessinum
