#pragma once

#include <cstdint>
#include <string>

#include "dessinum/weighted_tree.hpp"

namespace dessinum {

struct RenderOptions {
  /// Draw only black vertices; every white vertex must have degree 2 and
  /// becomes an edge between its black neighbours (or a loop for a leaf).
  bool implicit_white = false;
  /// Rotates the whole drawing; 0 keeps the first branch pointing right.
  std::uint64_t seed = 0;
};

struct Point {
  double x = 0;
  double y = 0;
};

/// Radial layout around the tree center; branches follow the
/// counterclockwise order and get angles proportional to their leaf counts.
std::vector<Point> radial_layout(const WeightedTree& tree, std::uint64_t seed = 0);

/// Graphviz digraph (edges drawn without arrows) with pinned positions (`neato -n`).
std::string render_dot(const WeightedTree& tree, const RenderOptions& options = {});

/// Standalone SVG document.
std::string render_svg(const WeightedTree& tree, const RenderOptions& options = {});

}  // namespace dessinum
