#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dessinum/partition.hpp"

namespace dessinum {

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr Color opposite(Color c) noexcept { return c == Color::Black ? Color::White : Color::Black; }
constexpr char color_letter(Color c) noexcept { return c == Color::Black ? 'B' : 'W'; }

struct Edge {
  int black = -1;
  int white = -1;
  Weight weight = 1;
};

/// Bicolored plane tree with positive integral edge weights.
///
/// The plane structure is a rotation system: for each vertex, the incident
/// edges in counterclockwise order. Instances are immutable and validated on
/// construction (connected, acyclic, properly colored, at least one edge).
class WeightedTree {
 public:
  WeightedTree(std::vector<Color> colors, std::vector<Edge> edges, std::vector<std::vector<int>> rotations);

  int vertex_count() const noexcept { return static_cast<int>(colors_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  Color color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  Weight weight(int e) const { return edge(e).weight; }
  std::span<const int> rotation(int v) const { return rotations_[static_cast<std::size_t>(v)]; }

  /// Endpoint of edge `e` that is not `v`.
  int opposite_end(int e, int v) const;
  /// Endpoint of edge `e` with color `c`.
  int endpoint(int e, Color c) const { return c == Color::Black ? edge(e).black : edge(e).white; }

  /// Index of `e` in rotation(v).
  std::size_t position(int v, int e) const;
  int ccw_next(int v, int e) const;
  int cw_next(int v, int e) const;

  Weight degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  Weight total_weight() const noexcept { return total_; }
  bool is_leaf(int v) const { return rotation(v).size() == 1; }

  const std::vector<Color>& colors() const noexcept { return colors_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<int>>& rotations() const noexcept { return rotations_; }

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotations_;
  std::vector<std::size_t> pos_black_;  // index of each edge in its black endpoint's rotation
  std::vector<std::size_t> pos_white_;
  std::vector<Weight> degrees_;
  Weight total_ = 0;
};

/// Incremental construction; new edges are appended at the counterclockwise end
/// of both endpoints' rotations.
class TreeBuilder {
 public:
  int add_vertex(Color c);
  /// Joins `u` and `v` (opposite colors) with an edge of weight `w`.
  int add_edge(int u, int v, Weight w);
  /// Adds a fresh vertex of the opposite color hanging from `u`.
  int add_child(int u, Weight w);
  WeightedTree build() const;

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotations_;
};

Passport passport_of(const WeightedTree& tree);

/// Face partition (n - r, 1^r) implied by a passport; throws NegativeR if r < 0.
Partition face_partition(const Passport& passport);

/// Multiset of edge weights.
Partition weight_distribution(const WeightedTree& tree);

/// Number of edges on a longest path.
int diameter(const WeightedTree& tree);

/// Vertices left after repeatedly stripping leaves: one vertex or the two ends of one edge.
std::vector<int> tree_center(const WeightedTree& tree);

/// Unweighted distances from `source`.
std::vector<int> distances_from(const WeightedTree& tree, int source);

/// Star: one black (or white) vertex with `leaf_weights` in counterclockwise order.
WeightedTree make_star(Color center, std::span<const Weight> leaf_weights);

/// Path whose edges carry `weights` in order, starting at a vertex of color `start`.
WeightedTree make_path(Color start, std::span<const Weight> weights);

}  // namespace dessinum
