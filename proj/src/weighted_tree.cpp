#include "dessinum/weighted_tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dessinum/errors.hpp"

namespace dessinum {

WeightedTree::WeightedTree(std::vector<Color> colors, std::vector<Edge> edges, std::vector<std::vector<int>> rotations)
    : colors_(std::move(colors)), edges_(std::move(edges)), rotations_(std::move(rotations)) {
  const auto nv = colors_.size();
  const auto ne = edges_.size();
  if (ne == 0) throw InvalidInput("a tree must have at least one edge");
  if (nv != ne + 1) throw InvalidInput("vertex count must be edge count + 1");
  if (rotations_.size() != nv) throw InvalidInput("one rotation per vertex required");

  pos_black_.assign(ne, static_cast<std::size_t>(-1));
  pos_white_.assign(ne, static_cast<std::size_t>(-1));
  degrees_.assign(nv, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& ed = edges_[e];
    if (ed.weight < 1) throw InvalidInput("edge weights must be positive");
    if (ed.black < 0 || ed.white < 0 || static_cast<std::size_t>(ed.black) >= nv ||
        static_cast<std::size_t>(ed.white) >= nv) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (colors_[static_cast<std::size_t>(ed.black)] != Color::Black ||
        colors_[static_cast<std::size_t>(ed.white)] != Color::White) {
      throw InvalidInput("edge " + std::to_string(e) + " does not join a black and a white vertex");
    }
    total_ += ed.weight;
    degrees_[static_cast<std::size_t>(ed.black)] += ed.weight;
    degrees_[static_cast<std::size_t>(ed.white)] += ed.weight;
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& rot = rotations_[v];
    if (rot.empty()) throw InvalidInput("isolated vertex " + std::to_string(v));
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const int e = rot[k];
      if (e < 0 || static_cast<std::size_t>(e) >= ne) throw InvalidInput("rotation names a missing edge");
      const Edge& ed = edges_[static_cast<std::size_t>(e)];
      auto& slot = colors_[v] == Color::Black ? pos_black_ : pos_white_;
      const int end = colors_[v] == Color::Black ? ed.black : ed.white;
      if (end != static_cast<int>(v) || slot[static_cast<std::size_t>(e)] != static_cast<std::size_t>(-1)) {
        throw InvalidInput("rotation at vertex " + std::to_string(v) + " is inconsistent with the edges");
      }
      slot[static_cast<std::size_t>(e)] = k;
    }
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (pos_black_[e] == static_cast<std::size_t>(-1) || pos_white_[e] == static_cast<std::size_t>(-1)) {
      throw InvalidInput("edge " + std::to_string(e) + " missing from a rotation");
    }
  }
  // Connectivity (with |V| = |E| + 1 this also rules out cycles).
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : rotations_[static_cast<std::size_t>(v)]) {
      const int w = opposite_end(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != nv) throw InvalidInput("graph is not connected");
}

int WeightedTree::opposite_end(int e, int v) const {
  const Edge& ed = edge(e);
  return ed.black == v ? ed.white : ed.black;
}

std::size_t WeightedTree::position(int v, int e) const {
  return color(v) == Color::Black ? pos_black_[static_cast<std::size_t>(e)] : pos_white_[static_cast<std::size_t>(e)];
}

int WeightedTree::ccw_next(int v, int e) const {
  const auto rot = rotation(v);
  return rot[(position(v, e) + 1) % rot.size()];
}

int WeightedTree::cw_next(int v, int e) const {
  const auto rot = rotation(v);
  return rot[(position(v, e) + rot.size() - 1) % rot.size()];
}

int TreeBuilder::add_vertex(Color c) {
  colors_.push_back(c);
  rotations_.emplace_back();
  return static_cast<int>(colors_.size()) - 1;
}

int TreeBuilder::add_edge(int u, int v, Weight w) {
  const Color cu = colors_.at(static_cast<std::size_t>(u));
  const Color cv = colors_.at(static_cast<std::size_t>(v));
  if (cu == cv) throw InvalidInput("edge must join opposite colors");
  Edge ed;
  ed.black = cu == Color::Black ? u : v;
  ed.white = cu == Color::Black ? v : u;
  ed.weight = w;
  edges_.push_back(ed);
  const int e = static_cast<int>(edges_.size()) - 1;
  rotations_[static_cast<std::size_t>(u)].push_back(e);
  rotations_[static_cast<std::size_t>(v)].push_back(e);
  return e;
}

int TreeBuilder::add_child(int u, Weight w) {
  const int v = add_vertex(opposite(colors_.at(static_cast<std::size_t>(u))));
  add_edge(u, v, w);
  return v;
}

WeightedTree TreeBuilder::build() const { return WeightedTree(colors_, edges_, rotations_); }

Passport passport_of(const WeightedTree& tree) {
  std::vector<Weight> black;
  std::vector<Weight> white;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    (tree.color(v) == Color::Black ? black : white).push_back(tree.degree(v));
  }
  return Passport(Partition(std::move(black)), Partition(std::move(white)));
}

Partition face_partition(const Passport& passport) {
  const std::int64_t r = passport.r();
  if (r < 0) {
    throw NegativeR("p + q = " + std::to_string(passport.p() + passport.q()) + " exceeds n + 1 = " +
                    std::to_string(passport.total() + 1) + "; no weighted tree has this passport");
  }
  std::vector<Weight> parts(static_cast<std::size_t>(r), 1);
  parts.push_back(passport.total() - r);
  return Partition(std::move(parts));
}

Partition weight_distribution(const WeightedTree& tree) {
  std::vector<Weight> weights;
  weights.reserve(static_cast<std::size_t>(tree.edge_count()));
  for (const Edge& e : tree.edges()) weights.push_back(e.weight);
  return Partition(std::move(weights));
}

std::vector<int> distances_from(const WeightedTree& tree, int source) {
  std::vector<int> dist(static_cast<std::size_t>(tree.vertex_count()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : tree.rotation(v)) {
      const int w = tree.opposite_end(e, v);
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const WeightedTree& tree) {
  auto d0 = distances_from(tree, 0);
  const int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = distances_from(tree, far);
  return *std::max_element(d1.begin(), d1.end());
}

std::vector<int> tree_center(const WeightedTree& tree) {
  const int nv = tree.vertex_count();
  std::vector<int> remaining_degree(static_cast<std::size_t>(nv));
  std::vector<int> layer;
  for (int v = 0; v < nv; ++v) {
    remaining_degree[static_cast<std::size_t>(v)] = static_cast<int>(tree.rotation(v).size());
    if (remaining_degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int left = nv;
  while (left > 2) {
    std::vector<int> next;
    for (int v : layer) {
      --left;
      for (int e : tree.rotation(v)) {
        const int w = tree.opposite_end(e, v);
        if (--remaining_degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

WeightedTree make_star(Color center, std::span<const Weight> leaf_weights) {
  TreeBuilder b;
  const int c = b.add_vertex(center);
  for (Weight w : leaf_weights) b.add_child(c, w);
  return b.build();
}

WeightedTree make_path(Color start, std::span<const Weight> weights) {
  TreeBuilder b;
  int v = b.add_vertex(start);
  for (Weight w : weights) v = b.add_child(v, w);
  return b.build();
}

}  // namespace dessinum
