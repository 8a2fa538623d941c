#include "dessinum/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "dessinum/dz_bounds.hpp"
#include "dessinum/errors.hpp"
#include "dessinum/tree_code.hpp"

namespace dessinum {

namespace {

int common_vertex(const WeightedTree& tree, int e, int f) {
  const Edge& a = tree.edge(e);
  const Edge& b = tree.edge(f);
  if (a.black == b.black) return a.black;
  if (a.white == b.white) return a.white;
  return -1;
}

void check_edge(const WeightedTree& tree, int e) {
  if (e < 0 || e >= tree.edge_count()) {
    throw InvalidInput("edge index " + std::to_string(e) + " out of range (tree has " +
                       std::to_string(tree.edge_count()) + " edges)");
  }
}

// Edges of rotation(v) in ccw order starting right after `after`, skipping `skip`.
std::vector<int> branches_after(const WeightedTree& tree, int v, int after, int skip) {
  std::vector<int> out;
  for (int e = tree.ccw_next(v, after); e != after; e = tree.ccw_next(v, e)) {
    if (e != skip) out.push_back(e);
  }
  return out;
}

}  // namespace

WeightedTree color_swap(const WeightedTree& tree) {
  std::vector<Color> colors;
  for (Color c : tree.colors()) colors.push_back(opposite(c));
  std::vector<Edge> edges;
  for (const Edge& e : tree.edges()) edges.push_back(Edge{e.white, e.black, e.weight});
  return WeightedTree(std::move(colors), std::move(edges), tree.rotations());
}

WeightedTree reflect(const WeightedTree& tree) {
  auto rotations = tree.rotations();
  for (auto& rot : rotations) std::reverse(rot.begin(), rot.end());
  return WeightedTree(tree.colors(), tree.edges(), std::move(rotations));
}

WeightedTree scale_weights(const WeightedTree& tree, Weight d) {
  if (d < 1) throw InvalidInput("scale factor must be positive");
  auto edges = tree.edges();
  for (Edge& e : edges) e.weight *= d;
  return WeightedTree(tree.colors(), std::move(edges), tree.rotations());
}

Reduced reduce_weights(const WeightedTree& tree) {
  Weight g = 0;
  for (const Edge& e : tree.edges()) g = std::gcd(g, e.weight);
  auto edges = tree.edges();
  for (Edge& e : edges) e.weight /= g;
  return {WeightedTree(tree.colors(), std::move(edges), tree.rotations()), g};
}

WeightedTree weight_exchange_at(const WeightedTree& tree, const PathLocus& locus) {
  const auto [e1, e2, e3] = locus.edges;
  check_edge(tree, e1);
  check_edge(tree, e2);
  check_edge(tree, e3);
  if (e1 == e2 || e2 == e3 || e1 == e3) throw NotApplicable("locus edges must be distinct");
  const int v1 = common_vertex(tree, e1, e2);
  const int v2 = common_vertex(tree, e2, e3);
  if (v1 < 0 || v2 < 0 || v1 == v2) throw NotApplicable("locus edges do not form a path");
  const int v3 = tree.opposite_end(e3, v2);
  const Weight s = tree.weight(e1);
  const Weight t = tree.weight(e2);
  const Weight u = tree.weight(e3);
  if (s >= u) {
    throw NotApplicable("weight exchange needs s < u, got s=" + std::to_string(s) + ", u=" + std::to_string(u));
  }
  const std::vector<int> b1 = branches_after(tree, v1, e2, e1);
  const std::vector<int> b3 = branches_after(tree, v3, e3, -1);

  auto edges = tree.edges();
  auto rotations = tree.rotations();
  auto move_end = [&](int e, int from, int to) {
    Edge& ed = edges[static_cast<std::size_t>(e)];
    (ed.black == from ? ed.black : ed.white) = to;
  };
  for (int e : b1) move_end(e, v1, v3);
  for (int e : b3) move_end(e, v3, v1);
  std::vector<int> r1{e2};
  r1.insert(r1.end(), b3.begin(), b3.end());
  r1.push_back(e1);
  std::vector<int> r3{e3};
  r3.insert(r3.end(), b1.begin(), b1.end());
  rotations[static_cast<std::size_t>(v1)] = std::move(r1);
  rotations[static_cast<std::size_t>(v3)] = std::move(r3);
  edges[static_cast<std::size_t>(e2)].weight = u - s;
  edges[static_cast<std::size_t>(e3)].weight = s + t;
  return WeightedTree(tree.colors(), std::move(edges), std::move(rotations));
}

WeightedTree weight_exchange(const WeightedTree& tree, const PathLocus& locus) {
  return weight_exchange_at(canonical_form(tree), locus);
}

std::vector<PathLocus> weight_exchange_loci(const WeightedTree& tree) {
  std::vector<PathLocus> out;
  for (int e2 = 0; e2 < tree.edge_count(); ++e2) {
    const int a = tree.edge(e2).black;
    const int b = tree.edge(e2).white;
    for (int e1 : tree.rotation(a)) {
      if (e1 == e2) continue;
      for (int e3 : tree.rotation(b)) {
        if (e3 == e2) continue;
        if (tree.weight(e1) < tree.weight(e3)) out.push_back({{e1, e2, e3}});
        if (tree.weight(e3) < tree.weight(e1)) out.push_back({{e3, e2, e1}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PathLocus& x, const PathLocus& y) { return x.edges < y.edges; });
  return out;
}

RipResult sts_rip_at(const WeightedTree& tree, int middle, int side1, int side2) {
  check_edge(tree, middle);
  const int y2 = tree.edge(middle).white;
  const int x2 = tree.edge(middle).black;
  if (side1 < 0) side1 = tree.ccw_next(y2, middle);
  if (side2 < 0) side2 = tree.ccw_next(x2, middle);
  check_edge(tree, side1);
  check_edge(tree, side2);
  if (side1 == middle || side2 == middle) throw NotApplicable("the middle edge ends at a leaf; nothing to rip");
  if (tree.edge(side1).white != y2 || tree.edge(side2).black != x2) {
    throw NotApplicable("side edges must be incident to the middle edge at its white and black ends");
  }
  const Weight s = tree.weight(side1);
  if (tree.weight(side2) != s) {
    throw NotApplicable("side edges have different weights " + std::to_string(s) + " and " +
                        std::to_string(tree.weight(side2)));
  }
  const int x1 = tree.edge(side1).black;
  const int y1 = tree.edge(side2).white;

  Forest forest;
  for (int v = 0; v < tree.vertex_count(); ++v) forest.add_vertex(tree.color(v));
  std::vector<int> id(static_cast<std::size_t>(tree.edge_count()), -1);
  for (int e = 0; e < tree.edge_count(); ++e) {
    if (e == side2) continue;
    id[static_cast<std::size_t>(e)] = static_cast<int>(forest.edges.size());
    forest.edges.push_back(tree.edge(e));
  }
  const int joined = id[static_cast<std::size_t>(side1)];
  forest.edges[static_cast<std::size_t>(joined)] = Edge{x1, y1, s};
  forest.edges[static_cast<std::size_t>(id[static_cast<std::size_t>(middle)])].weight += s;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    auto& rot = forest.rotations[static_cast<std::size_t>(v)];
    for (int e : tree.rotation(v)) {
      if (v == y2 && e == side1) continue;
      if (v == x2 && e == side2) continue;
      rot.push_back(e == side2 ? joined : id[static_cast<std::size_t>(e)]);
    }
  }
  auto parts = forest.trees();
  const auto comp = forest.component_of_vertices();
  // trees() keeps edge order within a component.
  auto local_index = [&](int fe) {
    const int c = comp[static_cast<std::size_t>(forest.edges[static_cast<std::size_t>(fe)].black)];
    int k = 0;
    for (int f = 0; f < fe; ++f) {
      if (comp[static_cast<std::size_t>(forest.edges[static_cast<std::size_t>(f)].black)] == c) ++k;
    }
    return k;
  };
  const int first_edge = local_index(joined);
  const int second_edge = local_index(id[static_cast<std::size_t>(middle)]);
  const std::size_t fi = comp[static_cast<std::size_t>(x1)] == 0 ? 0 : 1;
  return {std::move(parts[fi]), std::move(parts[1 - fi]), first_edge, second_edge};
}

RipResult sts_rip(const WeightedTree& tree, int middle) { return sts_rip_at(canonical_form(tree), middle); }

std::vector<int> sts_rip_loci(const WeightedTree& tree) {
  std::vector<int> out;
  for (int e = 0; e < tree.edge_count(); ++e) {
    const int a = tree.ccw_next(tree.edge(e).white, e);
    const int b = tree.ccw_next(tree.edge(e).black, e);
    if (a != e && b != e && tree.weight(a) == tree.weight(b)) out.push_back(e);
  }
  return out;
}

StitchResult sts_stitch_at(const WeightedTree& t1, int e1, const WeightedTree& t2, int e2) {
  check_edge(t1, e1);
  check_edge(t2, e2);
  if (t1.weight(e1) == t2.weight(e2)) {
    throw NotApplicable("stitching needs different weights, both edges have weight " + std::to_string(t1.weight(e1)));
  }
  Forest forest;
  const int off1 = forest.add_tree(t1);
  const int off2 = forest.add_tree(t2);
  int a = e1 + off1;
  int b = e2 + off2;
  if (forest.edges[static_cast<std::size_t>(a)].weight > forest.edges[static_cast<std::size_t>(b)].weight) std::swap(a, b);
  stitch_edges(forest, a, b);
  return {std::move(forest.trees().front()), b};
}

WeightedTree sts_stitch(const WeightedTree& t1, int e1, const WeightedTree& t2, int e2) {
  return sts_stitch_at(canonical_form(t1), e1, canonical_form(t2), e2).tree;
}

WeightedTree random_tree(std::mt19937_64& rng, Weight max_weight) {
  if (max_weight < 1) throw InvalidInput("max_weight must be positive");
  const Weight n = std::uniform_int_distribution<Weight>(1, max_weight)(rng);
  const int m = static_cast<int>(std::uniform_int_distribution<Weight>(1, n)(rng));
  // Random composition of n into m positive parts.
  std::vector<Weight> cuts;
  for (Weight i = 1; i < n; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(m - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  std::vector<Color> colors{std::bernoulli_distribution(0.5)(rng) ? Color::Black : Color::White};
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotations(1);
  Weight prev = 0;
  for (int i = 0; i < m; ++i) {
    const int parent = std::uniform_int_distribution<int>(0, static_cast<int>(colors.size()) - 1)(rng);
    const int child = static_cast<int>(colors.size());
    colors.push_back(opposite(colors[static_cast<std::size_t>(parent)]));
    rotations.emplace_back();
    const Weight w = cuts[static_cast<std::size_t>(i)] - prev;
    prev = cuts[static_cast<std::size_t>(i)];
    const bool parent_black = colors[static_cast<std::size_t>(parent)] == Color::Black;
    edges.push_back(Edge{parent_black ? parent : child, parent_black ? child : parent, w});
    auto& rot = rotations[static_cast<std::size_t>(parent)];
    const auto pos = std::uniform_int_distribution<std::size_t>(0, rot.size())(rng);
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(pos), i);
    rotations[static_cast<std::size_t>(child)].push_back(i);
  }
  return WeightedTree(std::move(colors), std::move(edges), std::move(rotations));
}

}  // namespace dessinum
