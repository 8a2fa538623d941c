#include "dessinum/dz_bounds.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "dessinum/errors.hpp"

namespace dessinum {

std::string regime_name(Regime r) { return r == Regime::Main ? "MAIN" : "WEAK"; }

BoundReport min_deg_R(const Partition& alpha, const Partition& beta) {
  if (alpha.empty() || beta.empty()) throw InvalidInput("partitions must be nonempty");
  if (alpha.total() != beta.total()) throw InvalidInput("partitions must have equal sums");
  BoundReport rep;
  rep.n = alpha.total();
  rep.p = static_cast<std::int64_t>(alpha.count());
  rep.q = static_cast<std::int64_t>(beta.count());
  rep.d = std::gcd(alpha.gcd(), beta.gcd());
  if (rep.p + rep.q <= rep.n / rep.d + 1) {
    rep.regime = Regime::Main;
    rep.min_deg_R = (rep.n + 1) - (rep.p + rep.q);
  } else {
    rep.regime = Regime::Weak;
    rep.min_deg_R = (rep.d - 1) * (rep.n / rep.d);
  }
  return rep;
}

BoundReport min_deg_R(const Passport& passport) { return min_deg_R(passport.black(), passport.white()); }

bool is_realizable_as_tree(const Passport& passport) { return min_deg_R(passport).regime == Regime::Main; }

int Forest::add_vertex(Color c) {
  colors.push_back(c);
  rotations.emplace_back();
  return static_cast<int>(colors.size()) - 1;
}

int Forest::add_edge(int black, int white, Weight w) {
  edges.push_back(Edge{black, white, w});
  const int e = static_cast<int>(edges.size()) - 1;
  rotations[static_cast<std::size_t>(black)].push_back(e);
  rotations[static_cast<std::size_t>(white)].push_back(e);
  return e;
}

int Forest::add_tree(const WeightedTree& tree) {
  const int voff = static_cast<int>(colors.size());
  const int eoff = static_cast<int>(edges.size());
  for (int v = 0; v < tree.vertex_count(); ++v) {
    add_vertex(tree.color(v));
    for (int e : tree.rotation(v)) rotations.back().push_back(e + eoff);
  }
  for (const Edge& ed : tree.edges()) edges.push_back(Edge{ed.black + voff, ed.white + voff, ed.weight});
  return eoff;
}

std::vector<int> Forest::component_of_vertices() const {
  const std::size_t nv = colors.size();
  std::vector<int> comp(nv, -1);
  int next = 0;
  for (std::size_t s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : rotations[static_cast<std::size_t>(v)]) {
        const Edge& ed = edges[static_cast<std::size_t>(e)];
        const int w = ed.black == v ? ed.white : ed.black;
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int Forest::component_count() const {
  const auto comp = component_of_vertices();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<WeightedTree> Forest::trees() const {
  const auto comp = component_of_vertices();
  const int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> vmap(colors.size(), -1);
  std::vector<int> emap(edges.size(), -1);
  std::vector<WeightedTree> out;
  for (int c = 0; c < nc; ++c) {
    std::vector<Color> cs;
    std::vector<Edge> es;
    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (comp[v] != c) continue;
      vmap[v] = static_cast<int>(cs.size());
      cs.push_back(colors[v]);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (comp[static_cast<std::size_t>(edges[e].black)] != c) continue;
      emap[e] = static_cast<int>(es.size());
      es.push_back(Edge{vmap[static_cast<std::size_t>(edges[e].black)], vmap[static_cast<std::size_t>(edges[e].white)],
                        edges[e].weight});
    }
    std::vector<std::vector<int>> rs;
    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (comp[v] != c) continue;
      std::vector<int> rot;
      for (int e : rotations[v]) rot.push_back(emap[static_cast<std::size_t>(e)]);
      rs.push_back(std::move(rot));
    }
    out.emplace_back(std::move(cs), std::move(es), std::move(rs));
  }
  return out;
}

namespace {

struct Part {
  Weight value;
  int vertex;  // -1 while no vertex carries this part yet
};

// Largest value first; among equal values, parts already attached to a vertex first.
bool part_before(const Part& a, const Part& b) {
  if (a.value != b.value) return a.value > b.value;
  const bool pa = a.vertex >= 0;
  const bool pb = b.vertex >= 0;
  if (pa != pb) return pa;
  return a.vertex < b.vertex;
}

void replace_edge(std::vector<int>& rot, int from, int to) { *std::find(rot.begin(), rot.end(), from) = to; }

void insert_after(std::vector<int>& rot, int anchor, int e) {
  rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, e);
}

}  // namespace

Forest construct_forest_raw(const Passport& passport) {
  std::vector<Part> black;
  std::vector<Part> white;
  for (Weight v : passport.black().parts()) black.push_back({v, -1});
  for (Weight v : passport.white().parts()) white.push_back({v, -1});
  Forest forest;
  while (!black.empty() && !white.empty()) {
    std::sort(black.begin(), black.end(), part_before);
    std::sort(white.begin(), white.end(), part_before);
    std::size_t bi = 0;
    std::size_t wi = 0;
    bool equal = false;
    for (std::size_t i = 0; i < black.size() && !equal; ++i) {
      for (std::size_t j = 0; j < white.size(); ++j) {
        if (black[i].value == white[j].value) {
          bi = i;
          wi = j;
          equal = true;
          break;
        }
      }
    }
    Part& b = black[bi];
    Part& w = white[wi];
    if (b.vertex < 0) b.vertex = forest.add_vertex(Color::Black);
    if (w.vertex < 0) w.vertex = forest.add_vertex(Color::White);
    const Weight weight = std::min(b.value, w.value);
    forest.add_edge(b.vertex, w.vertex, weight);
    b.value -= weight;
    w.value -= weight;
    if (b.value == 0) black.erase(black.begin() + static_cast<std::ptrdiff_t>(bi));
    if (w.value == 0) white.erase(white.begin() + static_cast<std::ptrdiff_t>(wi));
  }
  return forest;
}

std::vector<WeightedTree> construct_forest(const Passport& passport) { return construct_forest_raw(passport).trees(); }

int stitch_edges(Forest& forest, int e1, int e2) {
  if (e1 == e2) throw NotApplicable("stitching needs two distinct edges");
  const Edge a = forest.edges.at(static_cast<std::size_t>(e1));
  const Edge b = forest.edges.at(static_cast<std::size_t>(e2));
  if (a.weight >= b.weight) {
    throw NotApplicable("stitching needs weights s < u, got s=" + std::to_string(a.weight) +
                        ", u=" + std::to_string(b.weight));
  }
  const auto comp = forest.component_of_vertices();
  if (comp[static_cast<std::size_t>(a.black)] == comp[static_cast<std::size_t>(b.black)]) {
    throw NotApplicable("stitched edges must lie in different components");
  }
  const Weight s = a.weight;
  const int x1 = a.black, y1 = a.white, x2 = b.black, y2 = b.white;
  forest.edges[static_cast<std::size_t>(e1)] = Edge{x1, y2, s};
  forest.edges[static_cast<std::size_t>(e2)] = Edge{x2, y2, b.weight - s};
  forest.edges.push_back(Edge{x2, y1, s});
  const int e3 = static_cast<int>(forest.edges.size()) - 1;
  replace_edge(forest.rotations[static_cast<std::size_t>(y1)], e1, e3);
  insert_after(forest.rotations[static_cast<std::size_t>(x2)], e2, e3);
  insert_after(forest.rotations[static_cast<std::size_t>(y2)], e2, e1);
  return e3;
}

WeightedTree construct_witness(const Passport& passport) {
  const BoundReport rep = min_deg_R(passport);
  if (rep.regime != Regime::Main) {
    throw NotRealizable("p + q = " + std::to_string(rep.p + rep.q) + " exceeds n/d + 1 = " +
                        std::to_string(rep.n / rep.d + 1) + "; only forests have this passport");
  }
  const Weight d = rep.d;
  std::vector<Weight> black;
  std::vector<Weight> white;
  for (Weight v : passport.black().parts()) black.push_back(v / d);
  for (Weight v : passport.white().parts()) white.push_back(v / d);
  Forest forest = construct_forest_raw(Passport(Partition(black), Partition(white)));

  while (true) {
    const auto comp = forest.component_of_vertices();
    const int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    if (nc == 1) break;
    auto comp_of_edge = [&](std::size_t e) { return comp[static_cast<std::size_t>(forest.edges[e].black)]; };
    bool done = false;
    for (int ci = 0; ci < nc && !done; ++ci) {
      for (int cj = ci + 1; cj < nc && !done; ++cj) {
        // Lexicographically smallest (s, u), s < u, with s and u on opposite components.
        std::tuple<Weight, Weight, int, int> best{0, 0, -1, -1};
        for (std::size_t e = 0; e < forest.edges.size(); ++e) {
          const int ce = comp_of_edge(e);
          if (ce != ci && ce != cj) continue;
          for (std::size_t f = 0; f < forest.edges.size(); ++f) {
            const int cf = comp_of_edge(f);
            if ((cf != ci && cf != cj) || cf == ce) continue;
            const Weight s = forest.edges[e].weight;
            const Weight u = forest.edges[f].weight;
            if (s >= u) continue;
            const std::tuple<Weight, Weight, int, int> cand{s, u, static_cast<int>(e), static_cast<int>(f)};
            if (std::get<2>(best) < 0 || cand < best) best = cand;
          }
        }
        if (std::get<2>(best) >= 0) {
          stitch_edges(forest, std::get<2>(best), std::get<3>(best));
          done = true;
        }
      }
    }
    if (!done) throw NotRealizable("all edge weights are equal in a disconnected forest; no stitch applies");
  }
  for (Edge& e : forest.edges) e.weight *= d;
  return forest.trees().front();
}

}  // namespace dessinum
