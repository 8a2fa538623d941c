#include "dessinum/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "dessinum/errors.hpp"

namespace dessinum {

namespace {

constexpr double kStep = 80.0;  // distance between layers
constexpr double kRadius = 7.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", std::abs(v) < 0.05 ? 0.0 : v);
  return buf;
}

struct Link {
  int a;
  int b;
  Weight weight;
  int via;  // white vertex standing behind an implicit edge, -1 otherwise
};

void require_implicit(const WeightedTree& tree) {
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.color(v) == Color::White && tree.degree(v) != 2) {
      throw InvalidInput("implicit white vertices need every white degree to be 2; vertex " + std::to_string(v) +
                         " has degree " + std::to_string(tree.degree(v)));
    }
  }
}

std::vector<Link> links(const WeightedTree& tree, bool implicit_white) {
  std::vector<Link> out;
  if (!implicit_white) {
    for (int e = 0; e < tree.edge_count(); ++e) out.push_back({tree.edge(e).black, tree.edge(e).white, tree.weight(e), -1});
    return out;
  }
  require_implicit(tree);
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.color(v) != Color::White) continue;
    const auto rot = tree.rotation(v);
    if (rot.size() == 2) {
      out.push_back({tree.edge(rot[0]).black, tree.edge(rot[1]).black, 1, v});
    } else {
      out.push_back({tree.edge(rot[0]).black, tree.edge(rot[0]).black, 1, v});
    }
  }
  return out;
}

}  // namespace

std::vector<Point> radial_layout(const WeightedTree& tree, std::uint64_t seed) {
  const int nv = tree.vertex_count();
  std::vector<Point> pos(static_cast<std::size_t>(nv));
  const int root = tree_center(tree).front();

  std::vector<int> parent_edge(static_cast<std::size_t>(nv), -1);
  std::vector<int> order{root};
  std::vector<bool> seen(static_cast<std::size_t>(nv), false);
  seen[static_cast<std::size_t>(root)] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int e : tree.rotation(v)) {
      const int w = tree.opposite_end(e, v);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      parent_edge[static_cast<std::size_t>(w)] = e;
      order.push_back(w);
    }
  }
  std::vector<double> leaves(static_cast<std::size_t>(nv), 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (leaves[static_cast<std::size_t>(v)] == 0.0) leaves[static_cast<std::size_t>(v)] = 1.0;
    const int pe = parent_edge[static_cast<std::size_t>(v)];
    if (pe >= 0) leaves[static_cast<std::size_t>(tree.opposite_end(pe, v))] += leaves[static_cast<std::size_t>(v)];
  }

  double offset = 0.0;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    offset = static_cast<double>(rng() % 3600) / 3600.0 * 2.0 * std::numbers::pi;
  }
  // Each vertex owns the wedge [lo, hi); children split it in counterclockwise order.
  std::vector<double> lo(static_cast<std::size_t>(nv), 0.0);
  std::vector<double> hi(static_cast<std::size_t>(nv), 0.0);
  std::vector<int> depth(static_cast<std::size_t>(nv), 0);
  lo[static_cast<std::size_t>(root)] = offset;
  hi[static_cast<std::size_t>(root)] = offset + 2.0 * std::numbers::pi;
  for (int v : order) {
    const int pe = parent_edge[static_cast<std::size_t>(v)];
    const auto rot = tree.rotation(v);
    // Children in ccw order, starting after the parent edge.
    std::vector<int> kids;
    std::size_t start = 0;
    if (pe >= 0) start = (tree.position(v, pe) + 1) % rot.size();
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const int e = rot[(start + i) % rot.size()];
      if (e != pe) kids.push_back(tree.opposite_end(e, v));
    }
    double total = 0.0;
    for (int w : kids) total += leaves[static_cast<std::size_t>(w)];
    double a = lo[static_cast<std::size_t>(v)];
    const double span = hi[static_cast<std::size_t>(v)] - lo[static_cast<std::size_t>(v)];
    for (int w : kids) {
      const double share = total > 0 ? span * leaves[static_cast<std::size_t>(w)] / total : 0.0;
      lo[static_cast<std::size_t>(w)] = a;
      hi[static_cast<std::size_t>(w)] = a + share;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      const double mid = a + share / 2.0;
      const double r = kStep * depth[static_cast<std::size_t>(w)];
      pos[static_cast<std::size_t>(w)] = {r * std::cos(mid), r * std::sin(mid)};
      a += share;
    }
  }
  return pos;
}

std::string render_dot(const WeightedTree& tree, const RenderOptions& options) {
  const auto pos = radial_layout(tree, options.seed);
  const auto ls = links(tree, options.implicit_white);
  std::ostringstream out;
  out << "digraph tree {\n";
  out << "  edge [dir=none];\n";
  out << "  node [shape=circle, width=0.18, fixedsize=true, label=\"\"];\n";
  for (int v = 0; v < tree.vertex_count(); ++v) {
    const bool black = tree.color(v) == Color::Black;
    if (!black && options.implicit_white) continue;
    const auto& p = pos[static_cast<std::size_t>(v)];
    out << "  v" << v << " [pos=\"" << fmt(p.x) << "," << fmt(p.y) << "!\", "
        << (black ? "style=filled, fillcolor=black" : "style=solid, fillcolor=white") << "];\n";
  }
  for (const Link& l : ls) {
    out << "  v" << l.a << " -> v" << l.b;
    std::vector<std::string> attrs;
    if (l.weight != 1) attrs.push_back("label=\"" + std::to_string(l.weight) + "\"");
    if (l.via >= 0) attrs.push_back("color=\"black:invis:black\"");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const WeightedTree& tree, const RenderOptions& options) {
  const auto pos = radial_layout(tree, options.seed);
  const auto ls = links(tree, options.implicit_white);
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const Point& p : pos) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double margin = 30.0;
  const double width = maxx - minx + 2 * margin;
  const double height = maxy - miny + 2 * margin;
  // SVG y grows downwards; flip so that counterclockwise stays counterclockwise.
  auto X = [&](double x) { return fmt(x - minx + margin); };
  auto Y = [&](double y) { return fmt(maxy - y + margin); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const Link& l : ls) {
    const Point& a = pos[static_cast<std::size_t>(l.a)];
    if (l.a == l.b) {
      // Loop towards the position of the hidden white leaf.
      const Point& w = pos[static_cast<std::size_t>(l.via)];
      const double dx = w.x - a.x, dy = w.y - a.y;
      const double len = std::hypot(dx, dy);
      const double ux = dx / len, uy = dy / len;
      const double r = kStep * 0.25;
      out << "  <circle cx=\"" << X(a.x + ux * r) << "\" cy=\"" << Y(a.y + uy * r) << "\" r=\"" << fmt(r)
          << "\" stroke-width=\"3\"/>\n";
      continue;
    }
    const Point& b = pos[static_cast<std::size_t>(l.b)];
    if (l.via >= 0) {
      out << "  <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
          << "\" stroke-width=\"4\"/>\n";
      out << "  <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
          << "\" stroke=\"white\" stroke-width=\"1.5\"/>\n";
    } else {
      out << "  <line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
          << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (const Link& l : ls) {
    if (l.weight == 1 || l.a == l.b) continue;
    const Point& a = pos[static_cast<std::size_t>(l.a)];
    const Point& b = pos[static_cast<std::size_t>(l.b)];
    out << "  <text x=\"" << X((a.x + b.x) / 2) << "\" y=\"" << Y((a.y + b.y) / 2 + 6) << "\">" << l.weight
        << "</text>\n";
  }
  out << "</g>\n";
  out << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int v = 0; v < tree.vertex_count(); ++v) {
    const bool black = tree.color(v) == Color::Black;
    if (!black && options.implicit_white) continue;
    const auto& p = pos[static_cast<std::size_t>(v)];
    out << "  <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << fmt(kRadius) << "\" fill=\""
        << (black ? "black" : "white") << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace dessinum
