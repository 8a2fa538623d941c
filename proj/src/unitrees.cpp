#include "dessinum/unitrees.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "dessinum/dz_bounds.hpp"
#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"
#include "dessinum/surgery.hpp"

namespace dessinum {

namespace {

constexpr std::array<const char*, 23> kNames{"A", "B", "C", "D", "E1", "E2", "E3", "E4", "F", "G", "H", "I",
                                             "J", "K", "L", "M", "N", "O", "P", "Q", "R", "S", "T"};

// Reduced sporadic unitrees, one coloring each.
const std::map<Family, const char*>& sporadic_codes() {
  static const std::map<Family, const char*> codes{
      {Family::K, "root=B; x1 x1 x1 x1 y1 y1 x1 x1 y1 y1 y1 y1 x2 y2"},
      {Family::L, "root=B; x1 x1 x1 x1 x2 y2 y1 y1 x1 y1 y1 y1 x2 y2"},
      {Family::M, "root=B; x1 x1 x1 x1 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x2 y2"},
      {Family::N, "root=B; x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x2 y2"},
      {Family::O, "root=B; x1 x1 x1 x1 x2 y2 x2 y2 y1 y1 x1 x1 x2 y2 x2 y2 y1 y1 x2 y2 y1 y1 x2 y2 x2 y2"},
      {Family::P, "root=B; x1 x2 x3 y3 y2 y1 x1 x2 x3 y3 y2 y1 x3 y3"},
      {Family::Q, "root=B; x1 x1 x1 x1 x1 x1 x1 x1 y1 y1 x1 x1 y1 y1 y1 y1 x1 x1 y1 y1 y1 y1 x1 x1 y1 y1 y1 y1"},
      {Family::R, "root=B; x1 x1 x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x2 y2"},
      {Family::S, "root=B; x1 x1 x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 y1 y1 x2 y2"},
      {Family::T, "root=B; x1 x1 x1 x1 x1 x1 x1 x1 x2 y2 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x1 x1 x2 y2 y1 y1 y1 y1 x1 x1 "
                  "x2 y2 y1 y1 y1 y1 x2 y2"},
  };
  return codes;
}

Weight param(const FamilyParams& params, const std::string& name) {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw InvalidInput("missing parameter " + name);
}

void require(bool ok, Family f, const std::string& what) {
  if (!ok) throw InvalidInput("family " + family_name(f) + ": " + what);
}

void add_leaves(TreeBuilder& b, int v, Weight count, Weight w) {
  for (Weight i = 0; i < count; ++i) b.add_child(v, w);
}

// Spine a0 .. aL with weights s, t, s, ...; bunches of s + t leaves at the ends.
// With `solitary` a0 is itself a leaf and carries no bunch.
WeightedTree brush(Weight s, Weight t, Weight len, Weight k, Weight l, bool solitary) {
  TreeBuilder b;
  const int a0 = b.add_vertex(Color::Black);
  if (!solitary) add_leaves(b, a0, k, s + t);
  int v = a0;
  for (Weight i = 0; i < len; ++i) v = b.add_child(v, i % 2 == 0 ? s : t);
  add_leaves(b, v, l, s + t);
  return b.build();
}

WeightedTree build_series(Family f, const FamilyParams& p) {
  TreeBuilder b;
  switch (f) {
    case Family::A: {
      const Weight s = param(p, "s"), t = param(p, "t"), k = param(p, "k");
      require(s >= 1 && t >= 1 && k >= 0, f, "needs s, t >= 1 and k >= 0");
      const int c = b.add_vertex(Color::Black);
      add_leaves(b, c, k, s);
      b.add_child(c, t);
      return b.build();
    }
    case Family::B: {
      const Weight s = param(p, "s"), t = param(p, "t"), len = param(p, "length");
      require(s >= 1 && t >= 1 && len >= 1, f, "needs s, t, length >= 1");
      std::vector<Weight> w;
      for (Weight i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? s : t);
      return make_path(Color::Black, w);
    }
    case Family::C: {
      const Weight s = param(p, "s"), t = param(p, "t"), k = param(p, "k"), l = param(p, "l");
      require(s >= 1 && t >= 1 && k >= 1 && l >= 1, f, "needs s, t, k, l >= 1");
      const int u = b.add_vertex(Color::Black);
      add_leaves(b, u, k, s);
      const int v = b.add_child(u, t);
      add_leaves(b, v, l, s);
      return b.build();
    }
    case Family::D: {
      const Weight s = param(p, "s"), t = param(p, "t");
      require(s >= 1 && t >= 1, f, "needs s, t >= 1");
      const int c = b.add_vertex(Color::White);
      const int b1 = b.add_child(c, s);
      const int b2 = b.add_child(c, t);
      b.add_child(b1, s + t);
      add_leaves(b, b2, 2, s);
      return b.build();
    }
    case Family::E1:
    case Family::E2: {
      const Weight s = param(p, "s"), t = param(p, "t"), len = param(p, "length"), l = param(p, "l");
      const bool odd = f == Family::E1;
      require(s >= 1 && t >= 1 && l >= 1 && len >= (odd ? 1 : 2) && (len % 2 == 1) == odd, f,
              odd ? "needs s, t, l >= 1 and odd length" : "needs s, t, l >= 1 and even length >= 2");
      return brush(s, t, len, 0, l, true);
    }
    case Family::E3:
    case Family::E4: {
      const Weight s = param(p, "s"), t = param(p, "t"), len = param(p, "length");
      const Weight k = param(p, "k"), l = param(p, "l");
      const bool odd = f == Family::E3;
      require(s >= 1 && t >= 1 && k >= 1 && l >= 1 && len >= (odd ? 1 : 2) && (len % 2 == 1) == odd, f,
              odd ? "needs s, t, k, l >= 1 and odd length" : "needs s, t, k, l >= 1 and even length >= 2");
      return brush(s, t, len, k, l, false);
    }
    case Family::F: {
      const Weight k = param(p, "k"), m = param(p, "m"), l = param(p, "l");
      require(k >= 1 && m >= 1 && l >= 1, f, "needs k, m, l >= 1");
      const int c = b.add_vertex(Color::Black);
      for (Weight i = 0; i + 1 < k; ++i) add_leaves(b, b.add_child(c, 1), m - 1, 1);
      add_leaves(b, b.add_child(c, 1), l - 1, 1);
      return b.build();
    }
    case Family::G: {
      const Weight k = param(p, "k"), m = param(p, "m");
      require(k >= 3 && m >= 2, f, "needs k >= 3 and m >= 2");
      const int c = b.add_vertex(Color::White);
      for (Weight i = 0; i + 2 < k; ++i) add_leaves(b, b.add_child(c, 1), m - 1, 1);
      add_leaves(b, b.add_child(c, 2), m - 2, 1);
      return b.build();
    }
    case Family::H: {
      const Weight k = param(p, "k"), l = param(p, "l");
      require(k >= 2 && l >= 2, f, "needs k, l >= 2");
      const int c1 = b.add_vertex(Color::Black);
      const int c2 = b.add_child(b.add_child(c1, 1), 1);
      for (Weight i = 1; i < k; ++i) b.add_child(b.add_child(c1, 1), 1);
      for (Weight i = 1; i < l; ++i) b.add_child(b.add_child(c2, 1), 1);
      return b.build();
    }
    case Family::I: {
      const Weight k = param(p, "k");
      require(k >= 2, f, "needs k >= 2");
      const int c = b.add_vertex(Color::White);
      b.add_child(c, 1);
      for (int side = 0; side < 2; ++side) {
        const int v = b.add_child(c, 1);
        for (Weight i = 1; i < k; ++i) add_leaves(b, b.add_child(v, 1), 2, 1);
      }
      return b.build();
    }
    case Family::J: {
      const Weight k = param(p, "k");
      require(k >= 1, f, "needs k >= 1");
      const int c = b.add_vertex(Color::Black);
      b.add_child(c, 2);
      for (int side = 0; side < 2; ++side) add_leaves(b, b.add_child(b.add_child(c, 1), 1), k, 2);
      return b.build();
    }
    default:
      break;
  }
  throw InvalidInput("family " + family_name(f) + " is sporadic");
}

std::vector<int> longest_path(const WeightedTree& tree) {
  const auto d0 = distances_from(tree, 0);
  const int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  const auto da = distances_from(tree, a);
  int v = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
  std::vector<int> path{v};
  while (v != a) {
    for (int e : tree.rotation(v)) {
      const int w = tree.opposite_end(e, v);
      if (da[static_cast<std::size_t>(w)] == da[static_cast<std::size_t>(v)] - 1) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

int edge_between(const WeightedTree& tree, int u, int v) {
  for (int e : tree.rotation(u)) {
    if (tree.opposite_end(e, u) == v) return e;
  }
  return -1;
}

std::size_t valence(const WeightedTree& tree, int v) { return tree.rotation(v).size(); }

struct Candidate {
  Family family;
  FamilyParams params;
};

// Parameter guesses read off the tree; each is confirmed by rebuilding the member.
std::vector<Candidate> candidates(const WeightedTree& tree) {
  std::vector<Candidate> out;
  const int m = tree.edge_count();
  const auto path = longest_path(tree);
  const int diam = static_cast<int>(path.size()) - 1;
  auto pw = [&](int i) { return tree.weight(edge_between(tree, path[static_cast<std::size_t>(i)],
                                                         path[static_cast<std::size_t>(i) + 1])); };
  bool all_one = true;
  int heavy = 0;
  for (const Edge& e : tree.edges()) {
    all_one = all_one && e.weight == 1;
    if (e.weight == 2) ++heavy;
  }

  if (diam <= 2) {
    const int c = diam == 1 ? path[0] : path[1];
    std::map<Weight, int> count;
    for (int e : tree.rotation(c)) ++count[tree.weight(e)];
    if (count.size() == 1) {
      const Weight w = count.begin()->first;
      out.push_back({Family::A, {{"s", w}, {"t", w}, {"k", m - 1}}});
    } else if (count.size() == 2) {
      for (const auto& [w, n] : count) {
        if (n != 1) continue;
        for (const auto& [s, ns] : count) {
          if (s != w) out.push_back({Family::A, {{"s", s}, {"t", w}, {"k", ns}}});
        }
      }
    }
  }
  if (diam == m) {
    for (int dir = 0; dir < 2; ++dir) {
      const Weight s = dir == 0 ? pw(0) : pw(m - 1);
      const Weight t = m == 1 ? s : (dir == 0 ? pw(1) : pw(m - 2));
      out.push_back({Family::B, {{"s", s}, {"t", t}, {"length", m}}});
    }
  }
  if (diam == 3) {
    out.push_back({Family::C, {{"s", pw(0)}, {"t", pw(1)}, {"k", static_cast<Weight>(valence(tree, path[1])) - 1},
                               {"l", static_cast<Weight>(valence(tree, path[2])) - 1}}});
  }
  if (diam == 4 && m == 5) {
    const int c = path[2];
    if (valence(tree, c) == 2) {
      const auto rot = tree.rotation(c);
      out.push_back({Family::D, {{"s", tree.weight(rot[0])}, {"t", tree.weight(rot[1])}}});
      out.push_back({Family::D, {{"s", tree.weight(rot[1])}, {"t", tree.weight(rot[0])}}});
    }
  }
  if (diam >= 2) {
    for (int dir = 0; dir < 2; ++dir) {
      auto at = [&](int i) { return dir == 0 ? i : diam - 1 - i; };  // edge index along the chosen direction
      auto vertex = [&](int i) { return path[static_cast<std::size_t>(dir == 0 ? i : diam - i)]; };
      // Solitary leaf at vertex(0).
      {
        const Weight s = pw(at(0)), t = pw(at(1));
        const Weight len = diam - 1;
        const Weight l = static_cast<Weight>(valence(tree, vertex(diam - 1))) - 1;
        out.push_back({len % 2 == 1 ? Family::E1 : Family::E2, {{"s", s}, {"t", t}, {"length", len}, {"l", l}}});
      }
      // Bunches at both ends.
      if (diam >= 3) {
        const Weight len = diam - 2;
        const Weight s = pw(at(1));
        const Weight t = len >= 2 ? pw(at(2)) : pw(at(0)) - s;
        const Weight k = static_cast<Weight>(valence(tree, vertex(1))) - 1;
        const Weight l = static_cast<Weight>(valence(tree, vertex(diam - 1))) - 1;
        if (t >= 1) {
          out.push_back({len % 2 == 1 ? Family::E3 : Family::E4,
                         {{"s", s}, {"t", t}, {"length", len}, {"k", k}, {"l", l}}});
        }
      }
    }
  }
  if (diam == 4 || diam == 2) {
    const int c = path[static_cast<std::size_t>(diam / 2)];
    const auto rot = tree.rotation(c);
    const Weight k = static_cast<Weight>(rot.size());
    if (all_one) {
      std::map<Weight, int> count;
      for (int e : rot) ++count[tree.degree(tree.opposite_end(e, c))];
      if (count.size() == 1) {
        const Weight d = count.begin()->first;
        out.push_back({Family::F, {{"k", k}, {"m", d}, {"l", d}}});
      } else if (count.size() == 2) {
        for (const auto& [d, n] : count) {
          if (n != 1) continue;
          for (const auto& [md, nm] : count) {
            if (md != d) out.push_back({Family::F, {{"k", k}, {"m", md}, {"l", d}}});
          }
        }
      }
    }
    if (heavy == 1 && diam == 4) {
      for (int e : rot) {
        if (tree.weight(e) == 1) {
          out.push_back({Family::G, {{"k", tree.degree(c)}, {"m", tree.degree(tree.opposite_end(e, c))}}});
          break;
        }
      }
    }
  }
  if (diam == 6) {
    const Weight k2 = static_cast<Weight>(valence(tree, path[2]));
    const Weight k4 = static_cast<Weight>(valence(tree, path[4]));
    if (all_one) {
      out.push_back({Family::H, {{"k", k2}, {"l", k4}}});
      out.push_back({Family::I, {{"k", k2}}});
    }
    out.push_back({Family::J, {{"k", static_cast<Weight>(valence(tree, path[1])) - 1}}});
  }
  return out;
}

bool plausible(const FamilyParams& params) {
  for (const auto& [key, value] : params) {
    if (value < 0) return false;
  }
  return true;
}

}  // namespace

std::string family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

Family parse_family(const std::string& name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (name == kNames[i]) return static_cast<Family>(i);
  }
  throw ParseError("unknown family '" + name + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (std::size_t i = 0; i < kNames.size(); ++i) out.push_back(static_cast<Family>(i));
  return out;
}

bool is_sporadic(Family f) { return f >= Family::K; }

std::string FamilyTag::to_string() const {
  std::string out = family_name(family);
  if (!params.empty()) {
    out += "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0) out += ", ";
      out += params[i].first + "=" + std::to_string(params[i].second);
    }
    out += ")";
  }
  if (color_swapped) out += " swapped";
  if (scale != 1) out += " scale=" + std::to_string(scale);
  return out;
}

WeightedTree family_member(Family f, const FamilyParams& params) {
  if (is_sporadic(f)) {
    const auto& codes = sporadic_codes();
    const auto it = codes.find(f);
    if (it == codes.end()) throw InvalidInput("no stored tree for family " + family_name(f));
    return tree_from_code(TreeCode::parse(it->second));
  }
  return build_series(f, params);
}

std::optional<FamilyTag> match_family(const WeightedTree& tree) {
  const Reduced red = reduce_weights(tree);
  std::optional<FamilyTag> best;
  for (int swap = 0; swap < 2; ++swap) {
    const WeightedTree t = swap == 0 ? red.tree : color_swap(red.tree);
    const TreeCode code = canonical_code(t);
    auto consider = [&](Family f, const FamilyParams& params) {
      if (best && best->family <= f) return;
      best = FamilyTag{f, params, swap == 1, red.d};
    };
    for (const Candidate& c : candidates(t)) {
      if (best && best->family <= c.family) continue;
      if (!plausible(c.params)) continue;
      try {
        if (canonical_code(build_series(c.family, c.params)) == code) consider(c.family, c.params);
      } catch (const InvalidInput&) {
      }
    }
    for (const auto& [f, text] : sporadic_codes()) {
      if (TreeCode::parse(text) == code) consider(f, {});
    }
  }
  return best;
}

std::vector<FamilyMember> family_members(Weight max_weight) {
  std::vector<FamilyMember> out;
  // Tries params; returns false once the member is too heavy (every family grows in each parameter).
  auto emit = [&](Family f, FamilyParams p) {
    WeightedTree t = build_series(f, p);
    if (t.total_weight() > max_weight) return false;
    out.push_back({f, std::move(p), std::move(t)});
    return true;
  };
  const Weight n = max_weight;
  for (Weight s = 1; s <= n; ++s) {
    for (Weight t = 1; t <= n; ++t) {
      if (std::gcd(s, t) != 1 || (s == t && s != 1)) continue;
      for (Weight k = 0; emit(Family::A, {{"s", s}, {"t", t}, {"k", k}}); ++k) {
      }
      for (Weight len = 1; emit(Family::B, {{"s", s}, {"t", t}, {"length", len}}); ++len) {
      }
      for (Weight k = 1; k <= n; ++k) {
        for (Weight l = 1; emit(Family::C, {{"s", s}, {"t", t}, {"k", k}, {"l", l}}); ++l) {
        }
      }
      emit(Family::D, {{"s", s}, {"t", t}});
      for (Weight len = 1; len <= n; ++len) {
        const Family solo = len % 2 == 1 ? Family::E1 : Family::E2;
        const Family bunches = len % 2 == 1 ? Family::E3 : Family::E4;
        if (len >= 2 || solo == Family::E1) {
          for (Weight l = 1; emit(solo, {{"s", s}, {"t", t}, {"length", len}, {"l", l}}); ++l) {
          }
        }
        for (Weight k = 1; k <= n; ++k) {
          for (Weight l = 1; emit(bunches, {{"s", s}, {"t", t}, {"length", len}, {"k", k}, {"l", l}}); ++l) {
          }
        }
      }
    }
  }
  for (Weight k = 1; k <= n; ++k) {
    for (Weight m = 1; m <= n; ++m) {
      for (Weight l = 1; emit(Family::F, {{"k", k}, {"m", m}, {"l", l}}); ++l) {
      }
    }
  }
  for (Weight k = 3; k <= n; ++k) {
    for (Weight m = 2; emit(Family::G, {{"k", k}, {"m", m}}); ++m) {
    }
  }
  for (Weight k = 2; k <= n; ++k) {
    for (Weight l = 2; emit(Family::H, {{"k", k}, {"l", l}}); ++l) {
    }
  }
  for (Weight k = 2; emit(Family::I, {{"k", k}}); ++k) {
  }
  for (Weight k = 1; emit(Family::J, {{"k", k}}); ++k) {
  }
  for (const auto& [f, text] : sporadic_codes()) {
    WeightedTree t = tree_from_code(TreeCode::parse(text));
    if (t.total_weight() <= max_weight) out.push_back({f, {}, std::move(t)});
  }
  return out;
}

bool is_unitree_bruteforce(const Passport& passport) {
  if (!is_realizable_as_tree(passport)) return false;
  return count_classes(passport, 2) == 1;
}

std::vector<CatalogEntry> family_catalog() {
  struct Spec {
    Family f;
    const char* parameters;
    const char* description;
    std::vector<FamilyParams> examples;
  };
  const std::vector<Spec> specs{
      {Family::A, "s, t >= 1 coprime; k >= 0", "star: k leaves of weight s and one leaf of weight t",
       {{{"s", 1}, {"t", 1}, {"k", 3}}, {{"s", 1}, {"t", 2}, {"k", 2}}, {{"s", 3}, {"t", 2}, {"k", 1}}}},
      {Family::B, "s, t >= 1 coprime; length >= 1", "path whose weights alternate s, t",
       {{{"s", 1}, {"t", 1}, {"length", 4}}, {{"s", 1}, {"t", 2}, {"length", 3}}, {{"s", 2}, {"t", 3}, {"length", 4}}}},
      {Family::C, "s, t >= 1 coprime; k, l >= 1",
       "edge of weight t whose black end has k leaves of weight s and white end l leaves of weight s",
       {{{"s", 1}, {"t", 1}, {"k", 2}, {"l", 1}}, {{"s", 1}, {"t", 2}, {"k", 2}, {"l", 2}},
        {{"s", 2}, {"t", 1}, {"k", 1}, {"l", 3}}}},
      {Family::D, "s, t >= 1 coprime",
       "white vertex joined by s and t to two black vertices; the first has one leaf of weight s + t, the second "
       "two leaves of weight s",
       {{{"s", 1}, {"t", 1}}, {{"s", 1}, {"t", 2}}, {{"s", 2}, {"t", 1}}}},
      {Family::E1, "s, t >= 1 coprime; odd length >= 1; l >= 1",
       "path from a leaf with weights s, t, ..., s; l leaves of weight s + t at the far end",
       {{{"s", 1}, {"t", 2}, {"length", 3}, {"l", 1}}, {{"s", 2}, {"t", 1}, {"length", 3}, {"l", 2}},
        {{"s", 1}, {"t", 1}, {"length", 5}, {"l", 2}}}},
      {Family::E2, "s, t >= 1 coprime; even length >= 2; l >= 1",
       "path from a leaf with weights s, t, ..., t; l leaves of weight s + t at the far end",
       {{{"s", 1}, {"t", 2}, {"length", 2}, {"l", 2}}, {{"s", 2}, {"t", 1}, {"length", 4}, {"l", 1}},
        {{"s", 1}, {"t", 1}, {"length", 4}, {"l", 3}}}},
      {Family::E3, "s, t >= 1 coprime; odd length >= 1; k, l >= 1",
       "path with weights s, t, ..., s; k and l leaves of weight s + t at its ends",
       {{{"s", 1}, {"t", 2}, {"length", 1}, {"k", 2}, {"l", 1}}, {{"s", 2}, {"t", 1}, {"length", 3}, {"k", 1}, {"l", 1}},
        {{"s", 1}, {"t", 1}, {"length", 3}, {"k", 2}, {"l", 3}}}},
      {Family::E4, "s, t >= 1 coprime; even length >= 2; k, l >= 1",
       "path with weights s, t, ..., t; k and l leaves of weight s + t at its ends",
       {{{"s", 1}, {"t", 2}, {"length", 2}, {"k", 1}, {"l", 1}}, {{"s", 2}, {"t", 1}, {"length", 2}, {"k", 2}, {"l", 1}},
        {{"s", 1}, {"t", 1}, {"length", 4}, {"k", 1}, {"l", 2}}}},
      {Family::F, "k, m, l >= 1", "all weights 1; center of degree k, k - 1 neighbours of degree m, one of degree l",
       {{{"k", 3}, {"m", 2}, {"l", 3}}, {{"k", 4}, {"m", 3}, {"l", 1}}, {{"k", 2}, {"m", 3}, {"l", 2}}}},
      {Family::G, "k >= 3; m >= 2",
       "white center of degree k; k - 2 black neighbours by weight 1 and one by weight 2; every black vertex has "
       "degree m, completed by leaves of weight 1",
       {{{"k", 3}, {"m", 2}}, {{"k", 4}, {"m", 3}}, {{"k", 5}, {"m", 2}}}},
      {Family::H, "k, l >= 2",
       "all weights 1, white vertices of degree 2; two black vertices of degrees k and l at distance 2, every other "
       "black vertex a leaf",
       {{{"k", 2}, {"l", 2}}, {{"k", 3}, {"l", 2}}, {{"k", 3}, {"l", 4}}}},
      {Family::I, "k >= 2",
       "all weights 1, white vertices of degree 3; a white center with a black leaf and two black vertices of "
       "degree k, each carrying k - 1 white vertices with two black leaves",
       {{{"k", 2}}, {{"k", 3}}, {{"k", 4}}}},
      {Family::J, "k >= 1",
       "black vertex of degree 4 with a leaf of weight 2 and two paths of weights 1, 1 ending at black vertices "
       "with k leaves of weight 2 each",
       {{{"k", 1}}, {{"k", 2}}, {{"k", 3}}}},
  };
  std::vector<CatalogEntry> out;
  for (const Spec& s : specs) {
    CatalogEntry entry{s.f, s.parameters, s.description, {}};
    for (const auto& p : s.examples) entry.examples.push_back(canonical_code(build_series(s.f, p)));
    out.push_back(std::move(entry));
  }
  for (const auto& [f, text] : sporadic_codes()) {
    out.push_back({f, "none", "sporadic tree", {TreeCode::parse(text)}});
  }
  return out;
}

}  // namespace dessinum
