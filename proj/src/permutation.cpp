#include "dessinum/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dessinum/errors.hpp"

namespace dessinum {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw InvalidInput("not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = next(images_[x]);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::power(long k) const {
  const long ord = order();
  k %= ord;
  if (k < 0) k += ord;
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s)) continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<Weight> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    Weight len = 0;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

long Permutation::order() const {
  long ord = 1;
  const Partition type = cycle_type();
  for (Weight len : type.parts()) ord = std::lcm(ord, static_cast<long>(len));
  return ord;
}

bool Permutation::is_odd() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 1;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad permutation '" + text + "': " + why);
  };
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) fail("missing ')'");
    std::vector<int> cyc;
    std::stringstream ss(text.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      int v = 0;
      try {
        v = std::stoi(item);
      } catch (const std::exception&) {
        fail("bad point '" + item + "'");
      }
      if (v < 1 || v > n) fail("point " + item + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(v - 1)]) fail("point " + item + " repeated");
      used[static_cast<std::size_t>(v - 1)] = 1;
      cyc.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

namespace {

struct Level {
  int point = 0;
  std::vector<Permutation> gens;
  std::vector<int> orbit;
  std::vector<std::optional<Permutation>> transversal;  // u with u(point) = x

  void rebuild(int degree) {
    transversal.assign(static_cast<std::size_t>(degree), std::nullopt);
    transversal[static_cast<std::size_t>(point)] = Permutation::identity(degree);
    orbit = {point};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const int y = orbit[i];
      for (const Permutation& s : gens) {
        const int z = s(y);
        if (!transversal[static_cast<std::size_t>(z)]) {
          transversal[static_cast<std::size_t>(z)] = transversal[static_cast<std::size_t>(y)]->then(s);
          orbit.push_back(z);
        }
      }
    }
  }
};

int first_moved(const Permutation& g) {
  for (int x = 0; x < g.degree(); ++x) {
    if (g(x) != x) return x;
  }
  return -1;
}

}  // namespace

mpz_class group_order(const std::vector<Permutation>& gens, int degree) {
  std::vector<Level> levels;
  for (const Permutation& g : gens) {
    if (g.is_identity()) continue;
    if (levels.empty()) {
      levels.emplace_back();
      levels.back().point = first_moved(g);
    }
    levels.front().gens.push_back(g);
  }
  if (levels.empty()) return 1;
  // Every generator must move some base point.
  const std::vector<Permutation> all = levels.front().gens;
  for (const Permutation& g : all) {
    bool moves = false;
    for (const Level& l : levels) moves = moves || g(l.point) != l.point;
    if (!moves) {
      levels.emplace_back();
      levels.back().point = first_moved(g);
    }
  }
  for (std::size_t l = 1; l < levels.size(); ++l) {
    for (const Permutation& g : all) {
      bool fixes = true;
      for (std::size_t k = 0; k < l; ++k) fixes = fixes && g(levels[k].point) == levels[k].point;
      if (fixes) levels[l].gens.push_back(g);
    }
  }
  for (Level& l : levels) l.rebuild(degree);

  auto sift = [&](Permutation h, std::size_t start) {
    for (std::size_t l = start; l < levels.size(); ++l) {
      const int x = h(levels[l].point);
      const auto& u = levels[l].transversal[static_cast<std::size_t>(x)];
      if (!u) return std::make_pair(h, l);
      h = h.then(u->inverse());
    }
    return std::make_pair(h, levels.size());
  };

  std::size_t i = levels.size();
  while (i > 0) {
    const std::size_t li = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels[li].orbit.size() && !restarted; ++oi) {
      const int p = levels[li].orbit[oi];
      for (std::size_t si = 0; si < levels[li].gens.size() && !restarted; ++si) {
        const Permutation& s = levels[li].gens[si];
        const Permutation& up = *levels[li].transversal[static_cast<std::size_t>(p)];
        const Permutation& uq = *levels[li].transversal[static_cast<std::size_t>(s(p))];
        const Permutation h = up.then(s).then(uq.inverse());
        auto [res, j] = sift(h, li + 1);
        if (res.is_identity()) continue;
        if (j == levels.size()) {
          levels.emplace_back();
          levels.back().point = first_moved(res);
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].gens.push_back(res);
          levels[l].rebuild(degree);
        }
        i = j + 1;
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  mpz_class order = 1;
  for (const Level& l : levels) order *= static_cast<unsigned long>(l.orbit.size());
  return order;
}

bool is_transitive(const std::vector<Permutation>& gens, int degree) {
  if (degree <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Permutation& g : gens) {
      const int z = g(queue[i]);
      if (!seen[static_cast<std::size_t>(z)]) {
        seen[static_cast<std::size_t>(z)] = 1;
        queue.push_back(z);
      }
    }
  }
  return static_cast<int>(queue.size()) == degree;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

UnionFind block_closure(const std::vector<Permutation>& gens, int degree, int x, int y) {
  UnionFind uf(degree);
  std::vector<std::pair<int, int>> pending;
  if (uf.unite(x, y)) pending.emplace_back(x, y);
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    for (const Permutation& g : gens) {
      if (uf.unite(g(a), g(b))) pending.emplace_back(g(a), g(b));
    }
  }
  return uf;
}

}  // namespace

std::vector<int> minimal_block(const std::vector<Permutation>& gens, int degree, int x, int y) {
  UnionFind uf = block_closure(gens, degree, x, y);
  std::vector<int> block;
  const int root = uf.find(x);
  for (int v = 0; v < degree; ++v) {
    if (uf.find(v) == root) block.push_back(v);
  }
  return block;
}

std::optional<std::vector<std::vector<int>>> find_block_system(const std::vector<Permutation>& gens, int degree) {
  // Try partners in order; the first proper closure gives a system with the smallest block through {0, y}.
  std::optional<std::vector<std::vector<int>>> best;
  for (int y = 1; y < degree; ++y) {
    UnionFind uf = block_closure(gens, degree, 0, y);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(degree));
    for (int v = 0; v < degree; ++v) classes[static_cast<std::size_t>(uf.find(v))].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& c : classes) {
      if (!c.empty()) blocks.push_back(std::move(c));
    }
    if (blocks.size() == 1) continue;
    if (!best || blocks.front().size() < best->front().size()) best = std::move(blocks);
  }
  return best;
}

std::optional<Permutation> find_conjugator(const std::vector<Permutation>& from, const std::vector<Permutation>& to,
                                           int anchor) {
  if (from.size() != to.size() || from.empty()) return std::nullopt;
  const int n = from.front().degree();
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  img[0] = anchor;
  hit[static_cast<std::size_t>(anchor)] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < from.size(); ++k) {
      const int gx = from[k](x);
      const int want = to[k](img[static_cast<std::size_t>(x)]);
      int& slot = img[static_cast<std::size_t>(gx)];
      if (slot < 0) {
        if (hit[static_cast<std::size_t>(want)]) return std::nullopt;
        slot = want;
        hit[static_cast<std::size_t>(want)] = 1;
        queue.push_back(gx);
      } else if (slot != want) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return std::nullopt;
  return Permutation(std::move(img));
}

std::optional<Permutation> find_conjugator(const std::vector<Permutation>& from, const std::vector<Permutation>& to) {
  if (from.empty()) return std::nullopt;
  for (int j = 0; j < from.front().degree(); ++j) {
    if (auto s = find_conjugator(from, to, j)) return s;
  }
  return std::nullopt;
}

int centralizer_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  int count = 0;
  for (int j = 0; j < gens.front().degree(); ++j) {
    if (find_conjugator(gens, gens, j)) ++count;
  }
  return count;
}

}  // namespace dessinum
