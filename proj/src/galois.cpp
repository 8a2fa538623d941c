#include "dessinum/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "dessinum/errors.hpp"
#include "dessinum/surgery.hpp"

namespace dessinum {

MonodromyModel MonodromyModel::from_pair(Permutation a, Permutation b) {
  if (a.degree() != b.degree()) throw InvalidInput("a and b must have the same degree");
  MonodromyModel m;
  m.n = a.degree();
  m.c = a.then(b).inverse();
  m.a = std::move(a);
  m.b = std::move(b);
  return m;
}

MonodromyModel to_monodromy(const WeightedTree& input) {
  const WeightedTree tree = canonical_form(input);
  std::vector<int> first(static_cast<std::size_t>(tree.edge_count()));
  int next = 0;
  for (int e = 0; e < tree.edge_count(); ++e) {
    first[static_cast<std::size_t>(e)] = next;
    next += static_cast<int>(tree.weight(e));
  }
  const int n = next;
  std::vector<int> a(static_cast<std::size_t>(n));
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int v = 0; v < tree.vertex_count(); ++v) {
    const bool black = tree.color(v) == Color::Black;
    std::vector<int> around;
    for (int e : tree.rotation(v)) {
      const int f = first[static_cast<std::size_t>(e)];
      const int w = static_cast<int>(tree.weight(e));
      for (int i = 0; i < w; ++i) around.push_back(black ? f + i : f + w - 1 - i);
    }
    auto& img = black ? a : b;
    for (std::size_t i = 0; i < around.size(); ++i) {
      img[static_cast<std::size_t>(around[i])] = around[(i + 1) % around.size()];
    }
  }
  return MonodromyModel::from_pair(Permutation(std::move(a)), Permutation(std::move(b)));
}

std::string tag_name(GroupTag t) {
  switch (t) {
    case GroupTag::Symmetric:
      return "Symmetric";
    case GroupTag::Alternating:
      return "Alternating";
    case GroupTag::Cyclic:
      return "Cyclic";
    case GroupTag::Special:
      return "Special";
    case GroupTag::Imprimitive:
      return "Imprimitive";
  }
  return "?";
}

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long n) {
  if (n < 2) return false;
  long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// n = (q^d - 1)/(q - 1) for a prime power q and d >= 2.
bool is_projective_count(long n) {
  for (long q = 2; q < n; ++q) {
    if (!is_prime_power(q)) continue;
    long sum = 1 + q;
    while (sum < n) sum = sum * q + 1;
    if (sum == n) return true;
  }
  return false;
}

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::string catalog_name(int n, const mpz_class& order) {
  static const std::map<std::pair<int, long>, std::string> catalog = {
      {{5, 10}, "D5"},
      {{6, 60}, "PSL2(5)"},
      {{6, 120}, "PGL2(5)"},
      {{7, 21}, "7:3"},
      {{7, 168}, "PSL3(2)"},
      {{8, 56}, "AGL1(8)"},
      {{8, 168}, "PSL2(7) or AGammaL1(8)"},
      {{8, 336}, "PGL2(7)"},
      {{8, 1344}, "AGL3(2)"},
      {{9, 432}, "AGL2(3)"},
      {{9, 504}, "PSL2(8)"},
      {{9, 1512}, "PGammaL2(8)"},
      {{10, 360}, "PSL2(9)"},
      {{10, 720}, "PGL2(9), M10 or S6"},
      {{10, 1440}, "PGammaL2(9)"},
      {{11, 55}, "11:5"},
      {{11, 660}, "PSL2(11)"},
      {{11, 7920}, "M11"},
      {{12, 660}, "PSL2(11)"},
      {{12, 1320}, "PGL2(11)"},
      {{12, 7920}, "M11"},
      {{12, 95040}, "M12"},
      {{13, 5616}, "PSL3(3)"},
      {{14, 1092}, "PSL2(13)"},
      {{14, 2184}, "PGL2(13)"},
  };
  if (!order.fits_slong_p()) return "";
  const long ord = order.get_si();
  if (auto it = catalog.find({n, ord}); it != catalog.end()) return it->second;
  if (is_prime(n) && ord == static_cast<long>(n) * (n - 1)) return "AGL1(" + std::to_string(n) + ")";
  return "";
}

// Case of the classification of primitive groups (other than S_n, A_n)
// containing an (n - r, 1^r) cycle; empty if none applies.
std::string jones_case(int n, int r, const mpz_class& order) {
  const long ord = order.fits_slong_p() ? order.get_si() : -1;
  if (r == 0) {
    if (is_prime(n) && ord > 0 && (static_cast<long>(n) * (n - 1)) % ord == 0) return "1(a) C_p <= G <= AGL1(p)";
    if (is_projective_count(n)) return "1(b) PGL_d(q) <= G <= PGammaL_d(q)";
    if ((n == 11 && (ord == 660 || ord == 7920)) || (n == 23 && ord == 10200960)) return "1(c) L2(11), M11 or M23";
  } else if (r == 1) {
    if (is_prime_power(n)) return "2(a) AGL_d(q) <= G <= AGammaL_d(q)";
    const long p = n - 1;
    if (p >= 5 && is_prime(p) && (ord == p * (p * p - 1) / 2 || ord == p * (p * p - 1))) {
      return "2(b) L2(p) or PGL2(p)";
    }
    if ((n == 12 && (ord == 7920 || ord == 95040)) || (n == 24 && ord == 244823040)) return "2(c) M11, M12 or M24";
  } else if (r == 2) {
    if (is_prime_power(n - 1)) return "3 PGL2(q) <= G <= PGammaL2(q)";
  }
  return "";
}

// Jordan: a primitive group containing a p-cycle, p prime, p <= n - 3, contains A_n.
bool contains_prime_cycle(const std::vector<Permutation>& gens, int n) {
  std::vector<Permutation> pool = gens;
  pool.push_back(gens[0].then(gens[1]));
  pool.push_back(gens[0].then(gens[0]).then(gens[1]));
  pool.push_back(gens[0].then(gens[1]).then(gens[1]));
  std::mt19937_64 rng(0x5eed);
  Permutation walk = gens[0];
  for (int i = 0; i < 60; ++i) {
    walk = walk.then(gens[rng() % gens.size()]);
    pool.push_back(walk);
  }
  for (const Permutation& g : pool) {
    const long ord = g.order();
    const Partition type = g.cycle_type();
    for (Weight len : type.parts()) {
      const long p = static_cast<long>(len);
      if (!is_prime(p) || p > n - 3) continue;
      const long e = ord / p;
      if (e * p != ord) continue;
      const Permutation h = g.power(e);
      std::size_t moved = 0;
      for (int x = 0; x < n; ++x) moved += h(x) != x;
      if (static_cast<long>(moved) == p) return true;
    }
  }
  return false;
}

}  // namespace

GroupReport group_report(const MonodromyModel& model) {
  const int n = model.n;
  const std::vector<Permutation> gens = model.generators();
  GroupReport rep;
  rep.degree = n;
  rep.transitive = is_transitive(gens, n);
  if (!rep.transitive) throw NotTransitive("the monodromy group is not transitive");
  const auto blocks = find_block_system(gens, n);
  rep.primitive = !blocks.has_value();
  rep.block_size = blocks ? static_cast<int>(blocks->front().size()) : 0;

  if (rep.primitive && n >= 8 && contains_prime_cycle(gens, n)) {
    const bool odd = std::any_of(gens.begin(), gens.end(), [](const Permutation& g) { return g.is_odd(); });
    rep.order = odd ? factorial(n) : factorial(n) / 2;
  } else {
    rep.order = group_order(gens, n);
  }

  const auto ctype = model.c.cycle_type().parts();
  if (std::all_of(ctype.begin() + 1, ctype.end(), [](Weight x) { return x == 1; })) {
    rep.r = n - static_cast<int>(ctype.front());
  }

  const mpz_class full = factorial(n);
  const bool abelian = model.a.then(model.b) == model.b.then(model.a);
  if (rep.order == full) {
    rep.tag = GroupTag::Symmetric;
  } else if (rep.order * 2 == full) {
    rep.tag = GroupTag::Alternating;
  } else if (abelian && std::lcm(model.a.order(), model.b.order()) == n) {
    rep.tag = GroupTag::Cyclic;
  } else if (rep.primitive) {
    rep.tag = GroupTag::Special;
  } else {
    rep.tag = GroupTag::Imprimitive;
  }
  const bool special_like = rep.primitive && rep.tag != GroupTag::Symmetric && rep.tag != GroupTag::Alternating;
  if (special_like) {
    rep.name = catalog_name(n, rep.order);
    if (rep.r >= 0 && n - rep.r >= 2) {
      rep.jones_note = jones_case(n, rep.r, rep.order);
      if (rep.jones_note.empty()) {
        rep.jones_violation = true;
        rep.jones_note = "r=" + std::to_string(rep.r) + " matches no case";
      } else {
        rep.jones_note = "r=" + std::to_string(rep.r) + ", case " + rep.jones_note;
      }
    }
  }
  return rep;
}

bool is_composition(const WeightedTree& tree) { return !group_report(to_monodromy(tree)).primitive; }

MonodromyModel dual_model(const MonodromyModel& model) { return MonodromyModel::from_pair(model.c, model.b); }

bool models_isomorphic(const MonodromyModel& x, const MonodromyModel& y) {
  if (x.n != y.n) return false;
  if (x.a.cycle_type() != y.a.cycle_type() || x.b.cycle_type() != y.b.cycle_type()) return false;
  return find_conjugator(x.generators(), y.generators()).has_value();
}

bool is_self_dual(const WeightedTree& tree) {
  const MonodromyModel m = to_monodromy(tree);
  return models_isomorphic(m, dual_model(m));
}

bool is_self_dual_geometric(const WeightedTree& tree) {
  const Passport pp = passport_of(tree);
  if (pp.r() < 0 || pp.black() != face_partition(pp)) return false;
  if (tree.edge_count() == 1) return tree.weight(0) == 1;
  int center = -1;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.color(v) == Color::Black && tree.degree(v) > 1) {
      if (center >= 0) return false;
      center = v;
    }
  }
  if (center < 0) return false;
  using Branch = std::pair<Weight, Weight>;
  std::vector<Branch> branches;
  for (int e : tree.rotation(center)) {
    const int w = tree.opposite_end(e, center);
    Weight leaves = 0;
    for (int f : tree.rotation(w)) {
      if (f == e) continue;
      const int x = tree.opposite_end(f, w);
      if (!tree.is_leaf(x) || tree.weight(f) != 1) return false;
      ++leaves;
    }
    branches.emplace_back(tree.weight(e), leaves);
  }
  std::vector<Branch> dual;
  for (auto [s, k] : branches) dual.emplace_back(k + 1, s - 1);
  // The dual map's rotation at the center runs the opposite way.
  std::reverse(dual.begin(), dual.end());
  for (std::size_t shift = 0; shift < branches.size(); ++shift) {
    std::rotate(dual.begin(), dual.begin() + 1, dual.end());
    if (dual == branches) return true;
  }
  return false;
}

InvariantSignature signature_of(const WeightedTree& tree) {
  InvariantSignature sig;
  sig.passport = passport_of(tree);
  sig.automorphisms = automorphism_order(tree);
  const MonodromyModel m = to_monodromy(tree);
  const GroupReport g = group_report(m);
  sig.monodromy_order = g.order;
  sig.primitive = g.primitive;
  sig.self_dual = models_isomorphic(m, dual_model(m));
  return sig;
}

std::string to_key_values(const InvariantSignature& sig) {
  std::ostringstream os;
  os << "passport=" << sig.passport.to_string() << '\n'
     << "automorphisms=" << sig.automorphisms << '\n'
     << "monodromy_order=" << sig.monodromy_order.get_str() << '\n'
     << "primitive=" << (sig.primitive ? "true" : "false") << '\n'
     << "self_dual=" << (sig.self_dual ? "true" : "false") << '\n';
  return os.str();
}

OrbitReport orbit_report(const Passport& passport, int jobs) {
  OrbitReport rep;
  rep.passport = passport;
  EnumerationOptions opts;
  opts.jobs = jobs;
  const auto classes = enumerate_classes(passport, opts);
  rep.tree_count = classes.size();
  for (const TreeClass& tc : classes) {
    const WeightedTree tree = tree_from_code(tc.code);
    const InvariantSignature sig = signature_of(tree);
    auto it = std::find_if(rep.classes.begin(), rep.classes.end(),
                           [&](const SignatureClass& c) { return c.signature == sig; });
    if (it == rep.classes.end()) {
      rep.classes.push_back({sig, {}, false, false});
      it = rep.classes.end() - 1;
    }
    it->members.push_back(tc.code);
    if (is_self_dual_geometric(tree) != sig.self_dual) it->self_dual_mismatch = true;
  }
  for (SignatureClass& c : rep.classes) {
    if (c.members.size() != 2) continue;
    const WeightedTree t0 = tree_from_code(c.members[0]);
    const WeightedTree t1 = tree_from_code(c.members[1]);
    const WeightedTree m0 = reflect(t0);
    c.mirror_pair = !is_isomorphic(t0, m0) && is_isomorphic(m0, t1);
  }
  return rep;
}

}  // namespace dessinum
