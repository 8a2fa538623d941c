#include "dessinum/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "dessinum/counting.hpp"
#include "dessinum/dz_bounds.hpp"
#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"
#include "dessinum/galois.hpp"
#include "dessinum/surgery.hpp"
#include "dessinum/tree_code.hpp"
#include "dessinum/unitrees.hpp"

namespace dessinum {

namespace {

struct Outcome {
  bool passed = true;
  bool known_conflict = false;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!passed) detail << "; ";
    passed = false;
    detail << what;
  }
};

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

Weight bound(const AcceptanceOptions& o, Weight full) { return o.max_weight > 0 ? std::min(full, o.max_weight) : full; }

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::vector<int> sorted_auts(const std::vector<TreeClass>& classes) {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(c.automorphisms);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightedTree> trees_of(const std::vector<TreeClass>& classes) {
  std::vector<WeightedTree> out;
  for (const auto& c : classes) out.push_back(tree_from_code(c.code));
  return out;
}

// Number of rootings of each class: edges / automorphisms.
void c1_rooted(Outcome& o, const AcceptanceOptions& opt) {
  const std::vector<long> expect{1, 1, 3, 10, 36, 137, 543, 2219, 9285};
  for (long n = 0; n <= 8; ++n) {
    if (count_rooted(n) != expect[static_cast<std::size_t>(n)]) {
      o.fail("a_" + std::to_string(n) + " = " + count_rooted(n).get_str());
    }
  }
  for (long n = 1; n <= 8; ++n) {
    mpz_class rooted = 0;
    for (const auto& c : enumerate_weight(n, {0, opt.jobs})) {
      rooted += static_cast<long>(c.code.tokens.size() / 2) / c.automorphisms;
    }
    if (rooted != count_rooted(n)) o.fail("brute force at n=" + std::to_string(n) + " gives " + rooted.get_str());
  }
  if (o.passed) o.detail << "a_0..a_8 = 1,1,3,10,36,137,543,2219,9285; brute force agrees for n <= 8";
}

void c2_edges(Outcome& o, const AcceptanceOptions& opt) {
  const std::vector<long> b4{1, 6, 15, 14};
  for (long m = 1; m <= 4; ++m) {
    if (count_rooted_by_edges(4, m) != b4[static_cast<std::size_t>(m - 1)]) o.fail("b_{" + std::to_string(m) + ",4}");
  }
  for (long n = 1; n <= 8; ++n) {
    std::vector<mpz_class> by_m(static_cast<std::size_t>(n + 1), 0);
    for (const auto& c : enumerate_weight(n, {0, opt.jobs})) {
      const long m = static_cast<long>(c.code.tokens.size() / 2);
      by_m[static_cast<std::size_t>(m)] += m / c.automorphisms;
    }
    for (long m = 1; m <= n; ++m) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(m - 1));
      mpz_class cat;
      mpz_bin_uiui(cat.get_mpz_t(), static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
      cat /= m + 1;
      const mpz_class formula = binom * cat;
      if (count_rooted_by_edges(n, m) != formula || by_m[static_cast<std::size_t>(m)] != formula) {
        o.fail("b_{" + std::to_string(m) + "," + std::to_string(n) + "}: formula " + formula.get_str() + ", brute force " +
               by_m[static_cast<std::size_t>(m)].get_str());
      }
    }
  }
  if (o.passed) o.detail << "b_{m,4} = 1,6,15,14; C(n-1,m-1) Cat_m matches brute force for n <= 8";
}

void c3_mass(Outcome& o, const AcceptanceOptions& opt) {
  for (long n = 1; n <= 7; ++n) {
    mpq_class sum = 0;
    for (const auto& c : enumerate_weight(n, {0, opt.jobs})) sum += mpq_class(1, c.automorphisms);
    sum.canonicalize();
    if (sum != mass_count(n)) o.fail("n=" + std::to_string(n) + ": " + sum.get_str() + " vs " + mass_count(n).get_str());
  }
  if (o.passed) o.detail << "sum of 1/|Aut| equals c_n for n <= 7 (c_7 = " << mass_count(7).get_str() << ")";
}

void c4_special(Outcome& o, const AcceptanceOptions& opt) {
  const auto classes = enumerate_classes(Passport::parse("7 1|2^3 1^2"), {0, opt.jobs});
  if (classes.size() != 6) o.fail(std::to_string(classes.size()) + " trees instead of 6");
  int small = 0, full = 0;
  for (const auto& t : trees_of(classes)) {
    const auto order = group_report(to_monodromy(t)).order;
    small += order == 336;
    full += order == 40320;
  }
  if (small != 1 || full != 5) o.fail("orders: " + std::to_string(small) + " of 336, " + std::to_string(full) + " of 40320");
  if (o.passed) o.detail << "6 trees; one group of order 336, five of order 40320";
}

void c5_selfdual(Outcome& o, const AcceptanceOptions& opt) {
  const auto classes = enumerate_classes(Passport::parse("6 1^2|3^2 1^2"), {0, opt.jobs});
  if (classes.size() != 5) o.fail(std::to_string(classes.size()) + " trees instead of 5");
  int small = 0, dual = 0;
  for (const auto& t : trees_of(classes)) {
    small += group_report(to_monodromy(t)).order == 336;
    dual += is_self_dual(t);
  }
  if (small != 1) o.fail(std::to_string(small) + " groups of order 336");
  if (dual != static_cast<int>(classes.size())) o.fail(std::to_string(dual) + " self-dual");
  if (o.passed) o.detail << "5 trees, one group of order 336, all self-dual";
}

void c6_splittings(Outcome& o, const AcceptanceOptions& opt) {
  struct Case {
    const char* passport;
    std::size_t trees;
    std::vector<int> auts;  // empty: only "exactly one symmetric"
  };
  const std::vector<Case> cases{{"7^3|3^7", 2, {1, 3}},
                                {"8^3|3^8", 2, {}},
                                {"10^3|3^10", 3, {1, 2, 3}},
                                {"5^4|4^5", 3, {1, 2, 4}},
                                {"6^5|5^6", 4, {1, 2, 2, 5}}};
  bool other_failed = false;
  bool conflict_seen = false;
  for (const Case& c : cases) {
    const auto classes = enumerate_classes(Passport::parse(c.passport), {0, opt.jobs});
    const auto auts = sorted_auts(classes);
    bool ok = classes.size() == c.trees;
    if (c.auts.empty()) {
      ok = ok && std::count_if(auts.begin(), auts.end(), [](int a) { return a > 1; }) == 1;
    } else {
      ok = ok && auts == c.auts;
    }
    o.detail << (o.detail.tellp() > 0 ? "; " : "") << c.passport << ": " << classes.size() << " trees " << join(auts);
    if (ok) continue;
    // Documented disagreement: an independent search also finds six trees here.
    if (std::string(c.passport) == "6^5|5^6" && auts == std::vector<int>{1, 1, 1, 2, 2, 5}) {
      conflict_seen = true;
      o.detail << " (expected 4 trees {1,2,2,5})";
    } else {
      other_failed = true;
      o.detail << " (expected " << c.trees << " trees" << (c.auts.empty() ? "" : " " + join(c.auts)) << ")";
    }
  }
  o.passed = !other_failed && !conflict_seen;
  o.known_conflict = !other_failed && conflict_seen;
}

void c7_flagship(Outcome& o, const AcceptanceOptions& opt) {
  const Passport pp = Passport::parse("3^10|2^15");
  const auto classes = enumerate_classes(pp, {0, opt.jobs});
  const auto auts = sorted_auts(classes);
  if (classes.size() != 4) o.fail(std::to_string(classes.size()) + " trees instead of 4");
  if (auts != std::vector<int>{1, 2, 2, 3}) o.fail("automorphism orders " + join(auts));
  const OrbitReport rep = orbit_report(pp, opt.jobs);
  std::vector<int> sizes;
  bool mirror = false;
  for (const auto& c : rep.classes) {
    sizes.push_back(static_cast<int>(c.members.size()));
    if (c.members.size() == 2) mirror = c.mirror_pair;
  }
  std::vector<int> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<int>{1, 1, 2}) o.fail("signature classes of sizes " + join(sizes));
  if (!mirror) o.fail("the two-element class is not flagged as a mirror pair");
  if (o.passed) o.detail << "4 trees, |Aut| {3,2,2,1}; classes of sizes " << join(sizes) << ", pair flagged chiral";
}

void c8_unitrees(Outcome& o, const AcceptanceOptions& opt) {
  const Weight top = bound(opt, 12);
  std::size_t passports = 0, unitrees = 0, trees = 0;
  for (Weight n = 1; n <= top; ++n) {
    const auto classes = enumerate_weight(n, {0, opt.jobs});
    std::vector<Passport> pp(classes.size());
    std::vector<char> matched(classes.size(), 0);
    parallel_for(classes.size(), opt.jobs, [&](std::size_t i) {
      const WeightedTree t = tree_from_code(classes[i].code);
      pp[i] = passport_of(t);
      matched[i] = match_family(t).has_value();
    });
    std::map<Passport, std::pair<int, int>> tally;  // trees, matched trees
    for (std::size_t i = 0; i < classes.size(); ++i) {
      auto& [count, hits] = tally[pp[i]];
      ++count;
      hits += matched[i];
    }
    trees += classes.size();
    for (const auto& [p, ch] : tally) {
      ++passports;
      const bool unique = ch.first == 1;
      unitrees += unique;
      if (is_unitree_bruteforce(p) != unique) o.fail("is_unitree_bruteforce disagrees on " + p.to_string());
      if (unique && ch.second == 0) o.fail("unitree " + p.to_string() + " matches no family");
      if (!unique && ch.second > 0) o.fail(p.to_string() + " has " + std::to_string(ch.first) + " trees but one matches");
    }
  }
  if (o.passed) {
    o.detail << "n <= " << top << ": " << passports << " realizable passports, " << trees << " trees, " << unitrees
             << " unitrees, no disagreement";
  }
}

void c9_realizability(Outcome& o, const AcceptanceOptions& opt) {
  const Weight top = bound(opt, 10);
  std::size_t total = 0, realizable = 0;
  for (Weight n = 1; n <= top; ++n) {
    const auto all = passports_of_weight(n);
    std::vector<std::string> errors(all.size());
    std::vector<char> real(all.size(), 0);
    parallel_for(all.size(), opt.jobs, [&](std::size_t i) {
      const Passport& p = all[i];
      const bool nonempty = count_classes(p, 1) > 0;
      const bool bound_ok = is_realizable_as_tree(p);
      bool witness_ok = false;
      try {
        witness_ok = passport_of(construct_witness(p)) == p;
        if (!witness_ok) errors[i] = "witness for " + p.to_string() + " has the wrong passport";
      } catch (const NotRealizable&) {
      }
      if (nonempty != bound_ok || bound_ok != witness_ok) {
        if (errors[i].empty()) errors[i] = "disagreement on " + p.to_string();
      }
      real[i] = bound_ok;
    });
    total += all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
      realizable += static_cast<std::size_t>(real[i]);
      if (!errors[i].empty()) o.fail(errors[i]);
    }
  }
  if (o.passed) o.detail << "n <= " << top << ": " << total << " passports, " << realizable << " realizable, no disagreement";
}

void c10_bounds(Outcome& o, const AcceptanceOptions&) {
  for (int k = 1; k <= 6; ++k) {
    const Passport p(Partition(std::vector<Weight>(static_cast<std::size_t>(2 * k), 3)),
                     Partition(std::vector<Weight>(static_cast<std::size_t>(3 * k), 2)));
    const BoundReport r = min_deg_R(p);
    if (r.min_deg_R != k + 1) o.fail("k=" + std::to_string(k) + ": " + std::to_string(r.min_deg_R));
  }
  const BoundReport weak = min_deg_R(Passport::parse("4 2|2^3"));
  if (weak.regime != Regime::Weak || weak.min_deg_R != 3) o.fail("(4 2|2^3) gives " + regime_name(weak.regime));
  if (o.passed) o.detail << "min deg R = k+1 for (3^2k|2^3k), k = 1..6; (4 2|2^3) WEAK, 3";
}

void c11_gj(Outcome& o, const AcceptanceOptions& opt) {
  const Weight top = bound(opt, 7);
  std::size_t checked = 0;
  for (Weight n = 1; n <= top; ++n) {
    for (const Passport& p : passports_of_weight(n)) {
      if (static_cast<Weight>(p.p() + p.q()) != n + 1) continue;
      mpq_class sum = 0;
      for (const auto& c : enumerate_classes(p, {0, opt.jobs})) sum += mpq_class(1, c.automorphisms);
      sum.canonicalize();
      const mpq_class gj = gj_count({p.black(), p.white()});
      ++checked;
      if (sum != gj) o.fail(p.to_string() + ": " + sum.get_str() + " vs " + gj.get_str());
    }
  }
  if (o.passed) o.detail << checked << " ordinary passports with n <= " << top << " agree";
}

void c12_surgery(Outcome& o, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const long target = 10000;
  long exchanges = 0, round_trips = 0, violations = 0;
  for (long iter = 0; iter < 50 * target && (exchanges < target || round_trips < target); ++iter) {
    const WeightedTree t = random_tree(rng, 20);
    const Passport pp = passport_of(t);
    const auto loci = weight_exchange_loci(t);
    if (!loci.empty() && exchanges < target) {
      const auto& l = loci[rng() % loci.size()];
      if (passport_of(weight_exchange_at(t, l)) != pp) ++violations;
      ++exchanges;
    }
    const auto mids = sts_rip_loci(t);
    if (!mids.empty() && round_trips < target) {
      const RipResult r = sts_rip_at(t, mids[rng() % mids.size()]);
      const WeightedTree back = sts_stitch_at(r.first, r.first_edge, r.second, r.second_edge).tree;
      if (passport_of(back) != pp || !is_isomorphic(back, t)) ++violations;
      ++round_trips;
    }
  }
  if (exchanges < target || round_trips < target) o.fail("could not draw enough random loci");
  if (violations > 0) o.fail(std::to_string(violations) + " random moves broke the passport or the round trip");

  // Every move on a unitree must give the same tree back.
  long fixed_moves = 0, fixed_violations = 0, unitrees = 0;
  for (Weight n = 1; n <= bound(opt, 12); ++n) {
    for (const Passport& p : passports_of_weight(n)) {
      if (!is_unitree_bruteforce(p)) continue;
      ++unitrees;
      const WeightedTree t = enumerate_passport(p).front();
      for (const auto& l : weight_exchange_loci(t)) {
        ++fixed_moves;
        if (!is_isomorphic(weight_exchange_at(t, l), t)) ++fixed_violations;
      }
      for (int mid : sts_rip_loci(t)) {
        const RipResult r = sts_rip_at(t, mid);
        for (int e = 0; e < r.first.edge_count(); ++e) {
          for (int f = 0; f < r.second.edge_count(); ++f) {
            if (r.first.weight(e) == r.second.weight(f)) continue;
            ++fixed_moves;
            if (!is_isomorphic(sts_stitch_at(r.first, e, r.second, f).tree, t)) ++fixed_violations;
          }
        }
      }
    }
  }
  if (fixed_violations > 0) o.fail(std::to_string(fixed_violations) + " moves changed a unitree");
  if (o.passed) {
    o.detail << exchanges << " exchanges and " << round_trips << " rip/stitch round trips on random trees; " << fixed_moves
             << " moves on " << unitrees << " unitrees, all fixed";
  }
}

void c13_asymptotics(Outcome& o, const AcceptanceOptions&) {
  const double ratio = rooted_asymptotic_ratio(200);
  if (!(std::abs(ratio - 1.0) < 0.02)) o.fail("ratio " + std::to_string(ratio));
  if (o.passed) o.detail << "a_200 / asymptotic = " << ratio;
}

void c14_jones(Outcome& o, const AcceptanceOptions& opt) {
  const Weight top = bound(opt, 10);
  std::atomic<long> special{0}, bad{0};
  std::size_t trees = 0;
  for (Weight n = 1; n <= top; ++n) {
    const auto classes = enumerate_weight(n, {0, opt.jobs});
    trees += classes.size();
    parallel_for(classes.size(), opt.jobs, [&](std::size_t i) {
      const WeightedTree t = tree_from_code(classes[i].code);
      const GroupReport rep = group_report(to_monodromy(t));
      if (rep.tag != GroupTag::Special) return;
      ++special;
      if (passport_of(t).r() > 2 || rep.jones_violation) ++bad;
    });
  }
  if (bad > 0) o.fail(std::to_string(bad.load()) + " special groups violate r <= 2");
  if (o.passed) o.detail << trees << " trees with n <= " << top << ", " << special.load() << " special groups, all r <= 2";
}

struct Entry {
  const char* title;
  double budget;
  void (*run)(Outcome&, const AcceptanceOptions&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"rooted counts", 30, c1_rooted},
      {"edge-stratified counts", 30, c2_edges},
      {"mass formula", 60, c3_mass},
      {"passport (7 1|2^3 1^2)", 10, c4_special},
      {"passport (6 1^2|3^2 1^2)", 10, c5_selfdual},
      {"orbit splittings", 60, c6_splittings},
      {"passport (3^10|2^15)", 120, c7_flagship},
      {"unitree sweep", 600, c8_unitrees},
      {"realizability sweep", 300, c9_realizability},
      {"degree bounds", 1, c10_bounds},
      {"cactus formula", 120, c11_gj},
      {"surgery properties", 600, c12_surgery},
      {"asymptotics", 1, c13_asymptotics},
      {"primitive groups and r", 600, c14_jones},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw OutOfRange("criterion " + std::to_string(id) + " does not exist");
  const Entry& e = entries()[static_cast<std::size_t>(id - 1)];
  CriterionResult res;
  res.id = id;
  res.title = e.title;
  res.budget_seconds = e.budget;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    e.run(o, options);
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.passed = o.passed;
  res.known_conflict = o.known_conflict;
  res.detail = o.detail.str();
  if (res.seconds > res.budget_seconds) {
    res.passed = false;
    res.known_conflict = false;
    res.detail += "; over the time budget of " + std::to_string(static_cast<int>(res.budget_seconds)) + " s";
  }
  return res;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  std::string status = r.passed ? "PASS" : (r.known_conflict ? "FAIL (known conflict)" : "FAIL");
  return status + "  " + std::to_string(r.id) + "  " + r.title + ": " + r.detail + " (" + time + ")";
}

}  // namespace dessinum
