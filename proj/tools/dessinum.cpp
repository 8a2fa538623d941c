#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dessinum/acceptance.hpp"
#include "dessinum/counting.hpp"
#include "dessinum/dz_bounds.hpp"
#include "dessinum/enumeration.hpp"
#include "dessinum/errors.hpp"
#include "dessinum/galois.hpp"
#include "dessinum/render.hpp"
#include "dessinum/surgery.hpp"
#include "dessinum/tree_code.hpp"
#include "dessinum/unitrees.hpp"

using namespace dessinum;
using json = nlohmann::ordered_json;

namespace {

int default_jobs() {
  if (const char* env = std::getenv("DESSINUM_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("DESSINUM_JOBS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

std::string code_of(const WeightedTree& t) { return canonical_code(t).to_string(); }

// Edge indices on the command line refer to the tree decoded from --tree,
// i.e. edges numbered in the order of their x tokens.
WeightedTree read_tree(const std::string& text) { return tree_from_code(TreeCode::parse(text)); }

// Accepts bare tree codes and the JSON lines printed by `enumerate`.
std::vector<std::string> read_stdin_codes() {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '{') {
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON input line: ") + e.what());
      }
      if (!j.contains("code") || !j["code"].is_string()) throw ParseError("JSON input line has no string field 'code'");
      out.push_back(j["code"].get<std::string>());
    } else {
      out.push_back(line.substr(first));
    }
  }
  return out;
}

std::vector<std::string> tree_inputs(const std::string& tree, bool from_stdin) {
  if (from_stdin) return read_stdin_codes();
  if (tree.empty()) throw ParseError("give a tree with --tree or --stdin");
  return {tree};
}

json group_json(const GroupReport& g) {
  json j;
  j["degree"] = g.degree;
  j["order"] = g.order.get_str();
  j["transitive"] = g.transitive;
  j["primitive"] = g.primitive;
  j["block_size"] = g.block_size;
  j["tag"] = tag_name(g.tag);
  j["name"] = g.name;
  j["r"] = g.r;
  if (!g.jones_note.empty()) j["jones_note"] = g.jones_note;
  j["jones_violation"] = g.jones_violation;
  return j;
}

json params_json(const FamilyParams& params) {
  json j = json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

json tag_json(const std::optional<FamilyTag>& tag) {
  if (!tag) return nullptr;
  json j;
  j["family"] = family_name(tag->family);
  j["params"] = params_json(tag->params);
  j["color_swapped"] = tag->color_swapped;
  j["scale"] = tag->scale;
  j["tag"] = tag->to_string();
  return j;
}

json invariants_json(const WeightedTree& t) {
  const Passport pp = passport_of(t);
  const GroupReport g = group_report(to_monodromy(t));
  json j;
  j["code"] = code_of(t);
  j["passport"] = pp.to_string();
  j["faces"] = face_partition(pp).to_string();
  j["weights"] = weight_distribution(t).to_string();
  j["edges"] = t.edge_count();
  j["n"] = t.total_weight();
  j["diameter"] = diameter(t);
  j["automorphisms"] = automorphism_order(t);
  j["group"] = group_json(g);
  j["composition"] = !g.primitive;
  j["self_dual"] = is_self_dual(t);
  j["family"] = tag_json(match_family(t));
  return j;
}

json catalog_json() {
  json out = json::array();
  for (const CatalogEntry& e : family_catalog()) {
    json j;
    j["family"] = family_name(e.family);
    j["sporadic"] = is_sporadic(e.family);
    j["parameters"] = e.parameters;
    j["description"] = e.description;
    j["examples"] = json::array();
    for (const TreeCode& c : e.examples) j["examples"].push_back(c.to_string());
    out.push_back(j);
  }
  return out;
}

void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& r : rows) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << r.first << r.second << "\n";
}

// Flattens one level of nesting into "a.b" keys for the table view.
void print_json_as_table(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) rows.emplace_back(k + "." + k2, v2.is_string() ? v2.get<std::string>() : v2.dump());
    } else {
      rows.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  print_table(rows);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw ParseError("--format " + format + " is not available here (use " + list + ")");
}

struct Common {
  std::string passport;
  std::string tree;
  bool from_stdin = false;
  std::string format = "json";
  int jobs = 1;
  std::uint64_t seed = 0;
  Weight max_weight = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted bicolored plane trees: enumeration, bounds, unitrees and monodromy"};
  app.require_subcommand(1);
  Common c;
  try {
    c.jobs = default_jobs();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto formats = CLI::IsMember({"json", "table", "dot", "svg", "kv"});
  auto add_passport = [&](CLI::App* sub) { return sub->add_option("--passport", c.passport, "passport, e.g. \"7 1|2^3 1^2\""); };
  auto add_tree = [&](CLI::App* sub) {
    sub->add_option("--tree", c.tree, "tree code, e.g. \"root=B; x2 x1 y1 y2\"");
    sub->add_flag("--stdin", c.from_stdin, "read trees from standard input, one per line");
  };
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", c.format, "json|table|dot|svg")->check(formats); };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", c.jobs, "worker threads (default $DESSINUM_JOBS or 1)")->check(CLI::PositiveNumber);
  };

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all trees of a passport (or of a total weight)");
  Weight enum_weight = 0;
  std::size_t enum_limit = 0;
  add_passport(enumerate);
  enumerate->add_option("--weight", enum_weight, "every tree of this total weight")->check(CLI::PositiveNumber);
  enumerate->add_option("--limit", enum_limit, "stop after this many trees");
  add_format(enumerate);
  add_jobs(enumerate);

  // count
  auto* count = app.add_subcommand("count", "closed-form and brute-force counts");
  bool rooted = false, mass = false, gj = false;
  long weight = -1, edges = 0;
  count->add_flag("--rooted", rooted, "a_n, or b_{m,n} with --edges");
  count->add_flag("--mass", mass, "sum of 1/|Aut| over weight-n trees");
  count->add_flag("--gj", gj, "cactus formula for --passport");
  count->add_option("--weight", weight, "total weight n")->check(CLI::NonNegativeNumber);
  count->add_option("--edges", edges, "number of edges m")->check(CLI::PositiveNumber);
  add_passport(count);
  add_format(count);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "minimum degree of R = P - Q and realizability");
  add_passport(bounds);
  add_format(bounds);

  // construct
  auto* construct = app.add_subcommand("construct", "a witness tree (or forest) for a passport");
  bool forest = false;
  add_passport(construct);
  construct->add_flag("--forest", forest, "print the forest before stitching");
  add_format(construct);

  // classify
  auto* classify = app.add_subcommand("classify", "unitree family of a tree, or the family catalog");
  bool catalog = false;
  add_tree(classify);
  add_passport(classify);
  classify->add_flag("--catalog", catalog, "print the family catalog");
  add_format(classify);

  // invariants
  auto* invariants = app.add_subcommand("invariants", "passport, symmetry, monodromy group and family of trees");
  add_tree(invariants);
  add_format(invariants);

  // orbit-report
  auto* orbit = app.add_subcommand("orbit-report", "trees of a passport grouped by invariant signature");
  add_passport(orbit);
  add_format(orbit);
  add_jobs(orbit);

  // transform
  auto* transform = app.add_subcommand("transform", "swap, reflect, scale, reduce, exchange, rip, stitch");
  std::string op;
  std::string tree2;
  Weight factor = 1;
  std::vector<int> edge_args;
  bool list_loci = false;
  transform->add_option("op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"swap", "reflect", "scale", "reduce", "exchange", "rip", "stitch"}));
  add_tree(transform);
  transform->add_option("--tree2", tree2, "second tree for stitch");
  transform->add_option("--factor", factor, "scale factor")->check(CLI::PositiveNumber);
  transform->add_option("--edges", edge_args, "edge indices (x-token order): 3 for exchange, 1 for rip, 2 for stitch");
  transform->add_flag("--loci", list_loci, "list where exchange or rip applies");
  add_format(transform);

  // render
  auto* render = app.add_subcommand("render", "DOT or SVG drawing of a tree");
  bool implicit_white = false;
  std::string output;
  add_tree(render);
  render->add_option("--format", c.format, "dot|svg")->check(CLI::IsMember({"dot", "svg"}));
  render->add_flag("--implicit-white", implicit_white, "draw black vertices only (all white degrees must be 2)");
  render->add_option("--seed", c.seed, "layout seed");
  render->add_option("-o,--output", output, "write to this file instead of stdout");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  std::vector<int> only;
  add_jobs(selftest);
  selftest->add_option("--seed", c.seed, "seed for the randomized checks")->default_val(1);
  selftest->add_option("--max-weight", c.max_weight, "cap on the exhaustive sweeps")->check(CLI::NonNegativeNumber);
  selftest->add_option("--criterion", only, "run only these criteria")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto passport = [&]() {
      if (c.passport.empty()) throw ParseError("--passport is required");
      return Passport::parse(c.passport);
    };

    if (*enumerate) {
      require_format(c.format, {"json", "table"});
      std::vector<TreeClass> classes;
      if (enum_weight > 0) {
        classes = enumerate_weight(enum_weight, {enum_limit, c.jobs});
      } else {
        classes = enumerate_classes(passport(), {enum_limit, c.jobs});
      }
      std::size_t i = 0;
      for (const auto& tc : classes) {
        ++i;
        if (c.format == "table") {
          std::cout << std::setw(4) << i << "  aut=" << tc.automorphisms << "  " << tc.code.to_string() << "\n";
        } else {
          json j;
          j["code"] = tc.code.to_string();
          j["automorphisms"] = tc.automorphisms;
          std::cout << j.dump() << "\n";
        }
      }
      return 0;
    }

    if (*count) {
      require_format(c.format, {"json", "table"});
      if (rooted + mass + gj > 1) throw ParseError("choose one of --rooted, --mass, --gj");
      if (rooted || mass) {
        if (weight < 0) throw ParseError("--weight is required");
        if (mass) {
          std::cout << mass_count(weight).get_str() << "\n";
        } else if (edges > 0) {
          std::cout << count_rooted_by_edges(weight, edges).get_str() << "\n";
        } else {
          std::cout << count_rooted(weight).get_str() << "\n";
        }
      } else if (gj) {
        const Passport p = passport();
        if (p.r() != 0) throw NotApplicable("the cactus formula applies to passports with p + q = n + 1");
        std::cout << gj_count({p.black(), p.white()}).get_str() << "\n";
      } else {
        std::cout << count_classes(passport()) << "\n";
      }
      return 0;
    }

    if (*bounds) {
      require_format(c.format, {"json", "table"});
      const Passport p = passport();
      const BoundReport r = min_deg_R(p);
      json j;
      j["passport"] = p.to_string();
      j["regime"] = regime_name(r.regime);
      j["min_deg_R"] = r.min_deg_R;
      j["d"] = r.d;
      j["n"] = r.n;
      j["p"] = r.p;
      j["q"] = r.q;
      j["realizable"] = is_realizable_as_tree(p);
      if (c.format == "table") {
        print_json_as_table(j);
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (*construct) {
      require_format(c.format, {"json", "table"});
      const Passport p = passport();
      if (forest) {
        for (const WeightedTree& t : construct_forest(p)) {
          json j;
          j["code"] = code_of(t);
          j["passport"] = passport_of(t).to_string();
          std::cout << (c.format == "table" ? j["code"].get<std::string>() : j.dump()) << "\n";
        }
      } else {
        const WeightedTree t = construct_witness(p);
        json j;
        j["passport"] = p.to_string();
        j["code"] = code_of(t);
        if (c.format == "table") {
          print_json_as_table(j);
        } else {
          std::cout << j.dump() << "\n";
        }
      }
      return 0;
    }

    if (*classify) {
      require_format(c.format, {"json", "table"});
      if (catalog) {
        const json cat = catalog_json();
        if (c.format == "table") {
          for (const auto& e : cat) {
            std::cout << std::left << std::setw(4) << e["family"].get<std::string>() << std::setw(34)
                      << e["parameters"].get<std::string>() << e["description"].get<std::string>() << "\n";
          }
        } else {
          std::cout << cat.dump(2) << "\n";
        }
        return 0;
      }
      if (!c.passport.empty()) {
        const Passport p = passport();
        json j;
        j["passport"] = p.to_string();
        j["realizable"] = is_realizable_as_tree(p);
        j["trees"] = count_classes(p, 2) >= 2 ? json("2+") : json(count_classes(p, 2));
        j["unitree"] = is_unitree_bruteforce(p);
        if (j["unitree"].get<bool>()) {
          const WeightedTree t = enumerate_passport(p).front();
          j["code"] = code_of(t);
          j["family"] = tag_json(match_family(t));
        }
        if (c.format == "table") {
          print_json_as_table(j);
        } else {
          std::cout << j.dump() << "\n";
        }
        return 0;
      }
      for (const std::string& text : tree_inputs(c.tree, c.from_stdin)) {
        const WeightedTree t = read_tree(text);
        json j;
        j["code"] = code_of(t);
        j["family"] = tag_json(match_family(t));
        if (c.format == "table") {
          std::cout << j["code"].get<std::string>() << "  "
                    << (j["family"].is_null() ? std::string("-") : j["family"]["tag"].get<std::string>()) << "\n";
        } else {
          std::cout << j.dump() << "\n";
        }
      }
      return 0;
    }

    if (*invariants) {
      require_format(c.format, {"json", "table", "kv"});
      bool first = true;
      for (const std::string& text : tree_inputs(c.tree, c.from_stdin)) {
        const WeightedTree t = read_tree(text);
        if (c.format == "kv") {
          std::cout << (first ? "" : "\n") << "code=" << code_of(t) << "\n" << to_key_values(signature_of(t));
        } else if (c.format == "table") {
          if (!first) std::cout << "\n";
          print_json_as_table(invariants_json(t));
        } else {
          std::cout << invariants_json(t).dump() << "\n";
        }
        first = false;
      }
      return 0;
    }

    if (*orbit) {
      require_format(c.format, {"json", "table"});
      const OrbitReport rep = orbit_report(passport(), c.jobs);
      json j;
      j["passport"] = rep.passport.to_string();
      j["trees"] = rep.tree_count;
      j["classes"] = json::array();
      for (const SignatureClass& sc : rep.classes) {
        json k;
        k["size"] = sc.members.size();
        k["automorphisms"] = sc.signature.automorphisms;
        k["monodromy_order"] = sc.signature.monodromy_order.get_str();
        k["primitive"] = sc.signature.primitive;
        k["self_dual"] = sc.signature.self_dual;
        k["mirror_pair"] = sc.mirror_pair;
        if (sc.mirror_pair) k["note"] = "chiral pair: a single orbit would need an imaginary quadratic field";
        if (sc.self_dual_mismatch) k["self_dual_mismatch"] = true;
        k["members"] = json::array();
        for (const TreeCode& m : sc.members) k["members"].push_back(m.to_string());
        j["classes"].push_back(k);
      }
      j["note"] = "equal signatures are necessary, not sufficient, for lying in one Galois orbit";
      if (c.format == "table") {
        std::cout << j["passport"].get<std::string>() << ": " << rep.tree_count << " trees, " << rep.classes.size()
                  << " signature classes\n";
        for (const auto& k : j["classes"]) {
          std::cout << "  size " << k["size"] << "  aut " << k["automorphisms"] << "  |G| "
                    << k["monodromy_order"].get<std::string>() << (k["mirror_pair"].get<bool>() ? "  mirror pair" : "")
                    << "\n";
          for (const auto& m : k["members"]) std::cout << "    " << m.get<std::string>() << "\n";
        }
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (*transform) {
      require_format(c.format, {"json", "table"});
      const WeightedTree t = read_tree(tree_inputs(c.tree, c.from_stdin).front());
      json j;
      if (list_loci) {
        j["loci"] = json::array();
        if (op == "exchange") {
          for (const PathLocus& l : weight_exchange_loci(t)) j["loci"].push_back(l.edges);
        } else if (op == "rip") {
          for (int e : sts_rip_loci(t)) j["loci"].push_back(e);
        } else {
          throw NotApplicable("--loci applies to exchange and rip");
        }
        std::cout << j.dump() << "\n";
        return 0;
      }
      auto need_edges = [&](std::size_t k) {
        if (edge_args.size() != k) throw ParseError(op + " needs --edges with " + std::to_string(k) + " indices");
        for (int e : edge_args) {
          if (e < 0) throw ParseError("edge indices must be nonnegative");
        }
      };
      std::optional<WeightedTree> result;
      if (op == "swap") {
        result = color_swap(t);
      } else if (op == "reflect") {
        result = reflect(t);
      } else if (op == "scale") {
        result = scale_weights(t, factor);
      } else if (op == "reduce") {
        const Reduced r = reduce_weights(t);
        result = r.tree;
        j["d"] = r.d;
      } else if (op == "exchange") {
        need_edges(3);
        result = weight_exchange_at(t, PathLocus{{edge_args[0], edge_args[1], edge_args[2]}});
      } else if (op == "rip") {
        need_edges(1);
        const RipResult r = sts_rip_at(t, edge_args[0]);
        j["first"] = r.first.edge_count() > 0 ? rooted_code(r.first, r.first_edge).to_string() : "";
        j["second"] = rooted_code(r.second, r.second_edge).to_string();
      } else {
        need_edges(2);
        if (tree2.empty()) throw ParseError("stitch needs --tree2");
        const WeightedTree u = read_tree(tree2);
        result = sts_stitch_at(t, edge_args[0], u, edge_args[1]).tree;
      }
      if (result) {
        j["code"] = code_of(*result);
        j["passport"] = passport_of(*result).to_string();
      } else {
        j["passport"] = passport_of(t).to_string();
      }
      if (c.format == "table") {
        print_json_as_table(j);
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (*render) {
      if (c.format == "json") c.format = "dot";
      const WeightedTree t = read_tree(tree_inputs(c.tree, c.from_stdin).front());
      const RenderOptions opts{implicit_white, c.seed};
      const std::string doc = c.format == "svg" ? render_svg(t, opts) : render_dot(t, opts);
      if (output.empty()) {
        std::cout << doc;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw InvalidInput("cannot write " + output);
        f << doc;
      }
      return 0;
    }

    if (*selftest) {
      AcceptanceOptions opts;
      opts.jobs = c.jobs;
      opts.max_weight = c.max_weight;
      opts.seed = c.seed;
      bool ok = true;
      auto report = [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.passed;
      };
      if (only.empty()) {
        run_acceptance(opts, report);
      } else {
        for (int id : only) report(run_criterion(id, opts));
      }
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
