#include "dessinum/tree_code.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dessinum/errors.hpp"

namespace dessinum {

namespace {

struct Frame {
  int vertex;
  int entry;
  int next;
};

// Emits the rooted code token by token; `sink` returns false to stop early.
template <class Sink>
void walk(const WeightedTree& tree, int root_edge, Color start, Sink&& sink) {
  const int u = tree.endpoint(root_edge, start);
  const int v = tree.opposite_end(root_edge, u);
  std::vector<Frame> stack;
  stack.reserve(static_cast<std::size_t>(tree.edge_count()) + 1);
  stack.push_back({u, root_edge, tree.cw_next(u, root_edge)});
  if (!sink(Token{tree.weight(root_edge), false})) return;
  stack.push_back({v, root_edge, tree.cw_next(v, root_edge)});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.next == fr.entry) {
      const bool is_root = stack.size() == 1;
      const Weight w = tree.weight(fr.entry);
      stack.pop_back();
      if (!is_root && !sink(Token{w, true})) return;
      continue;
    }
    const int f = fr.next;
    fr.next = tree.cw_next(fr.vertex, f);
    const int w = tree.opposite_end(f, fr.vertex);
    if (!sink(Token{tree.weight(f), false})) return;
    stack.push_back({w, f, tree.cw_next(w, f)});
  }
}

Weight parse_weight(std::string_view digits, std::string_view token) {
  Weight w = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), w);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || w < 1) {
    throw ParseError("bad tree-code token '" + std::string(token) + "': expected x<weight> or y<weight>, weight >= 1");
  }
  return w;
}

}  // namespace

int compare_rooted_code(const WeightedTree& tree, int e, const std::vector<Token>& best) {
  std::size_t i = 0;
  int result = 0;
  walk(tree, e, Color::Black, [&](const Token& t) {
    if (i >= best.size()) {
      result = 1;
      return false;
    }
    if (t < best[i]) {
      result = -1;
      return false;
    }
    if (best[i] < t) {
      result = 1;
      return false;
    }
    ++i;
    return true;
  });
  if (result == 0 && i < best.size()) result = -1;
  return result;
}

std::string TreeCode::to_string() const {
  std::ostringstream os;
  os << "root=" << color_letter(root_color) << ';';
  for (const Token& t : tokens) os << ' ' << (t.close ? 'y' : 'x') << t.weight;
  return os.str();
}

TreeCode TreeCode::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  if (text.size() < 7 || text.substr(0, 5) != "root=" || text[6] != ';') {
    throw ParseError("tree code must start with 'root=B;' or 'root=W;', got '" + std::string(text) + "'");
  }
  TreeCode code;
  if (text[5] == 'B') {
    code.root_color = Color::Black;
  } else if (text[5] == 'W') {
    code.root_color = Color::White;
  } else {
    throw ParseError("tree code root color must be B or W");
  }
  std::string_view rest = text.substr(7);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
    if (pos >= rest.size()) break;
    std::size_t end = pos;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
    const std::string_view token = rest.substr(pos, end - pos);
    pos = end;
    if (token[0] != 'x' && token[0] != 'y') {
      throw ParseError("bad tree-code token '" + std::string(token) + "': expected x<weight> or y<weight>");
    }
    code.tokens.push_back(Token{parse_weight(token.substr(1), token), token[0] == 'y'});
  }
  std::string why;
  if (!is_balanced(code.tokens, &why)) throw ParseError("tree code is not a generalized Dyck word: " + why);
  return code;
}

bool is_balanced(const std::vector<Token>& tokens, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (tokens.empty()) return fail("empty code (the empty tree is not allowed)");
  if (tokens.front().close) return fail("code must start with an x token");
  std::vector<Weight> open;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.close) {
      open.push_back(t.weight);
    } else {
      if (open.empty()) return fail("token " + std::to_string(i + 1) + " closes an edge that was never opened");
      if (open.back() != t.weight) {
        return fail("token " + std::to_string(i + 1) + " is y" + std::to_string(t.weight) + " but the open edge is x" +
                    std::to_string(open.back()));
      }
      open.pop_back();
    }
  }
  if (!open.empty()) return fail(std::to_string(open.size()) + " edge(s) left open");
  return true;
}

TreeCode rooted_code(const WeightedTree& tree, int e, Color start) {
  TreeCode code;
  code.root_color = start;
  code.tokens.reserve(2 * static_cast<std::size_t>(tree.edge_count()));
  walk(tree, e, start, [&](const Token& t) {
    code.tokens.push_back(t);
    return true;
  });
  return code;
}

TreeCode canonical_code(const WeightedTree& tree) {
  TreeCode best = rooted_code(tree, 0, Color::Black);
  for (int e = 1; e < tree.edge_count(); ++e) {
    if (compare_rooted_code(tree, e, best.tokens) < 0) best = rooted_code(tree, e, Color::Black);
  }
  return best;
}

WeightedTree tree_from_code(const TreeCode& code) {
  std::string why;
  if (!is_balanced(code.tokens, &why)) throw InvalidInput("invalid tree code: " + why);
  std::vector<Color> colors{code.root_color};
  std::vector<Edge> edges;
  std::vector<std::vector<int>> cw{{}};
  std::vector<int> stack{0};
  for (const Token& t : code.tokens) {
    const int cur = stack.back();
    if (!t.close) {
      const int child = static_cast<int>(colors.size());
      colors.push_back(opposite(colors[static_cast<std::size_t>(cur)]));
      cw.emplace_back();
      Edge ed;
      ed.black = colors[static_cast<std::size_t>(cur)] == Color::Black ? cur : child;
      ed.white = colors[static_cast<std::size_t>(cur)] == Color::Black ? child : cur;
      ed.weight = t.weight;
      edges.push_back(ed);
      const int e = static_cast<int>(edges.size()) - 1;
      cw[static_cast<std::size_t>(cur)].push_back(e);
      cw[static_cast<std::size_t>(child)].push_back(e);
      stack.push_back(child);
    } else {
      stack.pop_back();
    }
  }
  // The walk visits edges clockwise; rotations are stored counterclockwise.
  for (auto& rot : cw) std::reverse(rot.begin(), rot.end());
  return WeightedTree(std::move(colors), std::move(edges), std::move(cw));
}

bool is_isomorphic(const WeightedTree& a, const WeightedTree& b) {
  if (a.edge_count() != b.edge_count() || a.total_weight() != b.total_weight()) return false;
  return canonical_code(a) == canonical_code(b);
}

int automorphism_order(const WeightedTree& tree) {
  const TreeCode best = canonical_code(tree);
  int count = 0;
  for (int e = 0; e < tree.edge_count(); ++e) {
    if (compare_rooted_code(tree, e, best.tokens) == 0) ++count;
  }
  return count;
}

WeightedTree canonical_form(const WeightedTree& tree) { return tree_from_code(canonical_code(tree)); }

}  // namespace dessinum
