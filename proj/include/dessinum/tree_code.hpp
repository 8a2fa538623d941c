#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dessinum/weighted_tree.hpp"

namespace dessinum {

/// One letter of a generalized Dyck word: x_w (open) or y_w (close).
struct Token {
  Weight weight = 1;
  bool close = false;

  // Weights compare numerically first; for equal weights x < y.
  friend auto operator<=>(const Token&, const Token&) = default;
};

/// Edge-rooted serialization of a weighted tree.
///
/// Starting on the root edge (leaving a vertex of `root_color`), the contour
/// is walked clockwise; each edge emits x_w when first traversed and y_w when
/// traversed back. Textual form: `root=B; x2 x1 y1 y2`.
struct TreeCode {
  Color root_color = Color::Black;
  std::vector<Token> tokens;

  std::string to_string() const;
  static TreeCode parse(std::string_view text);

  friend bool operator==(const TreeCode&, const TreeCode&) = default;
  friend std::strong_ordering operator<=>(const TreeCode& a, const TreeCode& b) {
    if (auto c = a.root_color <=> b.root_color; c != 0) return c;
    return a.tokens <=> b.tokens;
  }
};

/// Code of `tree` rooted at edge `e`, leaving its endpoint of color `start`.
TreeCode rooted_code(const WeightedTree& tree, int e, Color start = Color::Black);

/// Lexicographically least rooted code over all edges (root edge oriented black to white).
TreeCode canonical_code(const WeightedTree& tree);

/// Inverse of rooted_code: edges are numbered in the order of their x tokens.
WeightedTree tree_from_code(const TreeCode& code);

bool is_isomorphic(const WeightedTree& a, const WeightedTree& b);

/// Compares the rooted code at `e` (leaving the black end) with `tokens`
/// without materializing it: negative, zero or positive.
int compare_rooted_code(const WeightedTree& tree, int e, const std::vector<Token>& tokens);

/// Order of the (cyclic) group of orientation- and color-preserving automorphisms.
int automorphism_order(const WeightedTree& tree);

/// Tree rebuilt from its canonical code; edge k is the k-th edge of the canonical traversal.
WeightedTree canonical_form(const WeightedTree& tree);

/// Checks the generalized Dyck word conditions; returns an explanation on failure.
bool is_balanced(const std::vector<Token>& tokens, std::string* why = nullptr);

}  // namespace dessinum
