#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dessinum/tree_code.hpp"
#include "dessinum/weighted_tree.hpp"

namespace dessinum {

enum class Family { A, B, C, D, E1, E2, E3, E4, F, G, H, I, J, K, L, M, N, O, P, Q, R, S, T };

std::string family_name(Family f);
Family parse_family(const std::string& name);
std::vector<Family> all_families();
bool is_sporadic(Family f);

using FamilyParams = std::vector<std::pair<std::string, Weight>>;

struct FamilyTag {
  Family family = Family::A;
  FamilyParams params;
  /// The match was found after exchanging black and white.
  bool color_swapped = false;
  /// gcd of the weights that was divided out before matching.
  Weight scale = 1;

  std::string to_string() const;
};

/// Member of a family with weights divided out (gcd 1 for A-E), built with
/// the black vertex conventions listed in the catalog. Sporadic families take
/// no parameters. Throws InvalidInput on parameters outside the family's range.
WeightedTree family_member(Family f, const FamilyParams& params = {});

struct FamilyMember {
  Family family;
  FamilyParams params;
  WeightedTree tree;
};

/// Every member of every family with gcd of weights 1 and total weight at
/// most `max_weight` (one coloring; members of overlapping families repeat).
std::vector<FamilyMember> family_members(Weight max_weight);

/// Earliest family (in letter order) containing the tree up to color exchange
/// and scaling of weights; nullopt if none does.
std::optional<FamilyTag> match_family(const WeightedTree& tree);

/// The passport is realizable by exactly one tree.
bool is_unitree_bruteforce(const Passport& passport);

struct CatalogEntry {
  Family family;
  /// Human-readable parameter ranges.
  std::string parameters;
  std::string description;
  /// A few members as canonical codes.
  std::vector<TreeCode> examples;
};

std::vector<CatalogEntry> family_catalog();

}  // namespace dessinum
