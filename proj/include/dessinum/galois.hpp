#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dessinum/enumeration.hpp"
#include "dessinum/permutation.hpp"

namespace dessinum {

/// Permutations a (black), b (white), c = (ab)^-1 (faces) on n edge labels.
/// Products read left to right: ab means a first, then b.
struct MonodromyModel {
  int n = 0;
  Permutation a;
  Permutation b;
  Permutation c;

  static MonodromyModel from_pair(Permutation a, Permutation b);
  std::vector<Permutation> generators() const { return {a, b}; }
};

/// Each weight-w edge becomes w parallel edges; labels follow the canonical
/// edge order. a and b rotate counterclockwise around black and white vertices.
MonodromyModel to_monodromy(const WeightedTree& tree);

enum class GroupTag { Symmetric, Alternating, Cyclic, Special, Imprimitive };

std::string tag_name(GroupTag t);

struct GroupReport {
  int degree = 0;
  mpz_class order;
  bool transitive = true;
  bool primitive = true;
  /// Size of the blocks of a nontrivial block system (0 if primitive).
  int block_size = 0;
  GroupTag tag = GroupTag::Symmetric;
  /// Catalog name of a primitive group other than S_n, A_n (empty if unknown).
  std::string name;
  /// For primitive groups other than S_n, A_n whose face permutation is
  /// (n-r, 1^r) with n - r >= 2: the matching case of the classification.
  std::string jones_note;
  /// Set when such a group matches no case of the classification.
  bool jones_violation = false;
  /// r read off the face permutation, -1 if c is not of type (n-r, 1^r).
  int r = -1;
};

GroupReport group_report(const MonodromyModel& model);

/// True iff the monodromy group is imprimitive.
bool is_composition(const WeightedTree& tree);

/// (a', b') = (c, b); then c' = b^-1 a b.
MonodromyModel dual_model(const MonodromyModel& model);

/// The two models describe isomorphic maps (the pairs are simultaneously conjugate).
bool models_isomorphic(const MonodromyModel& x, const MonodromyModel& y);

bool is_self_dual(const WeightedTree& tree);

/// Criterion on the tree itself: black degrees equal the face degrees, the
/// tree is a black center with white neighbours carrying black leaves of
/// weight 1, and the branch sequence is preserved by (s, k) -> (k + 1, s - 1)
/// up to rotation.
bool is_self_dual_geometric(const WeightedTree& tree);

struct InvariantSignature {
  Passport passport;
  int automorphisms = 1;
  mpz_class monodromy_order;
  bool primitive = true;
  bool self_dual = false;

  friend bool operator==(const InvariantSignature& x, const InvariantSignature& y) {
    return x.passport == y.passport && x.automorphisms == y.automorphisms &&
           x.monodromy_order == y.monodromy_order && x.primitive == y.primitive && x.self_dual == y.self_dual;
  }
};

InvariantSignature signature_of(const WeightedTree& tree);

/// "key=value" lines, one field per line.
std::string to_key_values(const InvariantSignature& sig);

struct SignatureClass {
  InvariantSignature signature;
  std::vector<TreeCode> members;
  /// Two members that are mirror images of each other and not isomorphic to their mirrors.
  bool mirror_pair = false;
  /// The geometric self-duality criterion disagreed with the permutation test.
  bool self_dual_mismatch = false;
};

struct OrbitReport {
  Passport passport;
  std::size_t tree_count = 0;
  std::vector<SignatureClass> classes;
};

/// Trees of the passport grouped by equal signatures. Equal signatures are only
/// a necessary condition for lying in one Galois orbit.
OrbitReport orbit_report(const Passport& passport, int jobs = 1);

}  // namespace dessinum
