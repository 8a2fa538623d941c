#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dessinum/partition.hpp"

namespace dessinum {

/// Permutation of {0, ..., n-1}; printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation power(long k) const;
  bool is_identity() const;

  /// Cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle lengths including fixed points.
  Partition cycle_type() const;
  long order() const;
  bool is_odd() const;

  /// "(1,7,6)(2,3)"; "()" for the identity.
  std::string to_string() const;
  /// Parses cycle notation on {1..n}; points not mentioned are fixed.
  static Permutation parse(const std::string& text, int n);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Order of the group generated by `gens` (deterministic Schreier-Sims).
mpz_class group_order(const std::vector<Permutation>& gens, int degree);

bool is_transitive(const std::vector<Permutation>& gens, int degree);

/// Smallest block containing points x and y (sorted).
std::vector<int> minimal_block(const std::vector<Permutation>& gens, int degree, int x, int y);

/// A nontrivial block system (blocks of one common size), if the transitive group has one.
std::optional<std::vector<std::vector<int>>> find_block_system(const std::vector<Permutation>& gens, int degree);

/// Bijection s with s(g(x)) = h(s(x)) for every pair (g, h) of `from` and `to`;
/// `from` must generate a transitive group. `anchor` fixes the image of point 0.
std::optional<Permutation> find_conjugator(const std::vector<Permutation>& from, const std::vector<Permutation>& to,
                                           int anchor);
std::optional<Permutation> find_conjugator(const std::vector<Permutation>& from, const std::vector<Permutation>& to);

/// Number of permutations commuting with every generator (transitive case).
int centralizer_order(const std::vector<Permutation>& gens);

}  // namespace dessinum
