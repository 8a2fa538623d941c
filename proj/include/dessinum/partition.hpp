#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dessinum {

using Weight = std::int64_t;

/// A multiset of positive integers, stored in nonincreasing order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Weight> parts);

  const std::vector<Weight>& parts() const noexcept { return parts_; }
  Weight total() const noexcept { return total_; }
  std::size_t count() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Power notation: (value, multiplicity) pairs, largest value first.
  std::vector<std::pair<Weight, std::size_t>> powers() const;

  /// Number of parts equal to `value`.
  std::size_t multiplicity(Weight value) const;

  /// gcd of all parts; 0 for the empty partition.
  Weight gcd() const;

  /// "5^2 2^3 1^2"
  std::string to_string() const;

  /// Accepts space-separated `v` and `v^e` tokens.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Weight> parts_;
  Weight total_ = 0;
};

/// Black and white degree partitions of a tree (or of a request for one).
class Passport {
 public:
  Passport() = default;
  Passport(Partition black, Partition white);

  const Partition& black() const noexcept { return black_; }
  const Partition& white() const noexcept { return white_; }
  Weight total() const noexcept { return black_.total(); }
  std::size_t p() const noexcept { return black_.count(); }
  std::size_t q() const noexcept { return white_.count(); }
  /// gcd of all parts of both partitions.
  Weight d() const;
  /// (n + 1) - (p + q); negative when no tree can exist.
  std::int64_t r() const;

  Passport swapped() const { return Passport(white_, black_); }

  /// "5^4|2^10"
  std::string to_string() const;
  static Passport parse(std::string_view text);

  friend bool operator==(const Passport&, const Passport&) = default;
  friend std::strong_ordering operator<=>(const Passport& a, const Passport& b) {
    if (auto c = a.black_ <=> b.black_; c != 0) return c;
    return a.white_ <=> b.white_;
  }

 private:
  Partition black_;
  Partition white_;
};

/// All partitions of n, each in nonincreasing order, in reverse lexicographic order.
std::vector<Partition> partitions_of(Weight n);

/// All passports of total weight n (ordered pairs of partitions of n).
std::vector<Passport> passports_of_weight(Weight n);

}  // namespace dessinum
