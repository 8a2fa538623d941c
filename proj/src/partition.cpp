#include "dessinum/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "dessinum/errors.hpp"

namespace dessinum {

namespace {

Weight parse_positive(std::string_view digits, std::string_view token) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("bad partition token '" + std::string(token) + "': expected <value> or <value>^<exponent>");
  }
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("bad partition token '" + std::string(token) + "': number out of range");
  }
  if (value < 1) {
    throw ParseError("bad partition token '" + std::string(token) + "': values and exponents must be >= 1");
  }
  return value;
}

void partitions_rec(Weight remaining, Weight max_part, std::vector<Weight>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (Weight part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<Weight> parts) : parts_(std::move(parts)) {
  for (Weight part : parts_) {
    if (part < 1) throw InvalidInput("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), Weight{0});
}

std::vector<std::pair<Weight, std::size_t>> Partition::powers() const {
  std::vector<std::pair<Weight, std::size_t>> out;
  for (Weight part : parts_) {
    if (!out.empty() && out.back().first == part) {
      ++out.back().second;
    } else {
      out.emplace_back(part, 1);
    }
  }
  return out;
}

std::size_t Partition::multiplicity(Weight value) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

Weight Partition::gcd() const {
  Weight g = 0;
  for (Weight part : parts_) g = std::gcd(g, part);
  return g;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [value, mult] : powers()) {
    if (!first) os << ' ';
    first = false;
    os << value;
    if (mult > 1) os << '^' << mult;
  }
  return os.str();
}

Partition Partition::parse(std::string_view text) {
  std::vector<Weight> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(token, token));
    } else {
      if (token.find('^', caret + 1) != std::string_view::npos) {
        throw ParseError("bad partition token '" + std::string(token) + "': more than one '^'");
      }
      const Weight value = parse_positive(token.substr(0, caret), token);
      const Weight exponent = parse_positive(token.substr(caret + 1), token);
      if (exponent > 1'000'000) throw ParseError("exponent too large in '" + std::string(token) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(exponent), value);
    }
  }
  if (parts.empty()) throw ParseError("empty partition");
  return Partition(std::move(parts));
}

Passport::Passport(Partition black, Partition white) : black_(std::move(black)), white_(std::move(white)) {
  if (black_.empty() || white_.empty()) throw InvalidInput("passport partitions must be nonempty");
  if (black_.total() != white_.total()) {
    throw InvalidInput("passport partitions have different sums: " + std::to_string(black_.total()) + " vs " +
                       std::to_string(white_.total()));
  }
}

Weight Passport::d() const { return std::gcd(black_.gcd(), white_.gcd()); }

std::int64_t Passport::r() const {
  return (total() + 1) - static_cast<std::int64_t>(p() + q());
}

std::string Passport::to_string() const { return black_.to_string() + "|" + white_.to_string(); }

Passport Passport::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("passport must have the form '<parts>|<parts>', got '" + std::string(text) + "'");
  }
  Partition black = Partition::parse(text.substr(0, bar));
  Partition white = Partition::parse(text.substr(bar + 1));
  if (black.total() != white.total()) {
    throw ParseError("passport '" + std::string(text) + "': partitions sum to " + std::to_string(black.total()) +
                     " and " + std::to_string(white.total()));
  }
  return Passport(std::move(black), std::move(white));
}

std::vector<Partition> partitions_of(Weight n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<Weight> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Passport> passports_of_weight(Weight n) {
  const auto parts = partitions_of(n);
  std::vector<Passport> out;
  out.reserve(parts.size() * parts.size());
  for (const auto& black : parts) {
    for (const auto& white : parts) out.emplace_back(black, white);
  }
  return out;
}

}  // namespace dessinum
