#include "dessinum/counting.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dessinum/errors.hpp"

namespace dessinum {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

double log_of(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

}  // namespace

// f = 1 + t f^2 / (1 - t), so a_n = sum_{j < n} [t^j] f^2 for n >= 1.
std::vector<mpz_class> count_rooted_series(long n) {
  if (n < 0) throw OutOfRange("n must be nonnegative");
  std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  mpz_class prefix = 0;
  for (long k = 1; k <= n; ++k) {
    mpz_class square = 0;
    for (long i = 0; i <= k - 1; ++i) square += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - 1 - i)];
    prefix += square;
    a[static_cast<std::size_t>(k)] = prefix;
  }
  return a;
}

mpz_class count_rooted(long n) { return count_rooted_series(n).back(); }

mpz_class count_rooted_by_edges(long n, long m) {
  if (m < 1 || m > n) {
    throw OutOfRange("b_{m,n} needs 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
  const auto um = static_cast<unsigned long>(m);
  const mpz_class catalan = binomial(2 * um, um) / (um + 1);
  return binomial(static_cast<unsigned long>(n - 1), um - 1) * catalan;
}

mpq_class mass_count(long n) {
  if (n < 1) throw OutOfRange("c_n needs n >= 1");
  mpq_class total = 0;
  for (long m = 1; m <= n; ++m) total += mpq_class(count_rooted_by_edges(n, m), mpz_class(m));
  total.canonicalize();
  return total;
}

mpq_class gj_count(const std::vector<Partition>& partitions) {
  if (partitions.empty()) throw InvalidInput("gj_count needs at least one partition");
  const Weight n = partitions.front().total();
  std::size_t sum_p = 0;
  for (const Partition& p : partitions) {
    if (p.total() != n) throw InvalidInput("all partitions must have the same sum");
    sum_p += p.count();
  }
  const auto k = static_cast<Weight>(partitions.size());
  if (static_cast<Weight>(sum_p) != (k - 1) * n + 1) {
    throw EulerViolation("sum of part counts is " + std::to_string(sum_p) + ", expected (k-1)n+1 = " +
                         std::to_string((k - 1) * n + 1));
  }
  mpq_class value = 1;
  for (const Partition& p : partitions) {
    mpz_class denom = 1;
    for (auto [part, mult] : p.powers()) denom *= factorial(mult);
    value *= mpq_class(factorial(p.count() - 1), denom);
  }
  mpz_class npow;
  if (k >= 2) {
    mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k - 2));
    value *= npow;
  } else {
    value /= mpz_class(static_cast<unsigned long>(n));
  }
  value.canonicalize();
  return value;
}

double log_rooted_asymptotic(long n) {
  const double dn = static_cast<double>(n);
  return std::log(0.5 * std::sqrt(5.0 / std::numbers::pi)) + dn * std::log(5.0) - 1.5 * std::log(dn);
}

double rooted_asymptotic_ratio(long n) { return std::exp(log_of(count_rooted(n)) - log_rooted_asymptotic(n)); }

}  // namespace dessinum
