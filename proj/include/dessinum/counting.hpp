#pragma once

#include <gmpxx.h>

#include <vector>

#include "dessinum/partition.hpp"

namespace dessinum {

/// a_n: edge-rooted weighted bicolored plane trees of total weight n (a_0 = 1).
mpz_class count_rooted(long n);

/// a_0 .. a_n in one pass.
std::vector<mpz_class> count_rooted_series(long n);

/// b_{m,n} = C(n-1, m-1) * Cat_m: rooted trees of weight n with m edges.
/// Throws OutOfRange unless 1 <= m <= n.
mpz_class count_rooted_by_edges(long n, long m);

/// c_n = sum over m of b_{m,n} / m: classes of weight n counted with weight 1/|Aut|.
mpq_class mass_count(long n);

/// Goulden-Jackson cactus count n^(k-2) * prod N(lambda_i),
/// N(lambda) = (p-1)! / prod_i d_i! with d_i the multiplicity of part i.
/// Throws EulerViolation unless sum p_i = (k-1) n + 1.
mpq_class gj_count(const std::vector<Partition>& partitions);

/// (1/2) sqrt(5/pi) 5^n n^(-3/2), as a natural logarithm.
double log_rooted_asymptotic(long n);

/// a_n divided by its asymptotic estimate.
double rooted_asymptotic_ratio(long n);

}  // namespace dessinum
