#pragma once

#include <gmpxx.h>

#include <vector>

#include "polynil/series.hpp"

namespace polynil {

// Moebius function via trial-division factorization.
int moebius(unsigned long n);

// Divisors of n in increasing order.
std::vector<unsigned long> divisors(unsigned long n);

// Dimension of the degree-n component of the free Lie algebra of rank k:
// (1/n) * sum_{a|n} k^a mu(n/a). The divisor sum is checked to be
// divisible by n.
mpz_class witt_dimension(unsigned long k, unsigned long n);

// sum_{n=1..order} witt_dimension(k,n) z^n.
Series witt_series(unsigned long k, int order);

// Rank of a finite-index subgroup of a free group: 1 + (n-1)*index.
long long schreier_group_rank(long long n, long long index);

// Riemann zeta on the real axis, s > 1, by partial summation with the
// integral tail bound K^{1-s}/(s-1) <= tol; absolute error <= tol.
long double zeta_value(long double s, long double tol);

}  // namespace polynil
