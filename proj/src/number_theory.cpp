#include "polynil/number_theory.hpp"

#include <cmath>

#include "polynil/errors.hpp"

namespace polynil {

int moebius(unsigned long n) {
  if (n == 0) throw DomainError("moebius: n must be >= 1");
  int primes = 0;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

std::vector<unsigned long> divisors(unsigned long n) {
  if (n == 0) throw DomainError("divisors: n must be >= 1");
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

mpz_class witt_dimension(unsigned long k, unsigned long n) {
  if (k == 0 || n == 0) throw DomainError("witt_dimension: k,n must be >= 1");
  mpz_class sum = 0;
  for (unsigned long a : divisors(n)) {
    const int mu = moebius(n / a);
    if (mu == 0) continue;
    mpz_class ka;
    mpz_ui_pow_ui(ka.get_mpz_t(), k, a);
    sum += mu > 0 ? ka : -ka;
  }
  mpz_class q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), n);
  if (r != 0)
    throw IntegralityViolation("witt_dimension: divisor sum " +
                               sum.get_str() + " not divisible by " +
                               std::to_string(n));
  return q;
}

Series witt_series(unsigned long k, int order) {
  std::vector<mpq_class> c(order + 1);
  for (int n = 1; n <= order; ++n)
    c[n] = mpq_class(witt_dimension(k, static_cast<unsigned long>(n)));
  return Series::from_coeffs(std::move(c), Domain::integer);
}

long long schreier_group_rank(long long n, long long index) {
  if (n < 1 || index < 1)
    throw DomainError("schreier_group_rank: n and index must be >= 1");
  return 1 + (n - 1) * index;
}

long double zeta_value(long double s, long double tol) {
  if (!(s > 1.0L)) throw DomainError("zeta_value: s must be > 1");
  if (!(tol > 0.0L)) throw DomainError("zeta_value: tol must be > 0");
  // K^{1-s}/(s-1) <= tol
  const long double k_real = powl(tol * (s - 1.0L), -1.0L / (s - 1.0L));
  if (!(k_real < 3e10L))
    throw DomainError("zeta_value: tolerance unattainable at this s");
  const unsigned long long k_max =
      static_cast<unsigned long long>(ceill(k_real)) + 1;
  const bool integer_exp = (s == floorl(s)) && s < 64.0L;
  const unsigned int se = integer_exp ? static_cast<unsigned int>(s) : 0;
  long double sum = 0.0L;
  for (unsigned long long k = k_max; k >= 1; --k) {
    const long double kd = static_cast<long double>(k);
    long double term;
    if (integer_exp) {
      long double p = kd;
      for (unsigned int i = 1; i < se; ++i) p *= kd;
      term = 1.0L / p;
    } else {
      term = expl(-s * logl(kd));
    }
    sum += term;
  }
  return sum;
}

}  // namespace polynil
