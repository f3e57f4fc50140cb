#include "polynil/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "polynil/errors.hpp"
#include "polynil/kernels.hpp"

namespace polynil {

namespace {
Domain wider(Domain a, Domain b) {
  return (a == Domain::rational || b == Domain::rational) ? Domain::rational
                                                          : Domain::integer;
}

void require_order(int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  if (order > (1 << 22)) throw DomainError("series order too large");
}
}  // namespace

Series::Series() : domain_(Domain::integer), c_(1) {}

Series Series::zero(int order, Domain d) {
  require_order(order);
  return Series(d, std::vector<mpq_class>(order + 1));
}

Series Series::one(int order, Domain d) {
  Series s = zero(order, d);
  s.c_[0] = 1;
  return s;
}

Series Series::constant(const mpq_class& value, int order, Domain d) {
  Series s = zero(order, d);
  s.c_[0] = value;
  return s;
}

Series Series::monomial(const mpq_class& coeff, int degree, int order,
                        Domain d) {
  require_order(order);
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  Series s = zero(order, d);
  if (degree <= order) s.c_[degree] = coeff;
  return s;
}

Series Series::from_coeffs(std::vector<mpq_class> coeffs, Domain d) {
  if (coeffs.empty()) coeffs.emplace_back(0);
  Series s(d, std::move(coeffs));
  if (d == Domain::integer && !s.integral())
    throw IntegralityViolation(
        "from_coeffs: integer-domain series with fractional entry");
  return s;
}

Series Series::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<mpq_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return from_coeffs(std::move(c), Domain::integer);
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& q) { return sgn(q) == 0; });
}

bool Series::integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& q) { return q.get_den() == 1; });
}

bool Series::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& q) { return sgn(q) >= 0; });
}

Series Series::truncated(int new_order) const {
  require_order(new_order);
  std::vector<mpq_class> c(new_order + 1);
  const int keep = std::min(new_order, order());
  for (int i = 0; i <= keep; ++i) c[i] = c_[i];
  return Series(domain_, std::move(c));
}

Series Series::to_integer_domain() const {
  for (int i = 0; i <= order(); ++i)
    if (c_[i].get_den() != 1)
      throw IntegralityViolation("fractional coefficient at degree " +
                                 std::to_string(i) + ": " + c_[i].get_str());
  return Series(Domain::integer, c_);
}

Series Series::to_rational_domain() const {
  return Series(Domain::rational, c_);
}

Series Series::scaled(const mpq_class& f) const {
  std::vector<mpq_class> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * f;
  Domain d = (domain_ == Domain::integer && f.get_den() == 1)
                 ? Domain::integer
                 : Domain::rational;
  return Series(d, std::move(c));
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str() << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " (order " << order() << ")";
  return os.str();
}

bool Series::check_invariants() const {
  if (c_.empty()) return false;
  for (const mpq_class& q : c_) {
    if (sgn(q.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (g != 1) return false;
  }
  if (domain_ == Domain::integer && !integral()) return false;
  return true;
}

Series add(const Series& f, const Series& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<mpq_class> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = f[i] + g[i];
  return Series::from_coeffs(std::move(c), wider(f.domain(), g.domain()));
}

Series sub(const Series& f, const Series& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<mpq_class> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = f[i] - g[i];
  return Series::from_coeffs(std::move(c), wider(f.domain(), g.domain()));
}

Series mul(const Series& f, const Series& g) {
  const int n = std::min(f.order(), g.order());
  const bool integral = f.domain() == Domain::integer &&
                        g.domain() == Domain::integer;
  std::vector<mpq_class> out(n + 1);
  kernel::conv(f.coeffs().data(), f.coeffs().size(), g.coeffs().data(),
               g.coeffs().size(), out.data(), out.size(), integral);
  return Series::from_coeffs(std::move(out), wider(f.domain(), g.domain()));
}

Series pow_int(const Series& f, unsigned a) {
  if (a == 0) throw DomainError("pow_int: exponent must be >= 1");
  Series result = Series::one(f.order(), f.domain());
  Series base = f;
  while (true) {
    if (a & 1u) result = mul(result, base);
    a >>= 1u;
    if (a == 0) break;
    base = mul(base, base);
  }
  return result;
}

Series substitute_power(const Series& f, unsigned m) {
  if (m == 0) throw DomainError("substitute_power: m must be >= 1");
  if (m == 1) return f;
  const long new_order = static_cast<long>(f.order()) * m;
  if (new_order > (1 << 22))
    throw DomainError("substitute_power: resulting order too large");
  std::vector<mpq_class> c(new_order + 1);
  for (int i = 0; i <= f.order(); ++i) c[static_cast<long>(i) * m] = f[i];
  return Series::from_coeffs(std::move(c), f.domain());
}

Series compose(const Series& f, const Series& g) {
  if (sgn(g[0]) != 0)
    throw NonzeroConstantTerm("compose: inner series has g(0) != 0");
  const int n = std::min(f.order(), g.order());
  const Domain dom = wider(f.domain(), g.domain());
  const Series gt = g.truncated(n);
  const int k = std::min(f.order(), n);
  Series result = Series::constant(f[k], n, dom);
  for (int i = k - 1; i >= 0; --i) {
    result = mul(result, gt);
    if (sgn(f[i]) != 0)
      result = add(result, Series::constant(f[i], n, dom));
  }
  return result;
}

Series exp_series(const Series& f) {
  if (sgn(f[0]) != 0)
    throw NonzeroConstantTerm("exp_series: f(0) != 0");
  const int n = f.order();
  std::vector<mpq_class> e(n + 1), jf(n + 1);
  e[0] = 1;
  for (int j = 1; j <= n; ++j) jf[j] = f[j] * j;
  mpq_t acc, tmp;
  mpq_init(acc);
  mpq_init(tmp);
  for (int m = 1; m <= n; ++m) {
    mpq_set_ui(acc, 0, 1);
    for (int j = 1; j <= m; ++j) {
      if (sgn(jf[j]) == 0 || sgn(e[m - j]) == 0) continue;
      mpq_mul(tmp, jf[j].get_mpq_t(), e[m - j].get_mpq_t());
      mpq_add(acc, acc, tmp);
    }
    mpq_set_ui(tmp, 1, static_cast<unsigned long>(m));
    mpq_mul(acc, acc, tmp);
    e[m] = mpq_class(acc);
  }
  mpq_clear(acc);
  mpq_clear(tmp);
  return Series::from_coeffs(std::move(e), Domain::rational);
}

Series log_series(const Series& f) {
  if (f[0] != 1)
    throw ConstantTermNotOne("log_series: f(0) != 1");
  const int n = f.order();
  std::vector<mpq_class> l(n + 1);
  mpq_t acc, tmp;
  mpq_init(acc);
  mpq_init(tmp);
  for (int m = 1; m <= n; ++m) {
    mpq_set_ui(acc, 0, 1);
    for (int j = 1; j < m; ++j) {
      if (sgn(l[j]) == 0 || sgn(f[m - j]) == 0) continue;
      mpq_mul(tmp, l[j].get_mpq_t(), f[m - j].get_mpq_t());
      mpz_mul_ui(mpq_numref(tmp), mpq_numref(tmp),
                 static_cast<unsigned long>(j));
      mpq_canonicalize(tmp);
      mpq_add(acc, acc, tmp);
    }
    mpq_set_ui(tmp, 1, static_cast<unsigned long>(m));
    mpq_mul(acc, acc, tmp);
    l[m] = f[m] - mpq_class(acc);
  }
  mpq_clear(acc);
  mpq_clear(tmp);
  return Series::from_coeffs(std::move(l), Domain::rational);
}

namespace {
void require_euler_domain(const Series& f) {
  if (sgn(f[0]) != 0)
    throw NonzeroConstantTerm("euler_transform: input has nonzero constant");
  for (int i = 1; i <= f.order(); ++i) {
    if (f[i].get_den() != 1 || sgn(f[i]) < 0)
      throw NegativeOrNonIntegerCoefficient(
          "euler_transform: coefficient at degree " + std::to_string(i) +
          " is " + f[i].get_str() + ", outside {0,1,2,...}");
  }
}
}  // namespace

Series euler_transform(const Series& f) {
  require_euler_domain(f);
  const int n = f.order();
  std::vector<mpz_class> prod(n + 1);
  prod[0] = 1;
  for (int m = 1; m <= n; ++m) {
    const mpz_class b(f[m].get_num());
    if (sgn(b) == 0) continue;
    // (1-t^m)^{-b} = sum_j C(b-1+j, j) t^{mj}
    const int jmax = n / m;
    std::vector<mpz_class> binom(jmax + 1);
    binom[0] = 1;
    for (int j = 0; j < jmax; ++j) {
      mpz_class num = b + j;
      binom[j + 1] = binom[j] * num;
      mpz_divexact_ui(binom[j + 1].get_mpz_t(), binom[j + 1].get_mpz_t(),
                      static_cast<unsigned long>(j + 1));
    }
    prod = kernel::stride_mul(prod, binom, static_cast<std::size_t>(m));
  }
  std::vector<mpq_class> out;
  out.reserve(prod.size());
  for (mpz_class& z : prod) out.emplace_back(std::move(z));
  return Series::from_coeffs(std::move(out), Domain::integer);
}

Series euler_transform_exp_route(const Series& f) {
  require_euler_domain(f);
  const int n = f.order();
  std::vector<mpq_class> w(n + 1);
  for (int m = 1; m <= n; ++m) {
    mpz_class s = 0;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) s += d * mpz_class(f[d].get_num());
    w[m] = mpq_class(s) / m;
  }
  return exp_series(Series::from_coeffs(std::move(w), Domain::rational));
}

}  // namespace polynil
