#include "polynil/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polynil/errors.hpp"

namespace polynil {

namespace {
// 1 + (z-1) * exp(f); the substitution argument of the exponential
// Schreier formula. Always has zero constant term.
Series one_plus_zm1_exp(const Series& f) {
  const int n = f.order();
  const Series e = exp_series(f);
  const Series zm1 =
      sub(Series::monomial(1, 1, n, Domain::integer), Series::one(n));
  return add(Series::one(n, Domain::rational), mul(zm1, e));
}

void require_zero_constant(const Series& s, const char* where) {
  if (sgn(s[0]) != 0)
    throw NonzeroConstantTerm(std::string(where) + ": constant term not 0");
}
}  // namespace

void validate_complexity(const Series& s) {
  mpz_class fact = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) fact *= n;
    if (sgn(s[n]) < 0)
      throw NegativeCoefficient("complexity series has negative coefficient " +
                                s[n].get_str() + " at degree " +
                                std::to_string(n));
    mpq_class cn = s[n] * mpq_class(fact);
    if (cn.get_den() != 1)
      throw IntegralityViolation("n!*[z^n] not integral at degree " +
                                 std::to_string(n) + ": " + cn.get_str());
  }
}

ComplexitySeries base_complexity(BaseKind kind, int order, unsigned s) {
  if (order < 1) throw DomainError("base_complexity: order must be >= 1");
  std::vector<mpq_class> c(order + 1);
  switch (kind) {
    case BaseKind::free_associative:
      for (int n = 0; n <= order; ++n) c[n] = 1;
      return {Series::from_coeffs(std::move(c), Domain::rational), true};
    case BaseKind::free_lie:
      for (int n = 1; n <= order; ++n) c[n] = mpq_class(1, n);
      return {Series::from_coeffs(std::move(c), Domain::rational), false};
    case BaseKind::nilpotent:
      if (s < 1) throw DomainError("base_complexity: nilpotent class >= 1");
      for (int n = 1; n <= std::min<int>(order, static_cast<int>(s)); ++n)
        c[n] = mpq_class(1, n);
      return {Series::from_coeffs(std::move(c), Domain::rational), false};
  }
  throw DomainError("base_complexity: unknown kind");
}

ComplexitySeries exp_schreier(const ComplexitySeries& c_quot) {
  require_zero_constant(c_quot.s, "exp_schreier");
  Series y = one_plus_zm1_exp(c_quot.s);
  if (sgn(y[0]) != 0)
    throw NonzeroConstantTerm("exp_schreier: result constant term not 0");
  if (!y.nonnegative())
    throw NegativeCoefficient(
        "exp_schreier: result has a negative coefficient; input is not the "
        "complexity series of a quotient of the free Lie algebra");
  return {y, false};
}

ComplexitySeries complexity_product(const ComplexitySeries& outer,
                                    const ComplexitySeries& inner) {
  require_zero_constant(outer.s, "complexity_product(outer)");
  require_zero_constant(inner.s, "complexity_product(inner)");
  Series g = one_plus_zm1_exp(inner.s);
  require_zero_constant(g, "complexity_product(substitution)");
  return {add(inner.s, compose(outer.s, g)), false};
}

ComplexitySeries complexity_polynilpotent(const VarietyTuple& tuple,
                                          int order) {
  tuple.validate();
  if (order < 1)
    throw DomainError("complexity_polynilpotent: order must be >= 1");
  std::vector<mpq_class> b1(order + 1);
  for (int m = 1; m <= std::min<int>(order, static_cast<int>(tuple.s(1)));
       ++m)
    b1[m] = mpq_class(1, m);
  Series beta = Series::from_coeffs(std::move(b1), Domain::rational);
  for (unsigned i = 2; i <= tuple.q(); ++i) {
    const Series g = one_plus_zm1_exp(beta);
    require_zero_constant(g, "complexity_polynilpotent(substitution)");
    Series acc = Series::zero(order, Domain::rational);
    Series gm = Series::one(order, Domain::rational);
    for (unsigned m = 1; m <= tuple.s(i); ++m) {
      gm = mul(gm, g);
      acc = add(acc, gm.scaled(mpq_class(1, static_cast<long>(m))));
    }
    beta = add(beta, acc);
  }
  validate_complexity(beta);
  return {beta, false};
}

ComplexitySeries complexity_solvable(unsigned q, int order) {
  if (q == 0) throw DomainError("complexity_solvable: q must be >= 1");
  if (order < 1) throw DomainError("complexity_solvable: order must be >= 1");
  Series beta = Series::monomial(1, 1, order, Domain::rational);
  for (unsigned i = 1; i < q; ++i)
    beta = add(beta, one_plus_zm1_exp(beta));
  validate_complexity(beta);
  return {beta, false};
}

GrowthTable codim_sequence(const ComplexitySeries& c) {
  GrowthTable t;
  t.label = TableLabel::codims;
  t.start_degree = c.with_unit ? 0 : 1;
  mpz_class fact = 1;
  for (int n = t.start_degree; n <= c.order(); ++n) {
    if (n > 1) fact *= n;
    mpq_class cn = c.s[n] * mpq_class(fact);
    if (cn.get_den() != 1)
      throw IntegralityViolation("codim_sequence: " + std::to_string(n) +
                                 "!*[z^" + std::to_string(n) +
                                 "] = " + cn.get_str() + " not integral");
    if (sgn(cn) < 0)
      throw NegativeCoefficient("codim_sequence: negative codimension at " +
                                std::to_string(n));
    t.values.emplace_back(cn.get_num());
  }
  return t;
}

ComplexitySeries tower_bound_series(unsigned m, int order) {
  if (m < 4) throw DomainError("tower_bound_series: m must be >= 4");
  if (order < 1) throw DomainError("tower_bound_series: order must be >= 1");
  const Series z = Series::monomial(1, 1, order, Domain::rational);
  Series t = z;
  for (unsigned i = 0; i + 2 < m; ++i) t = mul(z, exp_series(t));
  return {t, false};
}

bool dominates(const ComplexitySeries& f, const ComplexitySeries& g) {
  if (f.order() != g.order())
    throw DomainError("dominates: series must share the truncation order");
  for (int n = 0; n <= f.order(); ++n)
    if (g.s[n] > f.s[n]) return false;
  return true;
}

namespace {
const long double kLnMax = 11300.0L;  // below ln(LDBL_MAX) ~ 11356

long double logsumexp2(long double a, long double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const long double hi = std::max(a, b), lo = std::min(a, b);
  return hi + log1pl(expl(lo - hi));
}
}  // namespace

long double eval_complexity_log(const VarietyTuple& tuple, long double r) {
  tuple.validate();
  if (!(r >= 0.0L) || std::isinf(r))
    throw DomainError("eval_complexity_point: r must be a finite real >= 0");
  const long double neg_inf = -std::numeric_limits<long double>::infinity();
  long double beta = 0.0L;  // value of beta_i(r); may become +inf
  for (unsigned m = 1; m <= tuple.s(1); ++m) beta += powl(r, m) / m;
  long double lnbeta = beta > 0.0L ? logl(beta) : neg_inf;
  for (unsigned i = 2; i <= tuple.q(); ++i) {
    // ln g with g = 1 + (r-1) exp(beta_{i-1}(r))
    long double lng;
    if (r > 1.0L) {
      if (std::isinf(beta))
        throw OverflowUnrepresentable(
            "eval_complexity_point: iterated exponential exceeds the "
            "representable range at level " + std::to_string(i));
      const long double a = logl(r - 1.0L) + beta;
      lng = a > 0.0L ? a + log1pl(expl(-a)) : log1pl(expl(a));
    } else if (r == 1.0L) {
      lng = 0.0L;
    } else {
      if (beta > kLnMax)
        throw OverflowUnrepresentable(
            "eval_complexity_point: exp overflow below r=1");
      const long double g = 1.0L + (r - 1.0L) * expl(beta);
      lng = g > 0.0L ? logl(g) : neg_inf;
    }
    long double lnsum = neg_inf;
    for (unsigned m = 1; m <= tuple.s(i); ++m)
      lnsum = logsumexp2(lnsum, m * lng - logl(static_cast<long double>(m)));
    lnbeta = logsumexp2(lnbeta, lnsum);
    beta = lnbeta < kLnMax ? expl(lnbeta)
                           : std::numeric_limits<long double>::infinity();
  }
  return lnbeta;
}

long double eval_complexity_point(const VarietyTuple& tuple, long double r) {
  const long double v = eval_complexity_log(tuple, r);
  if (std::isinf(v) && v < 0) return 0.0L;
  return expl(v);
}

int first_departure_from_free_lie(const ComplexitySeries& c) {
  for (int n = 1; n <= c.order(); ++n)
    if (c.s[n] != mpq_class(1, n)) return n;
  return 0;
}

}  // namespace polynil
