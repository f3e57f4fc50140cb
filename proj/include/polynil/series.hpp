#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polynil {

enum class Domain { integer, rational };

// Dense truncated formal power series with exact coefficients.
// Coefficients are stored for degrees 0..order(); values are immutable
// after construction, so series may be shared freely across threads.
// An integer-domain series has every coefficient with denominator 1.
class Series {
 public:
  Series();  // zero series of order 0, integer domain

  static Series zero(int order, Domain d = Domain::integer);
  static Series one(int order, Domain d = Domain::integer);
  static Series constant(const mpq_class& value, int order, Domain d);
  static Series monomial(const mpq_class& coeff, int degree, int order,
                         Domain d = Domain::integer);
  // order = coeffs.size()-1; the domain is checked against the entries.
  static Series from_coeffs(std::vector<mpq_class> coeffs, Domain d);
  static Series from_int_coeffs(const std::vector<long>& coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Domain domain() const { return domain_; }
  const mpq_class& operator[](int n) const { return c_[n]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  // True when every coefficient has denominator 1.
  bool integral() const;
  bool nonnegative() const;

  // Coefficients of degree > order() are taken to be zero; clipping to a
  // smaller order is the usual case.
  Series truncated(int new_order) const;
  // Same values, domain flag set to integer; throws IntegralityViolation
  // if some denominator is not 1.
  Series to_integer_domain() const;
  Series to_rational_domain() const;
  // Every coefficient multiplied by f.
  Series scaled(const mpq_class& f) const;

  std::string to_string() const;  // for diagnostics
  // Consistency of the internal representation (entry count, canonical
  // rationals, domain flag); used by tests.
  bool check_invariants() const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.c_ == b.c_;  // same order and identical coefficient values
  }

 private:
  Series(Domain d, std::vector<mpq_class> c) : domain_(d), c_(std::move(c)) {}

  Domain domain_;
  std::vector<mpq_class> c_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
// Cauchy product truncated to min(f.order, g.order).
Series mul(const Series& f, const Series& g);
// f^a by repeated squaring, a >= 1, truncation = f.order.
Series pow_int(const Series& f, unsigned a);
// f(z^m): coefficient of z^{mn} equals coefficient n of f; order becomes
// f.order*m so no coefficient is lost.
Series substitute_power(const Series& f, unsigned m);
// f(g(z)) by Horner, g(0) must vanish; truncated to min of the orders.
Series compose(const Series& f, const Series& g);
// exp(f) with f(0)=0, via the first-order coefficient recurrence.
Series exp_series(const Series& f);
// log(f) with f(0)=1; exact inverse of exp_series on its domain.
Series log_series(const Series& f);
// The operator E(phi) = prod_n (1-t^n)^{-b_n} for phi = sum b_n t^n with
// b_n in {0,1,2,...}. Production route: iterative binomial product in pure
// integer arithmetic.
Series euler_transform(const Series& f);
// Oracle route for the same operator: exp(sum_m (sum_{d|m} d*b_d)/m t^m),
// kept independent so the two can be checked against each other.
Series euler_transform_exp_route(const Series& f);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }

}  // namespace polynil
