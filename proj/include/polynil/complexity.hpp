#pragma once

#include "polynil/growth_table.hpp"
#include "polynil/series.hpp"
#include "polynil/variety.hpp"

namespace polynil {

// Exponential generating function sum c_n/n! z^n of a multilinear-part
// dimension sequence. Lie varieties carry no constant term; with_unit
// marks the associative convention c_0 = 1.
struct ComplexitySeries {
  Series s;
  bool with_unit = false;

  int order() const { return s.order(); }
};

enum class BaseKind { free_associative, free_lie, nilpotent };

// C(A) = 1/(1-z), C(L) = -ln(1-z), C(N_s) = sum_{n<=s} z^n/n, truncated.
ComplexitySeries base_complexity(BaseKind kind, int order, unsigned s = 0);

// Exponential Schreier formula: generator series of an X-uniform
// subalgebra, 1 + (z-1)*exp(c_quot). Result must come out with zero
// constant term and nonnegative coefficients.
ComplexitySeries exp_schreier(const ComplexitySeries& c_quot);

// Product of varieties M.V: C(V,z) + C(M, 1+(z-1)exp(C(V,z))). The outer
// series must be multihomogeneous; only library-built outer series are
// supported.
ComplexitySeries complexity_product(const ComplexitySeries& outer,
                                    const ComplexitySeries& inner);

// beta_1 = sum_{m<=s_1} z^m/m;
// beta_i = beta_{i-1} + sum_{m<=s_i} (1+(z-1)exp(beta_{i-1}))^m / m.
ComplexitySeries complexity_polynilpotent(const VarietyTuple& tuple,
                                          int order);

// Solvable special case: beta_1 = z, beta_{i+1} = beta_i + 1 +
// (z-1)exp(beta_i); must agree with the all-ones tuple recursion.
ComplexitySeries complexity_solvable(unsigned q, int order);

// Exact codimensions c_n = n! * [z^n] C; every entry must be a
// nonnegative integer.
GrowthTable codim_sequence(const ComplexitySeries& c);

// z exp(z exp( ... exp(z) ...)) with m-2 exponentials: the coefficientwise
// upper bound series for algebras satisfying an identity of degree m >= 4.
ComplexitySeries tower_bound_series(unsigned m, int order);

// True iff every coefficient of g is <= the matching coefficient of f.
// Both series must share the truncation order.
bool dominates(const ComplexitySeries& f, const ComplexitySeries& g);

// Pointwise evaluation of C(V, r) for real r >= 0, running the same
// recursion over scalars. eval_complexity_log returns ln C(V, r) and works
// in log space so iterated exponentials do not overflow prematurely.
long double eval_complexity_point(const VarietyTuple& tuple, long double r);
long double eval_complexity_log(const VarietyTuple& tuple, long double r);

// Checks the complexity-series invariants: nonnegative coefficients and
// n! * c_n integral for all n (throws on violation).
void validate_complexity(const Series& s);

// Smallest degree where C(tuple) departs from the free-Lie series
// c_n = (n-1)!, or 0 if no departure up to the order.
int first_departure_from_free_lie(const ComplexitySeries& c);

}  // namespace polynil
