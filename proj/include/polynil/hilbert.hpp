#pragma once

#include "polynil/growth_table.hpp"
#include "polynil/series.hpp"
#include "polynil/variety.hpp"

namespace polynil {

// A free polynilpotent Lie algebra of finite rank together with the
// truncation degree used for series computations.
struct FreeAlgebraSpec {
  unsigned rank = 2;
  VarietyTuple tuple;
  int order = 1;

  void validate() const;
};

// sum_{m=1}^{s} (1/m) sum_{a|m} mu(m/a) (alpha(z^{m/a}))^a -- the Hilbert
// series of the lower-central layers of weight <= s of a free Lie algebra
// on a graded space with generating series alpha. Input must be an
// integer series with alpha(0)=0 and nonnegative coefficients; the result
// is checked to be integral.
Series graded_witt_layers(const Series& alpha, unsigned s);

// Hilbert-Poincare series of F(N_{s_q}...N_{s_1}, k) via the recursion
//   beta_0 = 0, alpha_0 = kz,
//   beta_i = beta_{i-1} + graded_witt_layers(alpha_{i-1}, s_i),
//   alpha_i = 1 + (kz-1) * E(beta_i),
// returning beta_q. Every intermediate alpha_i and beta_i is checked to
// have zero constant term and nonnegative integer coefficients.
Series hilbert_polynilpotent(const FreeAlgebraSpec& spec);

// Closed form for F(A N_d, k):
//   psi_k(1) z + ... + psi_k(d) z^d + 1 + (kz-1)/prod_j (1-z^j)^{psi_k(j)}.
Series hilbert_AN_d_closed(unsigned k, unsigned d, int order);

// Subalgebra generator series: 1 + (hx - 1) * E(hquot), for a free Lie
// algebra with generator series hx and quotient series hquot. The result
// is checked to have zero constant term and nonnegative integer
// coefficients.
Series schreier_series(const Series& hx, const Series& hquot);

// Coefficients 1..order of an integer series as a dims table.
GrowthTable dims_table(const Series& hilbert_series);

// Ranks b_n of the lower central series factors of the free polynilpotent
// group: equal to the Hilbert coefficients of the corresponding free Lie
// algebra. Requires rank >= 2.
GrowthTable group_lcs_ranks(const FreeAlgebraSpec& spec);

}  // namespace polynil
