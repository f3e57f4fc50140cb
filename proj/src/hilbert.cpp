#include "polynil/hilbert.hpp"

#include <algorithm>
#include <string>

#include "polynil/errors.hpp"
#include "polynil/number_theory.hpp"

namespace polynil {

void VarietyTuple::validate() const {
  if (layers.empty()) throw DomainError("variety tuple must have q >= 1");
  for (unsigned s : layers)
    if (s == 0) throw DomainError("variety tuple entries must be >= 1");
}

VarietyTuple VarietyTuple::parse(const std::string& csv, bool paper_order) {
  VarietyTuple t;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    const std::string item = csv.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1)
        throw DomainError("bad tuple entry '" + item + "'");
      t.layers.push_back(static_cast<unsigned>(v));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("bad tuple entry '" + item + "'");
    }
    pos = comma + 1;
    if (comma == csv.size()) break;
  }
  if (paper_order) std::reverse(t.layers.begin(), t.layers.end());
  t.validate();
  return t;
}

std::string VarietyTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(layers[i]);
  }
  return s;
}

VarietyTuple solvable_tuple(unsigned q) {
  if (q == 0) throw DomainError("solvable length must be >= 1");
  return VarietyTuple{std::vector<unsigned>(q, 1u)};
}

void FreeAlgebraSpec::validate() const {
  if (rank < 1) throw DomainError("rank must be >= 1");
  if (order < 1) throw DomainError("order must be >= 1");
  tuple.validate();
}

std::string label_name(TableLabel l) {
  switch (l) {
    case TableLabel::dims: return "dims";
    case TableLabel::gamma: return "gamma";
    case TableLabel::codims: return "codims";
    case TableLabel::group_ranks: return "group_ranks";
  }
  return "?";
}

TableLabel label_from_name(const std::string& s) {
  if (s == "dims") return TableLabel::dims;
  if (s == "gamma") return TableLabel::gamma;
  if (s == "codims") return TableLabel::codims;
  if (s == "group_ranks") return TableLabel::group_ranks;
  throw DomainError("unknown table label '" + s + "'");
}

const mpz_class& GrowthTable::at_degree(int n) const {
  if (!has_degree(n))
    throw DomainError("degree " + std::to_string(n) + " outside table");
  return values[static_cast<std::size_t>(n - start_degree)];
}

GrowthTable growth_function(const GrowthTable& dims) {
  if (dims.label != TableLabel::dims)
    throw DomainError("growth_function expects a dims table");
  if (dims.start_degree != 1)
    throw DomainError("growth_function expects start degree 1");
  GrowthTable g;
  g.label = TableLabel::gamma;
  g.start_degree = 1;
  g.values.reserve(dims.values.size());
  mpz_class acc = 0;
  for (const mpz_class& v : dims.values) {
    acc += v;
    g.values.push_back(acc);
  }
  return g;
}

namespace {
void require_graded_generators(const Series& alpha, const char* where) {
  if (sgn(alpha[0]) != 0)
    throw DomainError(std::string(where) + ": alpha(0) must vanish");
  if (!alpha.integral() || !alpha.nonnegative())
    throw DomainError(std::string(where) +
                      ": alpha must have nonnegative integer coefficients");
}

// kz - 1 at the given order.
Series kz_minus_one(unsigned k, int order) {
  Series s = Series::monomial(mpq_class(static_cast<long>(k)), 1, order);
  return sub(s, Series::one(order));
}
}  // namespace

Series graded_witt_layers(const Series& alpha, unsigned s) {
  require_graded_generators(alpha, "graded_witt_layers");
  if (s == 0) throw DomainError("graded_witt_layers: s must be >= 1");
  const int n = alpha.order();
  Series acc = Series::zero(n, Domain::rational);
  for (unsigned m = 1; m <= s; ++m) {
    Series term = Series::zero(n, Domain::integer);
    for (unsigned long a : divisors(m)) {
      const int mu = moebius(m / a);
      if (mu == 0) continue;
      Series powed = pow_int(
          substitute_power(alpha, m / static_cast<unsigned>(a)).truncated(n),
          static_cast<unsigned>(a));
      term = (mu > 0) ? add(term, powed) : sub(term, powed);
    }
    acc = add(acc, term.scaled(mpq_class(1, static_cast<long>(m))));
  }
  return acc.to_integer_domain();
}

Series hilbert_polynilpotent(const FreeAlgebraSpec& spec) {
  spec.validate();
  const int n = spec.order;
  Series beta = Series::zero(n, Domain::integer);
  Series alpha = Series::monomial(mpq_class(static_cast<long>(spec.rank)), 1,
                                  n, Domain::integer);
  const Series kz1 = kz_minus_one(spec.rank, n);
  for (unsigned i = 1; i <= spec.tuple.q(); ++i) {
    beta = add(beta, graded_witt_layers(alpha, spec.tuple.s(i)));
    if (sgn(beta[0]) != 0 || !beta.nonnegative())
      throw NegativeOrNonIntegerCoefficient(
          "hilbert_polynilpotent: beta_" + std::to_string(i) +
          " is not a nonnegative series with zero constant term");
    if (i == spec.tuple.q()) break;
    alpha = add(Series::one(n), mul(kz1, euler_transform(beta)))
                .to_integer_domain();
    if (sgn(alpha[0]) != 0 || !alpha.nonnegative())
      throw NegativeOrNonIntegerCoefficient(
          "hilbert_polynilpotent: alpha_" + std::to_string(i) +
          " is not a nonnegative series with zero constant term");
  }
  return beta;
}

Series hilbert_AN_d_closed(unsigned k, unsigned d, int order) {
  if (k < 2) throw DomainError("hilbert_AN_d_closed: k must be >= 2");
  if (d < 1) throw DomainError("hilbert_AN_d_closed: d must be >= 1");
  if (order < 1) throw DomainError("hilbert_AN_d_closed: order must be >= 1");
  const Series witt_poly =
      witt_series(k, static_cast<int>(d)).truncated(order);
  const Series envelope = euler_transform(witt_poly);
  Series h = add(witt_poly, Series::one(order));
  h = add(h, mul(kz_minus_one(k, order), envelope));
  return h.to_integer_domain();
}

Series schreier_series(const Series& hx, const Series& hquot) {
  require_graded_generators(hx, "schreier_series");
  const Series e = euler_transform(hquot);
  const int n = std::min(hx.order(), e.order());
  Series y = add(Series::one(n),
                 mul(sub(hx.truncated(n), Series::one(n)), e));
  if (sgn(y[0]) != 0 || !y.integral() || !y.nonnegative())
    throw NegativeOrNonIntegerCoefficient(
        "schreier_series: result is not a nonnegative integer series with "
        "zero constant term; inputs are not a valid (X, L/H) pair");
  return y.to_integer_domain();
}

GrowthTable dims_table(const Series& hilbert_series) {
  GrowthTable t;
  t.label = TableLabel::dims;
  t.start_degree = 1;
  t.values.reserve(hilbert_series.order());
  for (int i = 1; i <= hilbert_series.order(); ++i) {
    if (hilbert_series[i].get_den() != 1)
      throw IntegralityViolation("dims_table: fractional coefficient");
    t.values.emplace_back(hilbert_series[i].get_num());
  }
  return t;
}

GrowthTable group_lcs_ranks(const FreeAlgebraSpec& spec) {
  if (spec.rank < 2)
    throw DomainError("group_lcs_ranks: rank must be >= 2");
  GrowthTable t = dims_table(hilbert_polynilpotent(spec));
  t.label = TableLabel::group_ranks;
  return t;
}

}  // namespace polynil
