#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polynil {

enum class TableLabel { dims, gamma, codims, group_ranks };

std::string label_name(TableLabel l);
TableLabel label_from_name(const std::string& s);

// A degree-indexed sequence of exact integers (dimensions, growth values,
// codimensions or group ranks).
struct GrowthTable {
  TableLabel label = TableLabel::dims;
  int start_degree = 1;
  std::vector<mpz_class> values;

  int last_degree() const {
    return start_degree + static_cast<int>(values.size()) - 1;
  }
  bool has_degree(int n) const {
    return n >= start_degree && n <= last_degree();
  }
  const mpz_class& at_degree(int n) const;

  friend bool operator==(const GrowthTable& a, const GrowthTable& b) {
    return a.label == b.label && a.start_degree == b.start_degree &&
           a.values == b.values;
  }
};

// Prefix sums of a dims table: gamma(n) = sum_{s<=n} dim L_s.
GrowthTable growth_function(const GrowthTable& dims);

}  // namespace polynil
