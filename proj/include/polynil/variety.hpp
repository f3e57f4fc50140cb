#pragma once

#include <string>
#include <vector>

namespace polynil {

// Layer tuple (s_1, ..., s_q) of a polynilpotent variety, stored
// inner-to-outer: layers[0] = s_1 is the innermost nilpotency class.
// Note the reversed convention relative to the usual product notation
// N_{s_q}...N_{s_1}, which reads outer-to-inner; parse() accepts both.
struct VarietyTuple {
  std::vector<unsigned> layers;

  unsigned q() const { return static_cast<unsigned>(layers.size()); }
  // 1-based: s(1) is the innermost class.
  unsigned s(unsigned i) const { return layers[i - 1]; }

  void validate() const;
  // Comma-separated list, e.g. "1,2". With paper_order=true the input is
  // read outer-to-inner and reversed into the internal convention.
  static VarietyTuple parse(const std::string& csv, bool paper_order = false);
  std::string to_string() const;

  friend bool operator==(const VarietyTuple& a, const VarietyTuple& b) {
    return a.layers == b.layers;
  }
};

inline VarietyTuple tuple_of(std::initializer_list<unsigned> inner_first) {
  return VarietyTuple{std::vector<unsigned>(inner_first)};
}

// All-ones tuple of length q (the solvable variety A^q).
VarietyTuple solvable_tuple(unsigned q);

}  // namespace polynil
