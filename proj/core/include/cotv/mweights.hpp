#pragma once

// Weights on invariant cycles and the balancing conditions that single out
// generalized Minkowski weights, i.e. Chow cohomology classes.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cotv/divfan.hpp"
#include "cotv/toricoracle.hpp"

namespace cotv {

struct Weight {
  std::size_t codim = 0;
  std::map<WeightIndex, Integer> values;  // missing entries are zero

  Integer at(const WeightIndex& w) const {
    const auto it = values.find(w);
    return it == values.end() ? Integer(0) : it->second;
  }
  friend bool operator==(const Weight& a, const Weight& b);
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Integer& k, const Weight& c);
bool is_zero(const Weight& c);

// One linear condition evaluated on a weight.
struct BalancingTerm {
  WeightIndex index;
  Rational coefficient;
  Integer value;
};

struct BalancingEntry {
  std::string condition;  // "1", "2.1", "2.2" or "3"
  WeightIndex location;   // the cell or cone the condition is attached to
  std::size_t basis = 0;  // dual basis row, or the compared point for "2.2"
  std::vector<BalancingTerm> lhs;
  std::vector<BalancingTerm> rhs;  // nonempty only for "2.2"
  Rational residual;
  // e.g. "-1+3-2=0" or "3=3"
  std::string rendered() const;
};

struct BalancingReport {
  std::vector<BalancingEntry> entries;
  std::vector<BalancingEntry> violations() const;
  bool balanced() const;
};

// Throws DomainMismatch if c has entries outside index_sets(df, c.codim), and
// MissingStabilizer if a needed stabilizer index is absent.
BalancingReport check_balancing(const DivisorialFan& df, const Weight& c);

struct WeightBasis {
  std::vector<WeightIndex> domain;
  std::vector<Weight> basis;
  std::size_t rank() const { return basis.size(); }
};
WeightBasis weight_basis(const DivisorialFan& df, std::size_t k);
// Coefficient rows of the balancing conditions over index_sets(df, k).all().
std::vector<IntVector> balancing_matrix(const DivisorialFan& df, std::size_t k);

Weight fundamental_weight(const DivisorialFan& df);

struct HorizontalWeightRestriction {
  StarHorizontal star;
  Weight weight;
};
// c^tau. Throws MarkedCone if tau is marked and MarkedFan if df has marked cones.
HorizontalWeightRestriction restrict_weight_horizontal(const DivisorialFan& df, const Weight& c, std::size_t tau);

struct VerticalWeightRestriction {
  StarVertical star;
  ToricWeight weight;
};
// c^{p,G} as a toric weight on the star fan of G.
VerticalWeightRestriction restrict_weight_vertical(const DivisorialFan& df, const Weight& c, std::size_t p,
                                                   std::size_t cell);

// The value on the zero cone of a weight of codimension n+1.
Integer degree_of_top_weight(const DivisorialFan& df, const Weight& c);

}  // namespace cotv
