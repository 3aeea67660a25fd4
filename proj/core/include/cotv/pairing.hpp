#pragma once

// The intersection pairing of a Cartier support function with a generalized
// Minkowski weight on a contraction-free divisorial fan, its iterates, the
// measure of a support function and top self-intersection numbers.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cotv/mweights.hpp"
#include "cotv/suppfn.hpp"

namespace cotv {

struct PairOptions {
  bool check_input = true;   // verify that c is balanced
  bool check_output = false; // verify that h.c is balanced
};

// h.c, a weight of codimension c.codim + 1. Throws MarkedFan on fans with
// marked cones, UnbalancedInput when c is not balanced, OutOfRange when c has
// top codimension.
Weight pair(const DivisorialFan& df, const SupportFunction& h, const Weight& c, const PairOptions& opts = {});
Weight iterate_pair(const DivisorialFan& df, const SupportFunction& h, std::size_t j, const Weight& c,
                    const PairOptions& opts = {});

// Value at a cell F of slice p (dim F = n - k - 1), with the local
// functional of h measured against `normalizer`.
Integer vertical_pairing_value(const DivisorialFan& df, const SupportFunction& h, const Weight& c, std::size_t p,
                               std::size_t cell, const AffineDatum& normalizer);
// Value at an unmarked cone tau (dim tau = n - k) after subtracting m_tau.
Integer horizontal_pairing_value(const DivisorialFan& df, const SupportFunction& h, const Weight& c,
                                 std::size_t tau, const IntVector& m_tau);

// Pairings of c with the finite principal generating set: per cell F of
// V_{k+1} and dual basis row (m, l) of M(F), the function
// SF(m) + SF(l[p] - l[q]) with zero normalizer; per cone tau of R_{k+1} and
// dual basis row m of M(tau), SF(m) with m_tau = 0; and SF([p_i] - [p_0]).
// All values vanish iff c is balanced.
struct ProbeValue {
  WeightIndex location;
  std::size_t generator = 0;
  Integer value;
};
std::vector<ProbeValue> principal_probes(const DivisorialFan& df, const Weight& c);

struct Measure {
  std::map<WeightIndex, Integer> masses;  // vertices (Vertical) and rays (Horizontal)
};
Measure measure_of(const DivisorialFan& df, const SupportFunction& h);
Integer top_intersection(const DivisorialFan& df, const SupportFunction& h);
// Sum of -h(v) mu(v) over slice vertices and -rec(h)(v_tau) mu(tau) over rays.
// Throws DomainMismatch for masses outside the measure domain.
Rational integral_formula(const DivisorialFan& df, const SupportFunction& h, const Measure& mu);

}  // namespace cotv
