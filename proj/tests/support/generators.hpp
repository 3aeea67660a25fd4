#pragma once

// Deterministic random instances for the property suites: contraction-free
// divisorial fans of rank one or two with two to four marked points, random
// support functions and random balanced weights.

#include <cstddef>
#include <random>
#include <vector>

#include "cotv/mweights.hpp"
#include "cotv/suppfn.hpp"

namespace cotv::testing {

using Rng = std::mt19937_64;

DivisorialFan random_fan(Rng& rng, std::size_t rank, std::size_t points);

// An instance with the lattice of support functions and weight bases cached.
struct Instance {
  DivisorialFan df;
  std::vector<SupportFunction> sf_basis;
  std::vector<WeightBasis> weights;  // codim 0 .. n+1
};
Instance make_instance(DivisorialFan df);

// A pool of instances covering ranks 1 and 2 and two to four points, built
// once from a fixed seed.
const std::vector<Instance>& instance_pool();
// Only the two-point instances of the pool.
std::vector<const Instance*> two_point_pool();

SupportFunction random_sf(Rng& rng, const Instance& inst, long range = 2);
SupportFunction random_principal(Rng& rng, const DivisorialFan& df, long range = 3);
Weight random_weight(Rng& rng, const Instance& inst, std::size_t codim, long range = 2);
long uniform(Rng& rng, long lo, long hi);

}  // namespace cotv::testing
