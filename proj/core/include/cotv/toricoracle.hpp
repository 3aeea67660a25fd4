#pragma once

// Classical toric intersection theory on complete fans, used as an
// independent reference for two-point divisorial fans. With exactly two
// marked points the homogenized fan in N + Z (first slice at height +1,
// second at height -1, recession fan at height 0) defines a complete toric
// variety whose invariant cycles and Cartier divisors match those of the
// complexity-one variety.

#include <cstddef>
#include <map>
#include <vector>

#include "cotv/divfan.hpp"
#include "cotv/polykernel.hpp"
#include "cotv/suppfn.hpp"

namespace cotv {

// A conewise linear function: one functional per maximal cone.
using ConeFunctional = std::map<std::size_t, RatVector>;

// A function on the cones of dimension (fan rank - codim).
struct ToricWeight {
  std::size_t codim = 0;
  std::map<std::size_t, Rational> values;
  friend bool operator==(const ToricWeight& a, const ToricWeight& b) {
    return a.codim == b.codim && a.values == b.values;
  }
};

struct ConeOrigin {
  bool from_slice = false;  // false: recession cone at height 0
  std::size_t point = 0;
  std::size_t id = 0;
};

struct HomogenizedFan {
  PolyComplex fan;
  std::vector<ConeOrigin> origin;  // per cone of `fan`
  // Cone of `fan` representing a weight index of the divisorial fan.
  std::size_t cone_of(const WeightIndex& w) const;
};

// Throws NotTwoPoints unless df has exactly two marked points and MarkedFan
// if df has marked cones.
HomogenizedFan homogenize_fan(const DivisorialFan& df);
// Cell datum (m, l) at height s becomes the functional (m, s l).
ConeFunctional transport(const DivisorialFan& df, const HomogenizedFan& hf, const SupportFunction& h);

// Throws NonLinearOnCone when a maximal cone has no functional or adjacent
// functionals disagree on a shared face.
void check_conewise_linear(const PolyComplex& fan, const ConeFunctional& f);

struct StarRestriction {
  PolyComplex fan;                  // star of the cone in N / span(cone)
  std::vector<std::size_t> origin;  // star cone -> cone of the original fan
  QuotientLattice lattice;
};
StarRestriction toric_star(const PolyComplex& fan, std::size_t cone);
// f minus the functional of a maximal cone containing `cone`, descended.
ConeFunctional restrict_functional(const PolyComplex& fan, const StarRestriction& star, std::size_t cone,
                                   const ConeFunctional& f);

// D_{f_1} ... D_{f_d} on the complete toric variety of `fan` (rank d).
Rational toric_intersection(const PolyComplex& fan, const std::vector<ConeFunctional>& fs);
// D_{f_1} ... D_{f_j} . V(cone), with j = codimension of the cone.
Rational toric_degree_on_orbit(const PolyComplex& fan, std::size_t cone, const std::vector<ConeFunctional>& fs);

// Residuals of the classical balancing conditions, one per (cone, coordinate).
std::vector<Rational> toric_balancing_residuals(const PolyComplex& fan, const ToricWeight& c);
bool toric_is_balanced(const PolyComplex& fan, const ToricWeight& c);
std::size_t toric_weight_rank(const PolyComplex& fan, std::size_t codim);
// Corner locus D_f . c of a codim-k weight, a codim-(k+1) weight.
ToricWeight toric_pair(const PolyComplex& fan, const ConeFunctional& f, const ToricWeight& c);

}  // namespace cotv
