#pragma once

// Divisorial support functions: one piecewise affine function per slice with
// integral slope and translation on every maximal cell, sharing a common
// recession function on the recession fan.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cotv/divfan.hpp"

namespace cotv {

struct AffineDatum {
  IntVector slope;
  Integer translation;

  Rational evaluate(const RatVector& x) const { return dot(slope, x) + Rational(translation); }
  // The linear functional (m, l) on N + Z.
  IntVector homogenized() const;
  friend bool operator==(const AffineDatum& a, const AffineDatum& b) {
    return a.slope == b.slope && a.translation == b.translation;
  }
};

struct SupportFunction {
  std::vector<std::map<std::size_t, AffineDatum>> cells;  // per point: maximal cell -> datum
  std::map<std::size_t, IntVector> recession;             // maximal cone -> slope

  // Datum of the lowest-index maximal cell containing `cell`.
  const AffineDatum& datum_on(const DivisorialFan& df, std::size_t p, std::size_t cell) const;
  // Slope on the lowest-index maximal cone containing `cone`.
  const IntVector& slope_on(const DivisorialFan& df, std::size_t cone) const;
  Rational value_at_vertex(const DivisorialFan& df, std::size_t p, std::size_t vertex_cell) const;

  friend bool operator==(const SupportFunction& a, const SupportFunction& b) {
    return a.cells == b.cells && a.recession == b.recession;
  }
};

SupportFunction operator+(const SupportFunction& a, const SupportFunction& b);
SupportFunction operator-(const SupportFunction& a, const SupportFunction& b);
SupportFunction operator*(const Integer& k, const SupportFunction& h);
SupportFunction zero_sf(const DivisorialFan& df);

// Empty iff h is a divisorial support function on df.
std::vector<std::string> validate_sf(const DivisorialFan& df, const SupportFunction& h);
const std::map<std::size_t, IntVector>& recession_of(const SupportFunction& h);

// SF(u) + SF(D) with D given by one coefficient per marked point.
SupportFunction principal_sf(const DivisorialFan& df, const IntVector& u, const std::vector<Integer>& d);

struct PrincipalData {
  IntVector u;
  std::vector<Integer> d;  // one coefficient per marked point, summing to zero
};
std::optional<PrincipalData> is_principal(const DivisorialFan& df, const SupportFunction& h);

struct HorizontalRestriction {
  StarHorizontal star;
  SupportFunction function;  // on star.fan
  IntVector m_tau;           // the slope subtracted before descending
};
// h(tau). The default representative m_tau is the slope of the lowest-index
// maximal cell of the first slice whose recession cone contains tau, and 0
// for the zero cone. Throws MarkedCone.
HorizontalRestriction restrict_horizontal_sf(const DivisorialFan& df, const SupportFunction& h, std::size_t tau,
                                             const std::optional<IntVector>& m_tau = std::nullopt);
IntVector default_m_tau(const DivisorialFan& df, const SupportFunction& h, std::size_t tau);

struct VerticalRestriction {
  StarVertical star;
  std::map<std::size_t, IntVector> functionals;  // maximal star cone -> functional on N(F)
  AffineDatum normalizer;
};
// h_{p,F}. The default normalizer is the datum of the highest-index maximal
// cell containing F.
VerticalRestriction restrict_vertical_sf(const DivisorialFan& df, const SupportFunction& h, std::size_t p,
                                         std::size_t cell,
                                         const std::optional<AffineDatum>& normalizer = std::nullopt);
AffineDatum default_vertical_normalizer(const DivisorialFan& df, const SupportFunction& h, std::size_t p,
                                        std::size_t cell);

// Coefficients of D_h on unmarked rays (Horizontal) and slice vertices (Vertical).
std::map<WeightIndex, Integer> weil_expansion(const DivisorialFan& df, const SupportFunction& h);

// A basis of the lattice of all divisorial support functions on df.
std::vector<SupportFunction> sf_lattice_basis(const DivisorialFan& df);

}  // namespace cotv
