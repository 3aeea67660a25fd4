#pragma once

// Divisorial fans over the projective line and the lattice gadgets attached
// to them: index sets of invariant cycles, vertex multiplicities, lattice
// normal vectors and star fans.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cotv/polykernel.hpp"
#include "cotv/ratlin.hpp"

namespace cotv {

class DivisorialFan {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DivisorialFan() = default;
  // `marked` lists cone indices of `recession`; `stabilizers` maps marked
  // cone indices to their stabilizer index.
  DivisorialFan(std::size_t rank, std::vector<std::string> points, std::vector<PolyComplex> slices,
                PolyComplex recession, std::vector<std::size_t> marked = {},
                std::map<std::size_t, Rational> stabilizers = {});

  std::size_t rank() const { return rank_; }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t num_points() const { return points_.size(); }
  std::optional<std::size_t> point_index(const std::string& label) const;
  const PolyComplex& slice(std::size_t p) const { return slices_.at(p); }
  const std::vector<PolyComplex>& slices() const { return slices_; }
  const PolyComplex& recession() const { return recession_; }
  const std::vector<std::size_t>& marked() const { return marked_; }
  bool is_marked(std::size_t cone) const;
  bool contraction_free() const { return marked_.empty(); }
  const std::map<std::size_t, Rational>& stabilizers() const { return stabilizers_; }

  // Index of rec(cell) in the recession fan, or npos if it is not a cone of it.
  std::size_t rec_of(std::size_t p, std::size_t cell) const { return rec_.at(p).at(cell); }

  // N(sigma) = N / (N cap span sigma).
  const QuotientLattice& cone_quotient(std::size_t cone) const;
  // N(F) = (N + Z) / span c(F), with F placed at height one.
  const QuotientLattice& cell_quotient(std::size_t p, std::size_t cell) const;
  // Primitive generators of c(F).
  std::vector<IntVector> cell_cone_generators(std::size_t p, std::size_t cell) const;

 private:
  struct Cache;
  std::size_t rank_ = 0;
  std::vector<std::string> points_;
  std::vector<PolyComplex> slices_;
  PolyComplex recession_;
  std::vector<std::size_t> marked_;
  std::map<std::size_t, Rational> stabilizers_;
  std::vector<std::vector<std::size_t>> rec_;
  std::shared_ptr<Cache> cache_;
};

struct WeightIndex {
  enum class Kind { Vertical, Horizontal, Contracted };
  Kind kind = Kind::Vertical;
  std::size_t point = 0;  // only meaningful for Vertical
  std::size_t id = 0;     // cell index in the slice, or cone index in the recession fan

  static WeightIndex vertical(std::size_t p, std::size_t cell) { return {Kind::Vertical, p, cell}; }
  static WeightIndex horizontal(std::size_t cone) { return {Kind::Horizontal, 0, cone}; }
  static WeightIndex contracted(std::size_t cone) { return {Kind::Contracted, 0, cone}; }

  friend bool operator<(const WeightIndex& a, const WeightIndex& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.point != b.point) return a.point < b.point;
    return a.id < b.id;
  }
  friend bool operator==(const WeightIndex& a, const WeightIndex& b) {
    return a.kind == b.kind && a.point == b.point && a.id == b.id;
  }
};

// Human-readable label, e.g. "V[0:conv(-1/2)]", "R[cone(1)]", "T[cone()]".
std::string describe(const DivisorialFan& df, const WeightIndex& w);

struct IndexSets {
  std::vector<WeightIndex> vertical;    // V_k
  std::vector<WeightIndex> horizontal;  // R_k
  std::vector<WeightIndex> contracted;  // T_k
  std::vector<WeightIndex> all() const;
};

// Throws OutOfRange unless 0 <= k <= n+1.
IndexSets index_sets(const DivisorialFan& df, long k);

// Empty iff df satisfies every standing assumption. With `strict`, every
// marked slice must also differ from the recession fan.
std::vector<std::string> validate_fan(const DivisorialFan& df, bool strict = false);

struct VertexMultiplicity {
  RatVector vertex;  // image of F in N(rec F)
  Integer multiplicity;
};
// Throws DimensionMismatch unless dim F = dim rec(F).
VertexMultiplicity vertex_and_multiplicity(const DivisorialFan& df, std::size_t p, std::size_t cell);

// v_{tau,sigma} in N(tau) coordinates. Throws NotAFacet.
IntVector normal_vector_horizontal(const DivisorialFan& df, std::size_t tau, std::size_t sigma);
// v_{F,G} in N(F) coordinates. Throws NotAFacet.
IntVector normal_vector_vertical(const DivisorialFan& df, std::size_t p, std::size_t f, std::size_t g);

struct StarVertical {
  PolyComplex fan;                 // in N(F)
  std::vector<std::size_t> origin; // star cone -> slice cell
};
StarVertical star_fan_vertical(const DivisorialFan& df, std::size_t p, std::size_t cell);

struct StarHorizontal {
  DivisorialFan fan;                            // lattice N(tau)
  std::vector<std::vector<std::size_t>> cell_origin;  // per point: star cell -> slice cell
  std::vector<std::size_t> cone_origin;         // star cone -> recession cone
};
// Throws MarkedCone if tau is marked.
StarHorizontal star_fan_horizontal(const DivisorialFan& df, std::size_t tau);

}  // namespace cotv
