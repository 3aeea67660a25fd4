#pragma once

// Exact rational polyhedra, cones, polyhedral complexes and fans.
//
// A polyhedron P in Q^n is stored through its V-representation (vertices and
// primitive rays) and handled internally through the homogenized cone
//   C(P) = cone{(v, 1), (r, 0)} in Q^(n+1),
// whose facets give the H-representation and whose faces (those not lying in
// the hyperplane t = 0) are exactly the nonempty faces of P. A cone is a
// polyhedron whose only vertex is the origin.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cotv/ratlin.hpp"

namespace cotv {

class Polyhedron {
 public:
  Polyhedron() = default;

  // Throws EmptyPolyhedron when no vertex is given and NotPointed when the
  // recession cone contains a line. Redundant generators are discarded.
  static Polyhedron from_generators(std::size_t rank, const std::vector<RatVector>& vertices,
                                    const std::vector<IntVector>& rays);
  static Polyhedron cone(std::size_t rank, const std::vector<IntVector>& rays);
  // {x : a_i . x >= b_i}. Throws EmptyPolyhedron if infeasible, NotPointed if
  // the solution set contains a line.
  static Polyhedron from_inequalities(std::size_t rank, const std::vector<RatVector>& a,
                                      const std::vector<Rational>& b);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  bool is_cone() const;
  bool is_bounded() const { return rays_.empty(); }

  // Generators of C(P): primitive (d v, d) for vertices, (r, 0) for rays.
  std::vector<IntVector> homogenized_generators() const;
  // Facet normals a of C(P): a . (x, 1) >= 0 on P, one per facet.
  const std::vector<IntVector>& facet_normals() const { return facets_; }
  // Rows e with e . (x, 1) = 0 on P (affine hull).
  const IntMatrix& equations() const { return equations_; }

  bool contains(const RatVector& x) const;
  bool contains(const Polyhedron& other) const;
  // All nonempty faces, including the polyhedron itself, in canonical order.
  std::vector<Polyhedron> faces() const;
  RatVector relative_interior_point() const;

  // Canonical text form, e.g. "conv(-1/2;0)+cone(-1)" or "cone(1,0;0,1)".
  const std::string& key() const { return key_; }

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) { return a.key_ == b.key_; }
  friend bool operator!=(const Polyhedron& a, const Polyhedron& b) { return !(a == b); }
  // Canonical order: dimension, then vertices lexicographically, then rays.
  friend bool operator<(const Polyhedron& a, const Polyhedron& b);

 private:
  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> facets_;
  IntMatrix equations_;
  std::string key_;
};

Polyhedron recession_cone(const Polyhedron& p);
// Cone in rank n+1 spanned by (v, s) for vertices v and (r, 0) for rays,
// s = height_sign in {+1, -1}.
Polyhedron homogenize(const Polyhedron& p, int height_sign);
std::optional<Polyhedron> intersect(const Polyhedron& a, const Polyhedron& b);
// Image under the quotient projection. Throws NotPointed if the image
// contains a line.
Polyhedron image(const Polyhedron& p, const QuotientLattice& q);

// Pointed-cone helpers on raw generators in Z^d.
std::vector<IntVector> extreme_rays(std::size_t d, const std::vector<IntVector>& generators);

class PolyComplex {
 public:
  PolyComplex() = default;

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  const Polyhedron& cell(std::size_t i) const { return cells_.at(i); }
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  bool is_maximal(std::size_t i) const;
  // Faces of codimension one in cell i.
  const std::vector<std::size_t>& facets_of(std::size_t i) const { return facets_.at(i); }
  // Cells having cell i as a facet.
  const std::vector<std::size_t>& cofacets_of(std::size_t i) const { return cofacets_.at(i); }
  // Every cell containing cell i as a face, i itself included, ascending.
  std::vector<std::size_t> star_of(std::size_t i) const;
  // Maximal cells containing cell i, ascending.
  std::vector<std::size_t> maximal_containing(std::size_t i) const;
  bool is_face(std::size_t face, std::size_t cell) const;
  std::vector<std::size_t> by_dim(std::size_t d) const;
  std::optional<std::size_t> find(const Polyhedron& p) const;
  std::optional<std::size_t> find(const std::string& key) const;
  bool is_fan() const;
  std::size_t dim() const;

  friend PolyComplex build_complex(std::size_t rank, const std::vector<Polyhedron>& max_cells);

 private:
  std::size_t rank_ = 0;
  std::vector<Polyhedron> cells_;
  std::vector<std::size_t> maximal_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofacets_;
};

// Throws IntersectionNotFace if two cells meet outside a common face and
// RankMismatch if a cell lives in a different ambient rank.
PolyComplex build_complex(std::size_t rank, const std::vector<Polyhedron>& max_cells);
bool is_complete(const PolyComplex& c);
// The fan of recession cones of all cells.
PolyComplex recession_fan(const PolyComplex& c);

std::string to_string(const Polyhedron& p);

}  // namespace cotv
