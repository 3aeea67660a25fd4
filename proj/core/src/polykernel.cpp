#include "cotv/polykernel.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "cotv/error.hpp"

namespace cotv {

namespace {

using Mask = std::uint64_t;

// Calls f(subset) for every k-element index subset of {0..n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct ConeHrep {
  IntMatrix equations;  // functionals vanishing on the linear span
  std::vector<IntVector> facets;
  bool pointed = true;
  std::size_t dim = 0;
};

// Exact facet enumeration: every facet is spanned by dim-1 independent
// generators, so its normal is the one-dimensional kernel of those
// generators together with the equations.
ConeHrep cone_hrep(std::size_t d, const std::vector<IntVector>& gens) {
  ConeHrep h;
  const IntMatrix g = gens.empty() ? IntMatrix(0, d) : IntMatrix::from_rows(d, gens);
  h.equations = integer_kernel(g);
  h.dim = d - h.equations.rows();
  if (h.dim == 0) return h;
  std::set<IntVector> found;
  for_each_subset(gens.size(), h.dim - 1, [&](const std::vector<std::size_t>& s) {
    IntMatrix a = h.equations;
    for (auto i : s) a.append_row(gens[i]);
    if (a.rows() == 0) a = IntMatrix(0, d);
    const IntMatrix k = integer_kernel(a);
    if (k.rows() != 1) return;
    IntVector n = k.row(0);
    bool pos = false, neg = false;
    for (const auto& x : gens) {
      const int sg = sgn(dot(n, x));
      if (sg > 0) pos = true;
      if (sg < 0) neg = true;
      if (pos && neg) return;
    }
    if (!pos && !neg) return;
    if (neg)
      for (auto& x : n) x = -x;
    found.insert(std::move(n));
  });
  h.facets.assign(found.begin(), found.end());
  std::vector<IntVector> rows = h.equations.row_vectors();
  rows.insert(rows.end(), h.facets.begin(), h.facets.end());
  h.pointed = rational_rank(rows, d) == d;
  return h;
}

std::vector<IntVector> extreme_from_hrep(std::size_t d, const ConeHrep& h,
                                         const std::vector<IntVector>& gens) {
  std::set<IntVector> out;
  if (h.dim == 0) return {};
  for (const auto& g : gens) {
    if (is_zero(g)) continue;
    std::vector<IntVector> rows = h.equations.row_vectors();
    for (const auto& f : h.facets)
      if (dot(f, g) == 0) rows.push_back(f);
    if (rational_rank(rows, d) == d - 1) out.insert(primitive(g));
  }
  return {out.begin(), out.end()};
}

IntVector homogenize_vertex(const RatVector& v, const Integer& height) {
  RatVector w = v;
  w.push_back(Rational(height));
  const Integer den = common_denominator(w);
  IntVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational q = w[i] * den;
    out[i] = q.get_num();
  }
  return primitive(out);
}

std::string vec_key(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

std::string vec_key(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s;
}

}  // namespace

std::vector<IntVector> extreme_rays(std::size_t d, const std::vector<IntVector>& generators) {
  const ConeHrep h = cone_hrep(d, generators);
  if (!h.pointed) throw Error(ErrorCode::NotPointed, "cone contains a line");
  return extreme_from_hrep(d, h, generators);
}

Polyhedron Polyhedron::from_generators(std::size_t rank, const std::vector<RatVector>& vertices,
                                       const std::vector<IntVector>& rays) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyPolyhedron, "polyhedron without vertices");
  std::vector<IntVector> gens;
  for (const auto& v : vertices) {
    if (v.size() != rank) throw Error(ErrorCode::RankMismatch, "vertex " + to_string(v) + " has wrong length");
    gens.push_back(homogenize_vertex(v, 1));
  }
  for (const auto& r : rays) {
    if (r.size() != rank) throw Error(ErrorCode::RankMismatch, "ray " + to_string(r) + " has wrong length");
    if (is_zero(r)) continue;
    IntVector g = primitive(r);
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  const std::size_t d = rank + 1;
  ConeHrep h = cone_hrep(d, gens);
  if (!h.pointed) throw Error(ErrorCode::NotPointed, "recession cone contains a line");
  Polyhedron p;
  p.rank_ = rank;
  p.dim_ = h.dim - 1;
  for (const auto& g : extreme_from_hrep(d, h, gens)) {
    if (g[rank] > 0) {
      RatVector v(rank);
      for (std::size_t i = 0; i < rank; ++i) v[i] = Rational(g[i], g[rank]);
      for (auto& x : v) x.canonicalize();
      p.vertices_.push_back(std::move(v));
    } else {
      p.rays_.push_back(IntVector(g.begin(), g.end() - 1));
    }
  }
  std::sort(p.vertices_.begin(), p.vertices_.end());
  std::sort(p.rays_.begin(), p.rays_.end());
  p.facets_ = std::move(h.facets);
  p.equations_ = std::move(h.equations);

  const bool cone_like = p.vertices_.size() == 1 && is_zero(p.vertices_[0]);
  std::string key;
  if (cone_like) {
    key = "cone(";
    for (std::size_t i = 0; i < p.rays_.size(); ++i) key += (i ? ";" : "") + vec_key(p.rays_[i]);
    key += ")";
  } else {
    key = "conv(";
    for (std::size_t i = 0; i < p.vertices_.size(); ++i) key += (i ? ";" : "") + vec_key(p.vertices_[i]);
    key += ")";
    if (!p.rays_.empty()) {
      key += "+cone(";
      for (std::size_t i = 0; i < p.rays_.size(); ++i) key += (i ? ";" : "") + vec_key(p.rays_[i]);
      key += ")";
    }
  }
  p.key_ = std::move(key);
  return p;
}

Polyhedron Polyhedron::cone(std::size_t rank, const std::vector<IntVector>& rays) {
  return from_generators(rank, {RatVector(rank, Rational(0))}, rays);
}

Polyhedron Polyhedron::from_inequalities(std::size_t rank, const std::vector<RatVector>& a,
                                         const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "inequality count mismatch");
  const std::size_t d = rank + 1;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != rank) throw Error(ErrorCode::RankMismatch, "inequality of wrong length");
    RatVector w = a[i];
    w.push_back(-b[i]);
    if (is_zero(w)) continue;
    rows.push_back(clear_denominators(w));
  }
  IntVector t(d, Integer(0));
  t[rank] = 1;
  rows.push_back(t);
  std::set<IntVector> rays;
  for_each_subset(rows.size(), d - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVector> sub;
    for (auto i : s) sub.push_back(rows[i]);
    IntMatrix m = sub.empty() ? IntMatrix(0, d) : IntMatrix::from_rows(d, sub);
    const IntMatrix k = integer_kernel(m);
    if (k.rows() != 1) return;
    for (int sign : {1, -1}) {
      IntVector r = k.row(0);
      if (sign < 0)
        for (auto& x : r) x = -x;
      bool ok = true;
      for (const auto& row : rows)
        if (dot(row, r) < 0) {
          ok = false;
          break;
        }
      if (ok) rays.insert(r);
    }
  });
  std::vector<RatVector> verts;
  std::vector<IntVector> dirs;
  for (const auto& r : rays) {
    if (r[rank] > 0) {
      RatVector v(rank);
      for (std::size_t i = 0; i < rank; ++i) {
        v[i] = Rational(r[i], r[rank]);
        v[i].canonicalize();
      }
      verts.push_back(std::move(v));
    } else {
      dirs.push_back(IntVector(r.begin(), r.end() - 1));
    }
  }
  if (verts.empty()) {
    // Either infeasible or the solution set has lineality; a feasible pointed
    // polyhedron always has a vertex. Distinguish by a rank test.
    std::vector<IntVector> lin(rows.begin(), rows.end() - 1);
    if (rank > 0 && rational_rank(lin, d) < d) {
      std::vector<IntVector> lin_part;
      for (const auto& r : lin) lin_part.push_back(IntVector(r.begin(), r.end() - 1));
      if (rational_rank(lin_part, rank) < rank)
        throw Error(ErrorCode::NotPointed, "solution set contains a line");
    }
    throw Error(ErrorCode::EmptyPolyhedron, "inequalities are infeasible");
  }
  return from_generators(rank, verts, dirs);
}

bool Polyhedron::is_cone() const { return vertices_.size() == 1 && is_zero(vertices_[0]); }

std::vector<IntVector> Polyhedron::homogenized_generators() const {
  std::vector<IntVector> gens;
  for (const auto& v : vertices_) gens.push_back(homogenize_vertex(v, 1));
  for (const auto& r : rays_) {
    IntVector g = r;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  return gens;
}

bool Polyhedron::contains(const RatVector& x) const {
  if (x.size() != rank_) return false;
  RatVector y = x;
  y.push_back(Rational(1));
  for (std::size_t i = 0; i < equations_.rows(); ++i)
    if (dot(equations_.row(i), y) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, y) < 0) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.rank_ != rank_) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : other.rays_) {
    IntVector g = r;
    g.push_back(0);
    for (std::size_t i = 0; i < equations_.rows(); ++i)
      if (dot(equations_.row(i), g) != 0) return false;
    for (const auto& f : facets_)
      if (dot(f, g) < 0) return false;
  }
  return true;
}

std::vector<Polyhedron> Polyhedron::faces() const {
  const std::vector<IntVector> gens = homogenized_generators();
  if (gens.size() > 63) throw Error(ErrorCode::InvalidInput, "too many generators for face enumeration");
  const Mask full = (Mask(1) << gens.size()) - 1;
  std::vector<Mask> facet_masks;
  for (const auto& f : facets_) {
    Mask m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (dot(f, gens[i]) == 0) m |= Mask(1) << i;
    facet_masks.push_back(m);
  }
  std::set<Mask> seen{full};
  std::deque<Mask> queue{full};
  while (!queue.empty()) {
    const Mask m = queue.front();
    queue.pop_front();
    for (Mask f : facet_masks) {
      const Mask g = m & f;
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  const std::size_t nv = vertices_.size();
  std::vector<Polyhedron> out;
  for (Mask m : seen) {
    std::vector<RatVector> vs;
    std::vector<IntVector> rs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!(m >> i & 1)) continue;
      if (i < nv)
        vs.push_back(vertices_[i]);
      else
        rs.push_back(rays_[i - nv]);
    }
    if (vs.empty()) continue;
    out.push_back(from_generators(rank_, vs, rs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatVector Polyhedron::relative_interior_point() const {
  RatVector x(rank_, Rational(0));
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < rank_; ++i) x[i] += v[i];
  for (auto& c : x) c /= Rational(static_cast<long>(vertices_.size()));
  for (const auto& r : rays_)
    for (std::size_t i = 0; i < rank_; ++i) x[i] += Rational(r[i]);
  return x;
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.rank_ < b.rank_;
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (p.vertices().empty()) throw Error(ErrorCode::EmptyPolyhedron, "recession cone of an empty polyhedron");
  return Polyhedron::cone(p.rank(), p.rays());
}

Polyhedron homogenize(const Polyhedron& p, int height_sign) {
  if (height_sign != 1 && height_sign != -1)
    throw Error(ErrorCode::InvalidInput, "height sign must be +1 or -1");
  std::vector<IntVector> gens;
  for (const auto& v : p.vertices()) gens.push_back(homogenize_vertex(v, height_sign));
  for (const auto& r : p.rays()) {
    IntVector g = r;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  return Polyhedron::cone(p.rank() + 1, gens);
}

std::optional<Polyhedron> intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "intersecting polyhedra of different rank");
  const std::size_t n = a.rank();
  std::vector<RatVector> rows;
  std::vector<Rational> rhs;
  auto add = [&](const IntVector& f, int sign) {
    RatVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = Rational(f[i] * sign);
    rows.push_back(std::move(r));
    rhs.push_back(Rational(-f[n] * sign));
  };
  for (const Polyhedron* p : {&a, &b}) {
    for (const auto& f : p->facet_normals()) add(f, 1);
    for (std::size_t i = 0; i < p->equations().rows(); ++i) {
      add(p->equations().row(i), 1);
      add(p->equations().row(i), -1);
    }
  }
  try {
    return Polyhedron::from_inequalities(n, rows, rhs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyPolyhedron) return std::nullopt;
    throw;
  }
}

Polyhedron image(const Polyhedron& p, const QuotientLattice& q) {
  if (p.rank() != q.ambient_rank) throw Error(ErrorCode::RankMismatch, "image under a quotient of another lattice");
  std::vector<RatVector> vs;
  for (const auto& v : p.vertices()) vs.push_back(q.project(v));
  std::vector<IntVector> rs;
  for (const auto& r : p.rays()) {
    IntVector w = q.project(r);
    if (!is_zero(w)) rs.push_back(primitive(w));
  }
  return Polyhedron::from_generators(q.rank(), vs, rs);
}

std::string to_string(const Polyhedron& p) { return p.key(); }

// ---------------------------------------------------------------------------
// Complexes

bool PolyComplex::is_maximal(std::size_t i) const {
  return std::binary_search(maximal_.begin(), maximal_.end(), i);
}

std::vector<std::size_t> PolyComplex::star_of(std::size_t i) const {
  std::set<std::size_t> seen{i};
  std::deque<std::size_t> queue{i};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (auto up : cofacets_[c])
      if (seen.insert(up).second) queue.push_back(up);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> PolyComplex::maximal_containing(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto c : star_of(i))
    if (is_maximal(c)) out.push_back(c);
  return out;
}

bool PolyComplex::is_face(std::size_t face, std::size_t cell) const {
  const auto s = star_of(face);
  return std::binary_search(s.begin(), s.end(), cell);
}

std::vector<std::size_t> PolyComplex::by_dim(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim() == d) out.push_back(i);
  return out;
}

std::optional<std::size_t> PolyComplex::find(const Polyhedron& p) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), p);
  if (it != cells_.end() && *it == p) return static_cast<std::size_t>(it - cells_.begin());
  return std::nullopt;
}

std::optional<std::size_t> PolyComplex::find(const std::string& key) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].key() == key) return i;
  return std::nullopt;
}

bool PolyComplex::is_fan() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Polyhedron& p) { return p.is_cone(); });
}

std::size_t PolyComplex::dim() const {
  std::size_t d = 0;
  for (const auto& c : cells_) d = std::max(d, c.dim());
  return d;
}

PolyComplex build_complex(std::size_t rank, const std::vector<Polyhedron>& max_cells) {
  for (const auto& c : max_cells)
    if (c.rank() != rank) throw Error(ErrorCode::RankMismatch, "cell " + c.key() + " has the wrong ambient rank");

  std::vector<std::vector<Polyhedron>> face_lists;
  std::map<std::string, Polyhedron> all;
  for (const auto& c : max_cells) {
    face_lists.push_back(c.faces());
    for (const auto& f : face_lists.back()) all.emplace(f.key(), f);
  }

  for (std::size_t i = 0; i < max_cells.size(); ++i)
    for (std::size_t j = i + 1; j < max_cells.size(); ++j) {
      if (max_cells[i] == max_cells[j]) continue;
      const auto meet = intersect(max_cells[i], max_cells[j]);
      if (!meet) continue;
      auto in = [&](const std::vector<Polyhedron>& fs) {
        return std::find(fs.begin(), fs.end(), *meet) != fs.end();
      };
      if (!in(face_lists[i]) || !in(face_lists[j]))
        throw Error(ErrorCode::IntersectionNotFace,
                    max_cells[i].key() + " and " + max_cells[j].key() + " meet in " + meet->key() +
                        ", which is not a common face");
    }

  PolyComplex out;
  out.rank_ = rank;
  for (auto& [k, p] : all) out.cells_.push_back(p);
  std::sort(out.cells_.begin(), out.cells_.end());
  const std::size_t n = out.cells_.size();
  out.facets_.assign(n, {});
  out.cofacets_.assign(n, {});

  std::set<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& fs : face_lists) {
    std::vector<std::size_t> ids;
    for (const auto& f : fs) ids.push_back(*out.find(f));
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = 0; b < fs.size(); ++b)
        if (fs[a].dim() + 1 == fs[b].dim() && fs[b].contains(fs[a])) covers.emplace(ids[a], ids[b]);
  }
  for (auto [f, g] : covers) {
    out.facets_[g].push_back(f);
    out.cofacets_[f].push_back(g);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(out.facets_[i].begin(), out.facets_[i].end());
    std::sort(out.cofacets_[i].begin(), out.cofacets_[i].end());
    if (out.cofacets_[i].empty()) out.maximal_.push_back(i);
  }
  return out;
}

bool is_complete(const PolyComplex& c) {
  const std::size_t n = c.rank();
  if (c.size() == 0) return false;
  for (auto m : c.maximal())
    if (c.cell(m).dim() != n) return false;
  if (n == 0) return c.size() == 1;
  for (auto f : c.by_dim(n - 1))
    if (c.cofacets_of(f).size() != 2) return false;
  if (c.is_fan()) return true;
  return is_complete(recession_fan(c));
}

PolyComplex recession_fan(const PolyComplex& c) {
  std::map<std::string, Polyhedron> cones;
  for (const auto& cell : c.cells()) {
    Polyhedron r = recession_cone(cell);
    cones.emplace(r.key(), std::move(r));
  }
  std::vector<Polyhedron> maximal;
  for (const auto& [k, p] : cones) {
    bool covered = false;
    for (const auto& [k2, q] : cones)
      if (k2 != k && q.dim() > p.dim() && q.contains(p)) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(p);
  }
  return build_complex(c.rank(), maximal);
}

}  // namespace cotv
