#include "generators.hpp"

#include <algorithm>
#include <set>

#include "cotv/error.hpp"

namespace cotv::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

namespace {

PolyComplex random_line_slice(Rng& rng) {
  std::set<Rational> cuts;
  const long count = uniform(rng, 1, 3);
  while (static_cast<long>(cuts.size()) < count) {
    const long d = uniform(rng, 1, 3);
    cuts.insert(Rational(uniform(rng, -3 * d, 3 * d), d));
  }
  const std::vector<Rational> b(cuts.begin(), cuts.end());
  std::vector<Polyhedron> cells;
  cells.push_back(Polyhedron::from_generators(1, {{b.front()}}, {{Integer(-1)}}));
  for (std::size_t i = 0; i + 1 < b.size(); ++i) cells.push_back(Polyhedron::from_generators(1, {{b[i]}, {b[i + 1]}}, {}));
  cells.push_back(Polyhedron::from_generators(1, {{b.back()}}, {{Integer(1)}}));
  return build_complex(1, cells);
}

// Regions of linearity of x -> min_e (<e, x> + c_e).
PolyComplex tropical_slice(Rng& rng, const std::vector<IntVector>& exponents) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < exponents.size(); ++i) c.push_back(uniform(rng, -2, 2));
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::vector<RatVector> a;
    std::vector<Rational> b;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (j == i) continue;
      a.push_back({Rational(exponents[j][0] - exponents[i][0]), Rational(exponents[j][1] - exponents[i][1])});
      b.push_back(Rational(c[i] - c[j]));
    }
    try {
      auto p = Polyhedron::from_inequalities(2, a, b);
      if (p.dim() == 2) cells.push_back(std::move(p));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyPolyhedron) throw;
    }
  }
  return build_complex(2, cells);
}

// The polygon's vertices (nv of them) followed by the other lattice points of
// [-1, 1]^2 inside it.
std::vector<IntVector> polygon_points(const std::vector<IntVector>& verts, std::size_t& nv) {
  std::vector<RatVector> rv;
  for (const auto& v : verts) rv.push_back(to_rational(v));
  const auto poly = Polyhedron::from_generators(2, rv, {});
  std::vector<IntVector> out;
  for (const auto& v : poly.vertices()) out.push_back({v[0].get_num(), v[1].get_num()});
  nv = out.size();
  for (long x = -1; x <= 1; ++x)
    for (long y = -1; y <= 1; ++y) {
      const IntVector p{Integer(x), Integer(y)};
      if (std::find(out.begin(), out.end(), p) == out.end() && poly.contains(to_rational(p))) out.push_back(p);
    }
  return out;
}

const std::vector<std::vector<IntVector>>& polygons() {
  static const std::vector<std::vector<IntVector>> shapes{
      {{0, 0}, {1, 0}, {0, 1}},
      {{-1, -1}, {1, 0}, {0, 1}},
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
      {{-1, 0}, {1, 0}, {0, 1}, {0, -1}},
      {{0, 0}, {2, 0}, {0, 1}},
      {{-1, -1}, {1, -1}, {0, 1}},
      {{0, -1}, {1, 1}, {-1, 1}},
  };
  return shapes;
}

}  // namespace

DivisorialFan random_fan(Rng& rng, std::size_t rank, std::size_t points) {
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < points; ++p) labels.push_back("p" + std::to_string(p));
  std::vector<PolyComplex> slices;
  if (rank == 1) {
    for (std::size_t p = 0; p < points; ++p) slices.push_back(random_line_slice(rng));
  } else {
    const auto& shape = polygons()[static_cast<std::size_t>(uniform(rng, 0, polygons().size() - 1))];
    std::size_t nv = 0;
    const auto pts = polygon_points(shape, nv);
    for (std::size_t p = 0; p < points; ++p) {
      std::vector<IntVector> exps(pts.begin(), pts.begin() + static_cast<long>(nv));
      for (std::size_t i = nv; i < pts.size(); ++i)
        if (uniform(rng, 0, 1)) exps.push_back(pts[i]);
      slices.push_back(tropical_slice(rng, exps));
    }
  }
  const PolyComplex fan = recession_fan(slices.front());
  return DivisorialFan(rank, labels, slices, fan);
}

Instance make_instance(DivisorialFan df) {
  Instance inst;
  inst.df = std::move(df);
  inst.sf_basis = sf_lattice_basis(inst.df);
  for (std::size_t k = 0; k <= inst.df.rank() + 1; ++k) inst.weights.push_back(weight_basis(inst.df, k));
  return inst;
}

const std::vector<Instance>& instance_pool() {
  static const std::vector<Instance> pool = [] {
    Rng rng(20240611);
    std::vector<Instance> out;
    for (std::size_t rank = 1; rank <= 2; ++rank)
      for (std::size_t points = 2; points <= 4; ++points)
        for (int rep = 0; rep < (points == 2 ? 8 : 4); ++rep) {
          auto df = random_fan(rng, rank, points);
          if (!validate_fan(df).empty()) throw Error(ErrorCode::InvalidInput, "generator produced an invalid fan");
          out.push_back(make_instance(std::move(df)));
        }
    return out;
  }();
  return pool;
}

std::vector<const Instance*> two_point_pool() {
  std::vector<const Instance*> out;
  for (const auto& inst : instance_pool())
    if (inst.df.num_points() == 2) out.push_back(&inst);
  return out;
}

SupportFunction random_sf(Rng& rng, const Instance& inst, long range) {
  SupportFunction h = zero_sf(inst.df);
  for (const auto& b : inst.sf_basis) h = h + Integer(uniform(rng, -range, range)) * b;
  return h;
}

SupportFunction random_principal(Rng& rng, const DivisorialFan& df, long range) {
  IntVector u;
  for (std::size_t i = 0; i < df.rank(); ++i) u.push_back(uniform(rng, -range, range));
  std::vector<Integer> d(df.num_points(), Integer(0));
  for (std::size_t p = 1; p < df.num_points(); ++p) {
    d[p] = uniform(rng, -range, range);
    d[0] -= d[p];
  }
  return principal_sf(df, u, d);
}

Weight random_weight(Rng& rng, const Instance& inst, std::size_t codim, long range) {
  Weight w;
  w.codim = codim;
  for (const auto& b : inst.weights.at(codim).basis) w = w + Integer(uniform(rng, -range, range)) * b;
  for (auto it = w.values.begin(); it != w.values.end();)
    it = it->second == 0 ? w.values.erase(it) : std::next(it);
  return w;
}

}  // namespace cotv::testing
