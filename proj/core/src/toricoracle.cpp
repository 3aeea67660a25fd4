#include "cotv/toricoracle.hpp"

#include "cotv/error.hpp"

namespace cotv {

namespace {

RatVector minus(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

// Primitive generator of the image of `sigma` in N(tau), tau a facet of sigma.
IntVector relative_normal(const PolyComplex& fan, const QuotientLattice& q, std::size_t sigma) {
  for (const auto& r : fan.cell(sigma).rays()) {
    const IntVector w = q.project(r);
    if (!is_zero(w)) return primitive(w);
  }
  throw Error(ErrorCode::NotAFacet, "cone has trivial image in the quotient");
}

}  // namespace

std::size_t HomogenizedFan::cone_of(const WeightIndex& w) const {
  const bool vertical = w.kind == WeightIndex::Kind::Vertical;
  for (std::size_t i = 0; i < origin.size(); ++i) {
    const auto& o = origin[i];
    if (o.from_slice == vertical && o.id == w.id && (!vertical || o.point == w.point)) return i;
  }
  throw Error(ErrorCode::InvalidInput, "weight index has no homogenized cone");
}

HomogenizedFan homogenize_fan(const DivisorialFan& df) {
  if (df.num_points() != 2) throw Error(ErrorCode::NotTwoPoints, "the toric model needs exactly two marked points");
  if (!df.contraction_free()) throw Error(ErrorCode::MarkedFan, "the toric model needs a contraction-free fan");
  const std::size_t n = df.rank();
  std::vector<Polyhedron> maxes;
  for (std::size_t p = 0; p < 2; ++p)
    for (auto m : df.slice(p).maximal()) maxes.push_back(homogenize(df.slice(p).cell(m), p == 0 ? 1 : -1));
  HomogenizedFan out;
  out.fan = build_complex(n + 1, maxes);
  out.origin.assign(out.fan.size(), ConeOrigin{});
  std::vector<bool> seen(out.fan.size(), false);
  auto record = [&](const Polyhedron& cone, ConeOrigin o) {
    const auto idx = out.fan.find(cone);
    if (!idx) throw Error(ErrorCode::InvalidInput, "homogenized cone " + cone.key() + " missing from the fan");
    out.origin[*idx] = o;
    seen[*idx] = true;
  };
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t c = 0; c < df.slice(p).size(); ++c)
      record(homogenize(df.slice(p).cell(c), p == 0 ? 1 : -1), ConeOrigin{true, p, c});
  for (std::size_t c = 0; c < df.recession().size(); ++c) {
    std::vector<IntVector> rays;
    for (auto r : df.recession().cell(c).rays()) {
      r.push_back(0);
      rays.push_back(std::move(r));
    }
    record(Polyhedron::cone(n + 1, rays), ConeOrigin{false, 0, c});
  }
  for (bool s : seen)
    if (!s) throw Error(ErrorCode::InvalidInput, "homogenized fan has a cone of unknown origin");
  return out;
}

ConeFunctional transport(const DivisorialFan& df, const HomogenizedFan& hf, const SupportFunction& h) {
  ConeFunctional out;
  for (auto m : hf.fan.maximal()) {
    const auto& o = hf.origin[m];
    const auto& d = h.cells.at(o.point).at(o.id);
    RatVector f = to_rational(d.slope);
    f.push_back(Rational(o.point == 0 ? d.translation : Integer(-d.translation)));
    out[m] = std::move(f);
  }
  return out;
}

void check_conewise_linear(const PolyComplex& fan, const ConeFunctional& f) {
  for (auto m : fan.maximal()) {
    const auto it = f.find(m);
    if (it == f.end() || it->second.size() != fan.rank())
      throw Error(ErrorCode::NonLinearOnCone, "no linear functional on " + fan.cell(m).key());
  }
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const auto maxes = fan.maximal_containing(c);
    for (std::size_t i = 1; i < maxes.size(); ++i)
      for (const auto& r : fan.cell(c).rays())
        if (dot(r, f.at(maxes[i])) != dot(r, f.at(maxes.front())))
          throw Error(ErrorCode::NonLinearOnCone, "functionals disagree on " + fan.cell(c).key());
  }
}

StarRestriction toric_star(const PolyComplex& fan, std::size_t cone) {
  StarRestriction out;
  out.lattice = quotient_lattice(fan.rank(), fan.cell(cone).rays());
  std::vector<Polyhedron> maxes;
  for (auto m : fan.maximal_containing(cone)) maxes.push_back(image(fan.cell(m), out.lattice));
  out.fan = build_complex(out.lattice.rank(), maxes);
  out.origin.assign(out.fan.size(), 0);
  for (auto c : fan.star_of(cone)) {
    const auto idx = out.fan.find(image(fan.cell(c), out.lattice));
    if (!idx) throw Error(ErrorCode::InvalidInput, "star image missing for " + fan.cell(c).key());
    out.origin[*idx] = c;
  }
  return out;
}

ConeFunctional restrict_functional(const PolyComplex& fan, const StarRestriction& star, std::size_t cone,
                                   const ConeFunctional& f) {
  const RatVector& base = f.at(fan.maximal_containing(cone).front());
  ConeFunctional out;
  for (auto m : star.fan.maximal()) {
    try {
      out[m] = star.lattice.descend(minus(f.at(star.origin[m]), base));
    } catch (const Error&) {
      throw Error(ErrorCode::NonLinearOnCone, "functional does not restrict to the star of " + fan.cell(cone).key());
    }
  }
  return out;
}

Rational toric_intersection(const PolyComplex& fan, const std::vector<ConeFunctional>& fs) {
  const std::size_t d = fan.rank();
  if (fs.size() != d)
    throw Error(ErrorCode::DimensionMismatch,
                "need " + std::to_string(d) + " functionals, got " + std::to_string(fs.size()));
  if (d == 0) return Rational(1);
  check_conewise_linear(fan, fs.front());
  Rational total = 0;
  for (auto rho : fan.by_dim(1)) {
    const IntVector& u = fan.cell(rho).rays().front();
    const Rational a = -dot(u, fs.front().at(fan.maximal_containing(rho).front()));
    if (a == 0) continue;
    const StarRestriction star = toric_star(fan, rho);
    std::vector<ConeFunctional> rest;
    for (std::size_t i = 1; i < fs.size(); ++i) rest.push_back(restrict_functional(fan, star, rho, fs[i]));
    total += a * toric_intersection(star.fan, rest);
  }
  return total;
}

Rational toric_degree_on_orbit(const PolyComplex& fan, std::size_t cone, const std::vector<ConeFunctional>& fs) {
  const StarRestriction star = toric_star(fan, cone);
  std::vector<ConeFunctional> rest;
  for (const auto& f : fs) {
    check_conewise_linear(fan, f);
    rest.push_back(restrict_functional(fan, star, cone, f));
  }
  return toric_intersection(star.fan, rest);
}

std::vector<Rational> toric_balancing_residuals(const PolyComplex& fan, const ToricWeight& c) {
  const std::size_t d = fan.rank();
  std::vector<Rational> out;
  if (c.codim >= d) return out;
  for (auto tau : fan.by_dim(d - c.codim - 1)) {
    const auto q = quotient_lattice(d, fan.cell(tau).rays());
    RatVector sum(q.rank(), Rational(0));
    for (auto sigma : fan.cofacets_of(tau)) {
      const auto it = c.values.find(sigma);
      if (it == c.values.end()) continue;
      const IntVector u = relative_normal(fan, q, sigma);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += it->second * Rational(u[j]);
    }
    out.insert(out.end(), sum.begin(), sum.end());
  }
  return out;
}

bool toric_is_balanced(const PolyComplex& fan, const ToricWeight& c) {
  for (const auto& r : toric_balancing_residuals(fan, c))
    if (r != 0) return false;
  return true;
}

std::size_t toric_weight_rank(const PolyComplex& fan, std::size_t codim) {
  const std::size_t d = fan.rank();
  if (codim > d) return 0;
  const auto unknowns = fan.by_dim(d - codim);
  if (codim == d) return unknowns.size();
  std::map<std::size_t, std::size_t> col;
  for (std::size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;
  std::vector<IntVector> rows;
  for (auto tau : fan.by_dim(d - codim - 1)) {
    const auto q = quotient_lattice(d, fan.cell(tau).rays());
    for (std::size_t j = 0; j < q.rank(); ++j) {
      IntVector row(unknowns.size(), Integer(0));
      for (auto sigma : fan.cofacets_of(tau)) row[col.at(sigma)] = relative_normal(fan, q, sigma)[j];
      rows.push_back(std::move(row));
    }
  }
  return unknowns.size() - rational_rank(rows, unknowns.size());
}

ToricWeight toric_pair(const PolyComplex& fan, const ConeFunctional& f, const ToricWeight& c) {
  const std::size_t d = fan.rank();
  if (c.codim >= d) throw Error(ErrorCode::CodimMismatch, "cannot pair a weight of top codimension");
  check_conewise_linear(fan, f);
  ToricWeight out;
  out.codim = c.codim + 1;
  for (auto gamma : fan.by_dim(d - c.codim - 1)) {
    const auto q = quotient_lattice(d, fan.cell(gamma).rays());
    const RatVector& base = f.at(fan.maximal_containing(gamma).front());
    Rational value = 0;
    for (auto sigma : fan.cofacets_of(gamma)) {
      const auto it = c.values.find(sigma);
      if (it == c.values.end() || it->second == 0) continue;
      const IntVector lift = q.lift(relative_normal(fan, q, sigma));
      const RatVector local = minus(f.at(fan.maximal_containing(sigma).front()), base);
      value -= dot(lift, local) * it->second;
    }
    out.values[gamma] = value;
  }
  return out;
}

}  // namespace cotv
