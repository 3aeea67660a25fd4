#include "cotv/pairing.hpp"

#include <set>

#include "cotv/error.hpp"

namespace cotv {

namespace {

IntVector minus(const IntVector& a, const IntVector& b) {
  IntVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

void require_contraction_free(const DivisorialFan& df) {
  if (!df.contraction_free()) throw Error(ErrorCode::MarkedFan, "the pairing is defined for contraction-free fans only");
}

}  // namespace

Integer vertical_pairing_value(const DivisorialFan& df, const SupportFunction& h, const Weight& c, std::size_t p,
                               std::size_t cell, const AffineDatum& normalizer) {
  const auto& s = df.slice(p);
  const auto& q = df.cell_quotient(p, cell);
  const IntVector base = normalizer.homogenized();
  Integer total = 0;
  for (auto g : s.cofacets_of(cell)) {
    const Integer cg = c.at(WeightIndex::vertical(p, g));
    if (cg == 0) continue;
    const IntVector lift = q.lift(normal_vector_vertical(df, p, cell, g));
    total -= dot(minus(h.datum_on(df, p, g).homogenized(), base), lift) * cg;
  }
  return total;
}

Integer horizontal_pairing_value(const DivisorialFan& df, const SupportFunction& h, const Weight& c,
                                 std::size_t tau, const IntVector& m_tau) {
  const auto& fan = df.recession();
  const std::size_t k = c.codim;
  Rational total = 0;
  for (const auto& f : index_sets(df, static_cast<long>(k)).vertical) {
    if (df.rec_of(f.point, f.id) != tau) continue;
    const Integer cf = c.at(f);
    if (cf == 0) continue;
    const auto& d = h.datum_on(df, f.point, f.id);
    const RatVector& x = df.slice(f.point).cell(f.id).vertices().front();
    const Rational local = dot(minus(d.slope, m_tau), x) + Rational(d.translation);
    const auto mu = vertex_and_multiplicity(df, f.point, f.id).multiplicity;
    total -= Rational(mu) * local * Rational(cf);
  }
  const auto& q = df.cone_quotient(tau);
  for (auto sigma : fan.cofacets_of(tau)) {
    if (df.is_marked(sigma)) continue;
    const Integer cs = c.at(WeightIndex::horizontal(sigma));
    if (cs == 0) continue;
    const IntVector lift = q.lift(normal_vector_horizontal(df, tau, sigma));
    total -= Rational(dot(minus(h.slope_on(df, sigma), m_tau), lift) * cs);
  }
  if (total.get_den() != 1) throw Error(ErrorCode::InvalidInput, "non-integral pairing value");
  return total.get_num();
}

Weight pair(const DivisorialFan& df, const SupportFunction& h, const Weight& c, const PairOptions& opts) {
  require_contraction_free(df);
  const std::size_t k = c.codim;
  if (k >= df.rank() + 1) throw Error(ErrorCode::OutOfRange, "cannot pair a weight of top codimension");
  if (opts.check_input && !check_balancing(df, c).balanced())
    throw Error(ErrorCode::UnbalancedInput, "the weight is not a generalized Minkowski weight");
  const IndexSets up = index_sets(df, static_cast<long>(k + 1));
  Weight out;
  out.codim = k + 1;
  for (const auto& f : up.vertical) {
    const Integer v =
        vertical_pairing_value(df, h, c, f.point, f.id, default_vertical_normalizer(df, h, f.point, f.id));
    if (v != 0) out.values[f] = v;
  }
  for (const auto& t : up.horizontal) {
    const Integer v = horizontal_pairing_value(df, h, c, t.id, default_m_tau(df, h, t.id));
    if (v != 0) out.values[t] = v;
  }
  if (opts.check_output && !check_balancing(df, out).balanced())
    throw Error(ErrorCode::InvalidInput, "pairing produced an unbalanced weight");
  return out;
}

Weight iterate_pair(const DivisorialFan& df, const SupportFunction& h, std::size_t j, const Weight& c,
                    const PairOptions& opts) {
  Weight w = c;
  PairOptions step = opts;
  for (std::size_t i = 0; i < j; ++i) {
    w = pair(df, h, w, step);
    step.check_input = false;
  }
  return w;
}

std::vector<ProbeValue> principal_probes(const DivisorialFan& df, const Weight& c) {
  require_contraction_free(df);
  const std::size_t n = df.rank();
  const std::size_t k = c.codim;
  std::vector<ProbeValue> out;
  if (k + 1 > n + 1) return out;
  const IndexSets up = index_sets(df, static_cast<long>(k + 1));
  const AffineDatum zero{IntVector(n, Integer(0)), Integer(0)};
  const IntVector origin(n, Integer(0));
  for (const auto& f : up.vertical) {
    const auto& q = df.cell_quotient(f.point, f.id);
    const std::size_t other = f.point == 0 ? 1 : 0;
    for (std::size_t j = 0; j < q.dual_basis.rows(); ++j) {
      const IntVector row = q.dual_basis.row(j);
      std::vector<Integer> d(df.num_points(), Integer(0));
      d[f.point] = row[n];
      d[other] = -row[n];
      const auto h = principal_sf(df, IntVector(row.begin(), row.end() - 1), d);
      out.push_back({f, j, vertical_pairing_value(df, h, c, f.point, f.id, zero)});
    }
  }
  for (const auto& t : up.horizontal) {
    const auto& q = df.cone_quotient(t.id);
    for (std::size_t j = 0; j < q.dual_basis.rows(); ++j) {
      const auto h = principal_sf(df, q.dual_basis.row(j), std::vector<Integer>(df.num_points(), Integer(0)));
      out.push_back({t, j, horizontal_pairing_value(df, h, c, t.id, origin)});
    }
    for (std::size_t p = 1; p < df.num_points(); ++p) {
      std::vector<Integer> d(df.num_points(), Integer(0));
      d[p] = 1;
      d[0] = -1;
      const auto h = principal_sf(df, origin, d);
      out.push_back({t, q.dual_basis.rows() + p - 1, horizontal_pairing_value(df, h, c, t.id, origin)});
    }
  }
  return out;
}

Measure measure_of(const DivisorialFan& df, const SupportFunction& h) {
  const std::size_t n = df.rank();
  const Weight w = iterate_pair(df, h, n, fundamental_weight(df));
  Measure mu;
  const IndexSets is = index_sets(df, static_cast<long>(n));
  for (const auto& f : is.vertical)
    mu.masses[f] = vertex_and_multiplicity(df, f.point, f.id).multiplicity * w.at(f);
  for (const auto& t : is.horizontal) mu.masses[t] = w.at(t);
  return mu;
}

Integer top_intersection(const DivisorialFan& df, const SupportFunction& h) {
  return degree_of_top_weight(df, iterate_pair(df, h, df.rank() + 1, fundamental_weight(df)));
}

Rational integral_formula(const DivisorialFan& df, const SupportFunction& h, const Measure& mu) {
  const IndexSets is = index_sets(df, static_cast<long>(df.rank()));
  const auto domain = is.all();
  const std::set<WeightIndex> allowed(domain.begin(), domain.end());
  Rational total = 0;
  for (const auto& [idx, mass] : mu.masses) {
    if (!allowed.count(idx)) throw Error(ErrorCode::DomainMismatch, describe(df, idx) + " is not in the measure domain");
    if (mass == 0) continue;
    if (idx.kind == WeightIndex::Kind::Vertical) {
      total -= h.value_at_vertex(df, idx.point, idx.id) * Rational(mass);
    } else {
      const IntVector& u = df.recession().cell(idx.id).rays().front();
      total -= Rational(dot(h.slope_on(df, idx.id), u) * mass);
    }
  }
  return total;
}

}  // namespace cotv
