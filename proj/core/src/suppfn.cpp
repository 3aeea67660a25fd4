#include "cotv/suppfn.hpp"

#include <algorithm>

#include "cotv/error.hpp"

namespace cotv {

IntVector AffineDatum::homogenized() const {
  IntVector out = slope;
  out.push_back(translation);
  return out;
}

const AffineDatum& SupportFunction::datum_on(const DivisorialFan& df, std::size_t p, std::size_t cell) const {
  const auto maxes = df.slice(p).maximal_containing(cell);
  const auto it = cells.at(p).find(maxes.front());
  if (it == cells.at(p).end()) throw Error(ErrorCode::DomainMismatch, "support function has no datum on a maximal cell");
  return it->second;
}

const IntVector& SupportFunction::slope_on(const DivisorialFan& df, std::size_t cone) const {
  const auto maxes = df.recession().maximal_containing(cone);
  const auto it = recession.find(maxes.front());
  if (it == recession.end()) throw Error(ErrorCode::DomainMismatch, "support function has no recession slope on a maximal cone");
  return it->second;
}

Rational SupportFunction::value_at_vertex(const DivisorialFan& df, std::size_t p, std::size_t vertex_cell) const {
  const auto& v = df.slice(p).cell(vertex_cell).vertices().front();
  return datum_on(df, p, vertex_cell).evaluate(v);
}

namespace {

IntVector add(const IntVector& a, const IntVector& b, const Integer& k) {
  IntVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * b[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) { return add(a, b, Integer(-1)); }

SupportFunction combine(const SupportFunction& a, const SupportFunction& b, const Integer& k) {
  if (a.cells.size() != b.cells.size()) throw Error(ErrorCode::DomainMismatch, "support functions on different fans");
  SupportFunction out = a;
  for (std::size_t p = 0; p < a.cells.size(); ++p)
    for (auto& [c, d] : out.cells[p]) {
      const auto& other = b.cells[p].at(c);
      d.slope = add(d.slope, other.slope, k);
      d.translation += k * other.translation;
    }
  for (auto& [c, m] : out.recession) m = add(m, b.recession.at(c), k);
  return out;
}

}  // namespace

SupportFunction operator+(const SupportFunction& a, const SupportFunction& b) { return combine(a, b, Integer(1)); }
SupportFunction operator-(const SupportFunction& a, const SupportFunction& b) { return combine(a, b, Integer(-1)); }

SupportFunction operator*(const Integer& k, const SupportFunction& h) {
  SupportFunction out = h;
  for (auto& slice : out.cells)
    for (auto& [c, d] : slice) {
      for (auto& x : d.slope) x *= k;
      d.translation *= k;
    }
  for (auto& [c, m] : out.recession)
    for (auto& x : m) x *= k;
  return out;
}

SupportFunction zero_sf(const DivisorialFan& df) {
  return principal_sf(df, IntVector(df.rank(), Integer(0)), std::vector<Integer>(df.num_points(), Integer(0)));
}

std::vector<std::string> validate_sf(const DivisorialFan& df, const SupportFunction& h) {
  std::vector<std::string> report;
  const std::size_t n = df.rank();
  if (h.cells.size() != df.num_points()) {
    report.push_back("support function has data for " + std::to_string(h.cells.size()) + " points, fan has " +
                     std::to_string(df.num_points()));
    return report;
  }
  for (std::size_t p = 0; p < df.num_points(); ++p) {
    const auto& s = df.slice(p);
    for (auto m : s.maximal()) {
      const auto it = h.cells[p].find(m);
      if (it == h.cells[p].end())
        report.push_back("no datum on " + s.cell(m).key() + " at " + df.points()[p]);
      else if (it->second.slope.size() != n)
        report.push_back("slope of wrong length on " + s.cell(m).key() + " at " + df.points()[p]);
    }
    for (const auto& [c, d] : h.cells[p])
      if (c >= s.size() || !s.is_maximal(c)) report.push_back("datum on a non-maximal cell at " + df.points()[p]);
  }
  for (auto m : df.recession().maximal()) {
    const auto it = h.recession.find(m);
    if (it == h.recession.end())
      report.push_back("no recession slope on " + df.recession().cell(m).key());
    else if (it->second.size() != n)
      report.push_back("recession slope of wrong length on " + df.recession().cell(m).key());
  }
  if (!report.empty()) return report;

  for (std::size_t p = 0; p < df.num_points(); ++p) {
    const auto& s = df.slice(p);
    for (std::size_t c = 0; c < s.size(); ++c) {
      const auto maxes = s.maximal_containing(c);
      const auto& d0 = h.cells[p].at(maxes.front());
      for (std::size_t i = 1; i < maxes.size(); ++i) {
        const auto& d = h.cells[p].at(maxes[i]);
        bool ok = true;
        for (const auto& v : s.cell(c).vertices())
          if (d.evaluate(v) != d0.evaluate(v)) ok = false;
        for (const auto& r : s.cell(c).rays())
          if (dot(d.slope, r) != dot(d0.slope, r)) ok = false;
        if (!ok) {
          report.push_back("continuity violation at " + s.cell(c).key() + " in slice " + df.points()[p] + " between " +
                           s.cell(maxes.front()).key() + " and " + s.cell(maxes[i]).key());
        }
      }
    }
    for (auto m : s.maximal()) {
      const auto sigma = df.rec_of(p, m);
      if (sigma == DivisorialFan::npos) continue;
      for (auto top : df.recession().maximal_containing(sigma))
        for (const auto& r : df.recession().cell(sigma).rays())
          if (dot(h.cells[p].at(m).slope, r) != dot(h.recession.at(top), r)) {
            report.push_back("recession mismatch on " + s.cell(m).key() + " in slice " + df.points()[p] +
                             " against " + df.recession().cell(top).key());
            break;
          }
    }
  }
  const auto& fan = df.recession();
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const auto maxes = fan.maximal_containing(c);
    for (std::size_t i = 1; i < maxes.size(); ++i)
      for (const auto& r : fan.cell(c).rays())
        if (dot(h.recession.at(maxes[i]), r) != dot(h.recession.at(maxes.front()), r)) {
          report.push_back("recession function discontinuous at " + fan.cell(c).key());
          break;
        }
  }
  return report;
}

const std::map<std::size_t, IntVector>& recession_of(const SupportFunction& h) { return h.recession; }

SupportFunction principal_sf(const DivisorialFan& df, const IntVector& u, const std::vector<Integer>& d) {
  if (u.size() != df.rank()) throw Error(ErrorCode::RankMismatch, "character of wrong length");
  if (d.size() != df.num_points()) throw Error(ErrorCode::DimensionMismatch, "one divisor coefficient per point");
  SupportFunction h;
  h.cells.resize(df.num_points());
  for (std::size_t p = 0; p < df.num_points(); ++p)
    for (auto m : df.slice(p).maximal()) h.cells[p][m] = AffineDatum{u, d[p]};
  for (auto m : df.recession().maximal()) h.recession[m] = u;
  return h;
}

std::optional<PrincipalData> is_principal(const DivisorialFan& df, const SupportFunction& h) {
  if (h.cells.size() != df.num_points() || h.recession.empty()) return std::nullopt;
  PrincipalData out;
  out.u = h.recession.begin()->second;
  for (const auto& [c, m] : h.recession)
    if (m != out.u) return std::nullopt;
  Integer total = 0;
  for (std::size_t p = 0; p < df.num_points(); ++p) {
    if (h.cells[p].empty()) return std::nullopt;
    const Integer l = h.cells[p].begin()->second.translation;
    for (const auto& [c, d] : h.cells[p])
      if (d.slope != out.u || d.translation != l) return std::nullopt;
    out.d.push_back(l);
    total += l;
  }
  if (total != 0) return std::nullopt;
  return out;
}

IntVector default_m_tau(const DivisorialFan& df, const SupportFunction& h, std::size_t tau) {
  if (df.recession().cell(tau).dim() == 0) return IntVector(df.rank(), Integer(0));
  const auto above = df.recession().star_of(tau);
  const auto& s = df.slice(0);
  for (auto m : s.maximal())
    if (std::binary_search(above.begin(), above.end(), df.rec_of(0, m))) return h.cells.at(0).at(m).slope;
  throw Error(ErrorCode::InvalidInput, "no cell of the first slice recedes along " + df.recession().cell(tau).key());
}

HorizontalRestriction restrict_horizontal_sf(const DivisorialFan& df, const SupportFunction& h, std::size_t tau,
                                             const std::optional<IntVector>& m_tau) {
  HorizontalRestriction out{star_fan_horizontal(df, tau), {}, m_tau ? *m_tau : default_m_tau(df, h, tau)};
  const auto& q = df.cone_quotient(tau);
  const auto& star = out.star.fan;
  out.function.cells.resize(df.num_points());
  for (std::size_t p = 0; p < df.num_points(); ++p)
    for (auto m : star.slice(p).maximal()) {
      const auto& d = h.cells[p].at(out.star.cell_origin[p][m]);
      out.function.cells[p][m] = AffineDatum{q.descend(sub(d.slope, out.m_tau)), d.translation};
    }
  for (auto m : star.recession().maximal())
    out.function.recession[m] = q.descend(sub(h.recession.at(out.star.cone_origin[m]), out.m_tau));
  return out;
}

AffineDatum default_vertical_normalizer(const DivisorialFan& df, const SupportFunction& h, std::size_t p,
                                        std::size_t cell) {
  return h.cells.at(p).at(df.slice(p).maximal_containing(cell).back());
}

VerticalRestriction restrict_vertical_sf(const DivisorialFan& df, const SupportFunction& h, std::size_t p,
                                         std::size_t cell, const std::optional<AffineDatum>& normalizer) {
  VerticalRestriction out{star_fan_vertical(df, p, cell), {},
                          normalizer ? *normalizer : default_vertical_normalizer(df, h, p, cell)};
  const auto& q = df.cell_quotient(p, cell);
  const IntVector base = out.normalizer.homogenized();
  for (auto m : out.star.fan.maximal()) {
    const auto& d = h.cells[p].at(out.star.origin[m]);
    out.functionals[m] = q.descend(sub(d.homogenized(), base));
  }
  return out;
}

std::map<WeightIndex, Integer> weil_expansion(const DivisorialFan& df, const SupportFunction& h) {
  std::map<WeightIndex, Integer> out;
  const auto& fan = df.recession();
  for (auto r : fan.by_dim(1)) {
    if (df.is_marked(r)) continue;
    const Integer c = -dot(h.slope_on(df, r), fan.cell(r).rays().front());
    if (c != 0) out[WeightIndex::horizontal(r)] = c;
  }
  for (std::size_t p = 0; p < df.num_points(); ++p)
    for (auto v : df.slice(p).by_dim(0)) {
      const auto r = df.rec_of(p, v);
      if (r == DivisorialFan::npos || df.is_marked(r)) continue;
      const auto vm = vertex_and_multiplicity(df, p, v);
      const Rational c = -Rational(vm.multiplicity) * h.value_at_vertex(df, p, v);
      if (c.get_den() != 1) throw Error(ErrorCode::InvalidInput, "non-integral Weil coefficient");
      if (c != 0) out[WeightIndex::vertical(p, v)] = c.get_num();
    }
  return out;
}

std::vector<SupportFunction> sf_lattice_basis(const DivisorialFan& df) {
  const std::size_t n = df.rank();
  const auto& fan = df.recession();
  // Unknown layout: per point, per maximal cell (slope, translation); then a
  // slope per maximal cone.
  std::vector<std::vector<std::size_t>> cell_offset(df.num_points());
  std::size_t cols = 0;
  for (std::size_t p = 0; p < df.num_points(); ++p) {
    cell_offset[p].assign(df.slice(p).size(), 0);
    for (auto m : df.slice(p).maximal()) {
      cell_offset[p][m] = cols;
      cols += n + 1;
    }
  }
  std::vector<std::size_t> cone_offset(fan.size(), 0);
  for (auto m : fan.maximal()) {
    cone_offset[m] = cols;
    cols += n;
  }

  std::vector<IntVector> rows;
  auto push = [&](RatVector row) {
    if (!is_zero(row)) rows.push_back(clear_denominators(row));
  };
  for (std::size_t p = 0; p < df.num_points(); ++p) {
    const auto& s = df.slice(p);
    for (std::size_t c = 0; c < s.size(); ++c) {
      const auto maxes = s.maximal_containing(c);
      const std::size_t a = cell_offset[p][maxes.front()];
      for (std::size_t i = 1; i < maxes.size(); ++i) {
        const std::size_t b = cell_offset[p][maxes[i]];
        for (const auto& v : s.cell(c).vertices()) {
          RatVector row(cols, Rational(0));
          for (std::size_t j = 0; j < n; ++j) {
            row[b + j] += v[j];
            row[a + j] -= v[j];
          }
          row[b + n] += 1;
          row[a + n] -= 1;
          push(std::move(row));
        }
        for (const auto& r : s.cell(c).rays()) {
          RatVector row(cols, Rational(0));
          for (std::size_t j = 0; j < n; ++j) {
            row[b + j] += Rational(r[j]);
            row[a + j] -= Rational(r[j]);
          }
          push(std::move(row));
        }
      }
    }
    for (auto m : s.maximal()) {
      const auto sigma = df.rec_of(p, m);
      const std::size_t top = cone_offset[fan.maximal_containing(sigma).front()];
      for (const auto& r : fan.cell(sigma).rays()) {
        RatVector row(cols, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
          row[cell_offset[p][m] + j] += Rational(r[j]);
          row[top + j] -= Rational(r[j]);
        }
        push(std::move(row));
      }
    }
  }
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const auto maxes = fan.maximal_containing(c);
    for (std::size_t i = 1; i < maxes.size(); ++i)
      for (const auto& r : fan.cell(c).rays()) {
        RatVector row(cols, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
          row[cone_offset[maxes[i]] + j] += Rational(r[j]);
          row[cone_offset[maxes.front()] + j] -= Rational(r[j]);
        }
        push(std::move(row));
      }
  }

  const IntMatrix kernel = integer_kernel(rows.empty() ? IntMatrix(0, cols) : IntMatrix::from_rows(cols, rows));
  std::vector<SupportFunction> out;
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    SupportFunction h;
    h.cells.resize(df.num_points());
    for (std::size_t p = 0; p < df.num_points(); ++p)
      for (auto m : df.slice(p).maximal()) {
        const std::size_t o = cell_offset[p][m];
        AffineDatum d;
        for (std::size_t j = 0; j < n; ++j) d.slope.push_back(kernel(k, o + j));
        d.translation = kernel(k, o + n);
        h.cells[p][m] = std::move(d);
      }
    for (auto m : fan.maximal()) {
      IntVector slope;
      for (std::size_t j = 0; j < n; ++j) slope.push_back(kernel(k, cone_offset[m] + j));
      h.recession[m] = std::move(slope);
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace cotv
