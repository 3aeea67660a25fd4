#include "cotv/mweights.hpp"

#include <algorithm>
#include <set>

#include "cotv/error.hpp"

namespace cotv {

bool operator==(const Weight& a, const Weight& b) {
  if (a.codim != b.codim) return false;
  for (const auto& [k, v] : a.values)
    if (b.at(k) != v) return false;
  for (const auto& [k, v] : b.values)
    if (a.at(k) != v) return false;
  return true;
}

namespace {

Weight combine(const Weight& a, const Weight& b, const Integer& k) {
  if (a.codim != b.codim) throw Error(ErrorCode::CodimMismatch, "adding weights of different codimension");
  Weight out = a;
  for (const auto& [idx, v] : b.values) out.values[idx] += k * v;
  return out;
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) { return combine(a, b, Integer(1)); }
Weight operator-(const Weight& a, const Weight& b) { return combine(a, b, Integer(-1)); }

Weight operator*(const Integer& k, const Weight& c) {
  Weight out = c;
  for (auto& [idx, v] : out.values) v *= k;
  return out;
}

bool is_zero(const Weight& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const auto& kv) { return kv.second == 0; });
}

std::string BalancingEntry::rendered() const {
  auto sum = [](const std::vector<BalancingTerm>& terms) {
    Rational s = 0;
    for (const auto& t : terms) s += t.coefficient * Rational(t.value);
    return s;
  };
  if (condition == "2.2") return to_string(sum(lhs)) + "=" + to_string(sum(rhs));
  std::string expr;
  for (const auto& t : lhs) {
    const Rational prod = t.coefficient * Rational(t.value);
    if (prod == 0) continue;
    const std::string s = to_string(prod);
    if (!expr.empty() && prod > 0) expr += "+";
    expr += s;
  }
  if (expr.empty()) expr = "0";
  return expr + "=" + to_string(residual);
}

std::vector<BalancingEntry> BalancingReport::violations() const {
  std::vector<BalancingEntry> out;
  for (const auto& e : entries)
    if (e.residual != 0) out.push_back(e);
  return out;
}

bool BalancingReport::balanced() const {
  return std::all_of(entries.begin(), entries.end(), [](const BalancingEntry& e) { return e.residual == 0; });
}

namespace {

void require_stabilizers(const DivisorialFan& df) {
  for (auto m : df.marked())
    if (df.stabilizers().find(m) == df.stabilizers().end())
      throw Error(ErrorCode::MissingStabilizer, "no stabilizer index for marked cone " + df.recession().cell(m).key());
}

// Cofacet terms are listed by decreasing normal vector so that rendered
// conditions read the same way regardless of cone numbering.
void sort_by_normal(std::vector<std::pair<WeightIndex, RatVector>>& terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
}

// Balancing entries for weights of codimension k, with term values left at 0.
std::vector<BalancingEntry> balancing_entries(const DivisorialFan& df, std::size_t k) {
  require_stabilizers(df);
  std::vector<BalancingEntry> out;
  const std::size_t n = df.rank();
  if (k + 1 > n + 1) return out;
  const IndexSets up = index_sets(df, static_cast<long>(k + 1));
  const auto& fan = df.recession();

  // (1) around cells one dimension lower
  for (const auto& f : up.vertical) {
    const auto& s = df.slice(f.point);
    const auto& q = df.cell_quotient(f.point, f.id);
    std::vector<std::pair<WeightIndex, RatVector>> contributions;
    for (auto g : s.cofacets_of(f.id)) {
      const IntVector v = normal_vector_vertical(df, f.point, f.id, g);
      const auto sigma = df.rec_of(f.point, g);
      RatVector coeff = to_rational(v);
      if (!df.is_marked(sigma)) {
        contributions.emplace_back(WeightIndex::vertical(f.point, g), coeff);
      } else if (fan.cell(sigma).dim() == s.cell(g).dim()) {
        const Rational scale = df.stabilizers().at(sigma) / Rational(vertex_and_multiplicity(df, f.point, g).multiplicity);
        for (auto& x : coeff) x *= scale;
        contributions.emplace_back(WeightIndex::contracted(sigma), coeff);
      }
    }
    sort_by_normal(contributions);
    for (std::size_t j = 0; j < q.rank(); ++j) {
      BalancingEntry e{"1", f, j, {}, {}, Rational(0)};
      for (const auto& [idx, coeff] : contributions) e.lhs.push_back({idx, coeff[j], Integer(0)});
      out.push_back(std::move(e));
    }
  }

  // (2.1) and (2.2) around unmarked cones
  const IndexSets here = index_sets(df, static_cast<long>(k));
  for (const auto& t : up.horizontal) {
    const auto& q = df.cone_quotient(t.id);
    std::vector<std::pair<WeightIndex, RatVector>> contributions;
    std::vector<std::pair<WeightIndex, RatVector>> cofacets;
    std::vector<std::vector<BalancingTerm>> fiber(df.num_points());
    for (const auto& f : here.vertical) {
      if (df.rec_of(f.point, f.id) != t.id) continue;
      const auto vm = vertex_and_multiplicity(df, f.point, f.id);
      RatVector coeff = vm.vertex;
      for (auto& x : coeff) x *= Rational(vm.multiplicity);
      contributions.emplace_back(f, coeff);
      fiber[f.point].push_back({f, Rational(vm.multiplicity), Integer(0)});
    }
    for (auto sigma : fan.cofacets_of(t.id)) {
      if (df.is_marked(sigma)) continue;
      cofacets.emplace_back(WeightIndex::horizontal(sigma), to_rational(normal_vector_horizontal(df, t.id, sigma)));
    }
    sort_by_normal(cofacets);
    contributions.insert(contributions.end(), cofacets.begin(), cofacets.end());
    for (std::size_t j = 0; j < q.rank(); ++j) {
      BalancingEntry e{"2.1", t, j, {}, {}, Rational(0)};
      for (const auto& [idx, coeff] : contributions) e.lhs.push_back({idx, coeff[j], Integer(0)});
      out.push_back(std::move(e));
    }
    for (std::size_t p = 1; p < df.num_points(); ++p) out.push_back(BalancingEntry{"2.2", t, p, fiber[p], fiber[0], Rational(0)});
  }

  // (3) around marked cones
  for (const auto& t : up.contracted) {
    const auto& q = df.cone_quotient(t.id);
    std::vector<std::pair<WeightIndex, RatVector>> contributions;
    for (auto sigma : fan.cofacets_of(t.id))
      contributions.emplace_back(WeightIndex::contracted(sigma), to_rational(normal_vector_horizontal(df, t.id, sigma)));
    sort_by_normal(contributions);
    for (std::size_t j = 0; j < q.rank(); ++j) {
      BalancingEntry e{"3", t, j, {}, {}, Rational(0)};
      for (const auto& [idx, coeff] : contributions) e.lhs.push_back({idx, coeff[j], Integer(0)});
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

BalancingReport check_balancing(const DivisorialFan& df, const Weight& c) {
  const IndexSets is = index_sets(df, static_cast<long>(c.codim));
  const auto domain = is.all();
  const std::set<WeightIndex> allowed(domain.begin(), domain.end());
  for (const auto& [idx, v] : c.values)
    if (!allowed.count(idx)) throw Error(ErrorCode::DomainMismatch, describe(df, idx) + " is not in the weight domain");
  BalancingReport report;
  report.entries = balancing_entries(df, c.codim);
  for (auto& e : report.entries) {
    Rational l = 0, r = 0;
    for (auto& t : e.lhs) {
      t.value = c.at(t.index);
      l += t.coefficient * Rational(t.value);
    }
    for (auto& t : e.rhs) {
      t.value = c.at(t.index);
      r += t.coefficient * Rational(t.value);
    }
    e.residual = l - r;
  }
  return report;
}

std::vector<IntVector> balancing_matrix(const DivisorialFan& df, std::size_t k) {
  const auto domain = index_sets(df, static_cast<long>(k)).all();
  std::map<WeightIndex, std::size_t> col;
  for (std::size_t i = 0; i < domain.size(); ++i) col[domain[i]] = i;
  std::vector<IntVector> rows;
  for (const auto& e : balancing_entries(df, k)) {
    RatVector row(domain.size(), Rational(0));
    for (const auto& t : e.lhs) row[col.at(t.index)] += t.coefficient;
    for (const auto& t : e.rhs) row[col.at(t.index)] -= t.coefficient;
    if (!is_zero(row)) rows.push_back(clear_denominators(row));
  }
  return rows;
}

WeightBasis weight_basis(const DivisorialFan& df, std::size_t k) {
  WeightBasis out;
  out.domain = index_sets(df, static_cast<long>(k)).all();
  const auto rows = balancing_matrix(df, k);
  const std::size_t cols = out.domain.size();
  const IntMatrix kernel = integer_kernel(rows.empty() ? IntMatrix(0, cols) : IntMatrix::from_rows(cols, rows));
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    Weight w;
    w.codim = k;
    for (std::size_t j = 0; j < cols; ++j)
      if (kernel(i, j) != 0) w.values[out.domain[j]] = kernel(i, j);
    out.basis.push_back(std::move(w));
  }
  return out;
}

Weight fundamental_weight(const DivisorialFan& df) {
  Weight w;
  w.codim = 0;
  for (const auto& idx : index_sets(df, 0).all()) w.values[idx] = 1;
  return w;
}

HorizontalWeightRestriction restrict_weight_horizontal(const DivisorialFan& df, const Weight& c, std::size_t tau) {
  if (df.is_marked(tau)) throw Error(ErrorCode::MarkedCone, df.recession().cell(tau).key() + " is marked");
  if (!df.contraction_free()) throw Error(ErrorCode::MarkedFan, "weight restriction needs a contraction-free fan");
  HorizontalWeightRestriction out{star_fan_horizontal(df, tau), {}};
  out.weight.codim = c.codim;
  const auto& star = out.star.fan;
  if (c.codim > star.rank() + 1) return out;
  const IndexSets is = index_sets(star, static_cast<long>(c.codim));
  for (const auto& w : is.vertical) {
    const Integer v = c.at(WeightIndex::vertical(w.point, out.star.cell_origin[w.point][w.id]));
    if (v != 0) out.weight.values[w] = v;
  }
  for (const auto& w : is.horizontal) {
    const Integer v = c.at(WeightIndex::horizontal(out.star.cone_origin[w.id]));
    if (v != 0) out.weight.values[w] = v;
  }
  return out;
}

VerticalWeightRestriction restrict_weight_vertical(const DivisorialFan& df, const Weight& c, std::size_t p,
                                                   std::size_t cell) {
  if (!df.contraction_free()) throw Error(ErrorCode::MarkedCone, "weight restriction needs a contraction-free fan");
  VerticalWeightRestriction out{star_fan_vertical(df, p, cell), {}};
  out.weight.codim = c.codim;
  const auto& fan = out.star.fan;
  if (c.codim > fan.rank()) return out;
  for (auto s : fan.by_dim(fan.rank() - c.codim)) {
    const Integer v = c.at(WeightIndex::vertical(p, out.star.origin[s]));
    if (v != 0) out.weight.values[s] = Rational(v);
  }
  return out;
}

Integer degree_of_top_weight(const DivisorialFan& df, const Weight& c) {
  if (c.codim != df.rank() + 1)
    throw Error(ErrorCode::CodimMismatch, "weight has codimension " + std::to_string(c.codim) + ", expected " +
                                              std::to_string(df.rank() + 1));
  const auto zero = df.recession().by_dim(0);
  return c.at(WeightIndex::horizontal(zero.front()));
}

}  // namespace cotv
