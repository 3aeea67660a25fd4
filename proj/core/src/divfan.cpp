#include "cotv/divfan.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "cotv/error.hpp"

namespace cotv {

struct DivisorialFan::Cache {
  std::mutex mutex;
  std::map<std::size_t, std::shared_ptr<QuotientLattice>> cones;
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<QuotientLattice>> cells;
};

DivisorialFan::DivisorialFan(std::size_t rank, std::vector<std::string> points,
                             std::vector<PolyComplex> slices, PolyComplex recession,
                             std::vector<std::size_t> marked, std::map<std::size_t, Rational> stabilizers)
    : rank_(rank),
      points_(std::move(points)),
      slices_(std::move(slices)),
      recession_(std::move(recession)),
      marked_(std::move(marked)),
      stabilizers_(std::move(stabilizers)),
      cache_(std::make_shared<Cache>()) {
  if (points_.size() != slices_.size())
    throw Error(ErrorCode::InvalidInput, "one slice is required per marked point");
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  for (auto m : marked_)
    if (m >= recession_.size()) throw Error(ErrorCode::InvalidInput, "marked cone index out of range");
  rec_.resize(slices_.size());
  for (std::size_t p = 0; p < slices_.size(); ++p) {
    const auto& s = slices_[p];
    if (s.rank() != rank_ && s.size() > 0)
      throw Error(ErrorCode::RankMismatch, "slice at " + points_[p] + " has the wrong rank");
    for (const auto& cell : s.cells()) {
      const auto idx = recession_.find(recession_cone(cell));
      rec_[p].push_back(idx ? *idx : npos);
    }
  }
}

std::optional<std::size_t> DivisorialFan::point_index(const std::string& label) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == label) return i;
  return std::nullopt;
}

bool DivisorialFan::is_marked(std::size_t cone) const {
  return std::binary_search(marked_.begin(), marked_.end(), cone);
}

const QuotientLattice& DivisorialFan::cone_quotient(std::size_t cone) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->cones[cone];
  if (!slot) slot = std::make_shared<QuotientLattice>(quotient_lattice(rank_, recession_.cell(cone).rays()));
  return *slot;
}

std::vector<IntVector> DivisorialFan::cell_cone_generators(std::size_t p, std::size_t cell) const {
  return homogenize(slices_.at(p).cell(cell), 1).rays();
}

const QuotientLattice& DivisorialFan::cell_quotient(std::size_t p, std::size_t cell) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->cells[{p, cell}];
  if (!slot) slot = std::make_shared<QuotientLattice>(quotient_lattice(rank_ + 1, cell_cone_generators(p, cell)));
  return *slot;
}

std::string describe(const DivisorialFan& df, const WeightIndex& w) {
  switch (w.kind) {
    case WeightIndex::Kind::Vertical:
      return "V[" + df.points().at(w.point) + ":" + df.slice(w.point).cell(w.id).key() + "]";
    case WeightIndex::Kind::Horizontal:
      return "R[" + df.recession().cell(w.id).key() + "]";
    case WeightIndex::Kind::Contracted:
      return "T[" + df.recession().cell(w.id).key() + "]";
  }
  return "?";
}

std::vector<WeightIndex> IndexSets::all() const {
  std::vector<WeightIndex> out = vertical;
  out.insert(out.end(), horizontal.begin(), horizontal.end());
  out.insert(out.end(), contracted.begin(), contracted.end());
  return out;
}

IndexSets index_sets(const DivisorialFan& df, long k) {
  const long n = static_cast<long>(df.rank());
  if (k < 0 || k > n + 1) throw Error(ErrorCode::OutOfRange, "codimension " + std::to_string(k) + " out of range");
  IndexSets out;
  const long cell_dim = n - k;
  if (cell_dim >= 0) {
    for (std::size_t p = 0; p < df.num_points(); ++p)
      for (auto c : df.slice(p).by_dim(static_cast<std::size_t>(cell_dim))) {
        const auto r = df.rec_of(p, c);
        if (r != DivisorialFan::npos && !df.is_marked(r)) out.vertical.push_back(WeightIndex::vertical(p, c));
      }
    for (auto c : df.recession().by_dim(static_cast<std::size_t>(cell_dim)))
      if (df.is_marked(c)) out.contracted.push_back(WeightIndex::contracted(c));
  }
  for (auto c : df.recession().by_dim(static_cast<std::size_t>(n - k + 1)))
    if (!df.is_marked(c)) out.horizontal.push_back(WeightIndex::horizontal(c));
  return out;
}

namespace {

std::set<std::string> cell_keys(const PolyComplex& c) {
  std::set<std::string> out;
  for (const auto& cell : c.cells()) out.insert(cell.key());
  return out;
}

}  // namespace

std::vector<std::string> validate_fan(const DivisorialFan& df, bool strict) {
  std::vector<std::string> report;
  if (df.num_points() < 2) report.push_back("fewer than two marked points");
  {
    std::set<std::string> seen;
    for (const auto& p : df.points())
      if (!seen.insert(p).second) report.push_back("duplicate marked point label " + p);
  }
  const auto& sigma = df.recession();
  if (sigma.size() == 0) {
    report.push_back("recession fan is empty");
    return report;
  }
  if (!sigma.is_fan()) report.push_back("recession fan contains a cell that is not a cone");
  if (!is_complete(sigma)) report.push_back("recession fan is not complete");
  const auto sigma_keys = cell_keys(sigma);

  for (std::size_t p = 0; p < df.num_points(); ++p) {
    const auto& s = df.slice(p);
    const std::string where = "slice " + df.points()[p] + ": ";
    if (s.size() == 0) {
      report.push_back(where + "empty");
      continue;
    }
    if (!is_complete(s)) report.push_back(where + "not a complete subdivision");
    std::set<std::string> rec_keys;
    for (const auto& cell : s.cells()) rec_keys.insert(recession_cone(cell).key());
    if (rec_keys != sigma_keys) report.push_back(where + "recession fan differs from the common recession fan");
    if (strict && cell_keys(s) == sigma_keys) report.push_back(where + "slice equals the recession fan (strict mode)");
  }

  for (auto m : df.marked()) {
    for (auto up : sigma.star_of(m))
      if (!df.is_marked(up)) {
        report.push_back("marked cones not closed upward: " + sigma.cell(m).key() + " is marked but " +
                         sigma.cell(up).key() + " is not");
        break;
      }
    const auto it = df.stabilizers().find(m);
    if (it == df.stabilizers().end())
      report.push_back("missing stabilizer index for marked cone " + sigma.cell(m).key());
    else if (it->second <= 0)
      report.push_back("stabilizer index of " + sigma.cell(m).key() + " is not positive");
  }
  if (!df.marked().empty() && df.marked().size() == sigma.size()) report.push_back("every cone is marked");
  return report;
}

VertexMultiplicity vertex_and_multiplicity(const DivisorialFan& df, std::size_t p, std::size_t cell) {
  const auto& f = df.slice(p).cell(cell);
  const auto sigma = df.rec_of(p, cell);
  if (sigma == DivisorialFan::npos) throw Error(ErrorCode::InvalidInput, "cell recession cone is not in the fan");
  if (f.dim() != df.recession().cell(sigma).dim())
    throw Error(ErrorCode::DimensionMismatch, f.key() + " is not a translate of its recession cone");
  VertexMultiplicity out;
  out.vertex = df.cone_quotient(sigma).project(f.vertices().front());
  out.multiplicity = common_denominator(out.vertex);
  return out;
}

namespace {

IntVector first_nonzero_image(const QuotientLattice& q, const std::vector<IntVector>& gens) {
  for (const auto& g : gens) {
    const IntVector w = q.project(g);
    if (!is_zero(w)) return primitive(w);
  }
  throw Error(ErrorCode::NotAFacet, "cone has trivial image in the quotient");
}

}  // namespace

IntVector normal_vector_horizontal(const DivisorialFan& df, std::size_t tau, std::size_t sigma) {
  const auto& fan = df.recession();
  const auto& fs = fan.facets_of(sigma);
  if (!std::binary_search(fs.begin(), fs.end(), tau))
    throw Error(ErrorCode::NotAFacet, fan.cell(tau).key() + " is not a facet of " + fan.cell(sigma).key());
  return first_nonzero_image(df.cone_quotient(tau), fan.cell(sigma).rays());
}

IntVector normal_vector_vertical(const DivisorialFan& df, std::size_t p, std::size_t f, std::size_t g) {
  const auto& s = df.slice(p);
  const auto& fs = s.facets_of(g);
  if (!std::binary_search(fs.begin(), fs.end(), f))
    throw Error(ErrorCode::NotAFacet, s.cell(f).key() + " is not a facet of " + s.cell(g).key());
  return first_nonzero_image(df.cell_quotient(p, f), df.cell_cone_generators(p, g));
}

StarVertical star_fan_vertical(const DivisorialFan& df, std::size_t p, std::size_t cell) {
  const auto& s = df.slice(p);
  const auto& q = df.cell_quotient(p, cell);
  std::vector<Polyhedron> maxes;
  for (auto m : s.maximal_containing(cell)) maxes.push_back(image(homogenize(s.cell(m), 1), q));
  StarVertical out;
  out.fan = build_complex(q.rank(), maxes);
  out.origin.assign(out.fan.size(), DivisorialFan::npos);
  for (auto g : s.star_of(cell)) {
    const auto idx = out.fan.find(image(homogenize(s.cell(g), 1), q));
    if (!idx) throw Error(ErrorCode::InvalidInput, "star image missing for " + s.cell(g).key());
    out.origin[*idx] = g;
  }
  return out;
}

StarHorizontal star_fan_horizontal(const DivisorialFan& df, std::size_t tau) {
  if (df.is_marked(tau))
    throw Error(ErrorCode::MarkedCone, df.recession().cell(tau).key() + " is marked");
  const auto& fan = df.recession();
  const auto& q = df.cone_quotient(tau);
  const auto above = fan.star_of(tau);
  auto contains_tau = [&](std::size_t cone) { return std::binary_search(above.begin(), above.end(), cone); };

  StarHorizontal out;
  std::vector<PolyComplex> slices;
  for (std::size_t p = 0; p < df.num_points(); ++p) {
    const auto& s = df.slice(p);
    std::vector<Polyhedron> maxes;
    for (auto m : s.maximal())
      if (contains_tau(df.rec_of(p, m))) maxes.push_back(image(s.cell(m), q));
    slices.push_back(build_complex(q.rank(), maxes));
    std::vector<std::size_t> origin(slices.back().size(), DivisorialFan::npos);
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (df.rec_of(p, c) == DivisorialFan::npos || !contains_tau(df.rec_of(p, c))) continue;
      const auto idx = slices.back().find(image(s.cell(c), q));
      if (!idx) throw Error(ErrorCode::InvalidInput, "star image missing for " + s.cell(c).key());
      origin[*idx] = c;
    }
    out.cell_origin.push_back(std::move(origin));
  }

  std::vector<Polyhedron> cone_maxes;
  for (auto m : fan.maximal())
    if (contains_tau(m)) cone_maxes.push_back(image(fan.cell(m), q));
  PolyComplex rec = build_complex(q.rank(), cone_maxes);
  out.cone_origin.assign(rec.size(), DivisorialFan::npos);
  std::vector<std::size_t> marked;
  std::map<std::size_t, Rational> stab;
  for (auto c : above) {
    const auto idx = rec.find(image(fan.cell(c), q));
    if (!idx) throw Error(ErrorCode::InvalidInput, "star image missing for " + fan.cell(c).key());
    out.cone_origin[*idx] = c;
    if (df.is_marked(c)) {
      marked.push_back(*idx);
      const auto it = df.stabilizers().find(c);
      if (it != df.stabilizers().end()) stab[*idx] = it->second;
    }
  }
  out.fan = DivisorialFan(q.rank(), df.points(), std::move(slices), std::move(rec), std::move(marked), std::move(stab));
  return out;
}

}  // namespace cotv
