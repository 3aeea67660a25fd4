#include "properties.hpp"

#include <algorithm>

#include "cotv/pairing.hpp"
#include "cotv/toricoracle.hpp"

namespace cotv::testing {

namespace {

struct Draw {
  const Instance* inst;
  std::size_t codim;
};

// The i-th pool instance and a random input codimension in [0, n - offset].
Draw draw(Rng& rng, int i, std::size_t offset = 0) {
  const auto& pool = instance_pool();
  const Instance& inst = pool[static_cast<std::size_t>(i) % pool.size()];
  const long top = static_cast<long>(inst.df.rank()) - static_cast<long>(offset);
  return {&inst, static_cast<std::size_t>(uniform(rng, 0, std::max(0L, top)))};
}

void expect(PropertyResult& r, bool cond, const std::string& what) {
  if (cond) return;
  if (r.failures++ == 0) r.first_failure = what;
}

std::string where(int i) { return "case " + std::to_string(i); }

ToricWeight nonzero(ToricWeight w) {
  for (auto it = w.values.begin(); it != w.values.end();) it = it->second == 0 ? w.values.erase(it) : std::next(it);
  return w;
}

template <typename Body>
PropertyResult run_cases(int cases, std::uint64_t seed, Body body) {
  PropertyResult r;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i, ++r.cases) body(rng, i, r);
  return r;
}

}  // namespace

PropertyResult pairing_preserves_balancing(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i);
    const auto h = random_sf(rng, *inst);
    const auto c = random_weight(rng, *inst, k);
    const auto w = pair(inst->df, h, c);
    expect(r, w.codim == k + 1 && check_balancing(inst->df, w).balanced(), where(i));
  });
}

PropertyResult pairing_commutes(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i, 1);
    const auto h = random_sf(rng, *inst);
    const auto g = random_sf(rng, *inst);
    const auto c = random_weight(rng, *inst, k);
    expect(r, pair(inst->df, h, pair(inst->df, g, c)) == pair(inst->df, g, pair(inst->df, h, c)), where(i));
  });
}

PropertyResult pairing_is_additive(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i);
    const auto h = random_sf(rng, *inst);
    const auto g = random_sf(rng, *inst);
    const auto c = random_weight(rng, *inst, k);
    expect(r, pair(inst->df, h + g, c) == pair(inst->df, h, c) + pair(inst->df, g, c), where(i));
    expect(r, pair(inst->df, Integer(-3) * h, c) == Integer(-3) * pair(inst->df, h, c), where(i));
  });
}

PropertyResult principal_annihilates(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i);
    const auto p = random_principal(rng, inst->df);
    const auto c = random_weight(rng, *inst, k);
    expect(r, is_zero(pair(inst->df, p, c)), where(i));
  });
}

PropertyResult probes_characterize_balancing(int cases, std::uint64_t seed) {
  int unbalanced = 0;
  auto r = run_cases(cases, seed, [&](Rng& rng, int i, PropertyResult& res) {
    const auto [inst, k] = draw(rng, i);
    Weight c = random_weight(rng, *inst, k);
    const auto& domain = inst->weights.at(k).domain;
    // Every other case perturbs a balanced weight at one index.
    if (i % 2 == 1 && !domain.empty()) {
      const auto& idx = domain[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(domain.size()) - 1))];
      c.values[idx] += uniform(rng, 0, 1) ? 1 : -1;
    }
    bool vanish = true;
    for (const auto& pr : principal_probes(inst->df, c)) vanish = vanish && pr.value == 0;
    const bool balanced = check_balancing(inst->df, c).balanced();
    unbalanced += !balanced;
    expect(res, balanced == vanish, where(i));
  });
  // Both directions must actually be exercised.
  expect(r, unbalanced >= cases / 4, "too few unbalanced cases");
  expect(r, cases - unbalanced >= cases / 4, "too few balanced cases");
  return r;
}

PropertyResult horizontal_restriction_compatible(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i, 1);
    const auto& df = inst->df;
    const auto h = random_sf(rng, *inst);
    const auto c = random_weight(rng, *inst, k);
    const auto hc = pair(df, h, c);
    for (auto tau : df.recession().by_dim(1)) {
      const auto restricted = restrict_horizontal_sf(df, h, tau);
      const auto c_tau = restrict_weight_horizontal(df, c, tau);
      const auto hc_tau = restrict_weight_horizontal(df, hc, tau);
      expect(r, pair(c_tau.star.fan, restricted.function, c_tau.weight) == hc_tau.weight,
             where(i) + ", ray " + df.recession().cell(tau).key());
    }
  });
}

PropertyResult vertical_restriction_compatible(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i, 1);
    const auto& df = inst->df;
    const auto h = random_sf(rng, *inst);
    const auto c = random_weight(rng, *inst, k);
    const auto hc = pair(df, h, c);
    for (std::size_t p = 0; p < df.num_points(); ++p)
      for (auto v : df.slice(p).by_dim(0)) {
        const auto restricted = restrict_vertical_sf(df, h, p, v);
        ConeFunctional f;
        for (const auto& [cone, m] : restricted.functionals) f[cone] = to_rational(m);
        const auto c_v = restrict_weight_vertical(df, c, p, v);
        const auto hc_v = restrict_weight_vertical(df, hc, p, v);
        expect(r, nonzero(toric_pair(c_v.star.fan, f, c_v.weight)) == hc_v.weight, where(i));
      }
  });
}

PropertyResult representatives_irrelevant(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto [inst, k] = draw(rng, i);
    const auto& df = inst->df;
    const auto h = random_sf(rng, *inst);
    const auto c = random_weight(rng, *inst, k);
    const auto w = pair(df, h, c);
    const auto up = index_sets(df, static_cast<long>(k + 1));
    for (const auto& f : up.vertical)
      for (auto m : df.slice(f.point).maximal_containing(f.id))
        expect(r, vertical_pairing_value(df, h, c, f.point, f.id, h.cells[f.point].at(m)) == w.at(f), where(i));
    for (const auto& t : up.horizontal)
      for (auto m : df.recession().maximal_containing(t.id))
        expect(r, horizontal_pairing_value(df, h, c, t.id, h.recession.at(m)) == w.at(t), where(i));
  });
}

PropertyResult top_routes_agree(int cases, std::uint64_t seed) {
  return run_cases(cases, seed, [](Rng& rng, int i, PropertyResult& r) {
    const auto& pool = instance_pool();
    const Instance& inst = pool[static_cast<std::size_t>(i) % pool.size()];
    const auto h = random_sf(rng, inst);
    expect(r, Rational(top_intersection(inst.df, h)) == integral_formula(inst.df, h, measure_of(inst.df, h)),
           where(i));
  });
}

PropertyResult oracle_agreement(const Instance& inst, int reps, std::uint64_t seed) {
  return run_cases(reps, seed, [&](Rng& rng, int i, PropertyResult& r) {
    const auto& df = inst.df;
    const auto hf = homogenize_fan(df);
    const std::size_t n = df.rank();
    for (std::size_t k = 0; k <= n + 1; ++k)
      expect(r, toric_weight_rank(hf.fan, k) == inst.weights[k].rank(), "rank in codim " + std::to_string(k));
    std::vector<ConeFunctional> fs;
    Weight w = fundamental_weight(df);
    for (std::size_t j = 1; j <= n + 1; ++j) {
      const auto h = random_sf(rng, inst);
      fs.push_back(transport(df, hf, h));
      w = pair(df, h, w);
      for (const auto& idx : index_sets(df, static_cast<long>(j)).all())
        expect(r, toric_degree_on_orbit(hf.fan, hf.cone_of(idx), fs) == Rational(w.at(idx)),
               where(i) + ", " + describe(df, idx));
    }
    const auto h = random_sf(rng, inst);
    const std::vector<ConeFunctional> same(n + 1, transport(df, hf, h));
    expect(r, toric_intersection(hf.fan, same) == Rational(top_intersection(df, h)), where(i) + ", top");
  });
}

}  // namespace cotv::testing
