#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotv/error.hpp"
#include "support/fixtures.hpp"

using namespace cotv;
using namespace cotv::testing;

namespace {

Integer functional_at(const VerticalRestriction& r, const std::string& cone) {
  const auto id = cell_by_key(r.star.fan, cone);
  return dot(r.functionals.at(id), r.star.fan.cell(id).rays().front());
}

}  // namespace

TEST_CASE("the Hirzebruch support function") {
  const auto& x = hirzebruch();
  CHECK(validate_sf(x.df, x.h).empty());
  CHECK(x.h.value_at_vertex(x.df, 0, x.v0_half) == q(-1, 2));
  CHECK(x.h.value_at_vertex(x.df, 0, x.v0_zero) == 0);
  CHECK(x.h.value_at_vertex(x.df, 1, x.vinf_zero) == -1);
  CHECK(x.h.slope_on(x.df, x.zero) == iv({3}));
  CHECK(x.h.datum_on(x.df, 0, x.v0_zero) == AffineDatum{iv({1}), 0});
  CHECK(x.h.datum_on(x.df, 0, x.v0_zero).homogenized() == iv({1, 0}));
}

TEST_CASE("Weil expansion of h") {
  const auto& x = hirzebruch();
  const std::map<WeightIndex, Integer> expected{{WeightIndex::horizontal(x.tau0), 3},
                                                {WeightIndex::vertical(0, x.v0_half), 1},
                                                {WeightIndex::vertical(1, x.vinf_zero), 1}};
  CHECK(weil_expansion(x.df, x.h) == expected);
  CHECK(weil_expansion(x.df, zero_sf(x.df)).empty());
}

TEST_CASE("discontinuous data is rejected") {
  const auto& x = hirzebruch();
  SupportFunction bad = x.h;
  bad.cells[0][x.s0_mid].translation = 1;
  CHECK_FALSE(validate_sf(x.df, bad).empty());
  SupportFunction drift = x.h;
  drift.cells[1][x.sinf_right].slope = iv({1});
  CHECK_FALSE(validate_sf(x.df, drift).empty());
  SupportFunction missing = x.h;
  missing.cells[1].erase(x.sinf_left);
  CHECK_FALSE(validate_sf(x.df, missing).empty());
}

TEST_CASE("arithmetic and principal functions") {
  const auto& x = hirzebruch();
  CHECK(x.h - x.h == zero_sf(x.df));
  CHECK(x.h + x.h == Integer(2) * x.h);
  const auto p = principal_sf(x.df, iv({2}), {Integer(1), Integer(-1)});
  CHECK(validate_sf(x.df, p).empty());
  CHECK(p.cells[0].at(x.s0_mid) == AffineDatum{iv({2}), 1});
  CHECK(p.cells[1].at(x.sinf_left) == AffineDatum{iv({2}), -1});
  const auto back = is_principal(x.df, p);
  REQUIRE(back.has_value());
  CHECK(back->u == iv({2}));
  CHECK(back->d == std::vector<Integer>{1, -1});
  CHECK_FALSE(is_principal(x.df, x.h).has_value());
  CHECK(weil_expansion(x.df, p).size() == 4);
}

TEST_CASE("the lattice of support functions") {
  const auto& x = hirzebruch();
  // Two recession slopes, the slope on the bounded cell, one translation per slice.
  const auto basis = sf_lattice_basis(x.df);
  CHECK(basis.size() == 5);
  for (const auto& b : basis) CHECK(validate_sf(x.df, b).empty());
}

TEST_CASE("horizontal restriction") {
  const auto& x = hirzebruch();
  const auto r1 = restrict_horizontal_sf(x.df, x.h, x.tau1);
  CHECK(r1.m_tau == iv({0}));
  CHECK(r1.function.cells[0].begin()->second.translation == 0);
  CHECK(r1.function.cells[1].begin()->second.translation == -1);
  const auto r0 = restrict_horizontal_sf(x.df, x.h, x.tau0);
  CHECK(r0.m_tau == iv({3}));
  CHECK(r0.function.cells[0].begin()->second.translation == 1);
  CHECK(r0.function.cells[1].begin()->second.translation == -1);
  CHECK(validate_sf(r0.star.fan, r0.function).empty());
  const auto rz = restrict_horizontal_sf(x.df, x.h, x.zero);
  CHECK(rz.m_tau == iv({0}));
  CHECK(rz.function == x.h);
  CHECK_THROWS_AS(restrict_horizontal_sf(x.df, x.h, x.tau1, iv({1})), Error);
}

TEST_CASE("vertical restriction") {
  const auto& x = hirzebruch();
  const auto a = restrict_vertical_sf(x.df, x.h, 0, x.v0_zero);
  CHECK(a.normalizer == AffineDatum{iv({0}), 0});
  CHECK(functional_at(a, "cone(1)") == 0);
  CHECK(functional_at(a, "cone(-1)") == -1);
  const auto b = restrict_vertical_sf(x.df, x.h, 1, x.vinf_zero);
  CHECK(functional_at(b, "cone(1)") == 0);
  CHECK(functional_at(b, "cone(-1)") == -3);
  // Another normalizer changes the functionals by a global linear form only.
  const auto c = restrict_vertical_sf(x.df, x.h, 1, x.vinf_zero, AffineDatum{iv({3}), -1});
  CHECK(functional_at(c, "cone(1)") == -3);
  CHECK(functional_at(c, "cone(-1)") == 0);
}

TEST_CASE("restriction to a marked cone") {
  const auto& x = hirzebruch();
  const DivisorialFan marked(1, {"0", "inf"}, {x.df.slice(0), x.df.slice(1)}, x.df.recession(), {x.tau1},
                             {{x.tau1, q(1)}});
  try {
    restrict_horizontal_sf(marked, x.h, x.tau1);
    FAIL("expected MarkedCone");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MarkedCone);
  }
}
