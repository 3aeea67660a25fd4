#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cotv/error.hpp"
#include "cotv/pairing.hpp"
#include "cotv/toricoracle.hpp"
#include "support/fixtures.hpp"

using namespace cotv;
using namespace cotv::testing;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::size_t cone_with(const PolyComplex& fan, const std::vector<IntVector>& rays) {
  const auto idx = fan.find(Polyhedron::cone(fan.rank(), rays));
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("the projective line and plane") {
  const auto line = build_complex(1, {Polyhedron::cone(1, {iv({1})}), Polyhedron::cone(1, {iv({-1})})});
  ConeFunctional f;
  f[cone_with(line, {iv({1})})] = rv({-1});
  f[cone_with(line, {iv({-1})})] = rv({0});
  CHECK(toric_intersection(line, {f}) == 1);

  const auto plane = build_complex(2, {Polyhedron::cone(2, {iv({1, 0}), iv({0, 1})}),
                                       Polyhedron::cone(2, {iv({0, 1}), iv({-1, -1})}),
                                       Polyhedron::cone(2, {iv({-1, -1}), iv({1, 0})})});
  ConeFunctional hyper;
  hyper[cone_with(plane, {iv({1, 0}), iv({0, 1})})] = rv({0, 0});
  hyper[cone_with(plane, {iv({0, 1}), iv({-1, -1})})] = rv({1, 0});
  hyper[cone_with(plane, {iv({-1, -1}), iv({1, 0})})] = rv({0, 1});
  CHECK(toric_intersection(plane, {hyper, hyper}) == 1);
  CHECK(toric_weight_rank(plane, 1) == 1);
  CHECK(toric_weight_rank(plane, 0) == 1);
  CHECK(toric_weight_rank(plane, 2) == 1);
  ConeFunctional broken = hyper;
  broken.begin()->second = rv({1, 1});
  try {
    check_conewise_linear(plane, broken);
    FAIL("expected NonLinearOnCone");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonLinearOnCone);
  }
  CHECK_THROWS_AS(toric_intersection(plane, {hyper}), Error);
}

TEST_CASE("the homogenized Hirzebruch fan") {
  const auto& x = hirzebruch();
  const auto hf = homogenize_fan(x.df);
  CHECK(hf.fan.rank() == 2);
  CHECK(is_complete(hf.fan));
  std::vector<IntVector> rays;
  for (auto r : hf.fan.by_dim(1)) rays.push_back(hf.fan.cell(r).rays().front());
  std::sort(rays.begin(), rays.end());
  CHECK(rays == std::vector<IntVector>{iv({-1, 0}), iv({-1, 2}), iv({0, -1}), iv({0, 1}), iv({1, 0})});
  for (std::size_t k = 0; k <= 2; ++k) CHECK(toric_weight_rank(hf.fan, k) == weight_basis(x.df, k).rank());
  const auto f = transport(x.df, hf, x.h);
  check_conewise_linear(hf.fan, f);
  CHECK(toric_intersection(hf.fan, {f, f}) == 4);
  CHECK(toric_intersection(hf.fan, {f, f}) == top_intersection(x.df, x.h));
}

TEST_CASE("pair values agree with orbit degrees") {
  const auto& x = hirzebruch();
  const auto hf = homogenize_fan(x.df);
  const auto f = transport(x.df, hf, x.h);
  const auto w = pair(x.df, x.h, fundamental_weight(x.df));
  for (const auto& idx : index_sets(x.df, 1).all())
    CHECK(toric_degree_on_orbit(hf.fan, hf.cone_of(idx), {f}) == Rational(w.at(idx)));
  CHECK(toric_degree_on_orbit(hf.fan, hf.cone_of(WeightIndex::vertical(0, x.v0_half)), {f}) == 1);
  CHECK(toric_degree_on_orbit(hf.fan, hf.cone_of(WeightIndex::vertical(1, x.vinf_zero)), {f}) == 3);
}

TEST_CASE("corner loci") {
  const auto& x = hirzebruch();
  const auto hf = homogenize_fan(x.df);
  const auto f = transport(x.df, hf, x.h);
  ToricWeight one;
  for (auto m : hf.fan.maximal()) one.values[m] = 1;
  const auto d = toric_pair(hf.fan, f, one);
  CHECK(toric_is_balanced(hf.fan, d));
  const auto dd = toric_pair(hf.fan, f, d);
  CHECK(dd.values.at(hf.fan.by_dim(0).front()) == 4);
}

TEST_CASE("oracle preconditions") {
  const auto& x = hirzebruch();
  const DivisorialFan three(1, {"0", "1", "inf"}, {x.df.slice(0), x.df.slice(1), x.df.slice(1)},
                            x.df.recession());
  try {
    homogenize_fan(three);
    FAIL("expected NotTwoPoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTwoPoints);
  }
  const DivisorialFan marked(1, {"0", "inf"}, {x.df.slice(0), x.df.slice(1)}, x.df.recession(), {x.tau1},
                             {{x.tau1, q(1)}});
  try {
    homogenize_fan(marked);
    FAIL("expected MarkedFan");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MarkedFan);
  }
}
