#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cotv/error.hpp"
#include "support/fixtures.hpp"

using namespace cotv;
using namespace cotv::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

DivisorialFan marked_fan(const Hirzebruch& x, std::map<std::size_t, Rational> stabilizers) {
  return DivisorialFan(1, {"0", "inf"}, {x.df.slice(0), x.df.slice(1)}, x.df.recession(), {x.tau1},
                       std::move(stabilizers));
}

}  // namespace

TEST_CASE("c1 is balanced") {
  const auto& x = hirzebruch();
  const auto report = check_balancing(x.df, x.c1);
  CHECK(report.balanced());
  CHECK(report.violations().empty());
  std::vector<std::string> lines21, lines22;
  for (const auto& e : report.entries) {
    if (e.condition == "2.1") lines21.push_back(e.rendered());
    if (e.condition == "2.2") lines22.push_back(e.rendered());
  }
  CHECK(lines21 == std::vector<std::string>{"-1+3-2=0"});
  CHECK(lines22 == std::vector<std::string>{"3=3"});
}

TEST_CASE("unbalanced weights are reported") {
  const auto& x = hirzebruch();
  Weight c = x.c1;
  c.values[WeightIndex::horizontal(x.tau1)] = 4;
  const auto report = check_balancing(x.df, c);
  CHECK_FALSE(report.balanced());
  REQUIRE(report.violations().size() == 1);
  CHECK(report.violations().front().condition == "2.1");
  CHECK(report.violations().front().residual == 1);
  c = x.c1;
  c.values[WeightIndex::vertical(1, x.vinf_zero)] = 2;
  const auto fiber = check_balancing(x.df, c).violations();
  REQUIRE(fiber.size() == 1);
  CHECK(fiber.front().rendered() == "2=3");
}

TEST_CASE("domain errors") {
  const auto& x = hirzebruch();
  Weight c = x.c1;
  c.values[WeightIndex::vertical(0, x.s0_mid)] = 1;
  CHECK(code_of([&] { check_balancing(x.df, c); }) == ErrorCode::DomainMismatch);
  CHECK(code_of([&] { degree_of_top_weight(x.df, x.c1); }) == ErrorCode::CodimMismatch);
  const auto unstabilized = marked_fan(x, {});
  CHECK(code_of([&] { check_balancing(unstabilized, fundamental_weight(unstabilized)); }) ==
        ErrorCode::MissingStabilizer);
}

TEST_CASE("ranks of the weight groups") {
  const auto& x = hirzebruch();
  CHECK(weight_basis(x.df, 0).rank() == 1);
  CHECK(weight_basis(x.df, 1).rank() == 3);
  CHECK(weight_basis(x.df, 2).rank() == 1);
  for (std::size_t k = 0; k <= 2; ++k)
    for (const auto& b : weight_basis(x.df, k).basis) CHECK(check_balancing(x.df, b).balanced());
  CHECK(check_balancing(x.df, fundamental_weight(x.df)).balanced());
  // c1 lies in the span: it is determined by the three vertex values.
  const auto basis = weight_basis(x.df, 1);
  CHECK(basis.domain.size() == 5);
}

TEST_CASE("weights on a fan with a marked cone") {
  const auto& x = hirzebruch();
  const auto df = marked_fan(x, {{x.tau1, q(1)}});
  CHECK(check_balancing(df, fundamental_weight(df)).balanced());
  CHECK(fundamental_weight(df).values.size() == 4);
  CHECK(weight_basis(df, 0).rank() == 1);
  CHECK(code_of([&] { restrict_weight_horizontal(df, fundamental_weight(df), x.tau0); }) == ErrorCode::MarkedFan);
  CHECK(code_of([&] { restrict_weight_horizontal(df, fundamental_weight(df), x.tau1); }) == ErrorCode::MarkedCone);
}

TEST_CASE("weight arithmetic") {
  const auto& x = hirzebruch();
  CHECK(is_zero(x.c1 - x.c1));
  CHECK(x.c1 + x.c1 == Integer(2) * x.c1);
  Weight other = x.c1;
  other.codim = 2;
  CHECK(code_of([&] { (void)(x.c1 + other); }) == ErrorCode::CodimMismatch);
}

TEST_CASE("weight restrictions") {
  const auto& x = hirzebruch();
  const auto r = restrict_weight_horizontal(x.df, x.c1, x.zero);
  CHECK(r.weight == x.c1);
  const auto r1 = restrict_weight_horizontal(x.df, fundamental_weight(x.df), x.tau1);
  CHECK(r1.weight.values.size() == 2);
  const auto v = restrict_weight_vertical(x.df, x.c1, 0, x.v0_half);
  CHECK(v.weight.codim == 1);
  REQUIRE(v.weight.values.size() == 1);
  CHECK(v.weight.values.begin()->second == 1);
  const auto v0 = restrict_weight_vertical(x.df, fundamental_weight(x.df), 0, x.v0_half);
  CHECK(v0.weight.values.size() == 2);
  CHECK(toric_is_balanced(v0.star.fan, v0.weight));
}
