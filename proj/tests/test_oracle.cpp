#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotv/pairing.hpp"
#include "cotv/toricoracle.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace cotv;
using namespace cotv::testing;

TEST_CASE("the Hirzebruch dataset agrees with its toric model") {
  const auto& x = hirzebruch();
  const auto hf = homogenize_fan(x.df);
  const auto f = transport(x.df, hf, x.h);
  CHECK(toric_intersection(hf.fan, {f, f}) == 4);
  CHECK(top_intersection(x.df, x.h) == 4);
  const auto r = oracle_agreement(make_instance(x.df), 5, 7);
  INFO(r.first_failure);
  CHECK(r.ok(5));
}

TEST_CASE("random two-point instances agree with their toric models") {
  std::size_t rank1 = 0, rank2 = 0;
  std::uint64_t seed = 8;
  for (const Instance* inst : two_point_pool()) {
    (inst->df.rank() == 1 ? rank1 : rank2)++;
    const auto r = oracle_agreement(*inst, 3, seed++);
    INFO(r.first_failure);
    CHECK(r.ok(3));
  }
  CHECK(rank1 >= 5);
  CHECK(rank2 >= 5);
}
