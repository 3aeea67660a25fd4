#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/properties.hpp"

using namespace cotv;
using namespace cotv::testing;

namespace {

constexpr int kCases = 120;

void require(const PropertyResult& r) {
  INFO(r.first_failure);
  CHECK(r.failures == 0);
  CHECK(r.cases >= 100);
}

}  // namespace

TEST_CASE("generated fans and functions are valid") {
  for (const auto& inst : instance_pool()) {
    CHECK(validate_fan(inst.df).empty());
    for (const auto& b : inst.sf_basis) CHECK(validate_sf(inst.df, b).empty());
    CHECK(inst.weights.front().rank() == 1);
    CHECK(inst.df.rank() <= 2);
    CHECK(inst.df.num_points() <= 4);
  }
  CHECK(instance_pool().size() >= 30);
}

TEST_CASE("pairing preserves balancing") { require(pairing_preserves_balancing(kCases, 101)); }
TEST_CASE("pairing commutes") { require(pairing_commutes(kCases, 102)); }
TEST_CASE("pairing is additive in the support function") { require(pairing_is_additive(kCases, 103)); }
TEST_CASE("principal functions annihilate balanced weights") { require(principal_annihilates(kCases, 104)); }
TEST_CASE("principal probes characterize balancing") { require(probes_characterize_balancing(kCases, 105)); }
TEST_CASE("pairing is compatible with restriction to rays") { require(horizontal_restriction_compatible(kCases, 106)); }
TEST_CASE("pairing is compatible with restriction to slice vertices") {
  require(vertical_restriction_compatible(kCases, 107));
}
TEST_CASE("pair values do not depend on the chosen representatives") {
  require(representatives_irrelevant(kCases, 108));
}
TEST_CASE("both routes to the top intersection agree") { require(top_routes_agree(kCases, 109)); }
