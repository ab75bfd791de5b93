#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

namespace {

void report(const props::Tally& t) {
  INFO("first failure: " << t.first_failure);
  MESSAGE(t.trials << " instances");
  CHECK(t.failures == 0);
}

}  // namespace

TEST_CASE("graded commutativity and associativity fuzz") {
  auto t = props::commutativity_associativity(2000, 1);
  CHECK(t.trials >= 10000);
  report(t);
}

TEST_CASE("pairing perfection on shipped algebras") { report(props::pairing_perfection()); }

TEST_CASE("signature is a congruence invariant") {
  auto t = props::signature_congruence(150, 2);
  CHECK(t.trials >= 100);
  report(t);
}

TEST_CASE("even-rank test is invariant under recombination") { report(props::even_rank_recombination(60, 3)); }

TEST_CASE("F^1 satisfies the half-subspace bound") {
  auto t = props::half_subspace_weight_one(50, 4);
  CHECK(t.trials >= 50);
  report(t);
}
