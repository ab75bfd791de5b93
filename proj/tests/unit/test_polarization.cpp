#include <doctest.h>

#include "helpers.hpp"
#include "hodgealg/builders.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/linalg.hpp"
#include "hodgealg/polarization.hpp"

using namespace hodgealg;

namespace {

Element kahler(const AlgebraPtr& t, int n) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (int i = 0; i < n; ++i)
    terms.emplace_back("w" + std::to_string(2 * i + 1) + "^w" + std::to_string(2 * i + 2), Rational(1));
  return t->element(terms);
}

}  // namespace

TEST_CASE("Lefschetz on tori: primitive dims are b_k - b_{k-2}") {
  for (int n = 1; n <= 3; ++n) {
    auto t = exterior_algebra(2 * n);
    auto w = kahler(t, n);
    auto r = lefschetz_check(*t, w);
    CHECK(r.passed);
    for (int k = 0; k <= n; ++k) {
      long want = oracle::binom(2 * n, k) - oracle::binom(2 * n, k - 2);
      CHECK(static_cast<long>(r.primitive_dims[static_cast<std::size_t>(k)]) == want);
      auto dec = lefschetz_decompose(*t, w, k);
      CHECK(dec.ok());
      std::size_t total = 0;
      for (const auto& c : dec.components) total += c.space.dim();
      CHECK(static_cast<long>(total) == oracle::binom(2 * n, k));
    }
  }
}

TEST_CASE("Lefschetz failure is located") {
  auto t = exterior_algebra(4);
  auto r = lefschetz_check(*t, t->element({{"w1^w2", Rational(1)}}));
  CHECK_FALSE(r.passed);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 0);
}

TEST_CASE("expected Hodge-Riemann sign") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int r = 0; r <= 2; ++r) {
        int k = 2 * r + p + q;
        int want = ((k * (k - 1) / 2) % 2 ? -1 : 1) * (q % 2 ? -1 : 1);
        CHECK(hr_expected_sign(p, q, r) == want);
      }
}

TEST_CASE("square tori are polarized with the expected block signs") {
  for (int n = 1; n <= 3; ++n) {
    auto t = exterior_algebra(2 * n);
    auto h = exterior_hodge(t, square_torus_weight_one(n));
    auto c = hodge_riemann_check(h, kahler(t, n));
    CHECK(c.verdict == PolarizationVerdict::Polarized);
    CHECK(c.cross_orthogonal);
    for (const auto& b : c.blocks) {
      CHECK(b.ok);
      CHECK(b.inertia.null == 0);
      if (b.expected_sign > 0) CHECK(b.inertia.neg == 0);
      else CHECK(b.inertia.pos == 0);
    }
  }
}

TEST_CASE("the negated class, a degenerate class and an indefinite one") {
  auto t = exterior_algebra(4);
  auto h = exterior_hodge(t, square_torus_weight_one(2));
  // the orientation comes from trace(w^2), unchanged by w -> -w, while h on H^1 flips sign
  CHECK(hodge_riemann_check(h, kahler(t, 2).scaled(Rational(-1))).verdict == PolarizationVerdict::NotPolarized);
  CHECK_THROWS_AS(hodge_riemann_check(h, t->element({{"w1^w2", Rational(1)}})), std::invalid_argument);
  // indefinite on H^{1,1}_prim: w1w2 - w3w4 is (1,1) with the Lefschetz property
  auto w = t->element({{"w1^w2", Rational(1)}, {"w3^w4", Rational(-1)}});
  CHECK(lefschetz_check(*t, w).passed);
  CHECK(hodge_riemann_check(h, w).verdict == PolarizationVerdict::NotPolarized);
}

TEST_CASE("signature formula") {
  auto p2 = truncated_polynomial(2);
  auto r = signature_formula_check(*p2);
  CHECK(r.passed);
  CHECK(r.tau == 1);
  auto k3 = signature_formula_check(*k3_model());
  CHECK(k3.tau == -16);
  CHECK(k3.alternating == -20);
  CHECK_FALSE(k3.passed);
  auto bl = signature_formula_check(*bl21_model());
  CHECK(bl.tau == -20);
  CHECK(bl.passed);
  CHECK_THROWS(signature_formula_check(*exterior_algebra(4)));
}

TEST_CASE("Simpson condition") {
  auto t = exterior_algebra(4);
  auto h = exterior_hodge(t, square_torus_weight_one(2));
  auto s = simpson_lemma_check(*t, &h);
  CHECK(s.passed);
  CHECK_FALSE(simpson_lemma_check(*s1xs3_model()).passed);
  CHECK(simpson_lemma_check(*k3_model()).passed);
}

TEST_CASE("middle forms") {
  // (P^1)^k middle form has signature 0 for odd middle degree k/2... compare with the oracle for small k
  for (int k : {2, 4, 6}) {
    auto m = p1_power_middle_form(k);
    CHECK(m.rows() == static_cast<std::size_t>(oracle::binom(k, k / 2)));
    auto want = oracle::inertia(testutil::to_oracle(m.to_dense()));
    auto got = signature(m);
    CHECK(got.pos == want.pos);
    CHECK(got.neg == want.neg);
  }
  auto x = assemble_middle_form({FormBlock::of(p1_power_middle_form(4)), FormBlock::hyperbolic(1),
                                 FormBlock::negated(k3_lattice())});
  CHECK(signature(x).signature() == 16);
  auto y = assemble_middle_form({FormBlock::hyperbolic(2), FormBlock::negated(bl21_lattice())});
  CHECK(signature(y).signature() == 20);
}
