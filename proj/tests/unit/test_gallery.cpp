#include <doctest.h>

#include "hodgealg/gallery.hpp"
#include "hodgealg/linalg.hpp"

using namespace hodgealg;

TEST_CASE("cyclotomic action") {
  auto g = cyclotomic7_gammas();
  REQUIRE(g.size() == 6);
  CHECK(g[0] == RationalMatrix::identity(6));
  // z^7 = 1 and z != 1
  auto z7 = g[1];
  for (int i = 1; i < 7; ++i) z7 = z7 * g[1];
  CHECK(z7 == RationalMatrix::identity(6));
  // 1 + z + ... + z^6 = 0
  RationalMatrix s(6, 6);
  auto p = RationalMatrix::identity(6);
  for (int i = 0; i < 7; ++i) {
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) s(r, c) += p(r, c);
    p = p * g[1];
  }
  CHECK(s.is_zero());
}

TEST_CASE("correspondence class of the identity pairs to the Euler characteristic of the graph") {
  // gamma_id = sum w_j^dual x w_j' + swap: a class in Λ^6(Q^12)
  auto c = correspondence_class(RationalMatrix::identity(6));
  CHECK_FALSE(c.is_zero());
  for (const auto& [m, v] : c.terms()) {
    (void)v;
    CHECK(std::popcount(m) == 6);
  }
}

TEST_CASE("projector onto V") {
  auto pc = build_projector(cyclotomic7_gammas());
  CHECK(pc.v.size() == 8);
  CHECK(pc.gram == pc.gram.transpose());
  CHECK(rank(pc.gram) == 8);
  auto e = projector_endomorphism(pc.p);
  auto e2 = sparse_product(e, e);
  CHECK(e2.to_dense() == e.to_dense());
  CHECK(rank(e) == 8);
  // trace of an idempotent of rank 8
  Rational tr = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) tr += e.get(i, i);
  CHECK(tr == 8);
  // and the class pairs with itself to the same trace
  CHECK(pc.p.top_pairing(pc.p) == 8);
}

TEST_CASE("fibered relation") {
  CHECK(fibered_relation_holds(13, 13));
  CHECK(fibered_relation_holds(13, 20));
  CHECK(fibered_relation_holds(20, 13));
  CHECK_THROWS(fibered_relation_holds(3, 13));
}

TEST_CASE("gallery registry and parameters") {
  CHECK(gallery_cases().size() == 6);
  CHECK(find_gallery_case("torus-rank11"));
  CHECK_FALSE(find_gallery_case("nope"));
  const auto* c = find_gallery_case("blowup-rangpair");
  GalleryParams p;
  p.values["N"] = "4";
  auto j = resolved_parameters(*c, p);
  CHECK(j["N"] == "4");
  CHECK(j["eps"] == "1/10");
  p.values["bogus"] = "1";
  CHECK_THROWS_AS(resolved_parameters(*c, p), std::invalid_argument);
}

TEST_CASE("gallery verdicts") {
  auto t = case_torus_rank11();
  CHECK(t.verdict == Verdict::Obstructed);
  CHECK(t.certificate["rank"] == 11);
  CHECK(t.certificate["kernel_dim"] == 1);
  CHECK(case_blowup_rangpair(3, make_rational(1, 10)).verdict == Verdict::Obstructed);
  auto ts = case_tensor_split();
  CHECK(ts.verdict == Verdict::Clear);
  auto fp = case_fibered_projector(true);
  CHECK(fp.verdict == Verdict::Clear);
  CHECK(fp.certificate["P_wedge_P"] == "SKIPPED");
  auto hs = case_half_subspace_generic(5, 5, 20, 1);
  CHECK(hs.verdict == Verdict::ObstructedHeuristic);
  CHECK(hs.certificate["control_torus_F1"]["verdict"] == "CLEAR");
}
