#include <doctest.h>

#include "helpers.hpp"
#include "hodgealg/builders.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/hodge.hpp"

using namespace hodgealg;

TEST_CASE("square torus Hodge numbers are products of binomials") {
  for (int n = 1; n <= 3; ++n) {
    auto t = exterior_algebra(2 * n);
    auto h = exterior_hodge(t, square_torus_weight_one(n));
    CHECK(validate_hodge(h).passed());
    for (const auto& [pq, d] : h.hodge_numbers())
      CHECK(static_cast<long>(d) == oracle::binom(n, pq.first) * oracle::binom(n, pq.second));
  }
}

TEST_CASE("types of explicit classes") {
  auto t = exterior_algebra(2);
  auto h = exterior_hodge(t, square_torus_weight_one(1));
  // w1 + i w2 is (1,0); w1^w2 is (1,1)
  ComplexElement z{1, Coords<GaussRational>::from_dense({GaussRational(1), GaussRational::i()}), false};
  CHECK(h.has_type(z, 1, 0));
  CHECK_FALSE(h.has_type(z, 0, 1));
  CHECK(h.has_type(complexify(t->element({{"w1^w2", Rational(1)}})), 1, 1));
}

TEST_CASE("a non-symmetric weight-one choice is rejected") {
  auto t = exterior_algebra(2);
  HodgeStructure h(t);
  h.set_piece(0, 0, {Coords<GaussRational>::unit(1, 0)});
  h.set_piece(1, 0, {Coords<GaussRational>::from_dense({GaussRational(1), GaussRational(0)})});
  h.set_piece(0, 1, {Coords<GaussRational>::from_dense({GaussRational(0), GaussRational(1)})});
  h.set_piece(1, 1, {Coords<GaussRational>::unit(1, 0)});
  CHECK_FALSE(validate_hodge(h).passed());
}

TEST_CASE("trivial structures and the even-dimension obstruction") {
  CHECK(validate_hodge(trivial_hodge(k3_model())).passed());
  CHECK_THROWS(trivial_hodge(exterior_algebra(2)));
  auto v = even_dimension_check(*odd_b3_model());
  CHECK(v.no_hodge);
  REQUIRE(v.witness_degree);
  CHECK(*v.witness_degree == 3);
  CHECK_FALSE(even_dimension_check(*exterior_algebra(4)).no_hodge);
}

TEST_CASE("sub-Hodge structures") {
  auto t = exterior_algebra(4);
  auto h = exterior_hodge(t, square_torus_weight_one(2));
  // span(w1, w2) is the first elliptic factor: sub-Hodge
  auto s = ComplexSubspace::span(1, 4, std::vector<Coords<GaussRational>>{Coords<GaussRational>::unit(4, 0),
                                                                          Coords<GaussRational>::unit(4, 1)});
  CHECK(is_sub_hodge(h, s).is_sub_hodge);
  auto s2 = ComplexSubspace::span(1, 4, std::vector<Coords<GaussRational>>{Coords<GaussRational>::unit(4, 0),
                                                                           Coords<GaussRational>::unit(4, 2)});
  CHECK_FALSE(is_sub_hodge(h, s2).is_sub_hodge);
}
