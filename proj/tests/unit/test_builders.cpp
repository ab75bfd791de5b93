#include <doctest.h>

#include "helpers.hpp"
#include "hodgealg/algebra_map.hpp"
#include "hodgealg/builders.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/io.hpp"
#include "hodgealg/linalg.hpp"

using namespace hodgealg;

TEST_CASE("projective bundle: Grothendieck relation and Segre inversion") {
  auto base = exterior_algebra(4);
  MixedElement ch;
  ch[2] = base->element({{"w1^w2", Rational(2)}});
  ch[4] = base->element({{"w1^w2^w3^w4", Rational(3)}});
  auto pb = projective_bundle(base, 2, ch);
  const auto& t = *pb.total;
  CHECK(t.degree_dims() == std::vector<std::size_t>{1, 4, 7, 8, 7, 4, 1});
  auto h = pb.h();
  // h^2 + c1 h + c2 = 0
  auto rel = t.power(h, 2) + t.mul(pb.pullback.apply(ch[2]), h) + pb.pullback.apply(ch[4]);
  CHECK(rel.is_zero());
  CHECK(pb.gysin.shift() == -2);
  CHECK(pb.gysin.apply(h) == base->unit());
  auto s = segre_classes(pb, 2);
  // sum_i c_i s_{j-i} = 0 for j = 1, 2
  auto c1 = ch[2], c2 = ch[4];
  CHECK((s[2] + c1).is_zero());
  CHECK((s[4] + base->mul(c1, s[2]) + c2).is_zero());
  // the gysin map is base-linear
  auto x = base->element({{"w1", Rational(1)}});
  CHECK(pb.gysin.apply(t.mul(pb.pullback.apply(x), t.power(h, 2))) == base->mul(x, pb.gysin.apply(t.power(h, 2))));
}

TEST_CASE("blow-up Betti numbers match the decomposition formula") {
  for (const char* name : {"blowup_torus_n3"}) {
    auto a = algebra_from_json(*find_builtin_spec(name));
    REQUIRE(a->truncated());
    CHECK(*a->cap() == 8);
    for (int k = 0; k <= a->top_degree(); ++k)
      CHECK(static_cast<long>(a->dim(k)) == oracle::blowup_betti(3, 3, 6, k));
  }
}

TEST_CASE("blow-up: tau is a ring map and exceptional products") {
  auto d = exterior_algebra(2);
  auto y = tensor_product(truncated_polynomial(2, "a"), truncated_polynomial(2, "b"));
  // point-free toy: blow up P2 x P2 along a curve-like Λ(Q^2) center of codim 3
  auto res = ring_hom_from_generators(y, d,
                                      {{y->element({{"a⊗1", Rational(1)}}), d->element({{"w1^w2", Rational(1)}})},
                                       {y->element({{"1⊗b", Rational(1)}}), d->element({{"w1^w2", Rational(2)}})}});
  CHECK_FALSE(res.ring_hom_violation().has_value());
  // c(N) = c(TY)|T / c(TT): c_1 = 3(a + b)| = 9 w1w2
  MixedElement nc;
  nc[2] = d->element({{"w1^w2", Rational(9)}});
  auto b = blowup(y, d, res, 3, nc);
  const auto& x = *b.total;
  CHECK(validate(x).passed());
  for (int k = 0; k <= x.top_degree(); ++k) {
    long want = 0;
    if (k % 2 == 0)
      for (int i = 0; i <= 2; ++i)
        if (k / 2 - i >= 0 && k / 2 - i <= 2) ++want;
    for (int i = 1; i < 3; ++i) want += oracle::binom(2, k - 2 * i);
    CHECK(static_cast<long>(x.dim(k)) == want);
  }
  auto e = b.exceptional();
  CHECK(e.degree == 2);
  CHECK_FALSE(e.is_zero());
  auto ya = y->element({{"a⊗1", Rational(1)}});
  // tau^*(a) e = j_*(restriction(a))
  CHECK(x.mul(b.tau.apply(ya), e) == b.j_push(0, res.apply(ya)));
}

TEST_CASE("blow-up without normal data reports what is missing") {
  auto t = exterior_algebra(2);
  auto y = truncated_polynomial(3);
  auto res = ring_hom_from_generators(y, t, {{y->element({{"h", Rational(1)}}), t->element({{"w1^w2", Rational(1)}})}});
  auto b = blowup(y, t, res, 2);
  auto e = b.exceptional();
  try {
    b.total->mul(e, e);
    FAIL("e^2 needs c_1(N)");
  } catch (const InsufficientNormalData& x) {
    CHECK(x.chern_index() == 1);
    CHECK(x.degree() == 4);
  }
  auto v = validate(*b.total);
  CHECK_FALSE(v.passed());
  CHECK(v.find("associativity")->detail.find("insufficient normal data") != std::string::npos);
  // products that avoid c(N) still work
  auto h = b.tau.apply(y->element({{"h", Rational(1)}}));
  CHECK(b.total->mul(h, e) == b.j_push(0, t->element({{"w1^w2", Rational(1)}})));
}

TEST_CASE("surface algebra from a lattice") {
  auto s = surface_algebra(hyperbolic_plane());
  auto e1 = s->element({{"e1", Rational(1)}}), e2 = s->element({{"e2", Rational(1)}});
  CHECK(s->trace(s->mul(e1, e2)) == 1);
  CHECK(s->trace(s->mul(e1, e1)) == 0);
  CHECK(pairing_matrix(*s, 2) == hyperbolic_plane());
}
