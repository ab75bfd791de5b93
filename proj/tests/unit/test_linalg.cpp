#include <doctest.h>

#include "helpers.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/linalg.hpp"

using namespace hodgealg;

TEST_CASE("oracle charpoly on a small known matrix") {
  // [[2,1],[1,2]]: x^2 - 4x + 3
  oracle::Mat m{{2, 1}, {1, 2}};
  auto p = oracle::charpoly(m);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 3);
  CHECK(p[1] == -4);
  CHECK(p[2] == 1);
  auto in = oracle::inertia({{0, 1}, {1, 0}});
  CHECK(in.pos == 1);
  CHECK(in.neg == 1);
}

TEST_CASE("rank and kernel against textbook elimination") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(7);
    auto m = testutil::random_matrix(rng, r, c, 2, 1);
    CHECK(rank(m) == oracle::rank(testutil::to_oracle(m)));
    auto ker = kernel(m);
    CHECK(ker.size() == c - rank(m));
    for (const auto& v : ker) CHECK(m.apply(v).is_zero());
  }
}

TEST_CASE("solve and inverse") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng.below(5);
    auto m = testutil::random_matrix(rng, n, n);
    auto inv = inverse(m);
    const bool singular = oracle::det(testutil::to_oracle(m)) == 0;
    CHECK(inv.has_value() == !singular);
    if (inv) CHECK(m * *inv == RationalMatrix::identity(n));
    std::vector<Rational> b(n);
    for (auto& x : b) x = make_rational(rng.range(-4, 4));
    auto x = solve(m, b);
    if (!singular) {
      REQUIRE(x);
      auto y = m.apply(Coords<Rational>::from_dense(*x)).to_dense();
      CHECK(y == b);
    }
  }
  auto inconsistent = RationalMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
  CHECK_FALSE(solve(inconsistent, {Rational(1), Rational(3)}).has_value());
}

TEST_CASE("signature matches the Descartes oracle") {
  Rng rng(3);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + rng.below(7);
    auto s = testutil::random_symmetric(rng, n, 3, t % 3);
    auto got = signature(s);
    auto want = oracle::inertia(testutil::to_oracle(s));
    CHECK(got.pos == want.pos);
    CHECK(got.neg == want.neg);
    CHECK(got.null == want.null);
    // sparse route agrees
    CHECK(signature(SparseMatrix<Rational>::from_dense(s)) == got);
    CHECK(rank(SparseMatrix<Rational>::from_dense(s)) == rank(s));
  }
  CHECK_THROWS_AS(signature(RationalMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}})),
                  std::invalid_argument);
}

TEST_CASE("hermitian inertia matches the realified oracle") {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng.below(4);
    GaussMatrix h(n, n);
    oracle::Mat re(n, std::vector<oracle::Q>(n)), im = re;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational a = make_rational(rng.range(-3, 3)), b = i == j ? Rational(0) : make_rational(rng.range(-3, 3));
        h(i, j) = GaussRational(a, b);
        h(j, i) = GaussRational(a, -b);
        re[i][j] = re[j][i] = a;
        im[i][j] = b;
        im[j][i] = -b;
      }
    auto got = hermitian_inertia(h);
    auto want = oracle::hermitian_inertia(re, im);
    CHECK(got.pos == want.pos);
    CHECK(got.neg == want.neg);
    CHECK(got.null == want.null);
  }
}

TEST_CASE("lattice fixtures") {
  auto e8 = e8_cartan();
  CHECK(oracle::det(testutil::to_oracle(e8)) == 1);
  CHECK(signature(e8).positive_definite());
  auto k3 = k3_lattice();
  CHECK(k3.rows() == 22);
  auto in = signature(k3);
  CHECK(in.pos == 3);
  CHECK(in.neg == 19);
  CHECK(abs(oracle::det(testutil::to_oracle(k3))) == 1);
  auto bl = signature(bl21_lattice());
  CHECK(bl.signature() == -20);
}

TEST_CASE("span helpers") {
  auto u = [](std::size_t i) { return Coords<Rational>::unit(4, i); };
  auto b = intersect_spans<Rational>({u(0), u(1), u(2)}, {u(1) + u(3), u(2), u(3)}, 4);
  CHECK(b.size() == 2);
  CHECK(span_basis<Rational>({u(0), u(0).scaled(Rational(3)), u(1)}, 4).size() == 2);
}
