#include <doctest.h>

#include "helpers.hpp"
#include "hodgealg/builders.hpp"
#include "hodgealg/exterior.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/linalg.hpp"

using namespace hodgealg;

namespace {

// label "w1^w3" -> bitmask
std::uint32_t mask_of(const std::string& label) {
  std::uint32_t m = 0;
  std::size_t pos = 0;
  while ((pos = label.find('w', pos)) != std::string::npos) {
    std::size_t end = pos + 1;
    while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end]))) ++end;
    m |= 1u << (std::stoi(label.substr(pos + 1, end - pos - 1)) - 1);
    pos = end;
  }
  return m;
}

}  // namespace

TEST_CASE("exterior products agree with brute-force permutation signs") {
  auto a = exterior_algebra(5);
  for (int d1 = 0; d1 <= 5; ++d1)
    for (int d2 = 0; d1 + d2 <= 5; ++d2)
      for (std::size_t i = 0; i < a->dim(d1); ++i)
        for (std::size_t j = 0; j < a->dim(d2); ++j) {
          auto p = a->mul(a->basis_element(d1, i), a->basis_element(d2, j));
          std::uint32_t mi = mask_of(a->label(d1, i)), mj = mask_of(a->label(d2, j));
          int s = oracle::wedge_sign(mi, mj);
          if (s == 0) {
            CHECK(p.is_zero());
            continue;
          }
          REQUIRE(p.coords.nnz() == 1);
          std::size_t idx = 0;
          Rational c;
          p.coords.for_each_nonzero([&](std::size_t k, const Rational& v) {
            idx = k;
            c = v;
          });
          CHECK(mask_of(a->label(d1 + d2, idx)) == (mi | mj));
          CHECK(c == s);
        }
}

TEST_CASE("sparse exterior agrees with the oracle") {
  Rng rng(2);
  for (int t = 0; t < 2000; ++t) {
    std::uint32_t x = static_cast<std::uint32_t>(rng.below(1u << 12)), y = static_cast<std::uint32_t>(rng.below(1u << 12));
    CHECK(SparseExterior::wedge_sign(x, y) == oracle::wedge_sign(x, y));
  }
  auto m = masks_of_weight(6, 3);
  CHECK(m.size() == 20);
  CHECK(std::is_sorted(m.begin(), m.end()));
  auto top = SparseExterior::monomial(4, 0b0011).wedge(SparseExterior::monomial(4, 0b1100));
  CHECK(top.coefficient(0b1111) == 1);
  CHECK(SparseExterior::monomial(4, 0b1100).top_pairing(SparseExterior::monomial(4, 0b0011)) == 1);
  CHECK(SparseExterior::monomial(4, 0b0101).top_pairing(SparseExterior::monomial(4, 0b1010)) == -1);
}

TEST_CASE("truncated polynomial and tensor Koszul signs") {
  auto p = truncated_polynomial(3);
  auto h = p->element({{"h", Rational(1)}});
  CHECK(p->trace(p->power(h, 3)) == 1);
  CHECK(p->power(h, 4).is_zero());
  auto e = exterior_algebra(2);
  auto t = tensor_product(e, e);
  auto x = t->element({{"w1⊗1", Rational(1)}});
  auto y = t->element({{"1⊗w1", Rational(1)}});
  CHECK(t->mul(x, y) == t->mul(y, x).scaled(Rational(-1)));
  CHECK(t->mul(x, x).is_zero());
  CHECK(t->degree_dims() == std::vector<std::size_t>{1, 4, 6, 4, 1});
}

TEST_CASE("validate: shipped models and the broken fixture") {
  for (auto a : {exterior_algebra(4), truncated_polynomial(3), k3_model(), bl21_model(), s3xs3_model(), s1xs3_model(),
                 odd_b3_model()}) {
    auto r = validate(*a);
    CHECK_MESSAGE(r.passed(), a->kind());
  }
  auto r = validate(*broken_duality_model());
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("poincare_duality"));
  CHECK_FALSE(r.find("poincare_duality")->passed);
}

TEST_CASE("pairing matrix is perfect and graded symmetric") {
  auto a = exterior_algebra(4);
  for (int k = 0; k <= 4; ++k) {
    auto m = pairing_matrix(*a, k);
    CHECK(rank(m) == a->dim(k));
    auto mt = pairing_matrix(*a, 4 - k);
    CHECK(mt == (k % 2 ? -m.transpose() : m.transpose()));
  }
}

TEST_CASE("mult_image_rank and multiplication_matrix") {
  auto a = exterior_algebra(4);
  auto w = a->element({{"w1^w2", Rational(1)}, {"w3^w4", Rational(1)}});
  CHECK(mult_image_rank(*a, {w}, 1) == 4);
  CHECK(mult_image_rank(*a, {w}, 2) == 1);
  auto m = multiplication_matrix(*a, w, 0);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 1);
}

TEST_CASE("truncated mode flags products above the cap") {
  auto a = explicit_algebra(4, {{"1"}, {"x"}, {"y"}}, {{"x", "x", {{"y", Rational(1)}}}}, 2);
  CHECK(a->truncated());
  auto x = a->element({{"x", Rational(1)}});
  auto y = a->element({{"y", Rational(1)}});
  auto xy = a->mul(x, y);
  CHECK(xy.is_zero());
  CHECK(xy.beyond_cap);
  CHECK_THROWS_AS(multiplication_matrix(*a, y, 1), std::domain_error);
  CHECK(validate(*a).truncated);
}
