#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hodgealg/builders.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/io.hpp"

using namespace hodgealg;

namespace {

bool same_structure(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.degree_dims() != b.degree_dims() || a.formal_dimension() != b.formal_dimension() || a.cap() != b.cap())
    return false;
  for (int k = 0; k <= a.top_degree(); ++k)
    if (a.labels(k) != b.labels(k)) return false;
  for (int d1 = 0; d1 <= a.top_degree(); ++d1)
    for (int d2 = 0; d1 + d2 <= a.top_degree(); ++d2)
      for (std::size_t i = 0; i < a.dim(d1); ++i)
        for (std::size_t j = 0; j < a.dim(d2); ++j)
          if (!(a.basis_product(d1, i, d2, j) == b.basis_product(d1, i, d2, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("scalars round trip as strings") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(parse_gauss("1/2-3i") == GaussRational(make_rational(1, 2), make_rational(-3)));
  CHECK(parse_gauss("i") == GaussRational::i());
  CHECK(to_string(GaussRational(make_rational(1, 2), make_rational(-1, 3))) == "1/2-1/3i");
  CHECK(parse_gauss(to_string(GaussRational(make_rational(-2), make_rational(5, 7)))) ==
        GaussRational(make_rational(-2), make_rational(5, 7)));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("every shipped algebra spec re-parses with identical structure constants") {
  std::size_t algebras = 0;
  for (const auto& [name, spec] : builtin_specs()) {
    if (!spec.is_object() || !spec.contains("kind")) continue;
    ++algebras;
    auto a = algebra_from_json(spec);
    auto again = algebra_from_json(Json::parse(spec.dump()));
    CHECK_MESSAGE(same_structure(*a, *again), name);
    // and through the explicit description
    auto ex = algebra_from_json(algebra_to_explicit_json(*a));
    CHECK_MESSAGE(same_structure(*a, *ex), name);
  }
  CHECK(algebras >= 12);
}

TEST_CASE("elements, subspaces, matrices and Hodge data round trip") {
  auto t = exterior_algebra(4);
  auto x = t->element({{"w1^w2", make_rational(1, 3)}, {"w3^w4", Rational(-2)}});
  CHECK(element_from_json(*t, element_to_json(*t, x)) == x);
  auto s = RationalSubspace::span(2, 6, std::vector<Element>{x});
  CHECK(subspace_from_json(*t, subspace_to_json(*t, s)).basis() == s.basis());
  auto m = RationalMatrix::from_rows({{make_rational(1, 2), Rational(0)}, {Rational(3), make_rational(-1, 5)}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  auto h = exterior_hodge(t, square_torus_weight_one(2));
  auto h2 = hodge_from_json(t, hodge_to_json(h));
  CHECK(h2.hodge_numbers() == h.hodge_numbers());
  for (const auto& [pq, d] : h.hodge_numbers()) {
    (void)d;
    CHECK(h2.piece_space(pq.first, pq.second).contains(h.piece_space(pq.first, pq.second)));
  }
  CHECK(hodge_from_json(t, "square_torus").hodge_numbers() == h.hodge_numbers());
}

TEST_CASE("malformed input is reported") {
  CHECK_THROWS_AS(algebra_from_json(Json{{"kind", "nonsense"}}), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(Json{{"kind", "exterior"}}), std::invalid_argument);
  auto t = exterior_algebra(2);
  CHECK_THROWS(element_from_json(*t, Json{{"coords", {{"w9", "1"}}}}));
  const std::string path = "hodgealg_io_test_bad.json";
  {
    std::ofstream f(path);
    f << "{\n  \"kind\": \"exterior\",\n  \"generators\": \n}";
  }
  try {
    read_json_file(path);
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), std::runtime_error);
}
