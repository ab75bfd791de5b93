#include "hodgealg/fixtures.hpp"

#include "hodgealg/builders.hpp"

namespace hodgealg {

RationalMatrix hyperbolic_plane() { return RationalMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}); }

RationalMatrix e8_cartan() {
  RationalMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  // chain 1-3-4-5-6-7-8, node 2 attached to 4 (1-based)
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    m(static_cast<std::size_t>(e[0] - 1), static_cast<std::size_t>(e[1] - 1)) = -1;
    m(static_cast<std::size_t>(e[1] - 1), static_cast<std::size_t>(e[0] - 1)) = -1;
  }
  return m;
}

RationalMatrix k3_lattice() {
  RationalMatrix u = hyperbolic_plane();
  RationalMatrix e = -e8_cartan();
  return direct_sum<Rational>({u, u, u, e, e});
}

RationalMatrix bl21_lattice() {
  RationalMatrix m(22, 22);
  m(0, 0) = 1;
  for (std::size_t i = 1; i < 22; ++i) m(i, i) = -1;
  return m;
}

AlgebraPtr k3_model() { return surface_algebra(k3_lattice()); }
AlgebraPtr bl21_model() { return surface_algebra(bl21_lattice()); }

AlgebraPtr s3xs3_model() {
  return explicit_algebra(6, {{"1"}, {}, {}, {"a", "b"}, {}, {}, {"ab"}}, {{"a", "b", {{"ab", Rational(1)}}}});
}

AlgebraPtr s1xs3_model() {
  return explicit_algebra(4, {{"1"}, {"x"}, {}, {"y"}, {"xy"}}, {{"x", "y", {{"xy", Rational(1)}}}});
}

AlgebraPtr odd_b3_model() {
  std::vector<ExplicitProduct> p;
  for (int i = 1; i <= 3; ++i) p.push_back({"a" + std::to_string(i), "b" + std::to_string(i), {{"top", Rational(1)}}});
  return explicit_algebra(8, {{"1"}, {}, {}, {"a1", "a2", "a3"}, {}, {"b1", "b2", "b3"}, {}, {}, {"top"}}, p);
}

AlgebraPtr broken_duality_model() {
  return explicit_algebra(4, {{"1"}, {}, {"x", "y"}, {}, {"top"}}, {{"x", "x", {{"top", Rational(1)}}}});
}

}  // namespace hodgealg

namespace hodgealg {

namespace {

Json exterior_spec(int g) { return {{"kind", "exterior"}, {"generators", g}}; }
Json poly_spec(int n, const std::string& v = "h") { return {{"kind", "truncated_poly"}, {"N", n}, {"variable", v}}; }

Json coords(std::initializer_list<std::pair<const char*, const char*>> t) {
  Json j = Json::object();
  for (const auto& [k, v] : t) j[k] = v;
  return j;
}

Json blowup_torus_spec(int n) {
  Json y = {{"kind", "tensor"}, {"factors", {poly_spec(n, "h1"), poly_spec(n, "h2"), poly_spec(n, "h3")}}};
  const Json lam0 = coords({{"w1^w2", "1"}, {"w3^w4", "1"}, {"w5^w6", "1"}});
  // eps = 1/10
  Json res = Json::object();
  res["h1⊗1⊗1"] = lam0;
  res["1⊗h2⊗1"] = coords({{"w1^w2", "11/10"}, {"w3^w4", "11/10"}, {"w5^w6", "1"}});
  res["1⊗1⊗h3"] = coords({{"w1^w2", "1"}, {"w1^w4", "-1/10"}, {"w3^w4", "1"}, {"w3^w5", "1/10"}, {"w5^w6", "1"}});
  return {{"kind", "blowup"}, {"ambient", y}, {"center", exterior_spec(6)}, {"restriction", res},
          {"codim", 3 * n - 3}, {"cap", 2 * n + 2}};
}

Json elem(int degree, const Json& c) { return {{"degree", degree}, {"coords", c}}; }

std::vector<std::pair<std::string, Json>> make_specs() {
  std::vector<std::pair<std::string, Json>> s;
  s.emplace_back("torus2", exterior_spec(2));
  s.emplace_back("torus4", exterior_spec(4));
  s.emplace_back("torus6", exterior_spec(6));
  s.emplace_back("torus_hodge", "square_torus");
  s.emplace_back("torus6_omega", elem(2, coords({{"w1^w2", "1"}, {"w3^w4", "1"}, {"w5^w6", "1"}})));
  s.emplace_back("torus6_classes", Json::array({elem(2, coords({{"w1^w2", "1"}, {"w3^w4", "1"}})),
                                                elem(2, coords({{"w3^w5", "1"}, {"w1^w4", "-1"}}))}));
  s.emplace_back("blowup_torus_n3", blowup_torus_spec(3));
  s.emplace_back("blowup_torus_n3_classes",
                 Json::array({elem(2, coords({{"h1⊗1⊗1", "-10"}, {"1⊗h2⊗1", "10"}})),
                              elem(2, coords({{"h1⊗1⊗1", "-10"}, {"1⊗1⊗h3", "10"}}))}));
  s.emplace_back("blowup_torus_n3_mu1", Json{{"degree", 2}, {"vectors", {coords({{"h1⊗1⊗1", "1"}})}}});
  s.emplace_back("k3", Json{{"kind", "surface"}, {"form", matrix_to_json(k3_lattice())}});
  s.emplace_back("k3_omega", elem(2, coords({{"e1", "1"}, {"e2", "1"}})));
  s.emplace_back("bl21", Json{{"kind", "surface"}, {"form", matrix_to_json(bl21_lattice())}});
  s.emplace_back("s3xs3", algebra_to_explicit_json(*s3xs3_model()));
  s.emplace_back("s1xs3", algebra_to_explicit_json(*s1xs3_model()));
  s.emplace_back("odd_b3", algebra_to_explicit_json(*odd_b3_model()));
  s.emplace_back("broken_duality", algebra_to_explicit_json(*broken_duality_model()));
  s.emplace_back("p2_x_elliptic", Json{{"kind", "tensor"}, {"factors", {poly_spec(2), exterior_spec(2)}}});
  s.emplace_back("p2_x_elliptic_omega", elem(2, coords({{"h⊗1", "1"}, {"1⊗w1^w2", "1"}})));
  s.emplace_back("p1_x_elliptic", Json{{"kind", "tensor"}, {"factors", {poly_spec(1), exterior_spec(2)}}});
  s.emplace_back("p1_x_elliptic_omega", elem(2, coords({{"h⊗1", "1"}, {"1⊗w1^w2", "1"}})));
  s.emplace_back("projbundle_t4_trivial", Json{{"kind", "projective_bundle"}, {"base", exterior_spec(4)}, {"rank", 2}});
  s.emplace_back("projbundle_t4_c2",
                 Json{{"kind", "projective_bundle"}, {"base", exterior_spec(4)}, {"rank", 2},
                      {"chern", {{"2", coords({{"w1^w2^w3^w4", "3"}})}}}});
  return s;
}

}  // namespace

std::vector<std::pair<std::string, Json>> builtin_specs() {
  static const auto specs = make_specs();
  return specs;
}

const Json* find_builtin_spec(const std::string& name) {
  static const auto specs = make_specs();
  for (const auto& [n, j] : specs)
    if (n == name) return &j;
  return nullptr;
}

}  // namespace hodgealg
