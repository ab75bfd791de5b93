#include "hodgealg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hodgealg/builders.hpp"

namespace hodgealg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("algebra spec: " + what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational scalar_q(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return make_rational(v.get<long>());
  bad("scalar must be a string \"p/q\" or an integer");
}

GaussRational scalar_g(const Json& v) {
  if (v.is_string()) return parse_gauss(v.get<std::string>());
  if (v.is_number_integer()) return GaussRational(make_rational(v.get<long>()));
  bad("scalar must be a string \"a+bi\" or an integer");
}

std::vector<std::pair<std::string, Rational>> terms_of(const Json& coords) {
  if (!coords.is_object()) bad("coords must be an object keyed by basis label");
  std::vector<std::pair<std::string, Rational>> t;
  for (const auto& [k, v] : coords.items()) t.emplace_back(k, scalar_q(v));
  return t;
}

// Coordinates of {label: value} in degree k; labels must all live there.
template <class F, class Parse>
Coords<F> coords_in(const GradedAlgebra& a, int k, const Json& coords, Parse parse) {
  if (!coords.is_object()) bad("coords must be an object keyed by basis label");
  std::vector<typename Coords<F>::Entry> e;
  for (const auto& [lab, v] : coords.items()) {
    auto loc = a.find_label(lab);
    if (!loc) bad("unknown basis label '" + lab + "'");
    if (loc->first != k) bad("label '" + lab + "' is not in degree " + std::to_string(k));
    e.emplace_back(static_cast<std::uint32_t>(loc->second), parse(v));
  }
  return Coords<F>::from_entries(a.dim(k), std::move(e));
}

int degree_of(const GradedAlgebra& a, const Json& j) {
  if (j.contains("degree")) return j.at("degree").get<int>();
  const Json& c = need(j, "coords");
  if (c.empty()) bad("element with empty coords needs an explicit degree");
  auto loc = a.find_label(c.begin().key());
  if (!loc) bad("unknown basis label '" + c.begin().key() + "'");
  return loc->first;
}

template <class F>
Json coords_json(const GradedAlgebra& a, const HomogeneousElement<F>& x) {
  Json c = Json::object();
  x.coords.for_each_nonzero([&](std::size_t i, const F& v) { c[a.label(x.degree, i)] = to_string(v); });
  return c;
}

MixedElement mixed_from(const GradedAlgebra& a, const Json& j) {
  // keyed by Chern index i; class lives in degree 2i
  MixedElement out;
  for (const auto& [k, v] : j.items()) {
    int i = std::stoi(k);
    out[2 * i] = a.element(2 * i, terms_of(v));
  }
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const GaussRational& z) { return to_string(z); }
Json to_json(const Inertia& in) { return {{"pos", in.pos}, {"neg", in.neg}, {"null", in.null}}; }

Json element_to_json(const GradedAlgebra& a, const Element& x) {
  return {{"degree", x.degree}, {"coords", coords_json(a, x)}};
}

Json element_to_json(const GradedAlgebra& a, const ComplexElement& x) {
  return {{"degree", x.degree}, {"coords", coords_json(a, x)}};
}

Element element_from_json(const GradedAlgebra& a, const Json& j) {
  int k = degree_of(a, j);
  if (k < 0 || k > a.top_degree()) bad("element degree out of range");
  return {k, coords_in<Rational>(a, k, need(j, "coords"), scalar_q), false};
}

ComplexElement complex_element_from_json(const GradedAlgebra& a, const Json& j) {
  int k = degree_of(a, j);
  if (k < 0 || k > a.top_degree()) bad("element degree out of range");
  return {k, coords_in<GaussRational>(a, k, need(j, "coords"), scalar_g), false};
}

Json subspace_to_json(const GradedAlgebra& a, const RationalSubspace& s) {
  Json vs = Json::array();
  for (const auto& e : s.basis_elements()) vs.push_back(coords_json(a, e));
  return {{"degree", s.degree()}, {"vectors", vs}};
}

RationalSubspace subspace_from_json(const GradedAlgebra& a, const Json& j) {
  const int k = need(j, "degree").get<int>();
  if (k < 0 || k > a.top_degree()) bad("subspace degree out of range");
  std::vector<Coords<Rational>> vs;
  for (const auto& v : need(j, "vectors")) vs.push_back(coords_in<Rational>(a, k, v, scalar_q));
  return RationalSubspace::span(k, a.dim(k), vs);
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(scalar_q(v));
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

ProjectiveBundle projective_bundle_from_json(const Json& j) {
  if (need(j, "kind").get<std::string>() != "projective_bundle") bad("expected kind projective_bundle");
  AlgebraPtr base = algebra_from_json(need(j, "base"));
  MixedElement chern = j.contains("chern") ? mixed_from(*base, j.at("chern")) : MixedElement{};
  return projective_bundle(base, need(j, "rank").get<int>(), chern, j.value("variable", std::string("h")));
}

AlgebraPtr algebra_from_json(const Json& j) {
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "exterior") {
    return exterior_algebra(need(j, "generators").get<int>(), j.value("variable", std::string("w")));
  }
  if (kind == "truncated_poly") {
    return truncated_polynomial(need(j, "N").get<int>(), j.value("variable", std::string("h")));
  }
  if (kind == "tensor") {
    const Json& f = need(j, "factors");
    if (!f.is_array() || f.empty()) bad("tensor needs a nonempty factor list");
    AlgebraPtr out = algebra_from_json(f.at(0));
    for (std::size_t i = 1; i < f.size(); ++i) out = tensor_product(out, algebra_from_json(f.at(i)));
    return out;
  }
  if (kind == "projective_bundle") return projective_bundle_from_json(j).total;
  if (kind == "blowup") {
    AlgebraPtr amb = algebra_from_json(need(j, "ambient"));
    AlgebraPtr ctr = algebra_from_json(need(j, "center"));
    std::vector<std::pair<Element, Element>> gens;
    for (const auto& [lab, img] : need(j, "restriction").items()) {
      auto loc = amb->find_label(lab);
      if (!loc) bad("unknown ambient generator '" + lab + "'");
      gens.emplace_back(amb->basis_element(loc->first, loc->second), ctr->element(loc->first, terms_of(img)));
    }
    auto res = ring_hom_from_generators(amb, ctr, gens);
    std::optional<MixedElement> nc;
    if (j.contains("normal_chern")) nc = mixed_from(*ctr, j.at("normal_chern"));
    std::optional<int> cap;
    if (j.contains("cap")) cap = j.at("cap").get<int>();
    return blowup(amb, ctr, res, need(j, "codim").get<int>(), nc, cap, j.value("variable", std::string("h"))).total;
  }
  if (kind == "explicit") {
    std::vector<std::vector<std::string>> labels;
    for (const auto& deg : need(j, "basis")) labels.push_back(deg.get<std::vector<std::string>>());
    std::vector<ExplicitProduct> prods;
    if (j.contains("products"))
      for (const auto& p : j.at("products"))
        prods.push_back({need(p, "left").get<std::string>(), need(p, "right").get<std::string>(),
                         p.contains("value") ? terms_of(p.at("value")) : std::vector<std::pair<std::string, Rational>>{}});
    std::optional<int> cap;
    if (j.contains("cap")) cap = j.at("cap").get<int>();
    return explicit_algebra(need(j, "formal_dimension").get<int>(), std::move(labels), prods, cap);
  }
  if (kind == "surface") {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return surface_algebra(matrix_from_json(need(j, "form")), labels);
  }
  bad("unknown kind '" + kind + "'");
}

Json algebra_to_explicit_json(const GradedAlgebra& a) {
  Json j;
  j["kind"] = "explicit";
  j["formal_dimension"] = a.formal_dimension();
  if (a.cap()) j["cap"] = *a.cap();
  Json basis = Json::array();
  for (int k = 0; k <= a.top_degree(); ++k) basis.push_back(a.labels(k));
  j["basis"] = basis;
  Json prods = Json::array();
  for (int d1 = 1; d1 <= a.top_degree(); ++d1)
    for (std::size_t i = 0; i < a.dim(d1); ++i)
      for (int d2 = d1; d1 + d2 <= a.top_degree(); ++d2)
        for (std::size_t k = (d2 == d1 ? i : 0); k < a.dim(d2); ++k) {
          Element p{d1 + d2, a.basis_product(d1, i, d2, k), false};
          if (p.is_zero()) continue;
          prods.push_back({{"left", a.label(d1, i)}, {"right", a.label(d2, k)}, {"value", coords_json(a, p)}});
        }
  j["products"] = prods;
  return j;
}

HodgeStructure hodge_from_json(const AlgebraPtr& a, const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "trivial") return trivial_hodge(a);
    if (j.get<std::string>() == "square_torus") return exterior_hodge(a, square_torus_weight_one(a->formal_dimension() / 2));
    bad("unknown Hodge shorthand '" + j.get<std::string>() + "'");
  }
  if (j.contains("exterior_weight_one")) {
    WeightOneData w;
    for (const auto& v : j.at("exterior_weight_one")) {
      std::vector<GaussRational> row;
      for (const auto& x : v) row.push_back(scalar_g(x));
      w.h10.push_back(Coords<GaussRational>::from_dense(std::move(row)));
    }
    return exterior_hodge(a, w);
  }
  HodgeStructure h(a);
  for (const auto& [deg, pcs] : need(j, "degrees").items()) {
    const int k = std::stoi(deg);
    for (const auto& [name, vecs] : pcs.items()) {
      int p = 0, q = 0;
      if (std::sscanf(name.c_str(), "(%d,%d)", &p, &q) != 2 || p + q != k) bad("bad Hodge type '" + name + "'");
      std::vector<Coords<GaussRational>> span;
      for (const auto& v : vecs) span.push_back(coords_in<GaussRational>(*a, k, v, scalar_g));
      h.set_piece(p, q, std::move(span));
    }
  }
  return h;
}

Json hodge_to_json(const HodgeStructure& h) {
  const GradedAlgebra& a = *h.algebra();
  Json degs = Json::object();
  for (int k : h.degrees()) {
    Json pcs = Json::object();
    for (const auto& [pq, span] : h.pieces(k)) {
      Json vs = Json::array();
      for (const auto& v : span) vs.push_back(coords_json(a, ComplexElement{k, v, false}));
      pcs[pq_name(pq)] = vs;
    }
    if (!pcs.empty()) degs[std::to_string(k)] = pcs;
  }
  return {{"degrees", degs}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace hodgealg
