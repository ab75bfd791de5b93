#include "hodgealg/algebra_map.hpp"

#include "hodgealg/linalg.hpp"

namespace hodgealg {

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, int shift, std::map<int, RationalMatrix> matrices,
                       bool ring_hom)
    : source_(std::move(source)),
      target_(std::move(target)),
      shift_(shift),
      matrices_(std::move(matrices)),
      ring_hom_(ring_hom) {
  for (const auto& [k, m] : matrices_)
    if (m.cols() != source_->dim(k) || m.rows() != target_->dim(k + shift_))
      throw std::invalid_argument("algebra map: matrix shape mismatch in degree " + std::to_string(k));
}

RationalMatrix AlgebraMap::matrix(int k) const {
  auto it = matrices_.find(k);
  if (it != matrices_.end()) return it->second;
  return RationalMatrix(target_->dim(k + shift_), source_->dim(k));
}

Element AlgebraMap::apply(const Element& x) const {
  const int d = x.degree + shift_;
  auto it = matrices_.find(x.degree);
  if (it == matrices_.end() || x.coords.is_zero()) return {d, Coords<Rational>(target_->dim(d)), x.beyond_cap};
  return {d, it->second.apply(x.coords), x.beyond_cap};
}

ComplexElement AlgebraMap::apply(const ComplexElement& x) const {
  const int d = x.degree + shift_;
  auto it = matrices_.find(x.degree);
  if (it == matrices_.end() || x.coords.is_zero())
    return {d, Coords<GaussRational>(target_->dim(d)), x.beyond_cap};
  return {d, complexify(it->second).apply(x.coords), x.beyond_cap};
}

bool AlgebraMap::injective_in_degree(int k) const { return rank(matrix(k)) == source_->dim(k); }

std::optional<std::string> AlgebraMap::ring_hom_violation() const {
  const GradedAlgebra& s = *source_;
  const GradedAlgebra& t = *target_;
  for (int a = 0; a <= s.top_degree(); ++a)
    for (int b = a; a + b <= s.top_degree(); ++b)
      for (std::size_t i = 0; i < s.dim(a); ++i)
        for (std::size_t j = 0; j < s.dim(b); ++j) {
          Element x = s.basis_element(a, i), y = s.basis_element(b, j);
          Element lhs = apply(s.mul(x, y));
          Element rhs = t.mul(apply(x), apply(y));
          if (rhs.beyond_cap) continue;
          if (!(lhs.coords == rhs.coords)) return "(" + s.label(a, i) + ", " + s.label(b, j) + ")";
        }
  return std::nullopt;
}

AlgebraMap ring_hom_from_generators(AlgebraPtr source, AlgebraPtr target,
                                    const std::vector<std::pair<Element, Element>>& generator_images) {
  const GradedAlgebra& s = *source;
  const GradedAlgebra& t = *target;
  for (const auto& [g, img] : generator_images)
    if (g.degree != img.degree || g.degree <= 0)
      throw std::invalid_argument("generator images must be degree-preserving and of positive degree");
  std::map<int, RationalMatrix> mats;
  // Per degree: reduced (source, target) pairs, source parts forming the identity.
  std::map<int, std::vector<std::pair<Element, Element>>> pairs;
  pairs[0] = {{s.unit(), t.unit()}};
  mats.emplace(0, RationalMatrix::identity(1));
  for (int d = 1; d <= s.top_degree(); ++d) {
    const std::size_t ns = s.dim(d), nt = t.dim(d);
    if (ns == 0) continue;
    std::vector<std::pair<Element, Element>> cand;
    for (const auto& [g, img] : generator_images) {
      auto it = pairs.find(d - g.degree);
      if (it == pairs.end()) continue;
      for (const auto& [ps, pt] : it->second) {
        Element cs = s.mul(ps, g);
        Element ct = t.mul(pt, img);
        if (ct.coords.dim() != nt) ct.coords = Coords<Rational>(nt);
        cand.emplace_back(std::move(cs), std::move(ct));
      }
    }
    RationalMatrix aug(cand.size(), ns + nt);
    for (std::size_t r = 0; r < cand.size(); ++r) {
      cand[r].first.coords.for_each_nonzero([&](std::size_t c, const Rational& v) { aug(r, c) = v; });
      cand[r].second.coords.for_each_nonzero([&](std::size_t c, const Rational& v) { aug(r, ns + c) = v; });
    }
    Echelon<Rational> e = rref(aug);
    std::size_t source_rank = 0;
    for (auto p : e.pivots) {
      if (p >= ns)
        throw std::invalid_argument("generator assignment is not well defined in degree " + std::to_string(d));
      ++source_rank;
    }
    if (source_rank != ns)
      throw std::invalid_argument("generators do not generate the source in degree " + std::to_string(d));
    RationalMatrix m(nt, ns);
    std::vector<std::pair<Element, Element>> reduced;
    for (std::size_t r = 0; r < ns; ++r) {
      Element src = s.basis_element(d, r);
      std::vector<Rational> tv(nt);
      for (std::size_t c = 0; c < nt; ++c) {
        tv[c] = e.rows(r, ns + c);
        m(c, r) = tv[c];
      }
      reduced.emplace_back(src, Element{d, Coords<Rational>::from_dense(tv), false});
    }
    pairs[d] = std::move(reduced);
    mats.emplace(d, std::move(m));
  }
  AlgebraMap f(source, target, 0, std::move(mats), true);
  if (auto bad = f.ring_hom_violation()) throw std::invalid_argument("not multiplicative on basis pair " + *bad);
  return f;
}

}  // namespace hodgealg
