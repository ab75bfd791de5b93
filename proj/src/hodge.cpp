#include "hodgealg/hodge.hpp"

#include <functional>

#include "hodgealg/linalg.hpp"

namespace hodgealg {

std::string pq_name(const PQ& pq) { return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")"; }

void HodgeStructure::set_piece(int p, int q, std::vector<Coords<GaussRational>> span) {
  if (p < 0 || q < 0) throw std::invalid_argument("Hodge type must have p, q >= 0");
  const int k = p + q;
  if (k > algebra_->top_degree()) throw std::invalid_argument("Hodge piece above the stored degrees");
  for (const auto& v : span)
    if (v.dim() != algebra_->dim(k))
      throw std::invalid_argument("Hodge piece " + pq_name({p, q}) + ": vector of wrong length");
  pieces_[{p, q}] = span_basis(span, algebra_->dim(k));
}

const std::vector<Coords<GaussRational>>& HodgeStructure::piece(int p, int q) const {
  static const std::vector<Coords<GaussRational>> empty;
  auto it = pieces_.find({p, q});
  return it == pieces_.end() ? empty : it->second;
}

ComplexSubspace HodgeStructure::piece_space(int p, int q) const {
  return ComplexSubspace::span(p + q, algebra_->dim(p + q), piece(p, q));
}

std::map<PQ, std::vector<Coords<GaussRational>>> HodgeStructure::pieces(int degree) const {
  std::map<PQ, std::vector<Coords<GaussRational>>> out;
  for (const auto& [pq, v] : pieces_)
    if (pq.first + pq.second == degree) out.emplace(pq, v);
  return out;
}

std::vector<int> HodgeStructure::degrees() const {
  std::vector<int> out;
  for (int k = 0; k <= algebra_->top_degree(); ++k) out.push_back(k);
  return out;
}

std::map<PQ, std::size_t> HodgeStructure::hodge_numbers() const {
  std::map<PQ, std::size_t> out;
  for (const auto& [pq, v] : pieces_) out[pq] = v.size();
  return out;
}

bool HodgeStructure::has_type(const ComplexElement& x, int p, int q) const {
  if (x.degree != p + q) return x.is_zero();
  return piece_space(p, q).contains(x.coords);
}

HodgeStructure trivial_hodge(const AlgebraPtr& a) {
  HodgeStructure h(a);
  for (int k = 0; k <= a->top_degree(); ++k) {
    if (a->dim(k) == 0) continue;
    if (k % 2) throw std::invalid_argument("trivial Hodge structure: degree " + std::to_string(k) + " is nonzero");
    std::vector<Coords<GaussRational>> v;
    for (std::size_t i = 0; i < a->dim(k); ++i) v.push_back(Coords<GaussRational>::unit(a->dim(k), i));
    h.set_piece(k / 2, k / 2, std::move(v));
  }
  return h;
}

WeightOneData square_torus_weight_one(int n) {
  WeightOneData w;
  for (int j = 0; j < n; ++j) {
    std::vector<Coords<GaussRational>::Entry> e;
    e.emplace_back(2 * j, GaussRational(1));
    e.emplace_back(2 * j + 1, GaussRational::i());
    w.h10.push_back(Coords<GaussRational>::from_entries(static_cast<std::size_t>(2 * n), std::move(e)));
  }
  return w;
}

HodgeStructure exterior_hodge(const AlgebraPtr& a, const WeightOneData& w1) {
  if (a->kind() != "exterior") throw std::invalid_argument("exterior_hodge needs an exterior algebra");
  const int g = a->formal_dimension();
  const std::size_t n = w1.h10.size();
  if (2 * n != static_cast<std::size_t>(g)) throw std::invalid_argument("weight-one data must have half dimension");
  std::vector<ComplexElement> f, fbar;
  std::vector<Coords<GaussRational>> both;
  for (const auto& v : w1.h10) {
    if (v.dim() != static_cast<std::size_t>(g)) throw std::invalid_argument("weight-one vector of wrong length");
    f.push_back({1, v, false});
    fbar.push_back({1, v.conj(), false});
    both.push_back(v);
    both.push_back(v.conj());
  }
  if (rank(GaussMatrix::from_coord_rows(both, static_cast<std::size_t>(g))) != static_cast<std::size_t>(g))
    throw std::invalid_argument("invalid weight-one data: h10 meets its conjugate");
  // Wedge products of all p-subsets of f with q-subsets of fbar.
  auto subsets = [&](const std::vector<ComplexElement>& gens, int p) {
    std::vector<ComplexElement> out;
    std::function<void(std::size_t, int, ComplexElement)> rec = [&](std::size_t start, int left, ComplexElement acc) {
      if (left == 0) {
        out.push_back(acc);
        return;
      }
      for (std::size_t i = start; i < gens.size(); ++i) rec(i + 1, left - 1, a->mul(acc, gens[i]));
    };
    rec(0, p, complexify(a->unit()));
    return out;
  };
  HodgeStructure h(a);
  const int half = static_cast<int>(n);
  for (int p = 0; p <= half; ++p) {
    auto fp = subsets(f, p);
    for (int q = 0; q <= half; ++q) {
      auto fq = subsets(fbar, q);
      std::vector<Coords<GaussRational>> span;
      for (const auto& x : fp)
        for (const auto& y : fq) span.push_back(a->mul(x, y).coords);
      h.set_piece(p, q, std::move(span));
    }
  }
  return h;
}

bool HodgeValidation::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

HodgeValidation validate_hodge(const HodgeStructure& h) {
  const GradedAlgebra& a = *h.algebra();
  HodgeValidation out;
  HodgeCheck complete{"completeness", true, false, ""};
  for (int k = 0; k <= a.top_degree() && complete.passed; ++k) {
    std::vector<Coords<GaussRational>> all;
    std::size_t sum = 0;
    for (const auto& [pq, v] : h.pieces(k)) {
      sum += v.size();
      all.insert(all.end(), v.begin(), v.end());
    }
    const std::size_t r = all.empty() ? 0 : rank(GaussMatrix::from_coord_rows(all, a.dim(k)));
    if (r != a.dim(k) || sum != a.dim(k)) {
      complete.passed = false;
      complete.detail = "degree " + std::to_string(k) + ": pieces have total dimension " + std::to_string(sum) +
                        " and span " + std::to_string(r) + " of " + std::to_string(a.dim(k));
    }
  }
  if (complete.passed) complete.detail = "direct sum in every degree";
  out.checks.push_back(complete);

  HodgeCheck sym{"hodge_symmetry", true, false, ""};
  for (int k = 0; k <= a.top_degree() && sym.passed; ++k)
    for (int p = 0; p <= k && sym.passed; ++p) {
      auto s = h.piece_space(p, k - p);
      auto t = h.piece_space(k - p, p);
      if (!(s.conj() == t)) {
        sym.passed = false;
        sym.detail = "conj " + pq_name({p, k - p}) + " != " + pq_name({k - p, p});
        for (const auto& v : s.basis())
          if (!t.contains(v.conj())) {
            sym.detail += "; witness vector of " + pq_name({p, k - p}) + " whose conjugate is outside " +
                          pq_name({k - p, p}) + ": " + a.format(ComplexElement{k, v, false});
            break;
          }
      }
    }
  if (sym.passed) sym.detail = "conj H^{p,q} = H^{q,p} for all stored types";
  out.checks.push_back(sym);

  HodgeCheck compat{"product_compatibility", true, false, ""};
  std::map<PQ, Echelon<GaussRational>> ech;
  auto echelon_of = [&](const PQ& pq) -> const Echelon<GaussRational>& {
    auto it = ech.find(pq);
    if (it != ech.end()) return it->second;
    const auto& v = h.piece(pq.first, pq.second);
    const std::size_t d = a.dim(pq.first + pq.second);
    Echelon<GaussRational> e = v.empty() ? Echelon<GaussRational>{GaussMatrix(0, d), {}}
                                         : rref(GaussMatrix::from_coord_rows(v, d));
    return ech.emplace(pq, std::move(e)).first->second;
  };
  std::vector<std::pair<PQ, std::vector<Coords<GaussRational>>>> all;
  for (int k = 0; k <= a.top_degree(); ++k)
    for (auto& kv : h.pieces(k)) all.emplace_back(kv.first, kv.second);
  std::size_t checked = 0;
  for (std::size_t x = 0; x < all.size() && compat.passed; ++x)
    for (std::size_t y = x; y < all.size() && compat.passed; ++y) {
      const auto& [pq1, v1] = all[x];
      const auto& [pq2, v2] = all[y];
      const int d = pq1.first + pq1.second + pq2.first + pq2.second;
      if (d > a.top_degree()) continue;
      const PQ target{pq1.first + pq2.first, pq1.second + pq2.second};
      const auto& e = echelon_of(target);
      for (const auto& u : v1)
        for (const auto& w : v2) {
          ComplexElement prod = a.mul(ComplexElement{pq1.first + pq1.second, u, false},
                                      ComplexElement{pq2.first + pq2.second, w, false});
          ++checked;
          if (!in_row_space(e, prod.coords)) {
            compat.passed = false;
            compat.detail = "product of " + pq_name(pq1) + " and " + pq_name(pq2) + " leaves " + pq_name(target) +
                            "; witness pair " + a.format(ComplexElement{pq1.first + pq1.second, u, false}) + " , " +
                            a.format(ComplexElement{pq2.first + pq2.second, w, false});
            break;
          }
        }
    }
  if (compat.passed) compat.detail = std::to_string(checked) + " spanning products checked";
  out.checks.push_back(compat);
  return out;
}

SubHodgeResult is_sub_hodge(const HodgeStructure& h, const ComplexSubspace& s) {
  SubHodgeResult out;
  std::size_t sum = 0;
  const int k = s.degree();
  for (int p = 0; p <= k; ++p) {
    auto piece = h.piece_space(p, k - p);
    if (piece.dim() == 0) continue;
    const std::size_t d = s.intersect(piece).dim();
    out.intersection_dims[{p, k - p}] = d;
    sum += d;
  }
  out.is_sub_hodge = sum == s.dim();
  return out;
}

EvenDimensionVerdict even_dimension_check(const GradedAlgebra& a) {
  EvenDimensionVerdict v;
  if (a.formal_dimension() % 2) {
    v.no_hodge = true;
    v.detail = "formal dimension " + std::to_string(a.formal_dimension()) + " is odd";
    return v;
  }
  for (int k = 1; k <= a.top_degree(); k += 2)
    if (a.dim(k) % 2) {
      v.no_hodge = true;
      v.witness_degree = k;
      v.detail = "b_" + std::to_string(k) + " = " + std::to_string(a.dim(k)) + " is odd";
      return v;
    }
  v.detail = "all odd Betti numbers even";
  return v;
}

}  // namespace hodgealg
