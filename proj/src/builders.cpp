#include "hodgealg/builders.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <unordered_map>

#include "hodgealg/linalg.hpp"

namespace hodgealg {

namespace {

// ---------------------------------------------------------------- exterior

class ExteriorRule final : public ProductRule {
 public:
  explicit ExteriorRule(int n) : n_(n), masks_(static_cast<std::size_t>(n) + 1) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) masks_[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    // Lexicographic order on ascending index lists.
    for (auto& v : masks_) {
      std::sort(v.begin(), v.end(), [](std::uint32_t a, std::uint32_t b) {
        while (a && b) {
          int la = std::countr_zero(a), lb = std::countr_zero(b);
          if (la != lb) return la < lb;
          a &= a - 1;
          b &= b - 1;
        }
        return a == 0 && b != 0;
      });
      for (std::size_t i = 0; i < v.size(); ++i) index_[v[i]] = i;
    }
  }

  std::uint32_t mask(int d, std::size_t i) const { return masks_[static_cast<std::size_t>(d)][i]; }

  Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const override {
    const std::size_t d = static_cast<std::size_t>(d1 + d2);
    const std::size_t dim = d < masks_.size() ? masks_[d].size() : 0;
    std::uint32_t a = mask(d1, i), b = mask(d2, j);
    if (a & b) return Coords<Rational>(dim);
    // Move each generator of b past the larger generators of a.
    int swaps = 0;
    for (std::uint32_t bb = b; bb; bb &= bb - 1) {
      int k = std::countr_zero(bb);
      swaps += std::popcount(a >> (k + 1));
    }
    return Coords<Rational>::unit(dim, index_.at(a | b), Rational(swaps % 2 ? -1 : 1));
  }

  std::string label(std::uint32_t m, const std::string& var) const {
    if (m == 0) return "1";
    std::string s;
    for (; m; m &= m - 1) {
      if (!s.empty()) s += "^";
      s += var + std::to_string(std::countr_zero(m) + 1);
    }
    return s;
  }

  const std::vector<std::vector<std::uint32_t>>& masks() const { return masks_; }

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> masks_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

// ---------------------------------------------------------------- tensor

class TensorRule final : public ProductRule {
 public:
  TensorRule(AlgebraPtr a, AlgebraPtr b) : a_(std::move(a)), b_(std::move(b)) {
    const int top = a_->formal_dimension() + b_->formal_dimension();
    offsets_.resize(static_cast<std::size_t>(top) + 1);
    dims_.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
      std::size_t off = 0;
      for (int da = 0; da <= k; ++da) {
        offsets_[k].push_back(off);
        off += a_->dim(da) * b_->dim(k - da);
      }
      dims_[k] = off;
    }
  }

  std::size_t dim(int k) const { return dims_[static_cast<std::size_t>(k)]; }

  std::size_t index(int k, int da, std::size_t ia, std::size_t ib) const {
    return offsets_[k][da] + ia * b_->dim(k - da) + ib;
  }

  // Inverse of index(): (da, ia, ib).
  std::tuple<int, std::size_t, std::size_t> split(int k, std::size_t idx) const {
    int da = 0;
    while (da + 1 <= k && offsets_[k][da + 1] <= idx) ++da;
    // Skip empty blocks that share the same offset.
    while (a_->dim(da) * b_->dim(k - da) == 0) ++da;
    std::size_t rel = idx - offsets_[k][da];
    std::size_t nb = b_->dim(k - da);
    return {da, rel / nb, rel % nb};
  }

  Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const override {
    auto [a1, ia1, ib1] = split(d1, i);
    auto [a2, ia2, ib2] = split(d2, j);
    const int b1 = d1 - a1;
    const int d = d1 + d2;
    Coords<Rational> pa = a_->basis_product(a1, ia1, a2, ia2);
    Coords<Rational> pb = b_->basis_product(b1, ib1, d2 - a2, ib2);
    if (pa.is_zero() || pb.is_zero()) return Coords<Rational>(dim(d));
    const Rational sign((b1 * a2) % 2 ? -1 : 1);
    std::vector<Coords<Rational>::Entry> e;
    pa.for_each_nonzero([&](std::size_t x, const Rational& u) {
      pb.for_each_nonzero([&](std::size_t y, const Rational& v) {
        e.emplace_back(static_cast<std::uint32_t>(index(d, a1 + a2, x, y)), sign * u * v);
      });
    });
    return Coords<Rational>::from_entries(dim(d), std::move(e));
  }

 private:
  AlgebraPtr a_, b_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<std::size_t> dims_;
};

// ---------------------------------------------------------------- bundles

// h^p·z for p >= r rewritten with h^r = -Σ c_i h^{r-i}; returns p -> base class.
std::map<int, Element> reduce_power(const GradedAlgebra& base, int r, const std::vector<std::optional<Element>>& chern,
                                    int p, const Element& z, int product_degree) {
  std::map<int, Element> terms;
  terms.emplace(p, z);
  while (!terms.empty() && terms.rbegin()->first >= r) {
    auto it = std::prev(terms.end());
    const int q = it->first;
    Element w = it->second;
    terms.erase(it);
    if (w.is_zero()) continue;
    for (int i = 1; i <= r; ++i) {
      const int deg = w.degree + 2 * i;
      if (deg > base.formal_dimension()) break;
      const auto& ci = chern[static_cast<std::size_t>(i)];
      if (!ci) throw InsufficientNormalData(product_degree, i);
      if (ci->is_zero()) continue;
      Element t = base.mul(*ci, w).scaled(Rational(-1));
      if (t.is_zero()) continue;
      auto [pos, inserted] = terms.try_emplace(q - i, t);
      if (!inserted) pos->second += t;
    }
  }
  return terms;
}

class BundleRule final : public ProductRule {
 public:
  BundleRule(AlgebraPtr base, int r, std::vector<std::optional<Element>> chern)
      : base_(std::move(base)), r_(r), chern_(std::move(chern)) {
    const int top = base_->formal_dimension() + 2 * (r_ - 1);
    offsets_.resize(static_cast<std::size_t>(top) + 1);
    dims_.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
      std::size_t off = 0;
      for (int i = 0; i < r_; ++i) {
        offsets_[k].push_back(off);
        off += base_->dim(k - 2 * i);
      }
      dims_[k] = off;
    }
  }

  std::size_t dim(int k) const { return k < 0 || k >= static_cast<int>(dims_.size()) ? 0 : dims_[k]; }
  std::size_t index(int k, int i, std::size_t base_index) const { return offsets_[k][i] + base_index; }

  std::pair<int, std::size_t> split(int k, std::size_t idx) const {
    int i = r_ - 1;
    while (i > 0 && (offsets_[k][i] > idx || base_->dim(k - 2 * i) == 0)) --i;
    return {i, idx - offsets_[k][i]};
  }

  Coords<Rational> from_terms(int d, const std::map<int, Element>& terms) const {
    std::vector<Coords<Rational>::Entry> e;
    for (const auto& [p, z] : terms)
      z.coords.for_each_nonzero(
          [&](std::size_t b, const Rational& v) { e.emplace_back(static_cast<std::uint32_t>(index(d, p, b)), v); });
    return Coords<Rational>::from_entries(dim(d), std::move(e));
  }

  Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const override {
    auto [p1, b1] = split(d1, i);
    auto [p2, b2] = split(d2, j);
    const int d = d1 + d2;
    Element z{d1 - 2 * p1 + d2 - 2 * p2, base_->basis_product(d1 - 2 * p1, b1, d2 - 2 * p2, b2), false};
    if (z.is_zero()) return Coords<Rational>(dim(d));
    return from_terms(d, reduce_power(*base_, r_, chern_, p1 + p2, z, d));
  }

 private:
  AlgebraPtr base_;
  int r_;
  std::vector<std::optional<Element>> chern_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<std::size_t> dims_;
};

// ---------------------------------------------------------------- blow-ups

class BlowupRule final : public ProductRule {
 public:
  BlowupRule(AlgebraPtr ambient, AlgebraPtr center, AlgebraMap restriction, int c,
             std::vector<std::optional<Element>> chern, int top)
      : y_(std::move(ambient)),
        t_(std::move(center)),
        r_(std::move(restriction)),
        c_(c),
        chern_(std::move(chern)),
        top_(top) {
    offsets_.resize(static_cast<std::size_t>(top) + 1);
    dims_.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
      std::size_t off = y_->dim(k);
      for (int i = 0; i <= c_ - 2; ++i) {
        offsets_[k].push_back(off);
        off += t_->dim(k - 2 - 2 * i);
      }
      dims_[k] = off;
    }
    // Inverse transposed pairings for ψ_* by duality.
    const int m = y_->formal_dimension();
    for (int k = 0; k <= m; ++k) {
      if (y_->dim(k) == 0) continue;
      auto inv = inverse(pairing_matrix(*y_, k).transpose());
      if (!inv) throw std::invalid_argument("blow-up ambient pairing is degenerate in degree " + std::to_string(k));
      pairing_inv_t_.emplace(k, std::move(*inv));
    }
  }

  std::size_t dim(int k) const { return k < 0 || k > top_ ? 0 : dims_[k]; }

  // Block of an index: -1 for τ*, otherwise the h-power i of j_*(h^i·t).
  std::pair<int, std::size_t> split(int k, std::size_t idx) const {
    if (idx < y_->dim(k)) return {-1, idx};
    int i = c_ - 2;
    while (i > 0 && (offsets_[k][i] > idx || t_->dim(k - 2 - 2 * i) == 0)) --i;
    return {i, idx - offsets_[k][i]};
  }

  // ψ_*(z) in the ambient, by ∫_Y ψ_*(z)γ = ∫_T z·r(γ).
  Element psi_push(const Element& z) const {
    const int m = y_->formal_dimension();
    const int d = z.degree + 2 * c_;
    const int dual = m - d;
    if (d > m || y_->dim(d) == 0) return {d, Coords<Rational>(y_->dim(d)), false};
    std::vector<Rational> b(y_->dim(dual));
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = t_->trace(t_->mul(z, r_.apply(y_->basis_element(dual, j))));
    const RationalMatrix& inv = pairing_inv_t_.at(d);
    return {d, inv.apply(Coords<Rational>::from_dense(b)), false};
  }

  // j_*(h^p·z), reduced. `deg` is the degree of the product being formed.
  Coords<Rational> j_push(int p, const Element& z, int deg) const {
    const int d = z.degree + 2 * p + 2;
    CoordsAccumulator<Rational> acc(dim(d));
    std::map<int, Element> terms;
    terms.emplace(p, z);
    while (!terms.empty()) {
      auto it = std::prev(terms.end());
      const int q = it->first;
      Element w = it->second;
      terms.erase(it);
      if (w.is_zero()) continue;
      if (q <= c_ - 2) {
        w.coords.for_each_nonzero([&](std::size_t b, const Rational& v) { acc.add(offsets_[d][q] + b, v); });
        continue;
      }
      auto add_term = [&](int power, Element t) {
        if (t.is_zero()) return;
        auto [pos, inserted] = terms.try_emplace(power, t);
        if (!inserted) pos->second += t;
      };
      auto chern_times = [&](int i, const Element& x) -> std::optional<Element> {
        if (x.degree + 2 * i > t_->formal_dimension()) return std::nullopt;
        const auto& ci = chern_[static_cast<std::size_t>(i)];
        if (!ci) throw InsufficientNormalData(deg, i);
        if (ci->is_zero()) return std::nullopt;
        return t_->mul(*ci, x);
      };
      if (q >= c_) {
        for (int i = 1; i <= c_; ++i)
          if (auto t = chern_times(i, w)) add_term(q - i, t->scaled(Rational(-1)));
        continue;
      }
      // q == c-1: j(h^{c-1}w) = τ*ψ_*(w) - Σ_{i>=1} j(h^{c-1-i} c_i w).
      Element pw = psi_push(w);
      pw.coords.for_each_nonzero([&](std::size_t b, const Rational& v) { acc.add(b, v); });
      for (int i = 1; i <= c_ - 1; ++i)
        if (auto t = chern_times(i, w)) add_term(c_ - 1 - i, t->scaled(Rational(-1)));
    }
    return acc.finish();
  }

  Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const override {
    auto [p1, x1] = split(d1, i);
    auto [p2, x2] = split(d2, j);
    const int d = d1 + d2;
    if (p1 < 0 && p2 < 0) {
      Coords<Rational> amb = y_->basis_product(d1, x1, d2, x2);
      std::vector<Coords<Rational>::Entry> e = amb.to_entries();
      return Coords<Rational>::from_entries(dim(d), std::move(e));
    }
    if (p1 < 0) {
      Element t = t_->mul(r_.apply(y_->basis_element(d1, x1)), t_->basis_element(d2 - 2 - 2 * p2, x2));
      return j_push(p2, t, d);
    }
    if (p2 < 0) {
      Element t = t_->mul(t_->basis_element(d1 - 2 - 2 * p1, x1), r_.apply(y_->basis_element(d2, x2)));
      return j_push(p1, t, d);
    }
    Element t = t_->mul(t_->basis_element(d1 - 2 - 2 * p1, x1), t_->basis_element(d2 - 2 - 2 * p2, x2));
    return j_push(p1 + p2 + 1, t, d).scaled(Rational(kJJSign));
  }

  std::size_t j_offset(int k, int i) const { return offsets_[k][i]; }

 private:
  AlgebraPtr y_, t_;
  AlgebraMap r_;
  int c_;
  std::vector<std::optional<Element>> chern_;
  int top_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<std::size_t> dims_;
  std::map<int, RationalMatrix> pairing_inv_t_;
};

std::vector<std::optional<Element>> chern_vector(const GradedAlgebra& base, int r,
                                                 const std::optional<MixedElement>& chern) {
  std::vector<std::optional<Element>> out(static_cast<std::size_t>(r) + 1);
  out[0] = base.unit();
  for (int i = 1; i <= r; ++i) {
    if (2 * i > base.formal_dimension()) {
      out[i] = base.zero(2 * i);
      continue;
    }
    if (!chern) continue;
    auto it = chern->find(2 * i);
    out[i] = it == chern->end() ? base.zero(2 * i) : it->second;
  }
  if (chern)
    for (const auto& [deg, el] : *chern) {
      if (deg % 2 != 0 || deg <= 0 || deg > 2 * r || el.degree != deg)
        throw std::invalid_argument("inconsistent Chern data in degree " + std::to_string(deg));
      if (el.coords.dim() != base.dim(deg)) throw std::invalid_argument("Chern class does not live in the base");
    }
  return out;
}

}  // namespace

std::string power_label(const std::string& variable, int i, const std::string& base_label) {
  if (i == 0) return base_label;
  std::string h = i == 1 ? variable : variable + "^" + std::to_string(i);
  if (base_label == "1") return h;
  return h + "·" + base_label;
}

AlgebraPtr exterior_algebra(int generators, const std::string& variable) {
  if (generators < 0 || generators > 24) throw std::invalid_argument("exterior algebra: 0..24 generators supported");
  auto rule = std::make_shared<ExteriorRule>(generators);
  std::vector<std::vector<std::string>> labels;
  for (const auto& ms : rule->masks()) {
    labels.emplace_back();
    for (auto m : ms) labels.back().push_back(rule->label(m, variable));
  }
  return std::make_shared<GradedAlgebra>("exterior", generators, std::nullopt, std::move(labels), rule);
}

AlgebraPtr truncated_polynomial(int n, const std::string& variable) {
  if (n < 1) throw std::invalid_argument("truncated polynomial: N must be at least 1");
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(2 * n) + 1);
  std::vector<std::size_t> dims(labels.size(), 0);
  for (int k = 0; k <= n; ++k) {
    labels[2 * k].push_back(power_label(variable, k, "1"));
    dims[2 * k] = 1;
  }
  labels[0] = {"1"};
  auto rule = std::make_shared<TableRule>(dims);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) rule->set(2 * a, 0, 2 * b, 0, Coords<Rational>::unit(1, 0));
  return std::make_shared<GradedAlgebra>("truncated_poly", 2 * n, std::nullopt, std::move(labels), rule);
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->truncated() || b->truncated()) throw std::invalid_argument("tensor product needs full-mode factors");
  auto rule = std::make_shared<TensorRule>(a, b);
  const int top = a->formal_dimension() + b->formal_dimension();
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k)
    for (int da = 0; da <= k; ++da)
      for (std::size_t i = 0; i < a->dim(da); ++i)
        for (std::size_t j = 0; j < b->dim(k - da); ++j) labels[k].push_back(a->label(da, i) + "⊗" + b->label(k - da, j));
  return std::make_shared<GradedAlgebra>("tensor", top, std::nullopt, std::move(labels), rule);
}

AlgebraPtr explicit_algebra(int formal_dimension, std::vector<std::vector<std::string>> labels,
                            const std::vector<ExplicitProduct>& products, std::optional<int> cap) {
  std::vector<std::size_t> dims;
  for (const auto& l : labels) dims.push_back(l.size());
  auto rule = std::make_shared<TableRule>(dims);
  auto alg = std::make_shared<GradedAlgebra>("explicit", formal_dimension, cap, labels, rule);
  const int top = alg->top_degree();
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < alg->dim(k); ++i) {
      rule->set(0, 0, k, i, Coords<Rational>::unit(alg->dim(k), i));
      rule->set(k, i, 0, 0, Coords<Rational>::unit(alg->dim(k), i));
    }
  std::map<std::tuple<int, std::size_t, int, std::size_t>, bool> given;
  for (const auto& p : products) {
    auto l = alg->find_label(p.left);
    auto r = alg->find_label(p.right);
    if (!l) throw std::invalid_argument("unknown label '" + p.left + "' in product");
    if (!r) throw std::invalid_argument("unknown label '" + p.right + "' in product");
    const int d = l->first + r->first;
    if (d > top) {
      if (!p.value.empty()) throw std::invalid_argument("product " + p.left + "*" + p.right + " above the top degree");
      continue;
    }
    Element v = p.value.empty() ? alg->zero(d) : alg->element(d, p.value);
    rule->set(l->first, l->second, r->first, r->second, v.coords);
    given[{l->first, l->second, r->first, r->second}] = true;
  }
  for (const auto& [key, _] : given) {
    auto [d1, i, d2, j] = key;
    if (given.count({d2, j, d1, i})) continue;
    Coords<Rational> v = rule->basis_product(d1, i, d2, j);
    if ((d1 * d2) % 2) v = v.scaled(Rational(-1));
    rule->set(d2, j, d1, i, v);
  }
  return alg;
}

AlgebraPtr surface_algebra(const RationalMatrix& form, std::vector<std::string> labels) {
  const std::size_t n = form.rows();
  if (form.cols() != n) throw std::invalid_argument("intersection form must be square");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != n) throw std::invalid_argument("label count does not match the form");
  std::vector<ExplicitProduct> prods;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(form(i, j) == form(j, i))) throw std::invalid_argument("intersection form must be symmetric");
      if (sgn(form(i, j)) != 0) prods.push_back({labels[i], labels[j], {{"pt", form(i, j)}}});
    }
  return explicit_algebra(4, {{"1"}, {}, labels, {}, {"pt"}}, prods);
}

Element ProjectiveBundle::h() const { return total->element(2, {{power_label(variable, 1, "1"), Rational(1)}}); }

Element ProjectiveBundle::chern_class(int i) const {
  if (i == 0) return base->unit();
  auto it = chern.find(2 * i);
  if (it == chern.end()) return base->zero(2 * i);
  return it->second;
}

ProjectiveBundle projective_bundle(const AlgebraPtr& base, int rank, const MixedElement& chern,
                                   const std::string& variable) {
  if (base->truncated()) throw std::invalid_argument("projective bundle needs a full-mode base");
  if (rank < 1) throw std::invalid_argument("bundle rank must be positive");
  auto cv = chern_vector(*base, rank, chern);
  auto rule = std::make_shared<BundleRule>(base, rank, cv);
  const int top = base->formal_dimension() + 2 * (rank - 1);
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k)
    for (int i = 0; i < rank; ++i)
      for (std::size_t b = 0; b < base->dim(k - 2 * i); ++b)
        labels[k].push_back(power_label(variable, i, base->label(k - 2 * i, b)));
  ProjectiveBundle pb;
  pb.base = base;
  pb.rank = rank;
  for (const auto& [d, e] : chern)
    if (!e.is_zero()) pb.chern.emplace(d, e);
  pb.variable = variable;
  pb.total = std::make_shared<GradedAlgebra>("projective_bundle", top, std::nullopt, std::move(labels), rule);
  std::map<int, RationalMatrix> up, down;
  for (int k = 0; k <= base->formal_dimension(); ++k) {
    RationalMatrix u(pb.total->dim(k), base->dim(k));
    for (std::size_t b = 0; b < base->dim(k); ++b) u(rule->index(k, 0, b), b) = 1;
    up.emplace(k, std::move(u));
  }
  const int shift = -2 * (rank - 1);
  for (int k = 2 * (rank - 1); k <= top; ++k) {
    RationalMatrix dmat(base->dim(k + shift), pb.total->dim(k));
    for (std::size_t b = 0; b < base->dim(k + shift); ++b) dmat(b, rule->index(k, rank - 1, b)) = 1;
    down.emplace(k, std::move(dmat));
  }
  pb.pullback = AlgebraMap(base, pb.total, 0, std::move(up), true);
  pb.gysin = AlgebraMap(pb.total, base, shift, std::move(down), false);
  return pb;
}

MixedElement segre_classes(const ProjectiveBundle& pb, int j_max) {
  if (2 * j_max > pb.base->formal_dimension()) throw std::invalid_argument("segre_classes: j_max too large");
  MixedElement out;
  Element h = pb.h();
  Element hp = pb.total->power(h, pb.rank - 1);
  for (int j = 0; j <= j_max; ++j) {
    out[2 * j] = pb.gysin.apply(hp);
    hp = pb.total->mul(hp, h);
  }
  return out;
}

Element Blowup::exceptional() const { return j_push(0, center->unit()); }

Element Blowup::j_push(int i, const Element& z) const {
  const auto* rule = dynamic_cast<const BlowupRule*>(&total->rule());
  const int d = z.degree + 2 * i + 2;
  if (d > total->top_degree()) return {d, Coords<Rational>(0), d <= total->formal_dimension()};
  return {d, rule->j_push(i, z, d), false};
}

Blowup blowup(const AlgebraPtr& ambient, const AlgebraPtr& center, const AlgebraMap& restriction, int codim,
              std::optional<MixedElement> normal_chern, std::optional<int> cap, const std::string& variable) {
  if (codim < 2) throw std::invalid_argument("blow-up: codimension must be at least 2");
  if (ambient->truncated() || center->truncated()) throw std::invalid_argument("blow-up: full-mode inputs required");
  if (center->formal_dimension() + 2 * codim != ambient->formal_dimension())
    throw std::invalid_argument("blow-up: dim center + 2c must equal dim ambient");
  if (restriction.source() != ambient || restriction.target() != center || restriction.shift() != 0)
    throw std::invalid_argument("blow-up: restriction must map ambient to center");
  if (auto bad = restriction.ring_hom_violation())
    throw std::invalid_argument("blow-up: restriction is not a ring homomorphism on " + *bad);
  const int m = ambient->formal_dimension();
  const int top = cap && *cap < m ? *cap : m;
  auto cv = chern_vector(*center, codim, normal_chern);
  auto rule = std::make_shared<BlowupRule>(ambient, center, restriction, codim, cv, top);
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    for (std::size_t a = 0; a < ambient->dim(k); ++a) labels[k].push_back(ambient->label(k, a));
    for (int i = 0; i <= codim - 2; ++i)
      for (std::size_t t = 0; t < center->dim(k - 2 - 2 * i); ++t)
        labels[k].push_back("j(" + power_label(variable, i, center->label(k - 2 - 2 * i, t)) + ")");
  }
  Blowup b;
  b.ambient = ambient;
  b.center = center;
  b.restriction = restriction;
  b.codim = codim;
  b.normal_chern = std::move(normal_chern);
  b.cap = top < m ? std::optional<int>(top) : std::nullopt;
  b.total = std::make_shared<GradedAlgebra>("blowup", m, b.cap, std::move(labels), rule);
  std::map<int, RationalMatrix> up;
  for (int k = 0; k <= top; ++k) {
    RationalMatrix u(b.total->dim(k), ambient->dim(k));
    for (std::size_t a = 0; a < ambient->dim(k); ++a) u(a, a) = 1;
    up.emplace(k, std::move(u));
  }
  b.tau = AlgebraMap(ambient, b.total, 0, std::move(up), true);
  return b;
}

}  // namespace hodgealg
