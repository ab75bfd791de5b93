#include "hodgealg/algebra.hpp"

#include <random>
#include <sstream>

#include "hodgealg/linalg.hpp"
#include "hodgealg/random.hpp"

namespace hodgealg {

ComplexElement complexify(const Element& x) { return {x.degree, complexify(x.coords), x.beyond_cap}; }

std::uint64_t TableRule::key(int d1, std::size_t i, int d2, std::size_t j) {
  return (static_cast<std::uint64_t>(d1) << 56) | (static_cast<std::uint64_t>(i) << 32) |
         (static_cast<std::uint64_t>(d2) << 24) | static_cast<std::uint64_t>(j);
}

void TableRule::set(int d1, std::size_t i, int d2, std::size_t j, Coords<Rational> value) {
  if (i >= (1u << 24) || j >= (1u << 24)) throw std::out_of_range("table rule: basis index too large");
  if (value.is_zero())
    table_.erase(key(d1, i, d2, j));
  else
    table_[key(d1, i, d2, j)] = std::move(value);
}

Coords<Rational> TableRule::basis_product(int d1, std::size_t i, int d2, std::size_t j) const {
  auto it = table_.find(key(d1, i, d2, j));
  if (it != table_.end()) return it->second;
  const std::size_t d = static_cast<std::size_t>(d1 + d2);
  return Coords<Rational>(d < dims_.size() ? dims_[d] : 0);
}

GradedAlgebra::GradedAlgebra(std::string kind, int formal_dimension, std::optional<int> cap,
                             std::vector<std::vector<std::string>> labels, std::shared_ptr<const ProductRule> rule)
    : kind_(std::move(kind)),
      formal_dimension_(formal_dimension),
      cap_(cap),
      labels_(std::move(labels)),
      rule_(std::move(rule)) {
  if (formal_dimension_ < 0) throw std::invalid_argument("negative formal dimension");
  if (cap_ && *cap_ >= formal_dimension_) cap_.reset();
  const int top = cap_ ? *cap_ : formal_dimension_;
  if (static_cast<int>(labels_.size()) != top + 1)
    throw std::invalid_argument("expected basis labels for degrees 0.." + std::to_string(top));
  if (labels_[0].size() != 1) throw std::invalid_argument("degree 0 must be one-dimensional");
  for (std::size_t k = 0; k < labels_.size(); ++k)
    for (std::size_t i = 0; i < labels_[k].size(); ++i)
      if (!label_index_.emplace(labels_[k][i], std::make_pair(static_cast<int>(k), i)).second)
        throw std::invalid_argument("duplicate basis label '" + labels_[k][i] + "'");
  if (!rule_) throw std::invalid_argument("missing product rule");
}

std::size_t GradedAlgebra::dim(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return labels_[static_cast<std::size_t>(k)].size();
}

std::size_t GradedAlgebra::total_dim() const {
  std::size_t n = 0;
  for (const auto& l : labels_) n += l.size();
  return n;
}

std::vector<std::size_t> GradedAlgebra::degree_dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : labels_) out.push_back(l.size());
  return out;
}

std::optional<std::pair<int, std::size_t>> GradedAlgebra::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Element GradedAlgebra::zero(int k) const { return {k, Coords<Rational>(dim(k)), false}; }

Element GradedAlgebra::unit() const { return basis_element(0, 0); }

Element GradedAlgebra::basis_element(int k, std::size_t i) const {
  if (i >= dim(k)) throw std::out_of_range("basis index out of range");
  return {k, Coords<Rational>::unit(dim(k), i), false};
}

Element GradedAlgebra::element(const std::vector<std::pair<std::string, Rational>>& terms) const {
  if (terms.empty()) throw std::invalid_argument("cannot infer the degree of an empty element");
  auto loc = find_label(terms.front().first);
  if (!loc) throw std::invalid_argument("unknown basis label '" + terms.front().first + "'");
  return element(loc->first, terms);
}

Element GradedAlgebra::element(int degree, const std::vector<std::pair<std::string, Rational>>& terms) const {
  std::vector<Coords<Rational>::Entry> e;
  for (const auto& [label, c] : terms) {
    auto loc = find_label(label);
    if (!loc) throw std::invalid_argument("unknown basis label '" + label + "'");
    if (loc->first != degree)
      throw std::invalid_argument("label '" + label + "' has degree " + std::to_string(loc->first) +
                                  ", expected " + std::to_string(degree));
    e.emplace_back(static_cast<std::uint32_t>(loc->second), c);
  }
  return {degree, Coords<Rational>::from_entries(dim(degree), std::move(e)), false};
}

Element GradedAlgebra::fundamental_class() const {
  if (truncated()) throw std::logic_error("truncated algebra has no stored fundamental class");
  return basis_element(formal_dimension_, 0);
}

Coords<Rational> GradedAlgebra::basis_product(int d1, std::size_t i, int d2, std::size_t j) const {
  return rule_->basis_product(d1, i, d2, j);
}

template <class F>
HomogeneousElement<F> GradedAlgebra::mul(const HomogeneousElement<F>& x, const HomogeneousElement<F>& y) const {
  const int d = x.degree + y.degree;
  if (d > formal_dimension_) return {d, Coords<F>(0), false};
  if (d > top_degree()) return {d, Coords<F>(0), !x.coords.is_zero() && !y.coords.is_zero()};
  HomogeneousElement<F> out{d, Coords<F>(dim(d)), x.beyond_cap || y.beyond_cap};
  if (x.coords.is_zero() || y.coords.is_zero()) return out;
  CoordsAccumulator<F> acc(dim(d));
  x.coords.for_each_nonzero([&](std::size_t i, const F& a) {
    y.coords.for_each_nonzero([&](std::size_t j, const F& b) {
      Coords<Rational> p = rule_->basis_product(x.degree, i, y.degree, j);
      const F ab = a * b;
      p.for_each_nonzero([&](std::size_t k, const Rational& c) { acc.add(k, ab * F(c)); });
    });
  });
  out.coords = acc.finish();
  return out;
}

template <class F>
HomogeneousElement<F> GradedAlgebra::power(const HomogeneousElement<F>& x, int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  HomogeneousElement<F> out{0, Coords<F>::unit(1, 0), false};
  for (int e = 0; e < k; ++e) out = mul(out, x);
  return out;
}

template <class F>
F GradedAlgebra::trace(const HomogeneousElement<F>& x) const {
  if (x.degree != formal_dimension_ || truncated()) return FieldTraits<F>::zero();
  return x.coords.get(0);
}

namespace {
template <class F>
std::string format_element(const GradedAlgebra& a, const HomogeneousElement<F>& x) {
  if (x.is_zero()) return x.beyond_cap ? "0 (beyond cap)" : "0";
  std::ostringstream os;
  bool first = true;
  x.coords.for_each_nonzero([&](std::size_t k, const F& c) {
    if (!first) os << " + ";
    first = false;
    std::string s = FieldTraits<F>::format(c);
    if constexpr (std::is_same_v<F, GaussRational>) {
      if (!c.is_real() && !(sgn(c.re()) == 0)) s = "(" + s + ")";
    }
    os << s << "*" << a.label(x.degree, k);
  });
  return os.str();
}
}  // namespace

std::string GradedAlgebra::format(const Element& x) const { return format_element(*this, x); }
std::string GradedAlgebra::format(const ComplexElement& x) const { return format_element(*this, x); }

template Element GradedAlgebra::mul<Rational>(const Element&, const Element&) const;
template ComplexElement GradedAlgebra::mul<GaussRational>(const ComplexElement&, const ComplexElement&) const;
template Element GradedAlgebra::power<Rational>(const Element&, int) const;
template ComplexElement GradedAlgebra::power<GaussRational>(const ComplexElement&, int) const;
template Rational GradedAlgebra::trace<Rational>(const Element&) const;
template GaussRational GradedAlgebra::trace<GaussRational>(const ComplexElement&) const;

RationalMatrix pairing_matrix(const GradedAlgebra& a, int k) {
  const int m = a.formal_dimension();
  if (a.truncated()) throw std::logic_error("pairing matrix needs a full-mode algebra");
  if (k < 0 || k > m) throw std::out_of_range("pairing degree out of range");
  RationalMatrix g(a.dim(k), a.dim(m - k));
  for (std::size_t i = 0; i < a.dim(k); ++i)
    for (std::size_t j = 0; j < a.dim(m - k); ++j) g(i, j) = a.basis_product(k, i, m - k, j).get(0);
  return g;
}

RationalMatrix multiplication_matrix(const GradedAlgebra& a, const Element& x, int l) {
  const int d = x.degree + l;
  if (d > a.top_degree() && d <= a.formal_dimension())
    throw std::domain_error("multiplication lands in degree " + std::to_string(d) + " above the cap");
  RationalMatrix out(a.dim(d), a.dim(l));
  for (std::size_t j = 0; j < a.dim(l); ++j) {
    Element p = a.mul(x, a.basis_element(l, j));
    p.coords.for_each_nonzero([&](std::size_t r, const Rational& v) { out(r, j) = v; });
  }
  return out;
}

std::size_t mult_image_rank(const GradedAlgebra& a, const std::vector<Element>& classes, int l) {
  if (classes.empty()) return 0;
  const int k = classes.front().degree;
  for (const auto& c : classes)
    if (c.degree != k) throw std::invalid_argument("mult_image_rank: classes of mixed degrees");
  const std::size_t rows = a.dim(k + l), block = a.dim(l);
  RationalMatrix big(rows, block * classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    RationalMatrix m = multiplication_matrix(a, classes[c], l);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < block; ++j) big(r, c * block + j) = m(r, j);
  }
  return rank(big);
}

bool ValidationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string triple_name(const GradedAlgebra& a, int d1, std::size_t i, int d2, std::size_t j) {
  return "(" + a.label(d1, i) + ", " + a.label(d2, j) + ")";
}

struct BasisRef {
  int degree;
  std::size_t index;
};

// Runs fn and turns a thrown error into a failed check.
template <class Fn>
void guarded(AxiomCheck& check, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    check.passed = false;
    check.detail = e.what();
  }
}

}  // namespace

ValidationReport validate(const GradedAlgebra& a, const ValidateOptions& options) {
  ValidationReport rep;
  rep.truncated = a.truncated();
  rep.cap = a.cap();
  const int top = a.top_degree();
  const int m = a.formal_dimension();

  std::vector<BasisRef> all;
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < a.dim(k); ++i) all.push_back({k, i});

  AxiomCheck unit{"unit", true, false, ""};
  guarded(unit, [&] {
    if (a.dim(0) != 1) {
      unit.passed = false;
      unit.detail = "degree 0 has dimension " + std::to_string(a.dim(0));
      return;
    }
    for (const auto& b : all) {
      auto left = a.basis_product(0, 0, b.degree, b.index);
      auto right = a.basis_product(b.degree, b.index, 0, 0);
      auto expect = Coords<Rational>::unit(a.dim(b.degree), b.index);
      if (!(left == expect) || !(right == expect)) {
        unit.passed = false;
        unit.detail = "1*x != x for x = " + a.label(b.degree, b.index);
        return;
      }
    }
  });
  rep.checks.push_back(unit);

  AxiomCheck comm{"graded_commutativity", true, false, ""};
  guarded(comm, [&] {
    std::size_t pairs = 0;
    for (std::size_t p = 0; p < all.size() && comm.passed; ++p)
      for (std::size_t q = p; q < all.size(); ++q) {
        const auto& x = all[p];
        const auto& y = all[q];
        if (x.degree + y.degree > top) continue;
        if (++pairs > options.exhaustive_pairs) {
          comm.detail = "checked the first " + std::to_string(options.exhaustive_pairs) + " pairs";
          return;
        }
        auto xy = a.basis_product(x.degree, x.index, y.degree, y.index);
        auto yx = a.basis_product(y.degree, y.index, x.degree, x.index);
        if ((x.degree * y.degree) % 2 != 0) yx = yx.scaled(Rational(-1));
        if (!(xy == yx)) {
          comm.passed = false;
          comm.detail = "xy != (-1)^{|x||y|} yx for " + triple_name(a, x.degree, x.index, y.degree, y.index);
          return;
        }
      }
    if (comm.detail.empty()) comm.detail = "all " + std::to_string(pairs) + " basis pairs";
  });
  rep.checks.push_back(comm);

  AxiomCheck assoc{"associativity", true, false, ""};
  guarded(assoc, [&] {
    // Count admissible triples to decide between exhaustive and fuzzed checking.
    std::vector<std::size_t> dims = a.degree_dims();
    std::size_t count = 0;
    for (int d1 = 0; d1 <= top; ++d1)
      for (int d2 = 0; d1 + d2 <= top; ++d2)
        for (int d3 = 0; d1 + d2 + d3 <= top; ++d3) {
          count += dims[d1] * dims[d2] * dims[d3];
          if (count > options.exhaustive_triples) break;
        }
    auto check_triple = [&](const BasisRef& x, const BasisRef& y, const BasisRef& z) {
      Element ex = a.basis_element(x.degree, x.index), ey = a.basis_element(y.degree, y.index),
              ez = a.basis_element(z.degree, z.index);
      Element l = a.mul(a.mul(ex, ey), ez);
      Element r = a.mul(ex, a.mul(ey, ez));
      if (!(l.coords == r.coords)) {
        assoc.passed = false;
        assoc.detail = "(xy)z != x(yz) for (" + a.label(x.degree, x.index) + ", " + a.label(y.degree, y.index) +
                       ", " + a.label(z.degree, z.index) + ")";
        return false;
      }
      return true;
    };
    if (count <= options.exhaustive_triples) {
      std::size_t n = 0;
      for (const auto& x : all)
        for (const auto& y : all) {
          if (x.degree + y.degree > top) continue;
          for (const auto& z : all) {
            if (x.degree + y.degree + z.degree > top) continue;
            ++n;
            if (!check_triple(x, y, z)) return;
          }
        }
      assoc.detail = "exhaustive over " + std::to_string(n) + " basis triples";
    } else {
      Rng rng(options.seed);
      std::size_t n = 0;
      for (std::size_t t = 0; t < options.fuzz_triples; ++t) {
        const auto& x = all[rng.below(all.size())];
        const auto& y = all[rng.below(all.size())];
        const auto& z = all[rng.below(all.size())];
        if (x.degree + y.degree + z.degree > top) continue;
        ++n;
        if (!check_triple(x, y, z)) return;
      }
      assoc.detail = "fuzzed " + std::to_string(n) + " admissible basis triples (seed " +
                     std::to_string(options.seed) + ")";
    }
  });
  rep.checks.push_back(assoc);

  AxiomCheck topdim{"top_degree", true, false, ""};
  AxiomCheck duality{"poincare_duality", true, false, ""};
  if (a.truncated()) {
    topdim.skipped = duality.skipped = true;
    topdim.detail = duality.detail =
        "truncated at degree " + std::to_string(*a.cap()) + "; top degree " + std::to_string(m) + " not stored";
  } else {
    if (a.dim(m) != 1) {
      topdim.passed = false;
      topdim.detail = "degree " + std::to_string(m) + " has dimension " + std::to_string(a.dim(m));
    } else {
      topdim.detail = "fundamental class " + a.label(m, 0);
    }
    guarded(duality, [&] {
      if (!topdim.passed) {
        duality.passed = false;
        duality.detail = "no fundamental class";
        return;
      }
      for (int k = 0; k <= m / 2; ++k) {
        if (a.dim(k) != a.dim(m - k)) {
          duality.passed = false;
          duality.detail = "dim A^" + std::to_string(k) + " != dim A^" + std::to_string(m - k) + " (witness degree " +
                           std::to_string(k) + ")";
          return;
        }
        if (a.dim(k) == 0) continue;
        if (rank(pairing_matrix(a, k)) != a.dim(k)) {
          duality.passed = false;
          duality.detail = "pairing A^" + std::to_string(k) + " x A^" + std::to_string(m - k) +
                           " is degenerate (witness degree " + std::to_string(k) + ")";
          return;
        }
      }
      duality.detail = "pairings perfect in all degrees";
    });
  }
  rep.checks.push_back(topdim);
  rep.checks.push_back(duality);
  return rep;
}

}  // namespace hodgealg
