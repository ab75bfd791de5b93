#pragma once

// Finite graded-commutative algebras ("cohomology algebras"): a unit in
// degree 0, a one-dimensional top degree m carrying the fundamental class,
// and products given by structure constants. Truncated algebras keep only
// degrees <= cap; products landing above the cap are flagged zeros.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hodgealg/coords.hpp"
#include "hodgealg/matrix.hpp"

namespace hodgealg {

template <class F>
struct HomogeneousElement {
  int degree = 0;
  Coords<F> coords;
  /// Set when the value is a zero standing in for a product above the cap.
  bool beyond_cap = false;

  bool is_zero() const { return coords.is_zero(); }

  HomogeneousElement& operator+=(const HomogeneousElement& o);
  HomogeneousElement& operator-=(const HomogeneousElement& o);
  HomogeneousElement scaled(const F& a) const { return {degree, coords.scaled(a), beyond_cap}; }
  HomogeneousElement conj() const { return {degree, coords.conj(), beyond_cap}; }

  friend HomogeneousElement operator+(HomogeneousElement a, const HomogeneousElement& b) { return a += b; }
  friend HomogeneousElement operator-(HomogeneousElement a, const HomogeneousElement& b) { return a -= b; }
  friend HomogeneousElement operator*(const F& a, const HomogeneousElement& x) { return x.scaled(a); }
  friend bool operator==(const HomogeneousElement& a, const HomogeneousElement& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
};

using Element = HomogeneousElement<Rational>;
using ComplexElement = HomogeneousElement<GaussRational>;

ComplexElement complexify(const Element& x);

/// Degree-indexed sum of homogeneous elements (total Chern/Segre data).
using MixedElement = std::map<int, Element>;

/// Structure constants of an algebra, queried one basis pair at a time.
class ProductRule {
 public:
  virtual ~ProductRule() = default;
  virtual Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const = 0;
};

/// Sparse table keyed by basis pairs; absent pairs multiply to zero.
class TableRule final : public ProductRule {
 public:
  explicit TableRule(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}
  void set(int d1, std::size_t i, int d2, std::size_t j, Coords<Rational> value);
  Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const override;
  std::size_t size() const { return table_.size(); }

 private:
  static std::uint64_t key(int d1, std::size_t i, int d2, std::size_t j);
  std::vector<std::size_t> dims_;
  std::unordered_map<std::uint64_t, Coords<Rational>> table_;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class GradedAlgebra {
 public:
  /// labels[k] lists the basis of degree k for k = 0..top stored degree.
  GradedAlgebra(std::string kind, int formal_dimension, std::optional<int> cap,
                std::vector<std::vector<std::string>> labels, std::shared_ptr<const ProductRule> rule);

  const std::string& kind() const { return kind_; }
  int formal_dimension() const { return formal_dimension_; }
  std::optional<int> cap() const { return cap_; }
  bool truncated() const { return cap_.has_value(); }
  /// Highest degree with stored basis: min(m, cap).
  int top_degree() const { return static_cast<int>(labels_.size()) - 1; }

  std::size_t dim(int k) const;
  std::size_t total_dim() const;
  std::vector<std::size_t> degree_dims() const;
  const std::vector<std::string>& labels(int k) const { return labels_.at(static_cast<std::size_t>(k)); }
  const std::string& label(int k, std::size_t i) const { return labels(k).at(i); }
  /// (degree, index) of a basis label.
  std::optional<std::pair<int, std::size_t>> find_label(std::string_view label) const;

  Element zero(int k) const;
  Element unit() const;
  Element basis_element(int k, std::size_t i) const;
  /// Builds an element from (label, coefficient) pairs; all labels must share a degree.
  Element element(const std::vector<std::pair<std::string, Rational>>& terms) const;
  Element element(int degree, const std::vector<std::pair<std::string, Rational>>& terms) const;
  Element fundamental_class() const;

  Coords<Rational> basis_product(int d1, std::size_t i, int d2, std::size_t j) const;
  const ProductRule& rule() const { return *rule_; }

  template <class F>
  HomogeneousElement<F> mul(const HomogeneousElement<F>& x, const HomogeneousElement<F>& y) const;
  template <class F>
  HomogeneousElement<F> power(const HomogeneousElement<F>& x, int k) const;

  /// Coefficient of the fundamental class (zero outside the top degree).
  template <class F>
  F trace(const HomogeneousElement<F>& x) const;

  /// Human-readable form "c1*label1 + c2*label2".
  std::string format(const Element& x) const;
  std::string format(const ComplexElement& x) const;

 private:
  std::string kind_;
  int formal_dimension_;
  std::optional<int> cap_;
  std::vector<std::vector<std::string>> labels_;
  std::unordered_map<std::string, std::pair<int, std::size_t>> label_index_;
  std::shared_ptr<const ProductRule> rule_;
};

/// Gram matrix of A^k x A^{m-k} -> A^m in the fundamental class.
RationalMatrix pairing_matrix(const GradedAlgebra& a, int k);

/// Rank of (x_j)_j -> sum_j classes_j * x_j from (A^l)^n to A^{k+l}.
std::size_t mult_image_rank(const GradedAlgebra& a, const std::vector<Element>& classes, int l);

/// Matrix of y -> x*y from A^l to A^{|x|+l} (columns indexed by A^l).
RationalMatrix multiplication_matrix(const GradedAlgebra& a, const Element& x, int l);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool truncated = false;
  std::optional<int> cap;
  bool passed() const;
  const AxiomCheck* find(std::string_view name) const;
};

struct ValidateOptions {
  std::size_t exhaustive_triples = 300000;
  std::size_t fuzz_triples = 20000;
  std::size_t exhaustive_pairs = 1000000;
  std::uint64_t seed = 1;
};

ValidationReport validate(const GradedAlgebra& a, const ValidateOptions& options = {});

// Homogeneous element arithmetic.
template <class F>
HomogeneousElement<F>& HomogeneousElement<F>::operator+=(const HomogeneousElement& o) {
  if (o.degree != degree && !o.coords.is_zero() && !coords.is_zero())
    throw std::invalid_argument("adding elements of different degrees");
  if (coords.is_zero() && coords.dim() != o.coords.dim()) {
    *this = o;
    return *this;
  }
  if (o.coords.is_zero()) return *this;
  coords += o.coords;
  beyond_cap = beyond_cap || o.beyond_cap;
  return *this;
}

template <class F>
HomogeneousElement<F>& HomogeneousElement<F>::operator-=(const HomogeneousElement& o) {
  return *this += o.scaled(-FieldTraits<F>::one());
}

}  // namespace hodgealg
