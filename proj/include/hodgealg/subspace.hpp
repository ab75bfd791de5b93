#pragma once

// Degree-homogeneous subspaces stored by their reduced row basis.

#include <vector>

#include "hodgealg/algebra.hpp"
#include "hodgealg/linalg.hpp"

namespace hodgealg {

template <class F>
class Subspace {
 public:
  Subspace() = default;

  /// Span of the given vectors (dependent vectors allowed).
  static Subspace span(int degree, std::size_t ambient_dim, const std::vector<Coords<F>>& vectors) {
    Subspace s;
    s.degree_ = degree;
    s.ambient_ = ambient_dim;
    s.basis_ = span_basis(vectors, ambient_dim);
    return s;
  }

  static Subspace span(int degree, std::size_t ambient_dim, const std::vector<HomogeneousElement<F>>& elems) {
    std::vector<Coords<F>> v;
    for (const auto& e : elems) {
      if (e.degree != degree) throw std::invalid_argument("subspace: element of wrong degree");
      v.push_back(e.coords);
    }
    return span(degree, ambient_dim, v);
  }

  static Subspace whole(int degree, std::size_t ambient_dim) {
    std::vector<Coords<F>> v;
    for (std::size_t i = 0; i < ambient_dim; ++i) v.push_back(Coords<F>::unit(ambient_dim, i));
    return span(degree, ambient_dim, v);
  }

  int degree() const { return degree_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Coords<F>>& basis() const { return basis_; }

  std::vector<HomogeneousElement<F>> basis_elements() const {
    std::vector<HomogeneousElement<F>> out;
    for (const auto& b : basis_) out.push_back({degree_, b, false});
    return out;
  }

  bool contains(const Coords<F>& v) const {
    if (basis_.empty()) return v.is_zero();
    std::vector<Coords<F>> ext = basis_;
    ext.push_back(v);
    return rank(Matrix<F>::from_coord_rows(ext, ambient_)) == basis_.size();
  }

  bool contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  /// A span is defined over Q iff its reduced row basis is real.
  bool is_rational() const {
    if constexpr (std::is_same_v<F, Rational>) {
      return true;
    } else {
      for (const auto& b : basis_) {
        bool real = true;
        b.for_each_nonzero([&](std::size_t, const F& v) { real = real && v.is_real(); });
        if (!real) return false;
      }
      return true;
    }
  }

  Subspace conj() const {
    std::vector<Coords<F>> v;
    for (const auto& b : basis_) v.push_back(b.conj());
    return span(degree_, ambient_, v);
  }

  Subspace intersect(const Subspace& o) const {
    Subspace s;
    s.degree_ = degree_;
    s.ambient_ = ambient_;
    s.basis_ = intersect_spans(basis_, o.basis_, ambient_);
    return s;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Coords<F>> v = basis_;
    v.insert(v.end(), o.basis_.begin(), o.basis_.end());
    return span(degree_, ambient_, v);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.degree_ == b.degree_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int degree_ = 0;
  std::size_t ambient_ = 0;
  std::vector<Coords<F>> basis_;
};

using RationalSubspace = Subspace<Rational>;
using ComplexSubspace = Subspace<GaussRational>;

inline ComplexSubspace complexify(const RationalSubspace& s) {
  std::vector<Coords<GaussRational>> v;
  for (const auto& b : s.basis()) v.push_back(complexify(b));
  return ComplexSubspace::span(s.degree(), s.ambient_dim(), v);
}

}  // namespace hodgealg
