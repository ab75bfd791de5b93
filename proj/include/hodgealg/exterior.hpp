#pragma once

// Sparse exterior algebra on up to 32 generators: monomials are bitmasks,
// bit i standing for w_{i+1}. Used where the dense builder would be too big
// (degree 12 of Λ(Q^24) has 2.7 million monomials).

#include <cstdint>
#include <map>
#include <vector>

#include "hodgealg/scalar.hpp"

namespace hodgealg {

class SparseExterior {
 public:
  using Mask = std::uint32_t;

  explicit SparseExterior(int generators = 0);

  /// w_{i+1} in an algebra with g generators.
  static SparseExterior generator(int g, int i);
  static SparseExterior monomial(int g, Mask m, const Rational& c = Rational(1));

  /// Sign of (monomial a) ∧ (monomial b) relative to the sorted monomial a|b; 0 if they overlap.
  static int wedge_sign(Mask a, Mask b);

  int generators() const { return g_; }
  Mask full_mask() const { return g_ == 32 ? ~Mask{0} : ((Mask{1} << g_) - 1); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  Rational coefficient(Mask m) const;

  void add(Mask m, const Rational& c);
  SparseExterior& operator+=(const SparseExterior& o);
  SparseExterior scaled(const Rational& c) const;

  SparseExterior wedge(const SparseExterior& o) const;
  /// Coefficient of the top monomial in this ∧ o, via complement lookup.
  Rational top_pairing(const SparseExterior& o) const;

  /// Re-indexes w_i -> w_{i+offset} inside an algebra with g generators.
  SparseExterior shifted(int offset, int g) const;

  friend bool operator==(const SparseExterior& a, const SparseExterior& b) {
    return a.g_ == b.g_ && a.terms_ == b.terms_;
  }

 private:
  int g_ = 0;
  std::map<Mask, Rational> terms_;
};

/// Masks of the given popcount in increasing order.
std::vector<SparseExterior::Mask> masks_of_weight(int g, int weight);

}  // namespace hodgealg
