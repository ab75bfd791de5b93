#pragma once

// Graded linear maps between algebras, possibly shifting degree (Gysin maps).

#include <map>
#include <optional>
#include <string>

#include "hodgealg/algebra.hpp"

namespace hodgealg {

class AlgebraMap {
 public:
  AlgebraMap() = default;
  /// matrices[k] maps source degree k to target degree k + shift
  /// (rows: target basis, columns: source basis). Missing degrees map to zero.
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, int shift, std::map<int, RationalMatrix> matrices,
             bool ring_hom);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  int shift() const { return shift_; }
  bool claims_ring_hom() const { return ring_hom_; }

  Element apply(const Element& x) const;
  ComplexElement apply(const ComplexElement& x) const;
  /// Matrix in degree k (zero matrix of the right shape when absent).
  RationalMatrix matrix(int k) const;
  bool injective_in_degree(int k) const;

  /// First basis pair (x, y) with f(xy) != f(x)f(y), as labels; nullopt if
  /// multiplicative on every pair whose product is stored in both algebras.
  std::optional<std::string> ring_hom_violation() const;

 private:
  AlgebraPtr source_, target_;
  int shift_ = 0;
  std::map<int, RationalMatrix> matrices_;
  bool ring_hom_ = false;
};

/// Unique ring homomorphism sending each generator to its image. Throws if the
/// generators do not generate the source (in the stored degrees), if the
/// assignment is not well defined, or if multiplicativity fails.
AlgebraMap ring_hom_from_generators(AlgebraPtr source, AlgebraPtr target,
                                    const std::vector<std::pair<Element, Element>>& generator_images);

}  // namespace hodgealg
