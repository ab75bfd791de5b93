#pragma once

// Hodge structures on graded algebras with Gaussian-rational pieces.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgealg/algebra.hpp"
#include "hodgealg/subspace.hpp"

namespace hodgealg {

using PQ = std::pair<int, int>;

std::string pq_name(const PQ& pq);

class HodgeStructure {
 public:
  HodgeStructure() = default;
  explicit HodgeStructure(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  const AlgebraPtr& algebra() const { return algebra_; }

  /// Spanning vectors of H^{p,q} in degree p+q.
  void set_piece(int p, int q, std::vector<Coords<GaussRational>> span);
  const std::vector<Coords<GaussRational>>& piece(int p, int q) const;
  ComplexSubspace piece_space(int p, int q) const;
  /// Pieces of one degree, keyed (p,q).
  std::map<PQ, std::vector<Coords<GaussRational>>> pieces(int degree) const;
  std::vector<int> degrees() const;

  /// dim H^{p,q} for every stored piece.
  std::map<PQ, std::size_t> hodge_numbers() const;

  /// True iff x lies in H^{p,q}.
  bool has_type(const ComplexElement& x, int p, int q) const;

 private:
  AlgebraPtr algebra_;
  std::map<PQ, std::vector<Coords<GaussRational>>> pieces_;
};

struct WeightOneData {
  std::vector<Coords<GaussRational>> h10;
};

/// Every degree 2k entirely of type (k,k). Throws if odd cohomology is nonzero.
HodgeStructure trivial_hodge(const AlgebraPtr& a);

/// H^{p,q} = Λ^p(h10) ∧ Λ^q(conj h10) on an exterior algebra.
HodgeStructure exterior_hodge(const AlgebraPtr& a, const WeightOneData& w1);

/// The standard square-torus structure h10 = {w1 + i w2, w3 + i w4, ...}.
WeightOneData square_torus_weight_one(int n);

struct HodgeCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct HodgeValidation {
  std::vector<HodgeCheck> checks;
  bool passed() const;
};

HodgeValidation validate_hodge(const HodgeStructure& h);

struct SubHodgeResult {
  bool is_sub_hodge = false;
  std::map<PQ, std::size_t> intersection_dims;
};

SubHodgeResult is_sub_hodge(const HodgeStructure& h, const ComplexSubspace& s);

struct EvenDimensionVerdict {
  bool no_hodge = false;
  std::optional<int> witness_degree;
  std::string detail;
};

EvenDimensionVerdict even_dimension_check(const GradedAlgebra& a);

}  // namespace hodgealg
