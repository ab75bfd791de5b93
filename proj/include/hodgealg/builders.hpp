#pragma once

// Constructors for exterior algebras, truncated polynomial algebras, tensor
// products, projective bundles and blow-ups.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgealg/algebra.hpp"
#include "hodgealg/algebra_map.hpp"

namespace hodgealg {

/// Λ(Q^g) on generators w1..wg of degree 1; basis labels "w1^w3".
AlgebraPtr exterior_algebra(int generators, const std::string& variable = "w");

/// Q[h]/(h^{N+1}) with |h| = 2.
AlgebraPtr truncated_polynomial(int n, const std::string& variable = "h");

/// Koszul-signed tensor product, labels "a⊗b".
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);

struct ExplicitProduct {
  std::string left, right;
  std::vector<std::pair<std::string, Rational>> value;
};

/// Algebra given by labels and structure constants. Unit products are implied;
/// a product given in one order only is completed by graded commutativity.
AlgebraPtr explicit_algebra(int formal_dimension, std::vector<std::vector<std::string>> labels,
                            const std::vector<ExplicitProduct>& products, std::optional<int> cap = std::nullopt);

/// Degrees 0, 2, 4 with H^2 carrying the given symmetric intersection form.
AlgebraPtr surface_algebra(const RationalMatrix& form, std::vector<std::string> labels = {});

/// Label of h^i times a base class: "x", "h·x", "h^2·x" (and "h", "h^2" over 1).
std::string power_label(const std::string& variable, int i, const std::string& base_label);

struct ProjectiveBundle {
  AlgebraPtr base;
  int rank = 0;
  MixedElement chern;  // c_i in degree 2i; missing degrees are zero
  std::string variable;
  AlgebraPtr total;
  AlgebraMap pullback;  // π*
  AlgebraMap gysin;     // π_*, degree shift -2(r-1)

  Element h() const;
  Element chern_class(int i) const;
};

ProjectiveBundle projective_bundle(const AlgebraPtr& base, int rank, const MixedElement& chern,
                                   const std::string& variable = "h");

/// σ_j = π_*(h^{r-1+j}) for 0 <= j <= j_max.
MixedElement segre_classes(const ProjectiveBundle& pb, int j_max);

class InsufficientNormalData : public std::runtime_error {
 public:
  InsufficientNormalData(int degree, int chern_index)
      : std::runtime_error("insufficient normal data: c_" + std::to_string(chern_index) +
                           "(N) is unspecified but needed for a product in degree " + std::to_string(degree)),
        degree_(degree),
        chern_index_(chern_index) {}
  int degree() const { return degree_; }
  int chern_index() const { return chern_index_; }

 private:
  int degree_;
  int chern_index_;
};

/// Sign of j_*(x)·j_*(y) = kJJSign·j_*(h·x·y).
inline constexpr int kJJSign = -1;

struct Blowup {
  AlgebraPtr ambient;
  AlgebraPtr center;
  AlgebraMap restriction;  // ring hom ambient -> center
  int codim = 0;           // complex codimension c of the center
  std::optional<MixedElement> normal_chern;  // nullopt: all unspecified
  std::optional<int> cap;
  AlgebraPtr total;
  AlgebraMap tau;  // τ*: ambient -> total

  /// e = j_*(1).
  Element exceptional() const;
  /// j_*(h^i·z) for a center class z, reduced to the blow-up basis.
  Element j_push(int i, const Element& z) const;
};

Blowup blowup(const AlgebraPtr& ambient, const AlgebraPtr& center, const AlgebraMap& restriction, int codim,
              std::optional<MixedElement> normal_chern = std::nullopt, std::optional<int> cap = std::nullopt,
              const std::string& variable = "h");

}  // namespace hodgealg
