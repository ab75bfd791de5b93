#pragma once

// Decision procedures: component certificates (Deligne's lemma in the
// sufficient form), the even-rank parity test, the half-subspace criterion,
// the tensor-product split and the projective-bundle transfer.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodgealg/algebra.hpp"
#include "hodgealg/algebra_map.hpp"
#include "hodgealg/builders.hpp"
#include "hodgealg/io.hpp"
#include "hodgealg/subspace.hpp"

namespace hodgealg {

enum class Verdict { Obstructed, ObstructedHeuristic, Clear, Inconclusive };
std::string to_string(Verdict v);

struct ObstructionReport {
  std::string test;
  Verdict verdict = Verdict::Inconclusive;
  std::string summary;
  Json certificate = Json::object();
};

Json report_to_json(const ObstructionReport& r);

/// Z = {x in A^2 : x^l = 0} or {x : pi_*(x^r) = 0}.
struct ZSpec {
  enum class Kind { PowerVanish, GysinPowerVanish };
  Kind kind = Kind::PowerVanish;
  int l = 2;
  std::optional<AlgebraMap> gysin;

  static ZSpec power_vanish(int l);
  static ZSpec gysin_power_vanish(int r, AlgebraMap gysin);
  std::string describe() const;
};

/// Raised when a test needs a product above the cap of a truncated algebra.
class DegreeOverflow : public std::domain_error {
 public:
  explicit DegreeOverflow(int degree)
      : std::domain_error("product in degree " + std::to_string(degree) + " is above the cap"), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// The vanishing value x^l (or pi_* x^r).
Element z_value(const GradedAlgebra& a, const ZSpec& z, const Element& x);
bool membership(const GradedAlgebra& a, const ZSpec& z, const Element& x);

/// Matrix of the differential m -> a^{l-1} m (or pi_*(a^{r-1} m)) on A^2.
RationalMatrix z_differential(const GradedAlgebra& a, const ZSpec& z, const Element& x);

/// Zariski tangent space of the scheme Z at a; throws std::invalid_argument if a is not in Z.
RationalSubspace tangent_space(const GradedAlgebra& a, const ZSpec& z, const Element& x);

enum class ComponentVerdict { Component, NotComponent, Inconclusive };
std::string to_string(ComponentVerdict v);

struct ComponentCertificate {
  RationalSubspace subspace;
  std::string zspec;
  ComponentVerdict verdict = ComponentVerdict::Inconclusive;
  std::optional<Element> witness;
  std::size_t tangent_dim = 0;
  /// 1: tangent space equals S. 2: tangent space is S + Qk and the quadratic
  /// term a^{l-2} k^2 leaves the image of the differential.
  int order = 0;
  std::optional<Element> excess_direction;
  std::size_t witnesses_tried = 0;
  std::string detail;
};

struct CertifyOptions {
  int height = 3;
  std::size_t exhaustive_max_dim = 3;
  std::size_t random_samples = 64;
  std::uint64_t seed = 1;
};

ComponentCertificate certify_component(const GradedAlgebra& a, const RationalSubspace& s, const ZSpec& z,
                                       const CertifyOptions& options = {});

Json certificate_to_json(const GradedAlgebra& a, const ComponentCertificate& c);

/// Rank of (x_i) -> sum lambda_i x_i on (A^l)^n; odd rank obstructs any real
/// Hodge structure in which the lambda_i are Hodge classes (l odd).
ObstructionReport even_rank_test(const GradedAlgebra& a, const std::vector<Element>& forced, int l,
                                 const std::vector<ComponentCertificate>& certificates = {});

/// q' <= n(n-1)/2 and (q - q')(n(n-1)/2 - q') > n^2; false unless q in {2q', 2q'+1}.
bool condnum_predicate(long n, long q, long qprime);

/// Columns of mu are indexed by pairs i<j of a basis of H (dim 2n), lexicographically.
std::size_t wedge2_pair_count(std::size_t dim_h);
std::size_t half_subspace_verify(const RationalMatrix& mu, const ComplexSubspace& w);

struct HalfSubspaceOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  long entry_bound = 3;
};

/// Candidates are tried first, then random W. CLEAR as soon as some W has
/// rank <= q' (q = rank mu = 2q' or 2q'+1).
ObstructionReport half_subspace_search(const RationalMatrix& mu, std::size_t dim_h, const HalfSubspaceOptions& options,
                                       const std::vector<ComplexSubspace>& candidates = {});

/// The wedge map H^1 x H^1 -> H^2 of an algebra as a mu matrix.
RationalMatrix wedge_mu(const GradedAlgebra& a, int k = 1);

struct TensorSplitResult {
  Element a, b;  // components of omega in A^2, B^2
  ObstructionReport report;
};

/// M must be tensor_product(A, B).
TensorSplitResult tensor_split(const AlgebraPtr& a, const AlgebraPtr& b, const AlgebraPtr& m, const Element& omega,
                               const CertifyOptions& options = {});

struct BetaSolution {
  Element alpha0;  // base class with beta = h + pi^* alpha0
  Element beta;
  bool gysin_beta_r_zero = false;
  /// pi_*(beta + pi^*a)^r - pi_* beta^r = r a on a basis of H^2(base)
  bool shift_identity = false;
};

/// Solves pi_*(h + pi^*a)^r = 0; works for any c_1.
BetaSolution solve_beta(const ProjectiveBundle& pb);

struct ProjbundleResult {
  Element beta;
  MixedElement alpha;  // beta^r = sum alpha_i beta^{r-i}
  ObstructionReport report;
};

/// Throws std::invalid_argument when the base is not generated in degrees <= 2 or c_1 != 0.
ProjbundleResult projbundle_transfer(const ProjectiveBundle& pb, const CertifyOptions& options = {});

/// True iff every A^k, k >= 3, is spanned by A^1 A^{k-1} + A^2 A^{k-2}; reports the first failing degree.
std::optional<int> generation_failure_degree(const GradedAlgebra& a);

}  // namespace hodgealg
