#pragma once

// Lefschetz property, the pairings q_w / h_w, Hodge-Riemann sign checks and
// the intersection-form tests that only need the middle degree.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hodgealg/algebra.hpp"
#include "hodgealg/hodge.hpp"
#include "hodgealg/linalg.hpp"
#include "hodgealg/subspace.hpp"

namespace hodgealg {

struct LefschetzReport {
  Element omega;
  int n = 0;
  // indexed by k = 0..n
  std::vector<bool> iso;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> primitive_dims;
  bool passed = false;
  std::optional<int> first_failure;
};

/// Throws std::domain_error on truncated algebras.
LefschetzReport lefschetz_check(const GradedAlgebra& a, const Element& omega);

/// Ker(w^{n+1-k}) on A^k.
RationalSubspace primitive_part(const GradedAlgebra& a, const Element& omega, int k);

struct LefschetzComponent {
  int i = 0;  // power of omega
  RationalSubspace space;
};

struct LefschetzDecomposition {
  std::vector<LefschetzComponent> components;
  std::size_t rank_deficit = 0;  // dim A^k minus dim of the sum
  bool ok() const { return rank_deficit == 0; }
};

LefschetzDecomposition lefschetz_decompose(const GradedAlgebra& a, const Element& omega, int k);

/// q(a,b) = trace(w^{n-k} a b) on A^k.
RationalMatrix q_form(const GradedAlgebra& a, const Element& omega, int k);

/// Sign of trace(w^n); 0 if w^n = 0.
int orientation(const GradedAlgebra& a, const Element& omega);

/// Predicted sign on w^r H^{p,q}_prim, k = 2r+p+q. Computed through powers
/// of i and asserted real.
int hr_expected_sign(int p, int q, int r);

/// Basis of w^r (P_{p+q} ∩ H^{p,q}) in degree p+q+2r.
std::vector<ComplexElement> hr_block_basis(const HodgeStructure& h, const Element& omega, int p, int q, int r);

/// Gram matrix of h(a,b) = i^k orient trace(w^{n-k} a conj(b)) on w^r H^{p,q}_prim.
GaussMatrix h_form(const HodgeStructure& h, const Element& omega, int p, int q, int r);

/// h between two arbitrary families of degree k.
GaussMatrix h_gram(const GradedAlgebra& a, const Element& omega, int orient, const std::vector<ComplexElement>& x,
                   const std::vector<ComplexElement>& y);

struct BlockRecord {
  int p = 0, q = 0, r = 0, k = 0;
  std::size_t dim = 0;
  Inertia inertia;
  int expected_sign = 0;
  bool ok = false;
};

enum class PolarizationVerdict { Polarized, NotPolarized };
std::string to_string(PolarizationVerdict v);

struct PolarizationCheck {
  Element omega;
  int orientation = 0;
  std::vector<BlockRecord> blocks;
  bool cross_orthogonal = true;
  std::string cross_detail;
  PolarizationVerdict verdict = PolarizationVerdict::NotPolarized;
  std::optional<BlockRecord> first_violation;
};

/// Throws std::invalid_argument when a precondition fails (Lefschetz,
/// invalid H, omega not of type (1,1)).
PolarizationCheck hodge_riemann_check(const HodgeStructure& h, const Element& omega);

struct SignatureFormulaResult {
  Inertia inertia;
  long tau = 0;
  long alternating = 0;  // sum_i (-1)^i b_{2i}
  bool passed = false;
};

/// |tau| == |sum (-1)^i b_{2i}| given the middle form inertia and Betti numbers.
SignatureFormulaResult signature_formula(const Inertia& middle, const std::vector<std::size_t>& even_betti);

/// Throws std::invalid_argument for odd cohomology or m not divisible by 4.
SignatureFormulaResult signature_formula_check(const GradedAlgebra& a);

struct SimpsonEntry {
  int i = 0;
  bool bigraded = false;
  std::size_t rank = 0;  // h^{2i+1,2i+1} or b_{4i+2}
  bool ok = false;
};

struct SimpsonResult {
  bool passed = true;
  std::vector<SimpsonEntry> entries;
};

SimpsonResult simpson_lemma_check(const GradedAlgebra& a, const HodgeStructure* h = nullptr);

struct FormBlock {
  enum class Kind { Form, Hyperbolic, Negated };
  Kind kind = Kind::Form;
  SparseMatrix<Rational> form;  // unused for Hyperbolic
  std::size_t d = 0;            // hyperbolic half-rank

  static FormBlock of(SparseMatrix<Rational> f) { return {Kind::Form, std::move(f), 0}; }
  static FormBlock of(const RationalMatrix& f) { return of(SparseMatrix<Rational>::from_dense(f)); }
  static FormBlock negated(SparseMatrix<Rational> f) { return {Kind::Negated, std::move(f), 0}; }
  static FormBlock negated(const RationalMatrix& f) { return negated(SparseMatrix<Rational>::from_dense(f)); }
  static FormBlock hyperbolic(std::size_t d) { return {Kind::Hyperbolic, {}, d}; }
};

/// Orthogonal direct sum; throws on a non-symmetric block.
SparseMatrix<Rational> assemble_middle_form(const std::vector<FormBlock>& blocks);

/// Middle intersection form of (P^1)^k, k even: h_S . h_T = [T = complement of S].
SparseMatrix<Rational> p1_power_middle_form(int k);

}  // namespace hodgealg
