#pragma once

// Exact linear algebra over Q and Q(i).
//
// Rank and kernel computations clear denominators row by row and run
// Bareiss fraction-free elimination over Z (resp. Z[i]); only the final
// back-substitution touches fractions. Inertia is computed by symmetric
// (resp. Hermitian) congruence with 2x2 hyperbolic blocks for zero pivots,
// never by a floating-point eigensolver.

#include <optional>
#include <vector>

#include "hodgealg/coords.hpp"
#include "hodgealg/matrix.hpp"

namespace hodgealg {

struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t null = 0;

  long signature() const { return static_cast<long>(pos) - static_cast<long>(neg); }
  std::size_t dim() const { return pos + neg + null; }
  bool positive_definite() const { return neg == 0 && null == 0; }
  bool negative_definite() const { return pos == 0 && null == 0; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <class F>
struct Echelon {
  Matrix<F> rows;                    // reduced row echelon form, rank x cols
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
std::size_t rank(const Matrix<F>& m);

/// Reduced row echelon form of m (zero rows dropped).
template <class F>
Echelon<F> rref(const Matrix<F>& m);

/// Basis of {x : m x = 0}, one vector per free column, in RREF-canonical form.
template <class F>
std::vector<Coords<F>> kernel(const Matrix<F>& m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b);

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

/// Sylvester inertia of a symmetric rational matrix. Throws
/// std::invalid_argument on non-symmetric input.
Inertia signature(const RationalMatrix& s);

/// Inertia of a Hermitian Gaussian-rational matrix. Throws
/// std::invalid_argument unless h equals its conjugate transpose.
Inertia hermitian_inertia(const GaussMatrix& h);

/// Same result as the dense routines; each connected block of the sparsity
/// graph is processed independently.
std::size_t rank(const SparseMatrix<Rational>& m);
Inertia signature(const SparseMatrix<Rational>& s);

template <class F>
bool is_hermitian(const Matrix<F>& m);

/// Row-space basis (RREF rows) of the given vectors.
template <class F>
std::vector<Coords<F>> span_basis(const std::vector<Coords<F>>& vectors, std::size_t dim);

/// Basis of span(a) ∩ span(b).
template <class F>
std::vector<Coords<F>> intersect_spans(const std::vector<Coords<F>>& a, const std::vector<Coords<F>>& b,
                                       std::size_t dim);

/// True iff v lies in the row space described by an RREF echelon.
template <class F>
bool in_row_space(const Echelon<F>& e, const Coords<F>& v);

}  // namespace hodgealg
