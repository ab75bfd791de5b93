#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgealg/coords.hpp"
#include "hodgealg/scalar.hpp"

namespace hodgealg {

/// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<F>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = FieldTraits<F>::one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t k = 0; k < c; ++k) m(r, k) = rows[r][k];
    }
    return m;
  }

  /// Each coordinate vector becomes one row.
  static Matrix from_coord_rows(const std::vector<Coords<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].dim() != cols) throw std::invalid_argument("row length mismatch");
      rows[r].for_each_nonzero([&](std::size_t k, const F& v) { m(r, k) = v; });
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = FieldTraits<F>::conj((*this)(r, c));
    return t;
  }

  Coords<F> row(std::size_t r) const {
    std::vector<F> v(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return Coords<F>::from_dense(std::move(v));
  }

  Coords<F> apply(const Coords<F>& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<F> out(rows_, FieldTraits<F>::zero());
    x.for_each_nonzero([&](std::size_t c, const F& v) {
      for (std::size_t r = 0; r < rows_; ++r)
        if (!FieldTraits<F>::is_zero((*this)(r, c))) out[r] += (*this)(r, c) * v;
    });
    return Coords<F>::from_dense(std::move(out));
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!FieldTraits<F>::is_zero(v)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& v = a(r, k);
        if (FieldTraits<F>::is_zero(v)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!FieldTraits<F>::is_zero(b(k, c))) out(r, c) += v * b(k, c);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& m) {
    Matrix out = m;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Row-compressed sparse matrix; used for large, very sparse Gram matrices.
template <class F>
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, F>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds v at (r, c); callers must not insert the same position twice.
  void insert(std::size_t r, std::size_t c, F v) {
    if (r >= rows_.size() || c >= cols_) throw std::out_of_range("sparse matrix index");
    if (FieldTraits<F>::is_zero(v)) return;
    rows_[r].emplace_back(static_cast<std::uint32_t>(c), std::move(v));
  }

  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }

  F get(std::size_t r, std::size_t c) const {
    for (const auto& [k, v] : rows_[r])
      if (k == c) return v;
    return FieldTraits<F>::zero();
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  Matrix<F> to_dense() const {
    Matrix<F> m(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) m(r, c) += v;
    return m;
  }

  static SparseMatrix from_dense(const Matrix<F>& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!FieldTraits<F>::is_zero(m(r, c))) s.insert(r, c, m(r, c));
    return s;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

using RationalMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<GaussRational>;

GaussMatrix complexify(const RationalMatrix& m);

/// Orthogonal direct sum (block diagonal) of square matrices.
template <class F>
Matrix<F> direct_sum(const std::vector<Matrix<F>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<F> out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return out;
}

}  // namespace hodgealg
