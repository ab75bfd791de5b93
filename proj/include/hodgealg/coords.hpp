#pragma once

// Coordinate vectors over Q or Q(i). Storage is sparse below 25% fill and
// dense otherwise; every observable result is independent of the choice.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodgealg/scalar.hpp"

namespace hodgealg {

template <class F>
class Coords {
 public:
  using Entry = std::pair<std::uint32_t, F>;

  Coords() = default;
  explicit Coords(std::size_t dim) : dim_(dim) {}

  static Coords from_dense(std::vector<F> values) {
    Coords c(values.size());
    c.sparse_ = false;
    c.dense_ = std::move(values);
    c.rebalance();
    return c;
  }

  /// Entries may be unsorted and repeated; repeats are summed.
  static Coords from_entries(std::size_t dim, std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Coords c(dim);
    for (auto& [idx, val] : entries) {
      if (idx >= dim) throw std::out_of_range("coordinate index out of range");
      if (!c.entries_.empty() && c.entries_.back().first == idx)
        c.entries_.back().second += val;
      else
        c.entries_.emplace_back(idx, std::move(val));
    }
    c.prune();
    c.rebalance();
    return c;
  }

  static Coords unit(std::size_t dim, std::size_t idx, F value = FieldTraits<F>::one()) {
    std::vector<Entry> e;
    e.emplace_back(static_cast<std::uint32_t>(idx), std::move(value));
    return from_entries(dim, std::move(e));
  }

  std::size_t dim() const { return dim_; }
  bool is_sparse() const { return sparse_; }

  std::size_t nnz() const {
    if (sparse_) return entries_.size();
    std::size_t n = 0;
    for (const auto& v : dense_)
      if (!FieldTraits<F>::is_zero(v)) ++n;
    return n;
  }

  bool is_zero() const { return nnz() == 0; }

  F get(std::size_t idx) const {
    if (!sparse_) return dense_.at(idx);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == idx) return it->second;
    return FieldTraits<F>::zero();
  }

  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (sparse_) {
      for (const auto& [idx, val] : entries_) fn(static_cast<std::size_t>(idx), val);
    } else {
      for (std::size_t k = 0; k < dense_.size(); ++k)
        if (!FieldTraits<F>::is_zero(dense_[k])) fn(k, dense_[k]);
    }
  }

  std::vector<F> to_dense() const {
    if (!sparse_) return dense_;
    std::vector<F> out(dim_, FieldTraits<F>::zero());
    for (const auto& [idx, val] : entries_) out[idx] = val;
    return out;
  }

  std::vector<Entry> to_entries() const {
    if (sparse_) return entries_;
    std::vector<Entry> out;
    for_each_nonzero([&](std::size_t k, const F& v) { out.emplace_back(static_cast<std::uint32_t>(k), v); });
    return out;
  }

  Coords& operator+=(const Coords& o) { return axpy(FieldTraits<F>::one(), o); }
  Coords& operator-=(const Coords& o) { return axpy(-FieldTraits<F>::one(), o); }

  /// this += a * o
  Coords& axpy(const F& a, const Coords& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("coordinate dimension mismatch");
    if (FieldTraits<F>::is_zero(a)) return *this;
    if (!sparse_) {
      o.for_each_nonzero([&](std::size_t k, const F& v) { dense_[k] += a * v; });
      rebalance();
      return *this;
    }
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + o.nnz());
    auto other = o.to_entries();
    std::size_t p = 0, q = 0;
    while (p < entries_.size() || q < other.size()) {
      if (q == other.size() || (p < entries_.size() && entries_[p].first < other[q].first)) {
        merged.push_back(std::move(entries_[p++]));
      } else if (p == entries_.size() || other[q].first < entries_[p].first) {
        merged.emplace_back(other[q].first, a * other[q].second);
        ++q;
      } else {
        F s = entries_[p].second + a * other[q].second;
        if (!FieldTraits<F>::is_zero(s)) merged.emplace_back(entries_[p].first, std::move(s));
        ++p;
        ++q;
      }
    }
    entries_ = std::move(merged);
    rebalance();
    return *this;
  }

  Coords scaled(const F& a) const {
    if (FieldTraits<F>::is_zero(a)) return Coords(dim_);
    Coords c = *this;
    if (c.sparse_)
      for (auto& e : c.entries_) e.second *= a;
    else
      for (auto& v : c.dense_) v *= a;
    return c;
  }

  Coords conj() const {
    Coords c = *this;
    if (c.sparse_)
      for (auto& e : c.entries_) e.second = FieldTraits<F>::conj(e.second);
    else
      for (auto& v : c.dense_) v = FieldTraits<F>::conj(v);
    return c;
  }

  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(const F& a, const Coords& v) { return v.scaled(a); }

  friend bool operator==(const Coords& a, const Coords& b) {
    if (a.dim_ != b.dim_) return false;
    return a.to_entries() == b.to_entries();
  }

 private:
  void prune() {
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const Entry& e) { return FieldTraits<F>::is_zero(e.second); }),
                   entries_.end());
  }

  // Sparse below 25% fill.
  void rebalance() {
    std::size_t n = nnz();
    bool want_sparse = 4 * n < dim_ || dim_ == 0;
    if (want_sparse == sparse_) return;
    if (want_sparse) {
      entries_ = to_entries();
      dense_.clear();
      dense_.shrink_to_fit();
    } else {
      dense_ = to_dense();
      entries_.clear();
      entries_.shrink_to_fit();
    }
    sparse_ = want_sparse;
  }

  std::size_t dim_ = 0;
  bool sparse_ = true;
  std::vector<Entry> entries_;
  std::vector<F> dense_;
};

/// Order-independent accumulator used by products and map applications.
template <class F>
class CoordsAccumulator {
 public:
  explicit CoordsAccumulator(std::size_t dim) : dim_(dim) {}

  void add(std::size_t idx, const F& v) {
    if (FieldTraits<F>::is_zero(v)) return;
    auto [it, inserted] = acc_.try_emplace(static_cast<std::uint32_t>(idx), v);
    if (!inserted) it->second += v;
  }

  void add(const Coords<F>& c, const F& scale) {
    c.for_each_nonzero([&](std::size_t k, const F& v) { add(k, scale * v); });
  }

  Coords<F> finish() {
    std::vector<typename Coords<F>::Entry> e;
    e.reserve(acc_.size());
    for (auto& [k, v] : acc_)
      if (!FieldTraits<F>::is_zero(v)) e.emplace_back(k, std::move(v));
    acc_.clear();
    return Coords<F>::from_entries(dim_, std::move(e));
  }

 private:
  std::size_t dim_;
  std::map<std::uint32_t, F> acc_;
};

/// Lift rational coordinates into Q(i).
Coords<GaussRational> complexify(const Coords<Rational>& c);

}  // namespace hodgealg
