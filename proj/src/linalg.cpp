#include "hodgealg/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace hodgealg {

namespace {

template <class F>
using RingOf = typename FieldTraits<F>::Ring;

// Scales each row by the lcm of its denominators so it lies in the ring.
template <class F>
std::vector<std::vector<RingOf<F>>> to_ring_rows(const Matrix<F>& m) {
  std::vector<std::vector<RingOf<F>>> out(m.rows(), std::vector<RingOf<F>>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) FieldTraits<F>::accumulate_denominator(lcm, m(r, c));
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = FieldTraits<F>::to_ring(m(r, c), lcm);
  }
  return out;
}

// Bareiss fraction-free forward elimination. Leaves `rows` in row echelon
// form (first `pivots.size()` rows) and returns the pivot columns.
template <class R>
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<R>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  R prev{};
  prev = R{1};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && ring_is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const R pivot = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const R factor = rows[i][c];
      if (ring_is_zero(factor)) {
        // Still has to be scaled to stay on the Bareiss lattice.
        for (std::size_t j = c + 1; j < cols; ++j)
          if (!ring_is_zero(rows[i][j])) rows[i][j] = exact_div(pivot * rows[i][j], prev);
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j)
        rows[i][j] = exact_div(pivot * rows[i][j] - factor * rows[r][j], prev);
      rows[i][c] = R{};
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
Echelon<F> echelon_to_rref(const std::vector<std::vector<RingOf<F>>>& ring_rows,
                           const std::vector<std::size_t>& pivots, std::size_t cols) {
  const std::size_t rk = pivots.size();
  Matrix<F> e(rk, cols);
  for (std::size_t r = 0; r < rk; ++r) {
    const F inv = F(FieldTraits<F>::one()) / FieldTraits<F>::from_ring(ring_rows[r][pivots[r]]);
    for (std::size_t c = pivots[r]; c < cols; ++c)
      if (!ring_is_zero(ring_rows[r][c])) e(r, c) = FieldTraits<F>::from_ring(ring_rows[r][c]) * inv;
  }
  // Back substitution, bottom-up.
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      F f = e(above, pc);
      if (FieldTraits<F>::is_zero(f)) continue;
      for (std::size_t c = pc; c < cols; ++c)
        if (!FieldTraits<F>::is_zero(e(r, c))) e(above, c) -= f * e(r, c);
    }
  }
  return {std::move(e), pivots};
}

// Congruence diagonalization shared by the symmetric and Hermitian cases.
template <class F>
Inertia congruence_inertia(Matrix<F> a) {
  const std::size_t n = a.rows();
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Inertia out;
  auto real_sign = [](const F& x) {
    if constexpr (std::is_same_v<F, Rational>) {
      return sgn(x);
    } else {
      return sgn(x.re());
    }
  };
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (active[i] && !FieldTraits<F>::is_zero(a(i, i))) piv = i;
    if (piv != n) {
      const F d = a(piv, piv);
      (real_sign(d) > 0 ? out.pos : out.neg)++;
      active[piv] = false;
      --remaining;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || FieldTraits<F>::is_zero(a(j, piv))) continue;
        const F f = a(j, piv) / d;
        for (std::size_t k = 0; k < n; ++k)
          if (active[k] && !FieldTraits<F>::is_zero(a(piv, k))) a(j, k) -= f * a(piv, k);
      }
      continue;
    }
    // All active diagonal entries vanish: look for a hyperbolic pair.
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (active[j] && !FieldTraits<F>::is_zero(a(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi == n) {
      out.null += remaining;
      break;
    }
    // Block [[0,b],[conj b,0]] has inertia (1,1); its inverse is
    // [[0, 1/conj b],[1/b, 0]].
    const F b = a(pi, pj);
    const F b_inv = F(FieldTraits<F>::one()) / b;
    const F bc_inv = F(FieldTraits<F>::one()) / FieldTraits<F>::conj(b);
    out.pos++;
    out.neg++;
    active[pi] = active[pj] = false;
    remaining -= 2;
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k]) continue;
      const F ki = a(k, pi), kj = a(k, pj);
      if (FieldTraits<F>::is_zero(ki) && FieldTraits<F>::is_zero(kj)) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!active[l]) continue;
        const F& il = a(pi, l);
        const F& jl = a(pj, l);
        if (FieldTraits<F>::is_zero(il) && FieldTraits<F>::is_zero(jl)) continue;
        a(k, l) -= ki * jl * bc_inv + kj * il * b_inv;
      }
    }
  }
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

template <class F>
bool is_hermitian(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (!(m(r, c) == FieldTraits<F>::conj(m(c, r)))) return false;
  return true;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  auto rows = to_ring_rows(m);
  return bareiss_echelon(rows, m.cols()).size();
}

template <class F>
Echelon<F> rref(const Matrix<F>& m) {
  auto rows = to_ring_rows(m);
  auto pivots = bareiss_echelon(rows, m.cols());
  return echelon_to_rref<F>(rows, pivots, m.cols());
}

template <class F>
std::vector<Coords<F>> kernel(const Matrix<F>& m) {
  Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Coords<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename Coords<F>::Entry> entries;
    entries.emplace_back(static_cast<std::uint32_t>(f), FieldTraits<F>::one());
    for (std::size_t r = 0; r < e.rank(); ++r)
      if (!FieldTraits<F>::is_zero(e.rows(r, f)))
        entries.emplace_back(static_cast<std::uint32_t>(e.pivots[r]), -e.rows(r, f));
    basis.push_back(Coords<F>::from_entries(m.cols(), std::move(entries)));
  }
  return basis;
}

template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon<F> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), FieldTraits<F>::zero());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.rows(r, m.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = FieldTraits<F>::one();
  }
  Echelon<F> e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows(r, n + c);
  return inv;
}

Inertia signature(const RationalMatrix& s) {
  if (!is_hermitian(s)) throw std::invalid_argument("signature: matrix is not symmetric");
  return congruence_inertia(s);
}

Inertia hermitian_inertia(const GaussMatrix& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("hermitian_inertia: matrix is not Hermitian");
  return congruence_inertia(h);
}

std::size_t rank(const SparseMatrix<Rational>& m) {
  // Bipartite row/column graph; nodes [0, rows) are rows, [rows, rows+cols) columns.
  const std::size_t nr = m.rows(), nc = m.cols();
  DisjointSets ds(nr + nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (const auto& [c, v] : m.row(r)) ds.unite(r, nr + c);
  std::vector<std::vector<std::size_t>> comp_rows(nr + nc), comp_cols(nr + nc);
  for (std::size_t r = 0; r < nr; ++r)
    if (!m.row(r).empty()) comp_rows[ds.find(r)].push_back(r);
  for (std::size_t c = 0; c < nc; ++c) comp_cols[ds.find(nr + c)].push_back(c);
  std::size_t total = 0;
  for (std::size_t root = 0; root < nr + nc; ++root) {
    if (comp_rows[root].empty()) continue;
    const auto& rs = comp_rows[root];
    const auto& cs = comp_cols[root];
    std::vector<std::size_t> col_pos(nc, 0);
    for (std::size_t k = 0; k < cs.size(); ++k) col_pos[cs[k]] = k;
    RationalMatrix block(rs.size(), cs.size());
    for (std::size_t k = 0; k < rs.size(); ++k)
      for (const auto& [c, v] : m.row(rs[k])) block(k, col_pos[c]) += v;
    total += rank(block);
  }
  return total;
}

Inertia signature(const SparseMatrix<Rational>& s) {
  const std::size_t n = s.rows();
  if (s.cols() != n) throw std::invalid_argument("signature: matrix is not square");
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : s.row(r))
      if (!(s.get(c, r) == v)) throw std::invalid_argument("signature: matrix is not symmetric");
  DisjointSets ds(n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : s.row(r)) ds.unite(r, c);
  std::vector<std::vector<std::size_t>> comps(n);
  for (std::size_t r = 0; r < n; ++r) comps[ds.find(r)].push_back(r);
  Inertia total;
  std::vector<std::size_t> pos(n, 0);
  for (const auto& comp : comps) {
    if (comp.empty()) continue;
    if (comp.size() == 1 && s.row(comp[0]).empty()) {
      total.null++;
      continue;
    }
    for (std::size_t k = 0; k < comp.size(); ++k) pos[comp[k]] = k;
    RationalMatrix block(comp.size(), comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (const auto& [c, v] : s.row(comp[k])) block(k, pos[c]) += v;
    Inertia part = congruence_inertia(block);
    total.pos += part.pos;
    total.neg += part.neg;
    total.null += part.null;
  }
  return total;
}

template <class F>
std::vector<Coords<F>> span_basis(const std::vector<Coords<F>>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon<F> e = rref(Matrix<F>::from_coord_rows(vectors, dim));
  std::vector<Coords<F>> out;
  out.reserve(e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.rows.row(r));
  return out;
}

template <class F>
std::vector<Coords<F>> intersect_spans(const std::vector<Coords<F>>& a, const std::vector<Coords<F>>& b,
                                       std::size_t dim) {
  auto ba = span_basis(a, dim);
  auto bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // x = sum s_i a_i = sum t_j b_j  <=>  (s, -t) in the left kernel of [A; B].
  std::vector<Coords<F>> stacked = ba;
  stacked.insert(stacked.end(), bb.begin(), bb.end());
  Matrix<F> st = Matrix<F>::from_coord_rows(stacked, dim).transpose();
  auto ker = kernel(st);
  std::vector<Coords<F>> out;
  for (const auto& k : ker) {
    CoordsAccumulator<F> acc(dim);
    k.for_each_nonzero([&](std::size_t idx, const F& v) {
      if (idx < ba.size()) acc.add(ba[idx], v);
    });
    out.push_back(acc.finish());
  }
  return span_basis(out, dim);
}

template <class F>
bool in_row_space(const Echelon<F>& e, const Coords<F>& v) {
  // Reduce v against the RREF rows; only pivot coordinates are needed.
  std::vector<F> w = v.to_dense();
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const F f = w[e.pivots[r]];
    if (FieldTraits<F>::is_zero(f)) continue;
    for (std::size_t c = e.pivots[r]; c < w.size(); ++c)
      if (!FieldTraits<F>::is_zero(e.rows(r, c))) w[c] -= f * e.rows(r, c);
  }
  for (const auto& x : w)
    if (!FieldTraits<F>::is_zero(x)) return false;
  return true;
}

GaussMatrix complexify(const RationalMatrix& m) {
  GaussMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussRational(m(r, c));
  return out;
}

Coords<GaussRational> complexify(const Coords<Rational>& c) {
  std::vector<Coords<GaussRational>::Entry> e;
  c.for_each_nonzero([&](std::size_t k, const Rational& v) { e.emplace_back(static_cast<std::uint32_t>(k), GaussRational(v)); });
  return Coords<GaussRational>::from_entries(c.dim(), std::move(e));
}

#define HODGEALG_INSTANTIATE(F)                                                                        \
  template bool is_hermitian<F>(const Matrix<F>&);                                                     \
  template std::size_t rank<F>(const Matrix<F>&);                                                      \
  template Echelon<F> rref<F>(const Matrix<F>&);                                                       \
  template std::vector<Coords<F>> kernel<F>(const Matrix<F>&);                                         \
  template std::optional<std::vector<F>> solve<F>(const Matrix<F>&, const std::vector<F>&);            \
  template std::optional<Matrix<F>> inverse<F>(const Matrix<F>&);                                      \
  template std::vector<Coords<F>> span_basis<F>(const std::vector<Coords<F>>&, std::size_t);           \
  template std::vector<Coords<F>> intersect_spans<F>(const std::vector<Coords<F>>&,                    \
                                                     const std::vector<Coords<F>>&, std::size_t);      \
  template bool in_row_space<F>(const Echelon<F>&, const Coords<F>&);

HODGEALG_INSTANTIATE(Rational)
HODGEALG_INSTANTIATE(GaussRational)

#undef HODGEALG_INSTANTIATE

}  // namespace hodgealg
