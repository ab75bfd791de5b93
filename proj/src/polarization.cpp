#include "hodgealg/polarization.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgealg {

namespace {

void require_full(const GradedAlgebra& a, const char* what) {
  if (a.truncated()) throw std::domain_error(std::string(what) + ": algebra is truncated");
}

void require_omega(const GradedAlgebra& a, const Element& omega) {
  if (omega.degree != 2) throw std::invalid_argument("omega must have degree 2");
  if (a.formal_dimension() % 2) throw std::invalid_argument("odd formal dimension");
}

Element omega_power(const GradedAlgebra& a, const Element& omega, int e) {
  if (e == 0) return a.unit();
  return a.power(omega, e);
}

}  // namespace

LefschetzReport lefschetz_check(const GradedAlgebra& a, const Element& omega) {
  require_full(a, "lefschetz_check");
  require_omega(a, omega);
  LefschetzReport rep;
  rep.omega = omega;
  rep.n = a.formal_dimension() / 2;
  rep.passed = true;
  for (int k = 0; k <= rep.n; ++k) {
    Element w = omega_power(a, omega, rep.n - k);
    std::size_t r = rank(multiplication_matrix(a, w, k));
    bool iso = r == a.dim(k) && a.dim(k) == a.dim(2 * rep.n - k);
    rep.iso.push_back(iso);
    rep.ranks.push_back(r);
    rep.dims.push_back(a.dim(k));
    rep.primitive_dims.push_back(primitive_part(a, omega, k).dim());
    if (!iso && rep.passed) {
      rep.passed = false;
      rep.first_failure = k;
    }
  }
  return rep;
}

RationalSubspace primitive_part(const GradedAlgebra& a, const Element& omega, int k) {
  require_full(a, "primitive_part");
  require_omega(a, omega);
  const int n = a.formal_dimension() / 2;
  if (k > n) throw std::invalid_argument("primitive_part: k > n");
  const int e = n + 1 - k;
  if (k + 2 * e > a.formal_dimension()) return RationalSubspace::whole(k, a.dim(k));
  auto ker = kernel(multiplication_matrix(a, omega_power(a, omega, e), k));
  return RationalSubspace::span(k, a.dim(k), ker);
}

LefschetzDecomposition lefschetz_decompose(const GradedAlgebra& a, const Element& omega, int k) {
  const int n = a.formal_dimension() / 2;
  if (k < 0 || k > n) throw std::invalid_argument("lefschetz_decompose: k out of range");
  LefschetzDecomposition out;
  std::vector<Coords<Rational>> all;
  for (int i = 0; k - 2 * i >= 0; ++i) {
    RationalSubspace prim = primitive_part(a, omega, k - 2 * i);
    Element w = omega_power(a, omega, i);
    std::vector<Coords<Rational>> img;
    for (const auto& b : prim.basis_elements()) img.push_back(a.mul(w, b).coords);
    auto s = RationalSubspace::span(k, a.dim(k), img);
    all.insert(all.end(), s.basis().begin(), s.basis().end());
    out.components.push_back({i, std::move(s)});
  }
  // the components must be independent and fill A^k
  std::size_t total = 0;
  for (const auto& c : out.components) total += c.space.dim();
  std::size_t r = all.empty() ? 0 : rank(RationalMatrix::from_coord_rows(all, a.dim(k)));
  out.rank_deficit = a.dim(k) - r + (total - r);
  return out;
}

RationalMatrix q_form(const GradedAlgebra& a, const Element& omega, int k) {
  require_full(a, "q_form");
  const int n = a.formal_dimension() / 2;
  Element w = omega_power(a, omega, n - k);
  RationalMatrix q(a.dim(k), a.dim(k));
  std::vector<Element> wx;
  for (std::size_t i = 0; i < a.dim(k); ++i) wx.push_back(a.mul(w, a.basis_element(k, i)));
  for (std::size_t i = 0; i < a.dim(k); ++i)
    for (std::size_t j = 0; j < a.dim(k); ++j) q(i, j) = a.trace(a.mul(wx[i], a.basis_element(k, j)));
  return q;
}

int orientation(const GradedAlgebra& a, const Element& omega) {
  require_full(a, "orientation");
  return sign(a.trace(omega_power(a, omega, a.formal_dimension() / 2)));
}

int hr_expected_sign(int p, int q, int r) {
  const int k = 2 * r + p + q;
  const int kp = p + q;  // primitive degree
  GaussRational s = i_power(static_cast<long>(k) * (k - 1)) * i_power(p - q - kp);
  if (!s.is_real()) throw std::logic_error("Hodge-Riemann sign is not real");
  return sign(s.re());
}

GaussMatrix h_gram(const GradedAlgebra& a, const Element& omega, int orient, const std::vector<ComplexElement>& x,
                   const std::vector<ComplexElement>& y) {
  GaussMatrix g(x.size(), y.size());
  if (x.empty() || y.empty()) return g;
  const int k = x.front().degree;
  const int n = a.formal_dimension() / 2;
  ComplexElement w = complexify(omega_power(a, omega, n - k));
  RationalMatrix pair = pairing_matrix(a, 2 * n - k);  // A^{2n-k} x A^k
  const GaussRational c = i_power(k) * GaussRational(make_rational(orient));
  for (std::size_t s = 0; s < x.size(); ++s) {
    ComplexElement wx = a.mul(w, x[s]);
    for (std::size_t t = 0; t < y.size(); ++t) {
      GaussRational acc;
      Coords<GaussRational> yb = y[t].coords.conj();
      wx.coords.for_each_nonzero([&](std::size_t i, const GaussRational& u) {
        yb.for_each_nonzero([&](std::size_t j, const GaussRational& v) {
          if (!FieldTraits<Rational>::is_zero(pair(i, j))) acc += u * v * GaussRational(pair(i, j));
        });
      });
      g(s, t) = c * acc;
    }
  }
  return g;
}

std::vector<ComplexElement> hr_block_basis(const HodgeStructure& h, const Element& omega, int p, int q, int r) {
  const GradedAlgebra& a = *h.algebra();
  const int kp = p + q;
  auto pcs = h.pieces(kp);
  auto it = pcs.find({p, q});
  if (it == pcs.end()) return {};
  ComplexSubspace piece = ComplexSubspace::span(kp, a.dim(kp), it->second);
  ComplexSubspace prim = complexify(primitive_part(a, omega, kp)).intersect(piece);
  ComplexElement w = complexify(omega_power(a, omega, r));
  std::vector<ComplexElement> out;
  for (const auto& b : prim.basis_elements()) out.push_back(a.mul(w, b));
  return out;
}

GaussMatrix h_form(const HodgeStructure& h, const Element& omega, int p, int q, int r) {
  const GradedAlgebra& a = *h.algebra();
  if (!h.has_type(complexify(omega), 1, 1)) throw std::invalid_argument("h_form: omega is not of type (1,1)");
  auto basis = hr_block_basis(h, omega, p, q, r);
  return h_gram(a, omega, orientation(a, omega), basis, basis);
}

std::string to_string(PolarizationVerdict v) {
  return v == PolarizationVerdict::Polarized ? "POLARIZED" : "NOT_POLARIZED";
}

PolarizationCheck hodge_riemann_check(const HodgeStructure& h, const Element& omega) {
  const GradedAlgebra& a = *h.algebra();
  auto lef = lefschetz_check(a, omega);
  if (!lef.passed)
    throw std::invalid_argument("hodge_riemann_check: Lefschetz fails in degree " + std::to_string(*lef.first_failure));
  auto hv = validate_hodge(h);
  if (!hv.passed()) throw std::invalid_argument("hodge_riemann_check: invalid Hodge structure");
  if (!h.has_type(complexify(omega), 1, 1))
    throw std::invalid_argument("hodge_riemann_check: omega is not of type (1,1)");

  PolarizationCheck out;
  out.omega = omega;
  out.orientation = orientation(a, omega);
  const int n = lef.n;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<ComplexElement>> bases;
    std::vector<std::string> names;
    for (int r = 0; k - 2 * r >= 0; ++r) {
      for (const auto& [pq, span] : h.pieces(k - 2 * r)) {
        (void)span;
        auto [p, q] = pq;
        auto basis = hr_block_basis(h, omega, p, q, r);
        if (basis.empty()) continue;
        BlockRecord rec{p, q, r, k, basis.size(), {}, hr_expected_sign(p, q, r), false};
        GaussMatrix g = h_gram(a, omega, out.orientation, basis, basis);
        rec.inertia = hermitian_inertia(g);
        rec.ok = rec.expected_sign > 0 ? rec.inertia.positive_definite() : rec.inertia.negative_definite();
        if (!rec.ok && !out.first_violation) out.first_violation = rec;
        out.blocks.push_back(rec);
        bases.push_back(std::move(basis));
        names.push_back("w^" + std::to_string(r) + pq_name(pq));
      }
    }
    for (std::size_t s = 0; s < bases.size(); ++s)
      for (std::size_t t = s + 1; t < bases.size(); ++t)
        if (!h_gram(a, omega, out.orientation, bases[s], bases[t]).is_zero() && out.cross_orthogonal) {
          out.cross_orthogonal = false;
          out.cross_detail = "degree " + std::to_string(k) + ": " + names[s] + " not orthogonal to " + names[t];
        }
  }
  out.verdict = (!out.first_violation && out.cross_orthogonal) ? PolarizationVerdict::Polarized
                                                               : PolarizationVerdict::NotPolarized;
  return out;
}

SignatureFormulaResult signature_formula(const Inertia& middle, const std::vector<std::size_t>& even_betti) {
  SignatureFormulaResult r;
  r.inertia = middle;
  r.tau = middle.signature();
  for (std::size_t i = 0; i < even_betti.size(); ++i)
    r.alternating += (i % 2 ? -1L : 1L) * static_cast<long>(even_betti[i]);
  r.passed = std::labs(r.tau) == std::labs(r.alternating);
  return r;
}

SignatureFormulaResult signature_formula_check(const GradedAlgebra& a) {
  require_full(a, "signature_formula_check");
  const int m = a.formal_dimension();
  if (m % 4) throw std::invalid_argument("signature formula needs dimension divisible by 4");
  std::vector<std::size_t> betti;
  for (int k = 0; k <= m; ++k) {
    if (k % 2) {
      if (a.dim(k)) throw std::invalid_argument("signature formula: odd cohomology in degree " + std::to_string(k));
    } else {
      betti.push_back(a.dim(k));
    }
  }
  return signature_formula(signature(pairing_matrix(a, m / 2)), betti);
}

SimpsonResult simpson_lemma_check(const GradedAlgebra& a, const HodgeStructure* h) {
  SimpsonResult out;
  const int n = a.formal_dimension() / 2;
  for (int i = 0; 4 * i + 2 <= n; ++i) {
    if (a.dim(2 * i + 1) == 0) continue;
    if (4 * i + 2 > a.top_degree()) continue;
    SimpsonEntry e;
    e.i = i;
    e.bigraded = h != nullptr;
    if (h) {
      auto pcs = h->pieces(4 * i + 2);
      auto it = pcs.find({2 * i + 1, 2 * i + 1});
      e.rank = it == pcs.end() ? 0 : span_basis(it->second, a.dim(4 * i + 2)).size();
    } else {
      e.rank = a.dim(4 * i + 2);
    }
    e.ok = e.rank >= 2;
    out.passed = out.passed && e.ok;
    out.entries.push_back(e);
  }
  return out;
}

SparseMatrix<Rational> assemble_middle_form(const std::vector<FormBlock>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (b.kind == FormBlock::Kind::Hyperbolic) {
      n += 2 * b.d;
      continue;
    }
    if (b.form.rows() != b.form.cols()) throw std::invalid_argument("assemble_middle_form: block not square");
    for (std::size_t r = 0; r < b.form.rows(); ++r)
      for (const auto& [c, v] : b.form.row(r))
        if (b.form.get(c, r) != v) throw std::invalid_argument("assemble_middle_form: block not symmetric");
    n += b.form.rows();
  }
  SparseMatrix<Rational> out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    if (b.kind == FormBlock::Kind::Hyperbolic) {
      for (std::size_t i = 0; i < b.d; ++i) {
        out.insert(off + i, off + b.d + i, Rational(1));
        out.insert(off + b.d + i, off + i, Rational(1));
      }
      off += 2 * b.d;
      continue;
    }
    const bool neg = b.kind == FormBlock::Kind::Negated;
    for (std::size_t r = 0; r < b.form.rows(); ++r)
      for (const auto& [c, v] : b.form.row(r)) out.insert(off + r, off + c, neg ? Rational(-v) : v);
    off += b.form.rows();
  }
  return out;
}

SparseMatrix<Rational> p1_power_middle_form(int k) {
  if (k <= 0 || k % 2 || k > 30) throw std::invalid_argument("p1_power_middle_form: need even 0 < k <= 30");
  const int half = k / 2;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> masks;
  // subsets of size k/2 in increasing numeric order
  for (std::uint32_t s = (std::uint32_t{1} << half) - 1; s <= full;) {
    masks.push_back(s);
    std::uint32_t c = s & -s, r = s + c;
    if (r > full || r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  SparseMatrix<Rational> out(masks.size(), masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    auto j = std::lower_bound(masks.begin(), masks.end(), full ^ masks[i]) - masks.begin();
    out.insert(i, static_cast<std::size_t>(j), Rational(1));
  }
  return out;
}

}  // namespace hodgealg
