#include "hodgealg/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hodgealg/linalg.hpp"
#include "hodgealg/polarization.hpp"
#include "hodgealg/random.hpp"

namespace hodgealg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::ObstructedHeuristic: return "OBSTRUCTED_HEURISTIC";
    case Verdict::Clear: return "CLEAR";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(ComponentVerdict v) {
  switch (v) {
    case ComponentVerdict::Component: return "COMPONENT";
    case ComponentVerdict::NotComponent: return "NOT_COMPONENT";
    case ComponentVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Json report_to_json(const ObstructionReport& r) {
  Json j;
  j["test"] = r.test;
  j["verdict"] = to_string(r.verdict);
  j["summary"] = r.summary;
  j["certificate"] = r.certificate;
  return j;
}

ZSpec ZSpec::power_vanish(int l) {
  if (l < 2) throw std::invalid_argument("PowerVanish needs l >= 2");
  return {Kind::PowerVanish, l, std::nullopt};
}

ZSpec ZSpec::gysin_power_vanish(int r, AlgebraMap gysin) {
  if (r < 2) throw std::invalid_argument("GysinPowerVanish needs r >= 2");
  if (gysin.shift() != -2 * (r - 1)) throw std::invalid_argument("Gysin map shift inconsistent with r");
  return {Kind::GysinPowerVanish, r, std::move(gysin)};
}

std::string ZSpec::describe() const {
  return (kind == Kind::PowerVanish ? "PowerVanish(" : "GysinPowerVanish(") + std::to_string(l) + ")";
}

namespace {

// x^e with overflow detection.
Element checked_power(const GradedAlgebra& a, const Element& x, int e) {
  if (e == 0) return a.unit();
  const int d = x.degree * e;
  if (d > a.top_degree() && d <= a.formal_dimension()) throw DegreeOverflow(d);
  return a.power(x, e);
}

Element checked_mul(const GradedAlgebra& a, const Element& x, const Element& y) {
  const int d = x.degree + y.degree;
  if (d > a.top_degree() && d <= a.formal_dimension()) throw DegreeOverflow(d);
  return a.mul(x, y);
}

void check_source(const GradedAlgebra& a, const ZSpec& z) {
  if (z.kind == ZSpec::Kind::GysinPowerVanish && z.gysin->source().get() != &a)
    throw std::invalid_argument("Gysin map does not start at this algebra");
}

// Value of the vanishing map on an arbitrary top-degree product.
Element push(const ZSpec& z, const Element& p) {
  return z.kind == ZSpec::Kind::PowerVanish ? p : z.gysin->apply(p);
}

std::vector<Element> to_elements(const RationalSubspace& s) { return s.basis_elements(); }

Element combine(const std::vector<Element>& basis, const std::vector<long>& c, int degree, std::size_t dim) {
  Element x{degree, Coords<Rational>(dim), false};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) x += basis[i].scaled(make_rational(c[i]));
  return x;
}

Json coords_list(const GradedAlgebra& a, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(element_to_json(a, x));
  return out;
}

}  // namespace

Element z_value(const GradedAlgebra& a, const ZSpec& z, const Element& x) {
  check_source(a, z);
  if (x.degree != 2) throw std::invalid_argument("Z lives in degree 2");
  return push(z, checked_power(a, x, z.l));
}

bool membership(const GradedAlgebra& a, const ZSpec& z, const Element& x) { return z_value(a, z, x).is_zero(); }

RationalMatrix z_differential(const GradedAlgebra& a, const ZSpec& z, const Element& x) {
  check_source(a, z);
  Element p = checked_power(a, x, z.l - 1);
  const int d = p.degree + 2;
  if (d > a.top_degree() && d <= a.formal_dimension()) throw DegreeOverflow(d);
  RationalMatrix m = multiplication_matrix(a, p, 2);
  if (z.kind == ZSpec::Kind::PowerVanish) return m;
  return z.gysin->matrix(d) * m;
}

RationalSubspace tangent_space(const GradedAlgebra& a, const ZSpec& z, const Element& x) {
  if (!membership(a, z, x)) throw std::invalid_argument("tangent_space: point is not on Z");
  return RationalSubspace::span(2, a.dim(2), kernel(z_differential(a, z, x)));
}

ComponentCertificate certify_component(const GradedAlgebra& a, const RationalSubspace& s, const ZSpec& z,
                                       const CertifyOptions& options) {
  check_source(a, z);
  if (s.degree() != 2) throw std::invalid_argument("certify_component: subspace must lie in degree 2");
  if (s.dim() == 0) throw std::invalid_argument("certify_component: empty subspace");
  ComponentCertificate cert;
  cert.subspace = s;
  cert.zspec = z.describe();
  const auto basis = to_elements(s);
  const std::size_t d = basis.size();

  try {
    // S in Z iff every degree-l monomial in the basis vanishes.
    std::vector<std::size_t> pick;
    std::optional<std::string> bad;
    std::function<void(std::size_t, const Element&)> rec = [&](std::size_t start, const Element& acc) {
      if (bad) return;
      if (static_cast<int>(pick.size()) == z.l) {
        if (!push(z, acc).is_zero()) {
          bad = "monomial in basis vectors";
          for (auto i : pick) *bad += " " + std::to_string(i);
          *bad += " does not vanish";
        }
        return;
      }
      for (std::size_t i = start; i < d; ++i) {
        pick.push_back(i);
        rec(i, checked_mul(a, acc, basis[i]));
        pick.pop_back();
      }
    };
    rec(0, a.unit());
    if (bad) {
      cert.verdict = ComponentVerdict::NotComponent;
      cert.detail = "S is not contained in Z: " + *bad;
      return cert;
    }

    std::size_t min_tangent = SIZE_MAX;
    auto try_witness = [&](const Element& x) {
      ++cert.witnesses_tried;
      RationalMatrix dm = z_differential(a, z, x);
      auto ker = kernel(dm);
      min_tangent = std::min(min_tangent, ker.size());
      if (ker.size() == d) {
        cert.verdict = ComponentVerdict::Component;
        cert.witness = x;
        cert.tangent_dim = d;
        cert.order = 1;
        return true;
      }
      if (ker.size() != d + 1) return false;
      // One excess direction: look at the quadratic term.
      std::optional<Element> k;
      for (const auto& v : ker)
        if (!s.contains(v)) {
          k = Element{2, v, false};
          break;
        }
      Element q = push(z, checked_mul(a, checked_power(a, x, z.l - 2), checked_mul(a, *k, *k)));
      if (q.is_zero()) return false;
      RationalMatrix aug(dm.rows(), dm.cols() + 1);
      for (std::size_t r = 0; r < dm.rows(); ++r) {
        for (std::size_t c = 0; c < dm.cols(); ++c) aug(r, c) = dm(r, c);
        aug(r, dm.cols()) = q.coords.get(r);
      }
      if (rank(aug) == rank(dm)) return false;
      cert.verdict = ComponentVerdict::Component;
      cert.witness = x;
      cert.tangent_dim = d + 1;
      cert.order = 2;
      cert.excess_direction = k;
      return true;
    };

    if (d <= options.exhaustive_max_dim) {
      // all coefficient vectors of height <= h, lowest height first
      std::vector<std::vector<long>> pts;
      std::vector<long> c(d, -options.height);
      for (;;) {
        if (std::any_of(c.begin(), c.end(), [](long v) { return v != 0; })) pts.push_back(c);
        std::size_t i = 0;
        while (i < d && c[i] == options.height) c[i++] = -options.height;
        if (i == d) break;
        ++c[i];
      }
      auto height = [](const std::vector<long>& v) {
        long h = 0;
        for (long x : v) h = std::max(h, std::labs(x));
        return h;
      };
      std::stable_sort(pts.begin(), pts.end(),
                       [&](const auto& u, const auto& v) { return height(u) < height(v); });
      for (const auto& p : pts)
        if (try_witness(combine(basis, p, 2, a.dim(2)))) return cert;
    }
    Rng rng(options.seed);
    for (std::size_t t = 0; t < options.random_samples; ++t) {
      std::vector<long> c(d);
      for (auto& v : c) v = rng.range(-options.height, options.height);
      if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) continue;
      if (try_witness(combine(basis, c, 2, a.dim(2)))) return cert;
    }
    cert.verdict = ComponentVerdict::NotComponent;
    cert.tangent_dim = min_tangent;
    cert.detail = "tangent dimension at least " + std::to_string(min_tangent) + " > dim S = " + std::to_string(d) +
                  " at all " + std::to_string(cert.witnesses_tried) + " witnesses";
    return cert;
  } catch (const DegreeOverflow& e) {
    cert.verdict = ComponentVerdict::Inconclusive;
    cert.detail = e.what();
    return cert;
  }
}

Json certificate_to_json(const GradedAlgebra& a, const ComponentCertificate& c) {
  Json j;
  j["subspace"] = subspace_to_json(a, c.subspace);
  j["z"] = c.zspec;
  j["verdict"] = to_string(c.verdict);
  j["witness"] = c.witness ? element_to_json(a, *c.witness) : Json(nullptr);
  j["tangent_dim"] = c.tangent_dim;
  j["order"] = c.order;
  j["excess_direction"] = c.excess_direction ? element_to_json(a, *c.excess_direction) : Json(nullptr);
  j["witnesses_tried"] = c.witnesses_tried;
  j["detail"] = c.detail;
  return j;
}

ObstructionReport even_rank_test(const GradedAlgebra& a, const std::vector<Element>& forced, int l,
                                 const std::vector<ComponentCertificate>& certificates) {
  if (l % 2 == 0) throw std::invalid_argument("even_rank_test: l must be odd");
  ObstructionReport rep;
  rep.test = "even-rank";
  for (const auto& f : forced) {
    if (f.degree != forced.front().degree) throw std::invalid_argument("even_rank_test: classes of mixed degrees");
    if (f.degree % 2) throw std::invalid_argument("even_rank_test: forced classes must have even degree");
  }
  Json cert;
  cert["classes"] = coords_list(a, forced);
  cert["l"] = l;
  Json certs = Json::array();
  bool all_certified = true;
  for (const auto& c : certificates) {
    certs.push_back(certificate_to_json(a, c));
    all_certified = all_certified && c.verdict == ComponentVerdict::Component;
  }
  cert["component_certificates"] = certs;
  std::size_t r = 0;
  try {
    r = mult_image_rank(a, forced, l);
  } catch (const std::domain_error& e) {
    rep.verdict = Verdict::Inconclusive;
    rep.summary = e.what();
    rep.certificate = cert;
    return rep;
  }
  cert["rank"] = r;
  cert["parity"] = r % 2 ? "odd" : "even";
  rep.certificate = cert;
  if (r % 2 == 0) {
    rep.verdict = Verdict::Clear;
    rep.summary = "image rank " + std::to_string(r) + " is even";
  } else if (!all_certified) {
    rep.verdict = Verdict::Inconclusive;
    rep.summary = "image rank " + std::to_string(r) + " is odd but some class is not certified as a Hodge class";
  } else {
    rep.verdict = Verdict::Obstructed;
    rep.summary = "image rank " + std::to_string(r) + " is odd: no real Hodge structure";
  }
  return rep;
}

bool condnum_predicate(long n, long q, long qprime) {
  if (q != 2 * qprime && q != 2 * qprime + 1) return false;
  const Integer n2 = Integer(n) * (n - 1);  // twice n(n-1)/2
  if (2 * Integer(qprime) > n2) return false;
  return Integer(q - qprime) * (n2 - 2 * Integer(qprime)) > 2 * Integer(n) * n;
}

std::size_t wedge2_pair_count(std::size_t dim_h) { return dim_h * (dim_h - 1) / 2; }

std::size_t half_subspace_verify(const RationalMatrix& mu, const ComplexSubspace& w) {
  const std::size_t h = w.ambient_dim();
  if (mu.cols() != wedge2_pair_count(h)) throw std::invalid_argument("half_subspace_verify: mu has wrong shape");
  if (2 * w.dim() != h) throw std::invalid_argument("half_subspace_verify: dim W must be half of dim H");
  const auto& b = w.basis();
  std::vector<std::vector<GaussRational>> u;
  for (const auto& v : b) u.push_back(v.to_dense());
  GaussMatrix cmu = complexify(mu);
  std::vector<Coords<GaussRational>> images;
  for (std::size_t s = 0; s < u.size(); ++s)
    for (std::size_t t = s + 1; t < u.size(); ++t) {
      std::vector<GaussRational> wedge;
      wedge.reserve(mu.cols());
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j) wedge.push_back(u[s][i] * u[t][j] - u[s][j] * u[t][i]);
      images.push_back(cmu.apply(Coords<GaussRational>::from_dense(std::move(wedge))));
    }
  if (images.empty()) return 0;
  return rank(GaussMatrix::from_coord_rows(images, mu.rows()));
}

ObstructionReport half_subspace_search(const RationalMatrix& mu, std::size_t dim_h, const HalfSubspaceOptions& options,
                                       const std::vector<ComplexSubspace>& candidates) {
  if (dim_h % 2) throw std::invalid_argument("half_subspace_search: dim H must be even");
  ObstructionReport rep;
  rep.test = "half-subspace";
  const long n = static_cast<long>(dim_h / 2);
  const long q = static_cast<long>(rank(mu));
  const long qp = q / 2;
  const bool pred = condnum_predicate(n, q, qp);
  Json cert;
  cert["n"] = n;
  cert["q"] = q;
  cert["q_prime"] = qp;
  cert["condnum"] = pred;
  cert["seed"] = options.seed;
  cert["trials"] = options.trials;

  auto w_json = [](const ComplexSubspace& w) {
    Json vs = Json::array();
    for (const auto& v : w.basis()) {
      Json row = Json::array();
      for (const auto& x : v.to_dense()) row.push_back(to_string(x));
      vs.push_back(row);
    }
    return vs;
  };
  std::size_t min_rank = SIZE_MAX;
  auto clear = [&](const ComplexSubspace& w, std::size_t r, const std::string& origin) {
    cert["witness"] = {{"origin", origin}, {"rank", r}, {"basis", w_json(w)}};
    cert["min_rank"] = r;
    rep.verdict = Verdict::Clear;
    rep.summary = "W from " + origin + " has rank " + std::to_string(r) + " <= q' = " + std::to_string(qp);
    rep.certificate = cert;
    return rep;
  };

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::size_t r = half_subspace_verify(mu, candidates[c]);
    min_rank = std::min(min_rank, r);
    if (static_cast<long>(r) <= qp) return clear(candidates[c], r, "candidate " + std::to_string(c));
  }
  Rng rng(options.seed);
  std::size_t done = 0;
  while (done < options.trials) {
    std::vector<Coords<GaussRational>> vs;
    for (long i = 0; i < n; ++i) {
      std::vector<GaussRational> v;
      for (std::size_t k = 0; k < dim_h; ++k)
        v.emplace_back(make_rational(rng.range(-options.entry_bound, options.entry_bound)),
                       make_rational(rng.range(-options.entry_bound, options.entry_bound)));
      vs.push_back(Coords<GaussRational>::from_dense(std::move(v)));
    }
    auto w = ComplexSubspace::span(1, dim_h, vs);
    if (w.dim() != static_cast<std::size_t>(n)) continue;
    ++done;
    std::size_t r = half_subspace_verify(mu, w);
    min_rank = std::min(min_rank, r);
    if (static_cast<long>(r) <= qp) return clear(w, r, "random trial " + std::to_string(done));
  }
  cert["min_rank"] = min_rank == SIZE_MAX ? Json(nullptr) : Json(min_rank);
  cert["witness"] = nullptr;
  rep.certificate = cert;
  if (pred) {
    rep.verdict = Verdict::ObstructedHeuristic;
    rep.summary = "all " + std::to_string(candidates.size() + options.trials) + " subspaces have rank > q' = " +
                  std::to_string(qp) + "; genericity evidence only";
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.summary = "no half subspace found and the dimension count does not apply";
  }
  return rep;
}

RationalMatrix wedge_mu(const GradedAlgebra& a, int k) {
  const std::size_t h = a.dim(k);
  RationalMatrix mu(a.dim(2 * k), wedge2_pair_count(h));
  std::size_t col = 0;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j, ++col) {
      Element p = a.mul(a.basis_element(k, i), a.basis_element(k, j));
      p.coords.for_each_nonzero([&](std::size_t r, const Rational& v) { mu(r, col) = v; });
    }
  return mu;
}

namespace {

// x -> x ⊗ 1 (left) or 1 ⊗ x (right), by label.
Element tensor_include(const GradedAlgebra& m, const GradedAlgebra& a, const GradedAlgebra& b, const Element& x,
                       bool left) {
  Element out = m.zero(x.degree);
  const GradedAlgebra& src = left ? a : b;
  x.coords.for_each_nonzero([&](std::size_t i, const Rational& v) {
    std::string lab = left ? src.label(x.degree, i) + "⊗" + b.label(0, 0) : a.label(0, 0) + "⊗" + src.label(x.degree, i);
    auto loc = m.find_label(lab);
    if (!loc) throw std::invalid_argument("tensor_split: M is not the tensor product of A and B");
    out += m.basis_element(loc->first, loc->second).scaled(v);
  });
  return out;
}

Rational binom(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

TensorSplitResult tensor_split(const AlgebraPtr& ap, const AlgebraPtr& bp, const AlgebraPtr& mp, const Element& omega,
                               const CertifyOptions& options) {
  const GradedAlgebra &A = *ap, &B = *bp, &M = *mp;
  TensorSplitResult res;
  ObstructionReport& rep = res.report;
  rep.test = "tensor-split";
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool passed, Json detail) {
    Json c;
    c["lemma"] = name;
    c["passed"] = passed;
    c["detail"] = std::move(detail);
    checks.push_back(c);
    if (!passed && ok) {
      ok = false;
      rep.certificate["failed_lemma"] = name;
    }
    return passed;
  };
  auto finish = [&]() {
    rep.certificate["checks"] = checks;
    if (ok) {
      rep.verdict = Verdict::Clear;
      rep.summary = "all transfer lemmas verified: A and B inherit polarized Hodge structures";
    } else {
      rep.verdict = Verdict::Inconclusive;
      rep.summary = "lemma '" + rep.certificate["failed_lemma"].get<std::string>() + "' fails";
    }
    return res;
  };

  if (M.dim(0) != 1 || M.formal_dimension() != A.formal_dimension() + B.formal_dimension())
    throw std::invalid_argument("tensor_split: M is not the tensor product of A and B");
  if (!record("precondition", A.dim(1) == 0 || B.dim(1) == 0,
              {{"dim_A1", A.dim(1)}, {"dim_B1", B.dim(1)}}))
    return finish();

  // split omega along M^2 = A^2⊗1 + A^1⊗B^1 + 1⊗B^2
  Element a = A.zero(2), b = B.zero(2);
  Element rest = omega;
  for (std::size_t i = 0; i < A.dim(2); ++i) {
    auto loc = M.find_label(A.label(2, i) + "⊗" + B.label(0, 0));
    Rational c = omega.coords.get(loc->second);
    a += A.basis_element(2, i).scaled(c);
  }
  for (std::size_t i = 0; i < B.dim(2); ++i) {
    auto loc = M.find_label(A.label(0, 0) + "⊗" + B.label(2, i));
    Rational c = omega.coords.get(loc->second);
    b += B.basis_element(2, i).scaled(c);
  }
  rest -= tensor_include(M, A, B, a, true);
  rest -= tensor_include(M, A, B, b, false);
  if (!rest.is_zero()) throw std::logic_error("tensor_split: omega has a mixed component");
  res.a = a;
  res.b = b;
  rep.certificate["a"] = element_to_json(A, a);
  rep.certificate["b"] = element_to_json(B, b);

  const int s = A.formal_dimension() / 2, t = B.formal_dimension() / 2, n = s + t;
  const bool even = A.formal_dimension() % 2 == 0 && B.formal_dimension() % 2 == 0;
  const Element as = even ? A.power(a, s) : A.zero(0);
  const Element bt = even ? B.power(b, t) : B.zero(0);
  if (!record("ledim", even && !as.is_zero() && !bt.is_zero(),
              {{"dim_A", A.formal_dimension()}, {"dim_B", B.formal_dimension()}, {"a^s_nonzero", !as.is_zero()},
               {"b^t_nonzero", !bt.is_zero()}}))
    return finish();

  auto lm = lefschetz_check(M, omega);
  if (!record("m-lefschetz", lm.passed, {{"first_failure", lm.first_failure ? Json(*lm.first_failure) : Json(nullptr)}}))
    return finish();

  std::vector<Coords<Rational>> a2, b2;
  for (std::size_t i = 0; i < A.dim(2); ++i) a2.push_back(tensor_include(M, A, B, A.basis_element(2, i), true).coords);
  for (std::size_t i = 0; i < B.dim(2); ++i) b2.push_back(tensor_include(M, A, B, B.basis_element(2, i), false).coords);
  auto ca = certify_component(M, RationalSubspace::span(2, M.dim(2), a2), ZSpec::power_vanish(s + 1), options);
  if (!record("leh2-A", ca.verdict == ComponentVerdict::Component, certificate_to_json(M, ca))) return finish();
  auto cb = certify_component(M, RationalSubspace::span(2, M.dim(2), b2), ZSpec::power_vanish(t + 1), options);
  if (!record("leh2-B", cb.verdict == ComponentVerdict::Component, certificate_to_json(M, cb))) return finish();

  // eta_A ⊗ eta_B spans the top degree: omega^n = C(n,s) a^s ⊗ b^t
  Element wn = M.power(omega, n);
  Element prod = M.mul(tensor_include(M, A, B, as, true), tensor_include(M, A, B, bt, false));
  bool eta_ok = !prod.is_zero() && wn == prod.scaled(binom(n, s));
  if (!record("eta", eta_ok, {{"eta_A", element_to_json(A, as)}, {"eta_B", element_to_json(B, bt)}})) return finish();

  auto la = lefschetz_check(A, a);
  if (!record("lefsch-A", la.passed, {{"first_failure", la.first_failure ? Json(*la.first_failure) : Json(nullptr)}}))
    return finish();
  auto lb = lefschetz_check(B, b);
  if (!record("lefsch-B", lb.passed, {{"first_failure", lb.first_failure ? Json(*lb.first_failure) : Json(nullptr)}}))
    return finish();

  // nu identity on primitive pairs, pairings normalized by trace(a^s) and trace(omega^n)
  const Rational tm = M.trace(wn);
  auto nu_side = [&](const GradedAlgebra& F, const Element& f, int dimf, bool left) {
    Json rows = Json::array();
    bool good = true;
    const Rational tf = F.trace(F.power(f, dimf));
    for (int i = 0; i <= dimf; ++i) {
      auto prim = primitive_part(F, f, i).basis_elements();
      if (prim.empty()) continue;
      const Rational nu = binom(n - i, dimf - i) / binom(n, dimf);
      Element fp = F.power(f, dimf - i);
      Element wp = M.power(omega, n - i);
      std::size_t pairs = 0;
      for (const auto& x : prim)
        for (const auto& y : prim) {
          Rational lhs = nu * F.trace(F.mul(F.mul(x, fp), y)) / tf;
          Rational rhs = M.trace(M.mul(M.mul(tensor_include(M, A, B, x, left), wp), tensor_include(M, A, B, y, left))) / tm;
          good = good && lhs == rhs;
          ++pairs;
        }
      rows.push_back({{"i", i}, {"nu", to_string(nu)}, {"pairs", pairs}});
    }
    return std::make_pair(good, rows);
  };
  auto [nua, rowsa] = nu_side(A, a, s, true);
  if (!record("nu-A", nua, rowsa)) return finish();
  auto [nub, rowsb] = nu_side(B, b, t, false);
  record("nu-B", nub, rowsb);
  return finish();
}

std::optional<int> generation_failure_degree(const GradedAlgebra& a) {
  for (int k = 3; k <= a.top_degree(); ++k) {
    if (a.dim(k) == 0) continue;
    std::vector<Coords<Rational>> v;
    for (int d = 1; d <= 2; ++d)
      for (std::size_t i = 0; i < a.dim(d); ++i)
        for (std::size_t j = 0; j < a.dim(k - d); ++j)
          v.push_back(a.mul(a.basis_element(d, i), a.basis_element(k - d, j)).coords);
    if (span_basis(v, a.dim(k)).size() != a.dim(k)) return k;
  }
  return std::nullopt;
}

BetaSolution solve_beta(const ProjectiveBundle& pb) {
  const GradedAlgebra& base = *pb.base;
  const GradedAlgebra& tot = *pb.total;
  const int r = pb.rank;
  BetaSolution out;
  Element h = pb.h();
  out.alpha0 = pb.gysin.apply(tot.power(h, r)).scaled(make_rational(-1, r));
  out.beta = h + pb.pullback.apply(out.alpha0);
  Element br = tot.power(out.beta, r);
  out.gysin_beta_r_zero = pb.gysin.apply(br).is_zero();
  out.shift_identity = true;
  for (std::size_t i = 0; i < base.dim(2); ++i) {
    Element al = base.basis_element(2, i);
    Element diff = pb.gysin.apply(tot.power(out.beta + pb.pullback.apply(al), r)) - pb.gysin.apply(br);
    out.shift_identity = out.shift_identity && diff == al.scaled(Rational(r));
  }
  return out;
}

ProjbundleResult projbundle_transfer(const ProjectiveBundle& pb, const CertifyOptions& options) {
  const GradedAlgebra& base = *pb.base;
  const GradedAlgebra& tot = *pb.total;
  const int r = pb.rank;
  if (auto k = generation_failure_degree(base))
    throw std::invalid_argument("projbundle_transfer: base cohomology is not generated in degrees <= 2 (degree " +
                                std::to_string(*k) + ")");
  if (!pb.chern_class(1).is_zero()) throw std::invalid_argument("projbundle_transfer: c_1 is not zero");
  ProjbundleResult res;
  ObstructionReport& rep = res.report;
  rep.test = "projbundle-transfer";
  Json cert;
  bool ok = true;
  const int n = base.formal_dimension() / 2;

  // Gamma = pi^* H^2(base)
  std::vector<Coords<Rational>> gam;
  for (std::size_t i = 0; i < base.dim(2); ++i) gam.push_back(pb.pullback.apply(base.basis_element(2, i)).coords);
  auto gamma = RationalSubspace::span(2, tot.dim(2), gam);
  if (gamma.dim() > 0) {
    auto cg = certify_component(tot, gamma, ZSpec::power_vanish(n + 1), options);
    cert["gamma"] = certificate_to_json(tot, cg);
    ok = ok && cg.verdict == ComponentVerdict::Component;
  } else {
    cert["gamma"] = nullptr;
  }

  BetaSolution bs = solve_beta(pb);
  const Element& beta = bs.beta;
  Element br = tot.power(beta, r);
  cert["beta"] = element_to_json(tot, beta);
  cert["gysin_beta_r_zero"] = bs.gysin_beta_r_zero;
  cert["gysin_shift_identity"] = bs.shift_identity;
  // the shift identity makes a -> pi_*(beta + pi^*a)^r injective
  cert["beta_unique_mod_gamma"] = bs.shift_identity;
  ok = ok && bs.gysin_beta_r_zero && bs.shift_identity;

  auto qb = RationalSubspace::span(2, tot.dim(2), std::vector<Element>{beta});
  auto cq = certify_component(tot, qb, ZSpec::gysin_power_vanish(r, pb.gysin), options);
  cert["q_beta"] = certificate_to_json(tot, cq);
  ok = ok && cq.verdict == ComponentVerdict::Component;

  // Segre classes of beta, then c = s^{-1}, alpha_i = -c_i
  std::vector<Element> sigma;
  Element bp = tot.power(beta, r - 1);
  for (int j = 0; j <= n; ++j) {
    sigma.push_back(pb.gysin.apply(bp));
    bp = tot.mul(bp, beta);
  }
  std::vector<Element> c{base.unit()};
  for (int j = 1; j <= n; ++j) {
    Element cj = base.zero(2 * j);
    for (int i = 1; i <= j; ++i) cj -= base.mul(sigma[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j - i)]);
    c.push_back(cj);
  }
  Json alphas = Json::object();
  bool chern_match = true;
  Element rel = br;
  for (int i = 1; i <= std::min(r, n); ++i) {
    Element ai = c[static_cast<std::size_t>(i)].scaled(Rational(-1));
    res.alpha[2 * i] = ai;
    alphas[std::to_string(i)] = element_to_json(base, ai);
    chern_match = chern_match && c[static_cast<std::size_t>(i)] == pb.chern_class(i);
    rel -= tot.mul(pb.pullback.apply(ai), tot.power(beta, r - i));
  }
  for (int i = std::min(r, n) + 1; i <= n; ++i) chern_match = chern_match && c[static_cast<std::size_t>(i)].is_zero();
  cert["alpha"] = alphas;
  cert["segre_inversion_matches_chern"] = chern_match;
  cert["grothendieck_relation"] = rel.is_zero();
  ok = ok && chern_match && rel.is_zero();
  res.beta = beta;
  rep.certificate = cert;
  if (ok) {
    rep.verdict = Verdict::Clear;
    rep.summary = "Gamma and Q.beta certified; any Hodge structure on the bundle restricts to the base with "
                  "Hodge Chern classes";
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.summary = "some transfer certificate failed";
  }
  return res;
}

}  // namespace hodgealg
