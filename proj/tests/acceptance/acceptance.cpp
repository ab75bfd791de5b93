// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hodgealg/builders.hpp"
#include "hodgealg/cli.hpp"
#include "hodgealg/fixtures.hpp"
#include "hodgealg/gallery.hpp"
#include "hodgealg/io.hpp"
#include "hodgealg/linalg.hpp"
#include "hodgealg/obstructions.hpp"
#include "hodgealg/polarization.hpp"
#include "properties.hpp"

using namespace hodgealg;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no limit
  std::function<void(Check&)> body;
};

Element kahler(const AlgebraPtr& t, int n) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (int i = 0; i < n; ++i)
    terms.emplace_back("w" + std::to_string(2 * i + 1) + "^w" + std::to_string(2 * i + 2), Rational(1));
  return t->element(terms);
}

void torus_example(Check& c) {
  auto r = case_torus_rank11();
  const auto& cert = r.certificate;
  // stated: "has rank 11", 1-dimensional kernel
  c.expect(cert["kernel_dim"] == 1, "kernel is 1-dimensional");
  c.expect(cert["kernel_proportional_to_w1_minus_w3"] == true, "kernel generator proportional to (w1, -w3)");
  c.expect(cert["rank"] == 11, "image rank 11");
  c.expect(r.verdict == Verdict::Obstructed, "verdict OBSTRUCTED");
  c.note("rank " + cert["rank"].dump() + ", kernel dim " + cert["kernel_dim"].dump());
}

void blowup_example(Check& c) {
  auto base = case_blowup_rangpair(3, make_rational(1, 10));
  c.expect(base.certificate["cap"] == 8, "cap 8 for N = 3");
  std::size_t comps = 0;
  for (const auto& cc : base.certificate["component_certificates"]) comps += cc["verdict"] == "COMPONENT";
  c.expect(comps == 3, "three COMPONENT certificates");
  std::size_t runs = 0;
  for (int n : {3, 4})
    for (const auto& eps : {make_rational(1, 10), make_rational(1, 3), make_rational(2)}) {
      auto r = case_blowup_rangpair(n, eps);
      ++runs;
      const std::string tag = "N=" + std::to_string(n) + " eps=" + to_string(eps);
      c.expect(r.verdict == Verdict::Obstructed, tag + ": OBSTRUCTED");
      c.expect(r.certificate["rank"] == 11, tag + ": rank 11");
      for (const auto& cc : r.certificate["component_certificates"])
        c.expect(cc["verdict"] == "COMPONENT", tag + ": component certificate");
    }
  c.note(std::to_string(runs) + " (N, eps) settings, all OBSTRUCTED with rank 11");
}

void projbundle(Check& c) {
  auto base = exterior_algebra(4);
  std::vector<std::pair<std::string, ProjectiveBundle>> fixtures;
  for (const char* name : {"projbundle_t4_trivial", "projbundle_t4_c2"})
    fixtures.emplace_back(name, projective_bundle_from_json(*find_builtin_spec(name)));
  for (const auto& [name, pb] : fixtures) {
    auto r = projbundle_transfer(pb);
    c.expect(r.report.verdict == Verdict::Clear, name + ": transfer CLEAR");
    c.expect(r.report.certificate["beta_unique_mod_gamma"] == true, name + ": beta unique mod Gamma");
    c.expect(r.report.certificate["segre_inversion_matches_chern"] == true, name + ": Segre inversion");
    c.expect(r.report.certificate["gysin_beta_r_zero"] == true, name + ": pi_* beta^2 = 0");
  }
  // Segre identities sum_i c_i s_{j-i} = 0 and s_1 = -c_1, with c_1 != 0
  MixedElement ch;
  ch[2] = base->element({{"w1^w2", Rational(2)}, {"w3^w4", Rational(-1)}});
  ch[4] = base->element({{"w1^w2^w3^w4", Rational(5)}});
  for (int rank_e : {2, 3}) {
    auto pb = projective_bundle(base, rank_e, ch);
    auto s = segre_classes(pb, 2);
    for (int j = 1; j <= 2; ++j) {
      Element sum = base->zero(2 * j);
      for (int i = 0; i <= j; ++i) {
        Element ci = i == 0 ? base->unit() : pb.chern_class(i);
        sum += base->mul(ci, s.at(2 * (j - i)));
      }
      c.expect(sum.is_zero(), "rank " + std::to_string(rank_e) + ": Segre identity j=" + std::to_string(j));
    }
    // pi_*(h^r) = s_1 = -c_1(E)
    auto push = pb.gysin.apply(pb.total->power(pb.h(), rank_e));
    c.expect(push == ch[2].scaled(Rational(-1)), "rank " + std::to_string(rank_e) + ": pi_* h^r = -c_1");
  }
  c.note("2 transfer fixtures CLEAR, Segre identities exact, pi_* h^r = -c_1 for r = 2, 3");
}

void tensor(Check& c) {
  auto r = case_tensor_split();
  const auto& cert = r.certificate;
  std::size_t passed = 0, total = 0;
  for (const auto& chk : cert["P2_x_E"]["checks"]) {
    ++total;
    passed += chk["passed"].get<bool>();
  }
  c.expect(total > 0 && passed == total, "all sub-lemma checks pass on P2 x E");
  bool half = false;
  for (const auto& chk : cert["P1_x_E"]["checks"])
    if (chk["lemma"] == "nu-B" && chk["passed"].get<bool>())
      for (const auto& row : chk["detail"]) half = half || (row["i"] == 1 && row["nu"] == "1/2");
  c.expect(half, "nu = 1/2 at (n, s, i) = (2, 1, 1)");
  c.expect(cert["omega_without_b"]["failed_lemma"] == "ledim", "omega = h x 1 stops at ledim");
  c.expect(cert["both_b1_nonzero"]["failed_lemma"] == "precondition", "b1(A), b1(B) > 0 stops at precondition");
  c.note(std::to_string(passed) + "/" + std::to_string(total) + " checks on P2 x E; nu = 1/2 on P1 x E");
}

void polarization(Check& c) {
  for (int n = 1; n <= 3; ++n) {
    auto t = exterior_algebra(2 * n);
    auto w = kahler(t, n);
    auto h = exterior_hodge(t, square_torus_weight_one(n));
    const std::string tag = "n=" + std::to_string(n);
    for (int k = 0; k <= n; ++k) {
      auto dec = lefschetz_decompose(*t, w, k);
      std::size_t sum = 0;
      for (const auto& comp : dec.components) sum += primitive_part(*t, w, k - 2 * comp.i).dim();
      c.expect(dec.ok() && sum == t->dim(k), tag + ": decomposition identity in degree " + std::to_string(k));
    }
    auto hr = hodge_riemann_check(h, w);
    c.expect(hr.verdict == PolarizationVerdict::Polarized, tag + ": POLARIZED");
    for (const auto& b : hr.blocks) {
      int k = b.k;
      int sign = ((k * (k - 1) / 2) % 2 ? -1 : 1) * (b.q % 2 ? -1 : 1);
      bool definite = sign > 0 ? b.inertia.positive_definite() : b.inertia.negative_definite();
      c.expect(b.expected_sign == sign && definite, tag + ": block sign");
    }
    auto s = simpson_lemma_check(*t, &h);
    c.expect(s.passed, tag + ": Simpson check");
    for (const auto& e : s.entries) c.expect(e.rank >= 2, tag + ": h^{1,1} >= 2");
  }
  c.note("tori n = 1, 2, 3 POLARIZED, block signs match, Simpson passes");
}

void signature_case(Check& c) {
  auto r = case_k3_signature();
  const auto& cert = r.certificate;
  c.expect(cert["S_k3"]["tau"] == -16, "tau(K3) = -16");
  c.expect(cert["S_k3"]["alternating_sum"] == -20 && cert["S_k3"]["formula"] == "FAIL", "K3: |tau| != 20, FAIL");
  c.expect(cert["S_prime_bl21"]["tau"] == -20 && cert["S_prime_bl21"]["formula"] == "PASS", "Bl21: tau = -20, PASS");
  c.expect(cert["difference"] == -4, "tau(X) - tau(X') = -4");
  // stated: the difference is tau(S') - tau(S)
  c.expect(cert["difference"] == cert["tau_S_prime_minus_tau_S"], "difference equals tau(S') - tau(S)");
  c.note("tau(X) = " + cert["tau_X"].dump() + ", tau(X') = " + cert["tau_X_prime"].dump());
}

void projector(Check& c) {
  auto full = case_fibered_projector(false);
  const auto& cert = full.certificate;
  c.expect(cert["gram_rank"] == 8, "gram matrix of V invertible");
  c.expect(cert["endomorphism"]["idempotent"] == true, "endomorphism idempotent");
  c.expect(cert["P_wedge_P"].is_object() && cert["P_wedge_P"]["nonzero"] == true, "P^P != 0 in top degree");
  c.expect(cert["relation"]["holds"] == true, "fibered relation");
  for (auto [r, s] : {std::pair{13, 20}, std::pair{20, 13}}) c.expect(fibered_relation_holds(r, s), "relation at other ranks");
  auto light = case_fibered_projector(true);
  c.expect(light.verdict == Verdict::Clear && light.certificate["P_wedge_P"] == "SKIPPED", "--skip-heavy stays green");
  c.note("P^P top coefficient " + (cert["P_wedge_P"].is_object() ? cert["P_wedge_P"]["top_coefficient"].dump() : "?"));
}

void properties(Check& c) {
  auto add = [&](const char* name, const props::Tally& t, std::size_t min_trials) {
    c.expect(t.trials >= min_trials, std::string(name) + ": too few instances");
    c.expect(t.ok(), std::string(name) + ": " + t.first_failure);
    c.note(std::string(name) + " " + std::to_string(t.trials));
  };
  add("comm/assoc", props::commutativity_associativity(2000, 1), 10000);
  add("pairing", props::pairing_perfection(), 10);
  add("congruence", props::signature_congruence(150, 2), 100);
  add("recombination", props::even_rank_recombination(60, 3), 50);
  add("half-subspace", props::half_subspace_weight_one(50, 4), 50);
}

std::string gallery_json(const std::string& name) {
  std::ostringstream out, err;
  int code = run_cli({"gallery", name, "--json", "--seed", "7"}, out, err);
  return std::to_string(code) + "\n" + out.str();
}

void determinism(Check& c) {
  for (const auto& g : gallery_cases()) {
    auto a = gallery_json(g.name), b = gallery_json(g.name);
    c.expect(a == b, g.name + ": byte-identical");
    c.expect(a.rfind("0\n", 0) == 0, g.name + ": ran");
  }
  c.note(std::to_string(gallery_cases().size()) + " cases compared");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "torus example: kernel and rank 11", 1, torus_example},
      {2, "blow-up example: components and parity", 30, blowup_example},
      {3, "projective-bundle transfer", 5, projbundle},
      {4, "tensor split", 5, tensor},
      {5, "polarization suite on tori", 60, polarization},
      {6, "signature obstruction", 10, signature_case},
      {7, "projector class and fibered relation", 0, projector},
      {8, "property suites", 0, properties},
      {9, "determinism of gallery reports", 0, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0) c.expect(s < cr.limit_s, "runtime over " + std::to_string(cr.limit_s) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    std::cout << "criterion " << cr.id << " " << (c.ok ? "PASS" : "FAIL") << " [" << buf;
    if (cr.limit_s > 0) std::cout << " / limit " << cr.limit_s << " s";
    std::cout << "] " << cr.title;
    for (const auto& n : c.notes) std::cout << "; " << n;
    std::cout << "\n";
    for (const auto& f : c.failures) std::cout << "    failed: " << f << "\n";
    failed += !c.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
