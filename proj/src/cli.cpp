#include "hodgealg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgealg/fixtures.hpp"
#include "hodgealg/gallery.hpp"
#include "hodgealg/io.hpp"
#include "hodgealg/obstructions.hpp"
#include "hodgealg/polarization.hpp"

namespace hodgealg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// what every command produces before printing
struct Outcome {
  std::string test;
  std::string verdict;
  std::string summary;
  Json certificate = Json::object();
};

Outcome from_report(const ObstructionReport& r) { return {r.test, to_string(r.verdict), r.summary, r.certificate}; }

Json envelope(const std::string& command, const std::string& name, const Json& params, const Outcome& o) {
  ObstructionReport r;
  r.test = o.test;
  r.summary = o.summary;
  r.certificate = o.certificate;
  Json j = report_envelope(command, name, params, r);
  j["verdict"] = o.verdict;
  return j;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

void print_text(std::ostream& out, const std::string& command, const std::string& name, const Outcome& o) {
  out << command << " " << name << ": " << o.verdict << "\n";
  if (!o.summary.empty()) out << "  " << o.summary << "\n";
  for (const auto& [k, v] : o.certificate.items()) {
    std::string s = v.dump();
    if (s.size() > 160) s = s.substr(0, 157) + "...";
    out << "  " << k << " = " << s << "\n";
  }
}

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string expect;
  std::optional<int> cap;
  std::optional<std::size_t> trials;
  bool skip_heavy = false;
  std::string params;
  std::string algebra, omega, hodge, classes, subspace, mu, certify;
  int power = 0, z_power = 0;
  std::size_t dim_h = 0;
};

Json load(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing --") + what);
  return read_json_file(path);
}

Json algebra_json(const Options& o) {
  Json j = load(o.algebra, "algebra");
  if (o.cap) {
    const std::string kind = j.value("kind", std::string());
    if (kind != "blowup" && kind != "explicit") throw UsageError("--cap applies to blowup and explicit algebras only");
    j["cap"] = *o.cap;
  }
  return j;
}

Element omega_of(const GradedAlgebra& a, const Options& o) { return element_from_json(a, load(o.omega, "omega")); }

std::vector<Element> classes_of(const GradedAlgebra& a, const Options& o) {
  Json j = load(o.classes, "classes");
  if (!j.is_array()) throw std::invalid_argument("classes file must hold an array of elements");
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(element_from_json(a, e));
  return out;
}

Json params_json(const Options& o) {
  Json p = Json::object();
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) p[k] = v;
  };
  put("algebra", o.algebra);
  put("omega", o.omega);
  put("hodge", o.hodge);
  put("classes", o.classes);
  put("subspace", o.subspace);
  put("mu", o.mu);
  put("certify", o.certify);
  if (o.power) p["power"] = o.power;
  if (o.z_power) p["z_power"] = o.z_power;
  if (o.dim_h) p["dim_h"] = o.dim_h;
  if (o.cap) p["cap"] = *o.cap;
  if (o.trials) p["trials"] = *o.trials;
  p["seed"] = o.seed;
  return p;
}

Outcome cmd_validate(const Options& o) {
  AlgebraPtr a = algebra_from_json(algebra_json(o));
  ValidateOptions vo;
  vo.seed = o.seed;
  auto rep = validate(*a, vo);
  Outcome out{"validate", rep.passed() ? "PASS" : "FAIL", "", Json::object()};
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : rep.checks) {
    checks.push_back({{"axiom", c.name}, {"result", c.skipped ? "SKIPPED" : (c.passed ? "PASS" : "FAIL")},
                      {"detail", c.detail}});
    if (!c.passed && !c.skipped) ++failed;
  }
  out.summary = failed ? std::to_string(failed) + " axiom check(s) failed" : "all axiom checks passed";
  out.certificate["dims"] = a->degree_dims();
  out.certificate["truncated"] = rep.truncated;
  if (rep.cap) out.certificate["cap"] = *rep.cap;
  out.certificate["axioms"] = checks;
  return out;
}

Outcome check_lefschetz(const Options& o) {
  AlgebraPtr a = algebra_from_json(algebra_json(o));
  auto r = lefschetz_check(*a, omega_of(*a, o));
  Outcome out{"lefschetz", r.passed ? "PASS" : "FAIL", "", Json::object()};
  out.summary = r.passed ? "omega^(n-k) is an isomorphism for every k <= n"
                         : "omega^(n-k) fails to be an isomorphism in degree " + std::to_string(*r.first_failure);
  out.certificate["n"] = r.n;
  out.certificate["dims"] = r.dims;
  out.certificate["ranks"] = r.ranks;
  out.certificate["primitive_dims"] = r.primitive_dims;
  out.certificate["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  return out;
}

Outcome check_signature(const Options& o) {
  AlgebraPtr a = algebra_from_json(algebra_json(o));
  auto r = signature_formula_check(*a);
  Outcome out{"signature", r.passed ? "PASS" : "FAIL", "", Json::object()};
  out.summary = "tau = " + std::to_string(r.tau) + ", sum (-1)^i b_2i = " + std::to_string(r.alternating);
  out.certificate["inertia"] = to_json(r.inertia);
  out.certificate["tau"] = r.tau;
  out.certificate["alternating_sum"] = r.alternating;
  return out;
}

std::vector<ComponentCertificate> certify_list(const GradedAlgebra& a, const Options& o) {
  std::vector<ComponentCertificate> certs;
  if (o.certify.empty()) return certs;
  if (o.z_power < 2) throw UsageError("--certify needs --z-power >= 2");
  Json j = read_json_file(o.certify);
  if (!j.is_array()) throw std::invalid_argument("certify file must hold an array of subspaces");
  CertifyOptions co;
  co.seed = o.seed;
  for (const auto& s : j) certs.push_back(certify_component(a, subspace_from_json(a, s), ZSpec::power_vanish(o.z_power), co));
  return certs;
}

Outcome check_even_rank(const Options& o) {
  AlgebraPtr a = algebra_from_json(algebra_json(o));
  if (o.power <= 0) throw UsageError("even-rank needs --power l");
  return from_report(even_rank_test(*a, classes_of(*a, o), o.power, certify_list(*a, o)));
}

Outcome check_component(const Options& o) {
  AlgebraPtr a = algebra_from_json(algebra_json(o));
  if (o.z_power < 2) throw UsageError("component needs --z-power >= 2");
  CertifyOptions co;
  co.seed = o.seed;
  auto s = subspace_from_json(*a, load(o.subspace, "subspace"));
  auto c = certify_component(*a, s, ZSpec::power_vanish(o.z_power), co);
  Outcome out{"component", to_string(c.verdict), c.detail, certificate_to_json(*a, c)};
  return out;
}

Outcome check_hr(const Options& o) {
  Json aj = algebra_json(o);
  AlgebraPtr a = algebra_from_json(aj);
  HodgeStructure h = hodge_from_json(a, load(o.hodge, "hodge"));
  auto r = hodge_riemann_check(h, omega_of(*a, o));
  Outcome out{"hr-check", to_string(r.verdict), "", Json::object()};
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back({{"p", b.p}, {"q", b.q}, {"r", b.r}, {"k", b.k}, {"dim", b.dim}, {"inertia", to_json(b.inertia)},
                      {"expected_sign", b.expected_sign}, {"ok", b.ok}});
  out.summary = r.first_violation ? "block (" + std::to_string(r.first_violation->p) + "," +
                                        std::to_string(r.first_violation->q) + ") r=" +
                                        std::to_string(r.first_violation->r) + " has the wrong sign"
                                  : "every primitive block is definite with the expected sign";
  out.certificate["orientation"] = r.orientation;
  out.certificate["blocks"] = blocks;
  out.certificate["cross_orthogonal"] = r.cross_orthogonal;
  return out;
}

Outcome check_tensor_split(const Options& o) {
  Json aj = algebra_json(o);
  if (aj.value("kind", std::string()) != "tensor" || !aj.contains("factors") || aj.at("factors").size() != 2)
    throw UsageError("tensor-split needs a tensor algebra with exactly two factors");
  AlgebraPtr a = algebra_from_json(aj["factors"][0]);
  AlgebraPtr b = algebra_from_json(aj["factors"][1]);
  AlgebraPtr m = tensor_product(a, b);
  CertifyOptions co;
  co.seed = o.seed;
  return from_report(tensor_split(a, b, m, omega_of(*m, o), co).report);
}

Outcome check_projbundle(const Options& o) {
  ProjectiveBundle pb = projective_bundle_from_json(algebra_json(o));
  CertifyOptions co;
  co.seed = o.seed;
  return from_report(projbundle_transfer(pb, co).report);
}

Outcome check_half_subspace(const Options& o) {
  HalfSubspaceOptions ho;
  ho.seed = o.seed;
  if (o.trials) ho.trials = *o.trials;
  if (!o.mu.empty()) {
    if (o.dim_h == 0) throw UsageError("--mu needs --dim-h");
    return from_report(half_subspace_search(matrix_from_json(read_json_file(o.mu)), o.dim_h, ho));
  }
  AlgebraPtr a = algebra_from_json(algebra_json(o));
  std::vector<ComplexSubspace> cand;
  if (!o.hodge.empty()) {
    HodgeStructure h = hodge_from_json(a, read_json_file(o.hodge));
    const auto& f1 = h.piece(1, 0);
    if (!f1.empty()) cand.push_back(ComplexSubspace::span(1, a->dim(1), f1));
  }
  return from_report(half_subspace_search(wedge_mu(*a), a->dim(1), ho, cand));
}

int finish(std::ostream& out, const Options& o, const std::string& command, const std::string& name, const Json& params,
           const Outcome& res) {
  if (o.json)
    out << envelope(command, name, params, res).dump(2) << "\n";
  else
    print_text(out, command, name, res);
  if (!o.expect.empty() && upper(o.expect) != res.verdict) {
    if (!o.json) out << "expected " << upper(o.expect) << ", got " << res.verdict << "\n";
    return kExitExpectFailed;
  }
  return kExitOk;
}

std::map<std::string, std::string> parse_params(const std::string& s) {
  std::map<std::string, std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--params expects k=v,k=v");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Hodge structures on cohomology algebras", "hodgecheck"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(0, 1);
  Options o;
  std::string dump_spec;
  bool list_specs = false;
  app.add_option("--dump-spec", dump_spec, "print a shipped description file by name");
  app.add_flag("--list-specs", list_specs, "list shipped description files");

  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "JSON report");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--expect", o.expect, "exit 1 unless the verdict matches (e.g. obstructed, clear)");
  };
  auto files = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "algebra description file");
    c->add_option("--cap", o.cap, "degree cap for blowup/explicit algebras");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the algebra axioms");
  std::string positional_algebra;
  validate_cmd->add_option("file", positional_algebra, "algebra description file");
  common(validate_cmd);
  files(validate_cmd);

  auto* check_cmd = app.add_subcommand("check", "run one check on an algebra");
  std::string check_name;
  check_cmd->add_option("name", check_name, "check name")
      ->required()
      ->check(CLI::IsMember({"lefschetz", "signature", "even-rank", "component", "hr-check", "tensor-split",
                             "projbundle-transfer", "half-subspace"}));
  common(check_cmd);
  files(check_cmd);
  check_cmd->add_option("--omega", o.omega, "Kahler class file");
  check_cmd->add_option("--hodge", o.hodge, "Hodge description file");
  check_cmd->add_option("--classes", o.classes, "array of forced classes");
  check_cmd->add_option("--subspace", o.subspace, "subspace file");
  check_cmd->add_option("--certify", o.certify, "array of subspaces to certify as components");
  check_cmd->add_option("--power,-l", o.power, "degree l of the multiplication map");
  check_cmd->add_option("--z-power", o.z_power, "exponent defining Z = {x : x^l = 0}");
  check_cmd->add_option("--mu", o.mu, "mu matrix file");
  check_cmd->add_option("--dim-h", o.dim_h, "dim H for --mu");
  check_cmd->add_option("--trials", o.trials, "random trials");

  auto* gallery_cmd = app.add_subcommand("gallery", "run a named example");
  std::string case_name;
  bool list_cases = false;
  gallery_cmd->add_option("case", case_name, "case name");
  gallery_cmd->add_flag("--list", list_cases, "list cases");
  gallery_cmd->add_option("--params", o.params, "k=v,k=v overrides");
  gallery_cmd->add_flag("--skip-heavy", o.skip_heavy, "skip the expensive step");
  common(gallery_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (list_specs) {
      for (const auto& [n, j] : builtin_specs()) out << n << "\n";
      return kExitOk;
    }
    if (!dump_spec.empty()) {
      const Json* j = find_builtin_spec(dump_spec);
      if (!j) throw UsageError("no shipped description named '" + dump_spec + "'");
      out << j->dump(2) << "\n";
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      if (!positional_algebra.empty()) o.algebra = positional_algebra;
      return finish(out, o, "validate", "axioms", params_json(o), cmd_validate(o));
    }
    if (check_cmd->parsed()) {
      Outcome res;
      if (check_name == "lefschetz") res = check_lefschetz(o);
      else if (check_name == "signature") res = check_signature(o);
      else if (check_name == "even-rank") res = check_even_rank(o);
      else if (check_name == "component") res = check_component(o);
      else if (check_name == "hr-check") res = check_hr(o);
      else if (check_name == "tensor-split") res = check_tensor_split(o);
      else if (check_name == "projbundle-transfer") res = check_projbundle(o);
      else res = check_half_subspace(o);
      return finish(out, o, "check", check_name, params_json(o), res);
    }
    if (gallery_cmd->parsed()) {
      if (list_cases) {
        for (const auto& c : gallery_cases()) out << c.name << "  " << c.description << "\n";
        return kExitOk;
      }
      if (case_name.empty()) throw UsageError("gallery needs a case name (see --list)");
      const GalleryCase* c = find_gallery_case(case_name);
      if (!c) throw UsageError("unknown gallery case '" + case_name + "'");
      GalleryParams gp;
      gp.values = parse_params(o.params);
      gp.seed = o.seed;
      gp.skip_heavy = o.skip_heavy;
      Json params = resolved_parameters(*c, gp);
      return finish(out, o, "gallery", c->name, params, from_report(c->run(gp)));
    }
    out << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hodgealg
