#pragma once

// Reproducible runners for the example families. Every case returns an
// ObstructionReport whose certificate is deterministic given its parameters.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hodgealg/exterior.hpp"
#include "hodgealg/obstructions.hpp"

namespace hodgealg {

struct GalleryParams {
  std::map<std::string, std::string> values;  // from --params k=v,k=v
  std::uint64_t seed = 1;
  bool skip_heavy = false;

  std::string get(const std::string& key, const std::string& fallback) const;
};

struct GalleryCase {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, std::string>> defaults;
  std::function<ObstructionReport(const GalleryParams&)> run;
};

/// Defaults overridden by the given values, plus seed and skip_heavy. Unknown keys throw.
Json resolved_parameters(const GalleryCase& c, const GalleryParams& p);

const std::vector<GalleryCase>& gallery_cases();
const GalleryCase* find_gallery_case(const std::string& name);

/// Report envelope shared by the CLI and the golden files.
Json report_envelope(const std::string& command, const std::string& name, const Json& parameters,
                     const ObstructionReport& r);
inline constexpr const char* kToolName = "hodgecheck";
inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kSchemaVersion = "1";

ObstructionReport case_torus_rank11();
ObstructionReport case_blowup_rangpair(int n, const Rational& eps, std::uint64_t seed = 1);
ObstructionReport case_k3_signature();
ObstructionReport case_fibered_projector(bool skip_heavy, int r = 13, int s = 13);
ObstructionReport case_tensor_split();
ObstructionReport case_half_subspace_generic(int n, int qprime, std::size_t trials, std::uint64_t seed);

// Pieces of the fibered-projector case, exposed for tests.

/// gamma_1..gamma_6: multiplication by 1, z, ..., z^5 on Q(z), z^7 = 1, in the basis 1..z^5.
std::vector<RationalMatrix> cyclotomic7_gammas();

struct ProjectorClass {
  std::vector<SparseExterior> v;  // f1, f2, gamma_1..gamma_6 in Λ^6(Q^12)
  RationalMatrix gram;
  SparseExterior p;  // in Λ^12(Q^24); low 12 bits first factor
};

/// The symmetrized correspondence class of phi in Λ^6(Q^12).
SparseExterior correspondence_class(const RationalMatrix& phi);
ProjectorClass build_projector(const std::vector<RationalMatrix>& gammas);

/// P as an endomorphism of Λ^6(Q^12) through the complement pairing; rows and
/// columns indexed by masks_of_weight(12, 6).
SparseMatrix<Rational> projector_endomorphism(const SparseExterior& p);
SparseMatrix<Rational> sparse_product(const SparseMatrix<Rational>& a, const SparseMatrix<Rational>& b);

/// Reduces h_G^{r+11} h_E^{s-1} h_F^{s-1} with h^k = -c h^{k-6} (k >= rank) and
/// compares it with c_G^2 h_E^{s-1} h_F^{s-1} h_G^{r-1}.
bool fibered_relation_holds(int r, int s);

}  // namespace hodgealg
