#pragma once

// JSON (de)serialization: algebra descriptions, elements, subspaces, Hodge
// data. Key order is insertion order so that reports are byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "hodgealg/algebra.hpp"
#include "hodgealg/builders.hpp"
#include "hodgealg/hodge.hpp"
#include "hodgealg/linalg.hpp"
#include "hodgealg/subspace.hpp"

namespace hodgealg {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const GaussRational& z);
Json to_json(const Inertia& in);

/// {"degree": k, "coords": {"label": "p/q", ...}}
Json element_to_json(const GradedAlgebra& a, const Element& x);
Json element_to_json(const GradedAlgebra& a, const ComplexElement& x);
Element element_from_json(const GradedAlgebra& a, const Json& j);
ComplexElement complex_element_from_json(const GradedAlgebra& a, const Json& j);

/// {"degree": k, "vectors": [element coords ...]}
Json subspace_to_json(const GradedAlgebra& a, const RationalSubspace& s);
RationalSubspace subspace_from_json(const GradedAlgebra& a, const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// Algebra description. Kinds: exterior, truncated_poly, tensor,
/// projective_bundle, blowup, explicit, surface.
AlgebraPtr algebra_from_json(const Json& j);
/// The bundle itself (with pullback and Gysin maps) for a projective_bundle description.
ProjectiveBundle projective_bundle_from_json(const Json& j);
/// Re-expresses any algebra as an explicit description (full structure constants).
Json algebra_to_explicit_json(const GradedAlgebra& a);

/// "trivial", {"exterior_weight_one": [[...]...]} or {"degrees": {"1": {"(1,0)": [coords...]}}}.
HodgeStructure hodge_from_json(const AlgebraPtr& a, const Json& j);
Json hodge_to_json(const HodgeStructure& h);

Json read_json_file(const std::string& path);

}  // namespace hodgealg
