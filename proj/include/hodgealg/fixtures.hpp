#pragma once

// Small named algebras and lattices used by the gallery, the tests and the
// shipped fixture files.

#include "hodgealg/algebra.hpp"
#include "hodgealg/io.hpp"
#include "hodgealg/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hodgealg {

/// U = [[0,1],[1,0]].
RationalMatrix hyperbolic_plane();
/// Cartan matrix of E8 (positive definite, determinant 1), Bourbaki numbering.
RationalMatrix e8_cartan();
/// 3U + 2E8(-1): the K3 lattice, signature (3,19).
RationalMatrix k3_lattice();
/// diag(1, -1 x 21): H^2 of P^2 blown up in 21 points.
RationalMatrix bl21_lattice();

AlgebraPtr k3_model();
AlgebraPtr bl21_model();

/// H*(S^3 x S^3): not generated in degrees <= 2.
AlgebraPtr s3xs3_model();
/// H*(S^1 x S^3): b1 = 1, b2 = 0.
AlgebraPtr s1xs3_model();
/// Dimension 8 with b3 = b5 = 3.
AlgebraPtr odd_b3_model();
/// Degrees 0, 2, 4 with x^2 = top and y orthogonal to everything.
AlgebraPtr broken_duality_model();

/// Named description files shipped under fixtures/ (algebras, elements,
/// class lists, subspaces, Hodge data). `hodgecheck --dump-spec NAME` prints one.
std::vector<std::pair<std::string, Json>> builtin_specs();
const Json* find_builtin_spec(const std::string& name);

}  // namespace hodgealg
