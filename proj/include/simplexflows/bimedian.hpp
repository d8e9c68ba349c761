#pragma once

#include "simplexflows/common.hpp"
#include "simplexflows/simplex.hpp"

namespace simplexflows {

/// The three half-bimedian vectors of a tetrahedron, from its barycenter to
/// the midpoints of the edges (01), (02), (03). Each bimedian joins midpoints
/// of opposite edges and is bisected by the barycenter, so these three
/// vectors determine all six midpoints. The space of tetrahedra double covers
/// the space of such bases: the two preimages differ by the reflection -I.
struct BimedianBasis {
  Matrix vectors;     // 3x3, columns are the half-bimedians
  Vector barycenter;  // common midpoint
};

BimedianBasis bimedian_basis(const Simplex& tetra);

/// Reconstructs the tetrahedron with the given bimedian basis on the chosen
/// sheet (+1 or -1) of the double cover.
Simplex tetra_from_bimedian(const BimedianBasis& basis, int sheet);

/// Sheet of the double cover a tetrahedron lies on relative to a basis: the
/// sign of the vertex-difference determinant against the basis orientation.
int bimedian_sheet(const Simplex& tetra, const BimedianBasis& basis);

/// Regularization of tetrahedra through the bimedian basis: applies the
/// Lowdin path to the basis matrix and reconstructs on the same sheet about
/// the same barycenter. At t=1 the basis is orthonormal and the tetrahedron
/// regular. Equivariant under signed permutations of the basis, so it
/// descends to unlabeled tetrahedra.
Simplex regularize_bimedian(const Simplex& tetra, double t);

}  // namespace simplexflows
