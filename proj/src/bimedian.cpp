#include "simplexflows/bimedian.hpp"

#include "simplexflows/lowdin.hpp"

namespace simplexflows {

BimedianBasis bimedian_basis(const Simplex& tetra) {
  if (tetra.dimension() != 3)
    throw DimensionError("bimedian_basis: tetrahedra only");
  const Matrix& p = tetra.points();
  BimedianBasis basis;
  basis.barycenter = tetra.barycenter();
  basis.vectors.resize(3, 3);
  for (int i = 0; i < 3; ++i)
    basis.vectors.col(i) = 0.5 * (p.col(0) + p.col(i + 1)) - basis.barycenter;
  return basis;
}

Simplex tetra_from_bimedian(const BimedianBasis& basis, int sheet) {
  if (sheet != 1 && sheet != -1)
    throw DomainError("tetra_from_bimedian: sheet must be +1 or -1");
  const Vector e1 = basis.vectors.col(0), e2 = basis.vectors.col(1),
               e3 = basis.vectors.col(2);
  Matrix pts(3, 4);
  pts.col(0) = e1 + e2 + e3;
  pts.col(1) = e1 - e2 - e3;
  pts.col(2) = -e1 + e2 - e3;
  pts.col(3) = -e1 - e2 + e3;
  pts *= static_cast<double>(sheet);
  pts.colwise() += basis.barycenter;
  return Simplex(std::move(pts));
}

int bimedian_sheet(const Simplex& tetra, const BimedianBasis& basis) {
  if (tetra.dimension() != 3)
    throw DimensionError("bimedian_sheet: tetrahedra only");
  const double diff_det = tetra.basis(0).determinant();
  const double basis_det = basis.vectors.determinant();
  // The canonical reconstruction has diff_det = -16 det(basis).
  return diff_det * basis_det < 0.0 ? 1 : -1;
}

Simplex regularize_bimedian(const Simplex& tetra, double t) {
  BimedianBasis basis = bimedian_basis(tetra);
  basis.vectors = lowdin_path(basis.vectors, t);
  return tetra_from_bimedian(basis, 1);
}

}  // namespace simplexflows
