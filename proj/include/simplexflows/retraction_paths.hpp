#pragma once

#include <vector>

#include "simplexflows/affine.hpp"
#include "simplexflows/common.hpp"

namespace simplexflows {

/// Regularization path of a labeled simplex (n+1 points as columns),
/// reconstructed with the barycenter pinned at zero so the path does not
/// depend on which vertex anchors the basis. The path is linear in s and
/// stays nondegenerate for all s in [0, 1].
class LabeledSimplexPath {
 public:
  explicit LabeledSimplexPath(const Matrix& simplex_points);

  int dimension() const { return static_cast<int>(y0_.rows()); }
  const Matrix& initial() const { return centered_; }
  Matrix at(double s) const;

 private:
  Matrix y0_, y1_;    // basis * A^{-1} and its orthogonalization
  Matrix regular_;    // regular unit-edge basis A
  Matrix centered_;   // input points, barycenter at zero
};

/// The affine map induced by the path on a designated face: agrees with the
/// path on the face points and carries the face normal isometrically. The
/// normal is oriented toward the vertex `apex` for continuity in s.
AffineMap induced_face_map(const LabeledSimplexPath& path,
                           const std::vector<Index>& face, Index apex, double s);

/// Regularizes a designated face of a configuration inside the hyperplane it
/// spans, carrying every other point by the induced in-plane affine map
/// extended as the identity on the normal component. The face barycenter is
/// pinned, so apex points above it stay above it.
class FaceRegularizationStage {
 public:
  FaceRegularizationStage(Matrix points, std::vector<Index> face);
  Matrix at(double u) const;

 private:
  Matrix face_coords(double u) const;  // in-plane coordinates, centered

  Matrix points_;
  std::vector<Index> face_;
  Matrix plane_basis_;   // n x (n-1), orthonormal
  Vector face_center_;
  Matrix y0_, y1_;       // in-plane regularization path data
  Matrix regular_;
  Matrix coords0_;       // initial in-plane coordinates of the face
};

/// n points forming a regular unit-edge (n-1)-simplex centered at the origin
/// of the hyperplane spanned by the first n-1 coordinates of R^n.
Matrix regular_facet_points(int n);

}  // namespace simplexflows
