#pragma once

#include "simplexflows/common.hpp"

namespace simplexflows {

/// Affine transformation x -> linear * x + translation.
struct AffineMap {
  Matrix linear;
  Vector translation;

  static AffineMap identity(int n) {
    return {Matrix::Identity(n, n), Vector::Zero(n)};
  }

  Vector apply(const Vector& x) const { return linear * x + translation; }
  Matrix apply_points(const Matrix& pts) const {
    return (linear * pts).colwise() + translation;
  }

  AffineMap inverse() const;
  AffineMap compose(const AffineMap& inner) const;  // this after inner
  bool orientation_preserving() const { return linear.determinant() > 0.0; }
};

/// The unique affine map sending the n points of `face_before` pointwise to
/// `face_after` and the unit offset along `normal_before` to the unit offset
/// along `normal_after`. With orientation-consistent unit normals the result
/// is orientation preserving and isometric perpendicular to the face.
AffineMap induced_affine_map(const Matrix& face_before, const Matrix& face_after,
                             const Vector& normal_before, const Vector& normal_after,
                             double tol_rank = Tolerances{}.rank);

/// Affine map fixing the hyperplane through `plane_point` with unit normal
/// `normal`, scaling by `factor` in the normal direction.
AffineMap perpendicular_scale(const Vector& plane_point, const Vector& normal,
                              double factor);

}  // namespace simplexflows
