#include "simplexflows/affine.hpp"

namespace simplexflows {

AffineMap AffineMap::inverse() const {
  const Matrix inv = linear.inverse();
  return {inv, -inv * translation};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  return {linear * inner.linear, linear * inner.translation + translation};
}

AffineMap induced_affine_map(const Matrix& face_before, const Matrix& face_after,
                             const Vector& normal_before, const Vector& normal_after,
                             double tol_rank) {
  const Index n = face_before.rows();
  if (face_before.cols() != n || face_after.cols() != n)
    throw DimensionError("induced_affine_map: faces need n points in R^n");

  Matrix before(n, n), after(n, n);
  for (Index j = 0; j + 1 < n; ++j) {
    before.col(j) = face_before.col(j + 1) - face_before.col(0);
    after.col(j) = face_after.col(j + 1) - face_after.col(0);
  }
  before.col(n - 1) = normal_before;
  after.col(n - 1) = normal_after;

  Eigen::JacobiSVD<Matrix> svd(before);
  const auto& sv = svd.singularValues();
  if (sv(n - 1) <= tol_rank * sv(0))
    throw RankDeficient("induced_affine_map: face is affinely degenerate");

  AffineMap map;
  map.linear = after * before.inverse();
  map.translation = face_after.col(0) - map.linear * face_before.col(0);
  return map;
}

AffineMap perpendicular_scale(const Vector& plane_point, const Vector& normal,
                              double factor) {
  const Index n = normal.size();
  AffineMap map;
  map.linear = Matrix::Identity(n, n) + (factor - 1.0) * normal * normal.transpose();
  map.translation = (1.0 - factor) * normal.dot(plane_point) * normal;
  return map;
}

}  // namespace simplexflows
