#include "simplexflows/retraction_paths.hpp"

#include "simplexflows/lowdin.hpp"
#include "simplexflows/simplex.hpp"

namespace simplexflows {

LabeledSimplexPath::LabeledSimplexPath(const Matrix& simplex_points) {
  const Index n = simplex_points.rows();
  if (simplex_points.cols() != n + 1)
    throw DimensionError("LabeledSimplexPath: need n+1 points");
  centered_ = simplex_points.colwise() - simplex_points.rowwise().mean().eval();
  Matrix basis(n, n);
  for (Index j = 0; j < n; ++j)
    basis.col(j) = centered_.col(j + 1) - centered_.col(0);
  regular_ = regular_simplex_basis(static_cast<int>(n));
  y0_ = regular_.transpose()
            .colPivHouseholderQr()
            .solve(basis.transpose())
            .transpose();
  y1_ = lowdin_orthogonalize(y0_);
}

Matrix LabeledSimplexPath::at(double s) const {
  const Index n = y0_.rows();
  const Matrix basis = ((1.0 - s) * y0_ + s * y1_) * regular_;
  Matrix pts(n, n + 1);
  pts.col(0).setZero();
  pts.rightCols(n) = basis;
  return pts.colwise() - pts.rowwise().mean().eval();
}

AffineMap induced_face_map(const LabeledSimplexPath& path,
                           const std::vector<Index>& face, Index apex, double s) {
  const Matrix p0 = path.initial();
  const Matrix ps = path.at(s);
  const Index n = p0.rows();
  Matrix f0(n, face.size()), fs(n, face.size());
  for (size_t k = 0; k < face.size(); ++k) {
    f0.col(k) = p0.col(face[k]);
    fs.col(k) = ps.col(face[k]);
  }
  const Vector n0 = hyperplane_normal(f0, p0.col(apex));
  const Vector ns = hyperplane_normal(fs, ps.col(apex));
  return induced_affine_map(f0, fs, n0, ns);
}

FaceRegularizationStage::FaceRegularizationStage(Matrix points, std::vector<Index> face)
    : points_(std::move(points)), face_(std::move(face)) {
  const Index n = points_.rows();
  if (static_cast<Index>(face_.size()) != n)
    throw DimensionError("FaceRegularizationStage: a face has n points");

  Matrix face_pts(n, n);
  for (Index k = 0; k < n; ++k) face_pts.col(k) = points_.col(face_[k]);
  face_center_ = face_pts.rowwise().mean();

  Matrix diffs(n, n - 1);
  for (Index j = 0; j + 1 < n; ++j) diffs.col(j) = face_pts.col(j + 1) - face_pts.col(0);
  Eigen::HouseholderQR<Matrix> qr(diffs);
  plane_basis_ = qr.householderQ() * Matrix::Identity(n, n - 1);

  coords0_ = plane_basis_.transpose() * (face_pts.colwise() - face_center_);
  Matrix basis(n - 1, n - 1);
  for (Index j = 0; j + 1 < n; ++j) basis.col(j) = coords0_.col(j + 1) - coords0_.col(0);

  regular_ = regular_simplex_basis(static_cast<int>(n) - 1);
  y0_ = regular_.transpose()
            .colPivHouseholderQr()
            .solve(basis.transpose())
            .transpose();
  y1_ = lowdin_orthogonalize(y0_);
}

Matrix FaceRegularizationStage::face_coords(double u) const {
  const Index n = points_.rows();
  const Matrix basis = ((1.0 - u) * y0_ + u * y1_) * regular_;
  Matrix coords(n - 1, n);
  coords.col(0) = coords0_.col(0);
  for (Index j = 0; j + 1 < n; ++j) coords.col(j + 1) = coords0_.col(0) + basis.col(j);
  return coords.colwise() - coords.rowwise().mean().eval();
}

Matrix FaceRegularizationStage::at(double u) const {
  const Index n = points_.rows();
  const Matrix target = face_coords(u);
  // In-plane affine map sending the initial coordinates to the target ones.
  Matrix before(n - 1, n - 1), after(n - 1, n - 1);
  for (Index j = 0; j + 1 < n; ++j) {
    before.col(j) = coords0_.col(j + 1) - coords0_.col(0);
    after.col(j) = target.col(j + 1) - target.col(0);
  }
  const Matrix linear = after * before.inverse();
  const Vector shift = target.col(0) - linear * coords0_.col(0);

  Matrix out(n, points_.cols());
  for (Index j = 0; j < points_.cols(); ++j) {
    const Vector rel = points_.col(j) - face_center_;
    const Vector in_plane = plane_basis_.transpose() * rel;
    const Vector normal_part = rel - plane_basis_ * in_plane;
    out.col(j) = face_center_ + plane_basis_ * (linear * in_plane + shift) + normal_part;
  }
  return out;
}

Matrix regular_facet_points(int n) {
  const Matrix basis = regular_simplex_basis(n - 1);
  Matrix coords(n - 1, n);
  coords.col(0).setZero();
  coords.rightCols(n - 1) = basis;
  coords = coords.colwise() - coords.rowwise().mean().eval();
  Matrix out = Matrix::Zero(n, n);
  out.topRows(n - 1) = coords;
  return out;
}

}  // namespace simplexflows
