#include "simplexflows/simplex.hpp"

#include <algorithm>
#include <limits>

namespace simplexflows {

Simplex::Simplex(Matrix vertices) : points_(std::move(vertices)) {
  const Index n = points_.rows();
  if (n < 2) throw DimensionError("Simplex: dimension must be at least 2");
  if (points_.cols() != n + 1)
    throw DimensionError("Simplex: expected n+1 vertices");
}

Matrix Simplex::basis(Index base) const {
  const Index n = points_.rows();
  Matrix b(n, n);
  Index k = 0;
  for (Index j = 0; j <= n; ++j) {
    if (j == base) continue;
    b.col(k++) = points_.col(j) - points_.col(base);
  }
  return b;
}

std::vector<Index> Simplex::facet_indices(Index opposite) const {
  std::vector<Index> idx;
  for (Index j = 0; j < points_.cols(); ++j)
    if (j != opposite) idx.push_back(j);
  return idx;
}

Matrix Simplex::facet(Index opposite) const {
  const Index n = points_.rows();
  Matrix f(n, n);
  Index k = 0;
  for (Index j = 0; j <= n; ++j)
    if (j != opposite) f.col(k++) = points_.col(j);
  return f;
}

double Simplex::signed_volume() const {
  const Index n = points_.rows();
  double factorial = 1.0;
  for (Index k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  return basis(0).determinant() / factorial;
}

double Simplex::boundary_volume() const {
  double total = 0.0;
  for (Index i = 0; i < points_.cols(); ++i) total += simplex_volume(facet(i));
  return total;
}

bool Simplex::spans(double tol_rank) const {
  Eigen::JacobiSVD<Matrix> svd(basis(0));
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > tol_rank * sv(0);
}

void Simplex::require_valid(double tol_rank) const {
  const Index n = points_.rows();
  for (Index drop = 0; drop <= n; ++drop) {
    // The n remaining vertices must span a nondegenerate (n-1)-simplex.
    Matrix diffs(n, n - 1);
    Index k = 0, base = drop == 0 ? 1 : 0;
    for (Index j = 0; j <= n; ++j) {
      if (j == drop || j == base) continue;
      diffs.col(k++) = points_.col(j) - points_.col(base);
    }
    Eigen::JacobiSVD<Matrix> svd(diffs);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= tol_rank * std::max(sv(0), 1e-300))
      throw DegenerateSimplex("Simplex: an n-subset of vertices is affinely dependent");
  }
}

double simplex_volume(const Matrix& pts) {
  const Index k = pts.cols() - 1;
  if (k == 0) return 1.0;  // 0-dimensional measure of a point
  Matrix diffs(pts.rows(), k);
  for (Index j = 0; j < k; ++j) diffs.col(j) = pts.col(j + 1) - pts.col(0);
  const Matrix gram = diffs.transpose() * diffs;
  double factorial = 1.0;
  for (Index i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
  const double g = gram.determinant();
  return g <= 0.0 ? 0.0 : std::sqrt(g) / factorial;
}

Vector affine_hull_projection(const Vector& point, const Matrix& hull_pts) {
  const Index m = hull_pts.cols();
  if (m == 1) return hull_pts.col(0);
  Matrix diffs(hull_pts.rows(), m - 1);
  for (Index j = 0; j + 1 < m; ++j) diffs.col(j) = hull_pts.col(j + 1) - hull_pts.col(0);
  const Vector rel = point - hull_pts.col(0);
  const Vector coeff = (diffs.transpose() * diffs)
                           .ldlt()
                           .solve(diffs.transpose() * rel);
  return hull_pts.col(0) + diffs * coeff;
}

double affine_hull_distance(const Vector& point, const Matrix& hull_pts) {
  return (point - affine_hull_projection(point, hull_pts)).norm();
}

Vector hyperplane_normal(const Matrix& face, const Vector& toward) {
  const Index n = face.rows();
  Matrix diffs(n, face.cols() - 1);
  for (Index j = 0; j + 1 < face.cols(); ++j)
    diffs.col(j) = face.col(j + 1) - face.col(0);
  // Left null space of the difference matrix.
  Eigen::JacobiSVD<Matrix> svd(diffs, Eigen::ComputeFullU);
  Vector normal = svd.matrixU().col(n - 1);
  if (normal.dot(toward - face.col(0)) < 0.0) normal = -normal;
  return normal;
}

IncenterResult incenter_inradius(const Simplex& simplex) {
  if (!simplex.spans())
    throw DegenerateSimplex("incenter_inradius: simplex does not span R^n");
  const Index n = simplex.dimension();
  Vector weights(n + 1);
  for (Index i = 0; i <= n; ++i) weights(i) = simplex_volume(simplex.facet(i));
  IncenterResult out;
  out.center = simplex.points() * (weights / weights.sum());
  out.radius = n * simplex.volume() / simplex.boundary_volume();
  return out;
}

Vector face_incenter(const Matrix& face_pts) {
  const Index m = face_pts.cols();
  Vector weights(m);
  for (Index i = 0; i < m; ++i) {
    Matrix sub(face_pts.rows(), m - 1);
    Index k = 0;
    for (Index j = 0; j < m; ++j)
      if (j != i) sub.col(k++) = face_pts.col(j);
    weights(i) = simplex_volume(sub);
  }
  return face_pts * (weights / weights.sum());
}

std::pair<double, double> edge_length_stats(const Matrix& pts) {
  double sum = 0.0, lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  int count = 0;
  for (Index i = 0; i < pts.cols(); ++i)
    for (Index j = i + 1; j < pts.cols(); ++j) {
      const double d = (pts.col(i) - pts.col(j)).norm();
      sum += d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      ++count;
    }
  return {sum / count, hi - lo};
}

}  // namespace simplexflows
