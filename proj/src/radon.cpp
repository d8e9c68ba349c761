#include "simplexflows/radon.hpp"

#include <algorithm>
#include <limits>

namespace simplexflows {
namespace {

// Barycentric coordinates of `point` with respect to the columns of `basis`
// (m points spanning an (m-1)-dimensional affine hull containing the point).
Vector barycentric(const Vector& point, const Matrix& basis) {
  Matrix system(basis.rows() + 1, basis.cols());
  system.topRows(basis.rows()) = basis;
  system.row(basis.rows()).setOnes();
  Vector rhs(basis.rows() + 1);
  rhs.head(basis.rows()) = point;
  rhs(basis.rows()) = 1.0;
  return system.colPivHouseholderQr().solve(rhs);
}

}  // namespace

RadonPartition radon_partition(const Matrix& points, double tol_rank) {
  const Index n = points.rows();
  if (points.cols() != n + 2)
    throw DimensionError("radon_partition: need exactly n+2 points");

  Matrix homogeneous(n + 1, n + 2);
  homogeneous.topRows(n) = points;
  homogeneous.row(n).setOnes();

  Eigen::JacobiSVD<Matrix> svd(homogeneous, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(n) <= tol_rank * sv(0))
    throw RankDeficient("radon_partition: affine dependence is not unique");

  Vector lambda = svd.matrixV().col(n + 1);
  const double zero_tol = 1e-12 * lambda.cwiseAbs().maxCoeff();

  // Orient the dependence: the positive side (part1) is the smaller side; on
  // ties the side holding the lowest-index nonzero coefficient.
  int positives = 0, negatives = 0;
  Index first_nonzero = -1;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) <= zero_tol) continue;
    if (first_nonzero < 0) first_nonzero = i;
    (lambda(i) > 0.0 ? positives : negatives)++;
  }
  const bool flip = positives > negatives ||
                    (positives == negatives && lambda(first_nonzero) < 0.0);
  if (flip) lambda = -lambda;

  RadonPartition out;
  out.coefficients = lambda;
  double positive_sum = 0.0;
  Vector weighted = Vector::Zero(n);
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > zero_tol) {
      out.part1.push_back(i);
      positive_sum += lambda(i);
      weighted += lambda(i) * points.col(i);
    } else {
      out.part2.push_back(i);
    }
  }
  out.radon_point = weighted / positive_sum;
  return out;
}

DegeneracyClass classify(const Configuration& config, const Tolerances& tol) {
  require_embedded(config, tol);
  const Matrix& pts = config.points();
  const Index n = pts.rows();
  DegeneracyClass out;

  if (config.kind() == ComplexKind::K) {
    Matrix diffs(n, n);
    for (Index j = 0; j < n; ++j) diffs.col(j) = pts.col(j + 1) - pts.col(0);
    Eigen::JacobiSVD<Matrix> svd(diffs);
    const auto& sv = svd.singularValues();
    const double rank_margin = sv(n - 1) / sv(0);
    if (rank_margin > tol.rank) {
      out.kind = DegeneracyKind::NonDegenerate;
      out.margin = rank_margin;
      return out;
    }
    // Flat: exactly one vertex sits inside the hull of the others.
    out.kind = DegeneracyKind::Hyperplane;
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i <= n; ++i) {
      Matrix others(n, n);
      Index k = 0;
      for (Index j = 0; j <= n; ++j)
        if (j != i) others.col(k++) = pts.col(j);
      const Vector coeff = barycentric(pts.col(i), others);
      const double interior = coeff.minCoeff();
      if (interior > best) {
        best = interior;
        out.vertex = i;
      }
    }
    out.margin = best;
    return out;
  }

  // Kind L: use the Radon partition.
  const RadonPartition radon = radon_partition(pts, tol.rank);
  out.radon_point = radon.radon_point;

  if (radon.part1.size() == 1) {
    const Index v = radon.part1[0];
    Matrix others(n, pts.cols() - 1);
    std::vector<Index> other_idx;
    Index k = 0;
    for (Index j = 0; j < pts.cols(); ++j) {
      if (j == v) continue;
      others.col(k++) = pts.col(j);
      other_idx.push_back(j);
    }
    // Hull coordinates of v over the other n+1 points (they span R^n).
    Matrix system(n + 1, n + 1);
    system.topRows(n) = others;
    system.row(n).setOnes();
    const Eigen::ColPivHouseholderQR<Matrix> qr(system);
    if (qr.rank() < n + 1)
      throw RankDeficient("classify: remaining points do not span R^n");
    Vector rhs(n + 1);
    rhs.head(n) = pts.col(v);
    rhs(n) = 1.0;
    const Vector coeff = qr.solve(rhs);
    const double interior = coeff.minCoeff();
    out.vertex = v;
    if (interior > tol.geom) {
      out.kind = DegeneracyKind::Interior;
      out.margin = interior;
    } else {
      out.kind = DegeneracyKind::Boundary;
      out.margin = std::abs(interior);
      for (Index j = 0; j < coeff.size(); ++j)
        if (coeff(j) > tol.geom) out.face.push_back(other_idx[j]);
    }
    return out;
  }

  if (radon.part1.size() == 2) {
    const Index v1 = radon.part1[0], v2 = radon.part1[1];
    const Vector& p = radon.radon_point;
    const Vector edge = pts.col(v2) - pts.col(v1);
    const double t = edge.dot(p - pts.col(v1)) / edge.squaredNorm();
    const double edge_margin = std::min(t, 1.0 - t);
    if (edge_margin > tol.geom) {
      out.kind = DegeneracyKind::EdgeFace;
      out.edge = {v1, v2};
      out.face = radon.part2;
      Matrix face_pts(n, radon.part2.size());
      for (size_t j = 0; j < radon.part2.size(); ++j)
        face_pts.col(j) = pts.col(radon.part2[j]);
      const Vector face_coords = barycentric(p, face_pts);
      out.margin = std::min(edge_margin, face_coords.minCoeff());
      return out;
    }
    // Radon point at an edge endpoint: that vertex lies in the face.
    out.kind = DegeneracyKind::Boundary;
    out.vertex = t < 0.5 ? v1 : v2;
    out.face = radon.part2;
    out.margin = edge_margin;
    return out;
  }

  throw InvalidConfiguration(
      "classify: Radon partition incompatible with an embedded kind-L configuration");
}

}  // namespace simplexflows
