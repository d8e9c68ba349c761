#include "simplexflows/configuration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace simplexflows {

Configuration::Configuration(ComplexKind kind, Matrix points)
    : kind_(kind), points_(std::move(points)) {
  const Index n = points_.rows();
  if (n < 2) throw DimensionError("Configuration: dimension must be at least 2");
  const Index expected = kind_ == ComplexKind::K ? n + 1 : n + 2;
  if (points_.cols() != expected)
    throw DimensionError("Configuration: wrong number of points for the kind");
}

std::vector<std::vector<Index>> Configuration::skeleton_faces() const {
  const Index n = points_.rows();
  const Index m = points_.cols();
  const Index max_size = n - 1;  // top cells of the (n-2)-skeleton
  std::vector<std::vector<Index>> faces;
  // Enumerate nonempty subsets of {0..m-1} with at most max_size elements.
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Index> face;
    for (Index j = 0; j < m; ++j)
      if (mask & (1u << j)) face.push_back(j);
    if (static_cast<Index>(face.size()) <= max_size) faces.push_back(std::move(face));
  }
  return faces;
}

namespace {

// Affine-relaxed closest points between the hulls of subsets, parametrized to
// eliminate the sum-to-one constraints. Returns the candidate weights.
struct SubsetSolve {
  Vector lambda, mu;
  double distance = 0.0;
};

SubsetSolve solve_face_pair(const Matrix& a, const Matrix& b) {
  const Index sa = a.cols(), sb = b.cols();
  Matrix d(a.rows(), sa - 1 + sb - 1);
  for (Index j = 0; j + 1 < sa; ++j) d.col(j) = a.col(j + 1) - a.col(0);
  for (Index j = 0; j + 1 < sb; ++j) d.col(sa - 1 + j) = -(b.col(j + 1) - b.col(0));
  const Vector rhs = b.col(0) - a.col(0);
  Vector coeff;
  if (d.cols() == 0) {
    coeff = Vector(0);
  } else {
    coeff = d.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  }
  SubsetSolve out;
  out.lambda = Vector(sa);
  out.mu = Vector(sb);
  out.lambda(0) = 1.0;
  for (Index j = 0; j + 1 < sa; ++j) {
    out.lambda(j + 1) = coeff(j);
    out.lambda(0) -= coeff(j);
  }
  out.mu(0) = 1.0;
  for (Index j = 0; j + 1 < sb; ++j) {
    out.mu(j + 1) = coeff(sa - 1 + j);
    out.mu(0) -= coeff(sa - 1 + j);
  }
  out.distance = (d.cols() == 0 ? rhs : (rhs - d * coeff).eval()).norm();
  return out;
}

Matrix select_columns(const Matrix& src, unsigned mask) {
  Matrix out(src.rows(), __builtin_popcount(mask));
  Index k = 0;
  for (Index j = 0; j < src.cols(); ++j)
    if (mask & (1u << j)) out.col(k++) = src.col(j);
  return out;
}

}  // namespace

double convex_hull_distance(const Matrix& a, const Matrix& b) {
  constexpr double kWeightSlack = 1e-12;
  double best = std::numeric_limits<double>::infinity();
  for (unsigned ma = 1; ma < (1u << a.cols()); ++ma) {
    const Matrix sub_a = select_columns(a, ma);
    for (unsigned mb = 1; mb < (1u << b.cols()); ++mb) {
      const Matrix sub_b = select_columns(b, mb);
      const SubsetSolve s = solve_face_pair(sub_a, sub_b);
      if (s.lambda.minCoeff() < -kWeightSlack) continue;
      if (s.mu.minCoeff() < -kWeightSlack) continue;
      best = std::min(best, s.distance);
    }
  }
  return best;
}

EmbeddingReport check_embedded(const Configuration& config, const Tolerances& tol) {
  const Matrix& pts = config.points();
  const auto faces = config.skeleton_faces();
  double scale = 0.0;
  for (Index i = 0; i < pts.cols(); ++i)
    for (Index j = i + 1; j < pts.cols(); ++j)
      scale = std::max(scale, (pts.col(i) - pts.col(j)).norm());
  const double threshold = tol.geom * std::max(scale, 1e-300);

  EmbeddingReport report;
  report.min_disjoint_distance = std::numeric_limits<double>::infinity();
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    for (size_t fj = fi + 1; fj < faces.size(); ++fj) {
      const auto& fa = faces[fi];
      const auto& fb = faces[fj];
      bool disjoint = true;
      for (Index ia : fa)
        for (Index ib : fb)
          if (ia == ib) disjoint = false;
      if (!disjoint) continue;

      Matrix a(pts.rows(), fa.size()), b(pts.rows(), fb.size());
      for (size_t k = 0; k < fa.size(); ++k) a.col(k) = pts.col(fa[k]);
      for (size_t k = 0; k < fb.size(); ++k) b.col(k) = pts.col(fb[k]);

      // Bounding-sphere gap skips the exact solve for well separated pairs.
      const Vector ca = a.rowwise().mean(), cb = b.rowwise().mean();
      double ra = 0.0, rb = 0.0;
      for (Index j = 0; j < a.cols(); ++j) ra = std::max(ra, (a.col(j) - ca).norm());
      for (Index j = 0; j < b.cols(); ++j) rb = std::max(rb, (b.col(j) - cb).norm());
      const double gap = (ca - cb).norm() - ra - rb;
      if (gap > threshold && gap > report.min_disjoint_distance) continue;

      const double dist = convex_hull_distance(a, b);
      if (dist < report.min_disjoint_distance) {
        report.min_disjoint_distance = dist;
        report.witness_a = fa;
        report.witness_b = fb;
      }
    }
  }
  report.embedded = report.min_disjoint_distance > threshold;
  return report;
}

void require_embedded(const Configuration& config, const Tolerances& tol) {
  if (!check_embedded(config, tol).embedded)
    throw InvalidConfiguration("configuration skeleton is not embedded");
}

double config_distance(const Matrix& a, const Matrix& b) {
  return (a - b).colwise().norm().maxCoeff();
}

double config_distance_mod_rigid(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows())
    throw DimensionError("config_distance_mod_rigid: shape mismatch");
  const Index m = a.cols();
  const Matrix ac = a.colwise() - a.rowwise().mean().eval();
  const Matrix bc = b.colwise() - b.rowwise().mean().eval();

  std::vector<Index> perm(m);
  std::iota(perm.begin(), perm.end(), Index{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    Matrix ap(a.rows(), m);
    for (Index j = 0; j < m; ++j) ap.col(j) = ac.col(perm[j]);
    // Kabsch: best orientation-preserving alignment of ap onto bc.
    const Matrix h = ap * bc.transpose();
    Eigen::JacobiSVD<Matrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vector signs = Vector::Ones(a.rows());
    signs(a.rows() - 1) =
        (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    const Matrix rot = svd.matrixV() * signs.asDiagonal() * svd.matrixU().transpose();
    best = std::min(best, std::sqrt((rot * ap - bc).colwise().squaredNorm().mean()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace simplexflows
