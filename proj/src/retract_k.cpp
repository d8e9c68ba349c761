#include "simplexflows/retract_k.hpp"

#include <algorithm>

namespace simplexflows {
namespace {

constexpr double kTieTolerance = 1e-9;

// Largest and second largest vertex solid angles.
struct AngleScan {
  double top = 0.0, second = 0.0;
  Index arg_top = 0;
};

AngleScan scan_angles(const Simplex& simplex, const Tolerances& tol) {
  AngleScan scan;
  scan.top = -1.0;
  scan.second = -1.0;
  for (Index i = 0; i <= simplex.dimension(); ++i) {
    const double a = vertex_solid_angle(simplex, i, tol.rank);
    if (a > scan.top) {
      scan.second = scan.top;
      scan.top = a;
      scan.arg_top = i;
    } else if (a > scan.second) {
      scan.second = a;
    }
  }
  return scan;
}

}  // namespace

WideFace wide_face(const Configuration& config, const Tolerances& tol) {
  if (config.kind() != ComplexKind::K)
    throw InvalidConfiguration("wide_face: kind-K configurations only");
  const Simplex simplex(config.points());
  const auto gsa = greatest_solid_angle(simplex, tol);
  const double gate = half_sphere_volume(config.dimension()) / 2.0;
  if (gsa.value <= gate)
    throw NotGated("wide_face: greatest solid angle is at most V/2");
  WideFace out;
  out.apex = gsa.vertex;
  out.alpha = gsa.value;
  for (Index j = 0; j < config.point_count(); ++j)
    if (j != out.apex) out.face.push_back(j);
  return out;
}

KRetraction::KRetraction(const Configuration& config, const RetractOptions& options)
    : input_(config), options_(options) {
  if (config.kind() != ComplexKind::K)
    throw InvalidConfiguration("KRetraction: kind-K configurations only");
  if (config.dimension() < 3)
    throw DimensionError("KRetraction: needs dimension >= 3");
  require_embedded(config, options.tol);

  const Simplex simplex(config.points());
  simplex.require_valid(options.tol.rank);
  const int n = config.dimension();
  const double v_half = half_sphere_volume(n);
  barycenter_shift_ = config.barycenter();

  if (!simplex.spans(options.tol.rank)) {
    // Flat configuration: alpha extends to V at the interior vertex, which
    // moves on a straight line to the barycenter of its wide face.
    flat_ = true;
    gated_ = true;
    const auto gsa = greatest_solid_angle(simplex, options.tol);
    alpha_ = gsa.value;
    eta_ = 1.0;
    apex_ = gsa.vertex;
  } else {
    const AngleScan scan = scan_angles(simplex, options.tol);
    alpha_ = scan.top;
    apex_ = scan.arg_top;
    // Strictly above the gate the apex is unique; near-ties fall back to the
    // plain regularization branch.
    gated_ = scan.top > 0.5 * v_half && scan.top - scan.second > kTieTolerance;
    eta_ = gated_ ? 2.0 * alpha_ / v_half - 1.0 : 0.0;
    path_ = std::make_unique<LabeledSimplexPath>(config.points());
  }
  for (Index j = 0; j < config.point_count(); ++j)
    if (j != apex_) face_.push_back(j);

  stage2_ = std::make_unique<FaceRegularizationStage>(stage1_at(1.0), face_);
}

Matrix KRetraction::stage1_at(double u) const {
  const Index n = input_.dimension();
  if (flat_) {
    Matrix pts = input_.points();
    Matrix face_pts(n, face_.size());
    for (size_t k = 0; k < face_.size(); ++k) face_pts.col(k) = pts.col(face_[k]);
    const Vector target = face_pts.rowwise().mean();
    pts.col(apex_) = (1.0 - u) * pts.col(apex_) + u * target;
    return pts;
  }

  if (!gated_) {
    return path_->at(u).colwise() + barycenter_shift_;
  }

  // Damped regularization: undo the whole face motion and replay it to the
  // damped time, so the wide face sits exactly on the regularization path of
  // the face while the apex ends perpendicular over its barycenter.
  const Matrix full = path_->at(u);
  const AffineMap to_u = induced_face_map(*path_, face_, apex_, u);
  const double face_time = (1.0 - eta_) * u;
  const AffineMap to_damped = induced_face_map(*path_, face_, apex_, face_time);
  Matrix pts = to_damped.apply_points(to_u.inverse().apply_points(full));

  // Perpendicular rescale toward the current wide-face plane.
  const Matrix damped = path_->at(face_time);
  Matrix face_pts(n, face_.size());
  for (size_t k = 0; k < face_.size(); ++k) face_pts.col(k) = damped.col(face_[k]);
  const Vector normal = hyperplane_normal(face_pts, damped.col(apex_));
  const double factor =
      options_.literal_scale ? (1.0 - eta_) * u : 1.0 - eta_ * u;
  pts = perpendicular_scale(face_pts.col(0), normal, factor).apply_points(pts);
  return pts.colwise() + barycenter_shift_;
}

Configuration KRetraction::at(double t) const {
  if (t < 0.0 || t > 1.0) throw DomainError("KRetraction: t outside [0, 1]");
  const double u1 = std::min(2.0 * t, 1.0);
  const double u2 = std::max(2.0 * t - 1.0, 0.0);
  Matrix pts = u2 <= 0.0 ? stage1_at(u1) : stage2_->at(u2);
  return Configuration(ComplexKind::K, std::move(pts));
}

Configuration retract_k(const Configuration& config, double t,
                        const RetractOptions& options) {
  return KRetraction(config, options).at(t);
}

Trajectory retract_k_trajectory(const Configuration& config, int samples,
                                const RetractOptions& options,
                                bool check_embedding) {
  if (samples < 2) throw DomainError("retract_k_trajectory: need >= 2 samples");
  const KRetraction retraction(config, options);
  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    Configuration frame = retraction.at(t);
    if (check_embedding && !check_embedded(frame, options.tol).embedded)
      throw EmbeddingViolated("retract_k: path left the configuration space", t);
    traj.push(t, frame.points());
  }
  return traj;
}

Matrix pyramid_k_points(int n, double height) {
  Matrix pts(n, n + 1);
  pts.leftCols(n) = regular_facet_points(n);
  pts.col(n).setZero();
  pts(n - 1, n) = height;
  return pts;
}

std::optional<PyramidK> is_pyramid_k(const Configuration& config, double tol) {
  if (config.kind() != ComplexKind::K)
    throw InvalidConfiguration("is_pyramid_k: kind-K configurations only");
  const Matrix& pts = config.points();
  const Index n = pts.rows();
  const double h_reg = regular_simplex_height(static_cast<int>(n));

  std::optional<PyramidK> best;
  for (Index apex = 0; apex <= n; ++apex) {
    Matrix base(n, n);
    std::vector<Index> base_idx;
    Index k = 0;
    for (Index j = 0; j <= n; ++j) {
      if (j == apex) continue;
      base.col(k++) = pts.col(j);
      base_idx.push_back(j);
    }
    const auto [mean_edge, spread] = edge_length_stats(base);
    const Vector center = base.rowwise().mean();
    const Vector foot = affine_hull_projection(pts.col(apex), base);
    const double off_axis = (foot - center).norm() / mean_edge;
    const double height = (pts.col(apex) - foot).norm() / mean_edge;
    const double residual = std::max({spread / mean_edge, off_axis,
                                      std::max(0.0, height - h_reg)});
    if (residual <= tol && (!best || residual < best->residual)) {
      PyramidK pyr;
      pyr.apex = apex;
      pyr.base = base_idx;
      pyr.height = height;
      pyr.scale = mean_edge;
      pyr.residual = residual;
      // Frame: orthonormal base-plane directions plus the axis toward the apex.
      Matrix diffs(n, n - 1);
      for (Index j = 0; j + 1 < n; ++j) diffs.col(j) = base.col(j + 1) - base.col(0);
      Eigen::HouseholderQR<Matrix> qr(diffs);
      Matrix frame(n, n);
      frame.leftCols(n - 1) = qr.householderQ() * Matrix::Identity(n, n - 1);
      Vector axis = hyperplane_normal(base, pts.col(apex));
      if ((pts.col(apex) - foot).norm() > 0.0 &&
          axis.dot(pts.col(apex) - foot) < 0.0)
        axis = -axis;
      frame.col(n - 1) = axis;
      pyr.frame = frame;
      best = std::move(pyr);
    }
  }
  return best;
}

}  // namespace simplexflows
