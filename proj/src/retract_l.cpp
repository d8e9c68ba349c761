#include "simplexflows/retract_l.hpp"

#include <algorithm>

namespace simplexflows {
namespace {

// Barycentric decomposition of an interior vertex v over the centroid c of
// the whole configuration and the facet of the remaining simplex whose cone
// from c contains v, i.e. v = q c + sum a_i v_i with all coefficients
// nonnegative. Picks the facet with the largest minimum coefficient.
struct ConeDecomposition {
  Index far_vertex = -1;          // the vertex opposite the facet
  std::vector<Index> facet;       // configuration indices, increasing
  double q = 0.0;
  Vector face_weights;            // the a_i, aligned with `facet`
  double m = 0.0;                 // min a_i
};

ConeDecomposition cone_decomposition(const Matrix& pts, Index v) {
  const Index n = pts.rows();
  const Vector centroid = pts.rowwise().mean();
  ConeDecomposition best;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (Index far = 0; far < pts.cols(); ++far) {
    if (far == v) continue;
    std::vector<Index> facet;
    for (Index j = 0; j < pts.cols(); ++j)
      if (j != v && j != far) facet.push_back(j);

    Matrix system(n + 1, n + 1);
    Vector rhs(n + 1);
    system.col(0).head(n) = centroid;
    for (size_t k = 0; k < facet.size(); ++k)
      system.col(k + 1).head(n) = pts.col(facet[k]);
    system.row(n).setOnes();
    rhs.head(n) = pts.col(v);
    rhs(n) = 1.0;
    const Eigen::ColPivHouseholderQR<Matrix> qr(system);
    if (qr.rank() < n + 1) continue;
    const Vector coeff = qr.solve(rhs);
    const double margin = coeff.minCoeff();
    if (margin > best_margin) {
      best_margin = margin;
      best.far_vertex = far;
      best.facet = facet;
      best.q = coeff(0);
      best.face_weights = coeff.tail(n);
      best.m = coeff.tail(n).minCoeff();
    }
  }
  if (best.far_vertex < 0)
    throw RankDeficient("cone_decomposition: no spanning facet found");
  return best;
}

Vector face_centroid(const Matrix& pts, const std::vector<Index>& face) {
  Vector c = Vector::Zero(pts.rows());
  for (Index j : face) c += pts.col(j);
  return c / static_cast<double>(face.size());
}

// Self-consistent stage-1 target for an interior vertex: the point v* with
// v* = (1-s) d + s c(v*), where the centroid c tracks the moving vertex.
Vector interior_target(const Matrix& pts, Index v, const Vector& d, double s) {
  const double m = static_cast<double>(pts.cols());
  Vector rest = Vector::Zero(pts.rows());
  for (Index j = 0; j < pts.cols(); ++j)
    if (j != v) rest += pts.col(j);
  return ((1.0 - s) * d + (s / m) * rest) / (1.0 - s / m);
}

}  // namespace

double radial_target_parameter(double m, double q, int n) {
  const double slack = 1e-12;
  if (m < -slack || q < -slack || q > 1.0 + slack ||
      n * m > 1.0 - q + slack)
    throw DomainError("radial_target_parameter: (m, q) outside the domain");
  if (m <= 0.0 && q <= 0.0)
    throw DomainError("radial_target_parameter: the origin is excluded");
  m = std::max(m, 0.0);
  q = std::clamp(q, 0.0, 1.0);
  if (q == 0.0) return 0.0;
  if (m == 0.0) return 1.0;
  const double base = 1.0 - n * m / (1.0 - q);
  if (base <= 0.0) return q;  // m at its maximum
  return (1.0 - q) * std::pow(base, 1.0 / q) + q;
}

LRetraction::LRetraction(const Configuration& config, const RetractOptions& options)
    : input_(config), options_(options) {
  if (config.kind() != ComplexKind::L)
    throw InvalidConfiguration("LRetraction: kind-L configurations only");
  if (config.dimension() < 3)
    throw DimensionError("LRetraction: needs dimension >= 3");
  class_ = classify(config, options.tol);

  const Matrix& pts = config.points();
  const int n = config.dimension();

  switch (class_.kind) {
    case DegeneracyKind::Interior: {
      moving_ = class_.vertex;
      const ConeDecomposition cone = cone_decomposition(pts, moving_);
      const Vector d = face_centroid(pts, cone.facet);
      const double s = radial_target_parameter(cone.m, cone.q, n);
      target_ = interior_target(pts, moving_, d, s);
      break;
    }
    case DegeneracyKind::EdgeFace: {
      edge_v1_ = class_.edge.first;
      edge_v2_ = class_.edge.second;
      const Vector& p = class_.radon_point;
      double l1 = (pts.col(edge_v1_) - p).norm();
      double l2 = (pts.col(edge_v2_) - p).norm();
      if (l1 > l2) {
        std::swap(edge_v1_, edge_v2_);
        std::swap(l1, l2);
      }
      const Vector d = face_centroid(pts, class_.face);
      const double r = l1 / l2;
      target_v1_ = pts.col(edge_v1_) + (1.0 + r * (1.0 - r)) * (d - p);
      target_v2_ = pts.col(edge_v2_) + r * (d - p);
      break;
    }
    case DegeneracyKind::Boundary: {
      moving_ = class_.vertex;
      target_ = face_centroid(pts, class_.face);
      break;
    }
    default:
      throw InvalidConfiguration("LRetraction: unexpected classification");
  }

  build_stage2(stage1_at(1.0));
  stage3_ = std::make_unique<FaceRegularizationStage>(stage2_at(1.0), wide_face_);
}

Matrix LRetraction::stage1_at(double u) const {
  Matrix pts = input_.points();
  if (class_.kind == DegeneracyKind::EdgeFace) {
    pts.col(edge_v1_) = (1.0 - u) * pts.col(edge_v1_) + u * target_v1_;
    pts.col(edge_v2_) = (1.0 - u) * pts.col(edge_v2_) + u * target_v2_;
  } else {
    pts.col(moving_) = (1.0 - u) * pts.col(moving_) + u * target_;
  }
  return pts;
}

void LRetraction::build_stage2(const Matrix& entry) {
  stage2_entry_ = entry;
  branch_ = class_.kind;
  const Index n = entry.rows();

  if (branch_ == DegeneracyKind::Interior) {
    const ConeDecomposition cone = cone_decomposition(entry, moving_);
    q_ = std::clamp(cone.q, 0.0, 1.0);
    far_vertex_ = cone.far_vertex;
    wide_face_ = cone.facet;

    outer_index_.clear();
    Matrix outer(n, entry.cols() - 1);
    Index k = 0;
    for (Index j = 0; j < entry.cols(); ++j) {
      if (j == moving_) continue;
      outer.col(k) = entry.col(j);
      outer_index_.push_back(j);
      ++k;
    }
    face_in_outer_.clear();
    for (Index c = 0; c < static_cast<Index>(outer_index_.size()); ++c) {
      if (outer_index_[c] == far_vertex_) apex_in_outer_ = c;
      else face_in_outer_.push_back(c);
    }
    outer_shift_ = outer.rowwise().mean();
    outer_path_ = std::make_unique<LabeledSimplexPath>(outer);
    return;
  }

  // Edge-face and boundary branches keep the shared face pointwise fixed.
  wide_face_ = class_.face;
  Matrix face_pts(n, wide_face_.size());
  for (size_t k = 0; k < wide_face_.size(); ++k)
    face_pts.col(k) = entry.col(wide_face_[k]);
  face_point_ = face_pts.col(0);

  if (branch_ == DegeneracyKind::EdgeFace) {
    double l1 = (entry.col(edge_v1_) - face_centroid(entry, wide_face_)).norm();
    double l2 = (entry.col(edge_v2_) - face_centroid(entry, wide_face_)).norm();
    if (l1 > l2) std::swap(edge_v1_, edge_v2_);
    face_normal_ = hyperplane_normal(face_pts, entry.col(edge_v1_));

    Matrix near_simplex(n, n + 1), far_simplex(n, n + 1);
    near_simplex.leftCols(n) = face_pts;
    near_simplex.col(n) = entry.col(edge_v1_);
    far_simplex.leftCols(n) = face_pts;
    far_simplex.col(n) = entry.col(edge_v2_);
    near_shift_ = near_simplex.rowwise().mean();
    far_shift_ = far_simplex.rowwise().mean();
    near_path_ = std::make_unique<LabeledSimplexPath>(near_simplex);
    far_path_ = std::make_unique<LabeledSimplexPath>(far_simplex);
    face_in_outer_.clear();
    for (Index c = 0; c < n; ++c) face_in_outer_.push_back(c);
    apex_in_outer_ = n;
    return;
  }

  // Boundary: the vertex sits in the face and stays there; the remaining
  // vertex regularizes against the frozen face.
  far_vertex_ = -1;
  for (Index j = 0; j < entry.cols(); ++j) {
    if (j == moving_) continue;
    if (std::find(wide_face_.begin(), wide_face_.end(), j) != wide_face_.end())
      continue;
    far_vertex_ = j;
  }
  Matrix outer(n, n + 1);
  outer.leftCols(n) = face_pts;
  outer.col(n) = entry.col(far_vertex_);
  outer_shift_ = outer.rowwise().mean();
  outer_path_ = std::make_unique<LabeledSimplexPath>(outer);
  face_in_outer_.clear();
  for (Index c = 0; c < n; ++c) face_in_outer_.push_back(c);
  apex_in_outer_ = n;
}

Matrix LRetraction::stage2_at(double u) const {
  const Index n = stage2_entry_.rows();
  Matrix out = stage2_entry_;

  if (branch_ == DegeneracyKind::Interior) {
    // Damped regularization of the outer simplex: undo the face motion of
    // the full path and replay it to time q u. No perpendicular rescaling.
    const Matrix full = outer_path_->at(u);
    const AffineMap to_u =
        induced_face_map(*outer_path_, face_in_outer_, apex_in_outer_, u);
    const AffineMap to_damped =
        induced_face_map(*outer_path_, face_in_outer_, apex_in_outer_, q_ * u);
    Matrix outer =
        to_damped.apply_points(to_u.inverse().apply_points(full));
    outer.colwise() += outer_shift_;

    for (Index c = 0; c < static_cast<Index>(outer_index_.size()); ++c)
      out.col(outer_index_[c]) = outer.col(c);

    // The interior vertex keeps its barycentric position on the segment from
    // the face centroid to the configuration centroid.
    Vector face_sum = Vector::Zero(n);
    for (Index c : face_in_outer_) face_sum += outer.col(c);
    const Vector d = face_sum / static_cast<double>(face_in_outer_.size());
    const Vector outer_sum = outer.rowwise().sum();
    const double count = static_cast<double>(stage2_entry_.cols());
    out.col(moving_) =
        ((1.0 - q_) * d + (q_ / count) * outer_sum) / (1.0 - q_ / count);
    return out;
  }

  if (branch_ == DegeneracyKind::EdgeFace) {
    const auto frozen_vertex = [&](const LabeledSimplexPath& path,
                                   const Vector& shift, double s) {
      const AffineMap to_s = induced_face_map(path, face_in_outer_, apex_in_outer_, s);
      const Matrix moved = to_s.inverse().apply_points(path.at(s));
      return (moved.col(apex_in_outer_) + shift).eval();
    };
    out.col(edge_v2_) = frozen_vertex(*far_path_, far_shift_, u);
    Vector v1 = frozen_vertex(*near_path_, near_shift_, u);
    const double factor = options_.literal_scale ? 0.0 : 1.0 - u;
    out.col(edge_v1_) =
        perpendicular_scale(face_point_, face_normal_, factor).apply(v1);
    return out;
  }

  // Boundary branch.
  const AffineMap to_u =
      induced_face_map(*outer_path_, face_in_outer_, apex_in_outer_, u);
  const Matrix moved = to_u.inverse().apply_points(outer_path_->at(u));
  out.col(far_vertex_) = moved.col(apex_in_outer_) + outer_shift_;
  return out;
}

Matrix LRetraction::stage3_at(double u) const { return stage3_->at(u); }

Configuration LRetraction::at(double t) const {
  if (t < 0.0 || t > 1.0) throw DomainError("LRetraction: t outside [0, 1]");
  Matrix pts;
  if (t <= 1.0 / 3.0) pts = stage1_at(3.0 * t);
  else if (t <= 2.0 / 3.0) pts = stage2_at(3.0 * t - 1.0);
  else pts = stage3_at(3.0 * t - 2.0);
  return Configuration(ComplexKind::L, std::move(pts));
}

Configuration retract_l(const Configuration& config, double t,
                        const RetractOptions& options) {
  return LRetraction(config, options).at(t);
}

Trajectory retract_l_trajectory(const Configuration& config, int samples,
                                const RetractOptions& options,
                                bool check_embedding, int stage) {
  if (samples < 2) throw DomainError("retract_l_trajectory: need >= 2 samples");
  const LRetraction retraction(config, options);
  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    Matrix pts;
    switch (stage) {
      case 0: pts = retraction.at(t).points(); break;
      case 1: pts = retraction.stage1_at(t); break;
      case 2: pts = retraction.stage2_at(t); break;
      case 3: pts = retraction.stage3_at(t); break;
      default: throw DomainError("retract_l_trajectory: stage must be 0..3");
    }
    if (check_embedding) {
      const Configuration frame(ComplexKind::L, pts);
      if (!check_embedded(frame, options.tol).embedded)
        throw EmbeddingViolated("retract_l: path left the configuration space", t);
    }
    traj.push(t, std::move(pts));
  }
  return traj;
}

Matrix pyramid_l_points(int n, double inner_height) {
  Matrix pts(n, n + 2);
  pts.leftCols(n) = regular_facet_points(n);
  pts.col(n).setZero();
  pts(n - 1, n) = regular_simplex_height(n);
  pts.col(n + 1).setZero();
  pts(n - 1, n + 1) = inner_height;
  return pts;
}

std::optional<PyramidL> is_pyramid_l(const Configuration& config, double tol) {
  if (config.kind() != ComplexKind::L)
    throw InvalidConfiguration("is_pyramid_l: kind-L configurations only");
  const Matrix& pts = config.points();
  const Index n = pts.rows();
  const double h_reg = regular_simplex_height(static_cast<int>(n));

  std::optional<PyramidL> best;
  for (Index i = 0; i < pts.cols(); ++i) {
    for (Index j = 0; j < pts.cols(); ++j) {
      if (i == j) continue;
      // Candidate: i is the regular apex, j the second on-axis vertex.
      Matrix face(n, n);
      std::vector<Index> face_idx;
      Index k = 0;
      for (Index c = 0; c < pts.cols(); ++c) {
        if (c == i || c == j) continue;
        face.col(k++) = pts.col(c);
        face_idx.push_back(c);
      }
      const auto [mean_edge, spread] = edge_length_stats(face);
      const Vector center = face.rowwise().mean();
      Vector axis = hyperplane_normal(face, pts.col(i));

      const Vector rel_apex = pts.col(i) - center;
      const Vector rel_inner = pts.col(j) - center;
      const double h_apex = axis.dot(rel_apex) / mean_edge;
      const double h_inner = axis.dot(rel_inner) / mean_edge;
      const double off_apex = (rel_apex - axis.dot(rel_apex) * axis).norm() / mean_edge;
      const double off_inner = (rel_inner - axis.dot(rel_inner) * axis).norm() / mean_edge;

      const double residual =
          std::max({spread / mean_edge, off_apex, off_inner,
                    std::abs(h_apex - h_reg),
                    std::max(0.0, h_inner - h_reg / (n + 1.0)),
                    std::max(0.0, -h_inner - h_reg)});
      if (residual <= tol && (!best || residual < best->residual)) {
        PyramidL pyr;
        pyr.face = face_idx;
        pyr.delta_apex = i;
        pyr.inner = j;
        pyr.apex_height = h_apex;
        pyr.inner_height = h_inner;
        pyr.scale = mean_edge;
        pyr.residual = residual;
        best = std::move(pyr);
      }
    }
  }
  return best;
}

}  // namespace simplexflows
