#include "simplexflows/flows.hpp"

#include <algorithm>

namespace simplexflows {
namespace {

// Unit direction of increasing distance from the affine hull of `hull_pts`
// at `point`.
Vector away_from_hull(const Vector& point, const Matrix& hull_pts) {
  const Vector offset = point - affine_hull_projection(point, hull_pts);
  const double norm = offset.norm();
  if (norm <= 0.0)
    throw DegenerateSimplex("flow: vertex lies in the hull of a face");
  return offset / norm;
}

Simplex normalized(Matrix pts, double target_volume) {
  Simplex s(std::move(pts));
  const double vol = s.volume();
  const double scale = std::pow(target_volume / vol, 1.0 / s.dimension());
  const IncenterResult inc = incenter_inradius(s);
  Matrix out = (s.points().colwise() - inc.center) * scale;
  return Simplex(std::move(out));
}

}  // namespace

double irregularity_potential(const Simplex& simplex) {
  const IncenterResult inc = incenter_inradius(simplex);
  return simplex.volume() / ball_volume(simplex.dimension(), inc.radius);
}

Matrix boundary_volume_gradient(const Simplex& simplex) {
  const Index n = simplex.dimension();
  const Matrix& pts = simplex.points();
  Matrix grad = Matrix::Zero(n, n + 1);
  for (Index opp = 0; opp <= n; ++opp) {
    const auto face_idx = simplex.facet_indices(opp);
    const Matrix face = simplex.facet(opp);
    // Gradient of the facet volume at each of its vertices.
    for (Index k = 0; k < static_cast<Index>(face_idx.size()); ++k) {
      Matrix sub(face.rows(), face.cols() - 1);
      Index m = 0;
      for (Index j = 0; j < face.cols(); ++j)
        if (j != k) sub.col(m++) = face.col(j);
      const double sub_vol = simplex_volume(sub);
      grad.col(face_idx[k]) +=
          sub_vol / static_cast<double>(n - 1) * away_from_hull(face.col(k), sub);
    }
    (void)pts;
  }
  return grad;
}

Matrix volume_gradient(const Simplex& simplex) {
  const Index n = simplex.dimension();
  Matrix grad(n, n + 1);
  for (Index i = 0; i <= n; ++i) {
    const Matrix face = simplex.facet(i);
    grad.col(i) = simplex_volume(face) / static_cast<double>(n) *
                  away_from_hull(simplex.vertex(i), face);
  }
  return grad;
}

double vertex_over_incenter_residual(const Simplex& simplex) {
  const auto [mean_edge, spread] = edge_length_stats(simplex.points());
  (void)spread;
  double worst = 0.0;
  for (Index i = 0; i <= simplex.dimension(); ++i) {
    const Matrix face = simplex.facet(i);
    const Vector foot = affine_hull_projection(simplex.vertex(i), face);
    worst = std::max(worst, (foot - face_incenter(face)).norm());
  }
  return worst / mean_edge;
}

FlowResult inradius_flow(const Simplex& simplex, const FlowOptions& options) {
  simplex.require_valid();
  if (!simplex.spans())
    throw DegenerateSimplex("inradius_flow: simplex does not span R^n");

  const double target_volume = simplex.volume();
  Simplex current = normalized(simplex.points(), target_volume);

  FlowResult result{current, {}, {}, false, true, 0.0, 0.0, 0};
  result.trajectory.push(0.0, current.points());
  result.potentials.push_back(irregularity_potential(current));

  double step = options.initial_step;
  double boundary = current.boundary_volume();

  int iter = 0;
  for (; iter < options.max_iters; ++iter) {
    result.final_residual = vertex_over_incenter_residual(current);
    if (result.final_residual < options.residual_tol) {
      result.converged = true;
      break;
    }

    const Matrix grad_b = boundary_volume_gradient(current);
    const Matrix grad_v = volume_gradient(current);
    const double vv = grad_v.squaredNorm();
    const Matrix tangent =
        grad_b - (grad_b.cwiseProduct(grad_v).sum() / vv) * grad_v;
    const double tangent_norm = tangent.norm();
    if (tangent_norm <= 0.0) break;

    const double mean_edge = edge_length_stats(current.points()).first;
    const Matrix direction = tangent / tangent_norm;

    bool accepted = false;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      const double length = step * mean_edge;
      Matrix trial_pts = current.points() - length * direction;
      try {
        Simplex trial = normalized(std::move(trial_pts), target_volume);
        const double trial_boundary = trial.boundary_volume();
        if (trial_boundary <= boundary - 1e-4 * length * tangent_norm) {
          current = std::move(trial);
          boundary = trial_boundary;
          accepted = true;
          break;
        }
      } catch (const Error&) {
        // Step left the nondegenerate stratum; shrink and retry.
      }
      step *= 0.5;
    }
    if (!accepted) break;
    step = std::min(step * 1.3, 1.0);

    const double potential = irregularity_potential(current);
    if (!result.potentials.empty() && potential > result.potentials.back())
      result.potential_monotone = false;
    result.potentials.push_back(potential);

    if (options.record_every > 0 && (iter + 1) % options.record_every == 0)
      result.trajectory.push(iter + 1.0, current.points());
  }

  result.iterations = iter;
  result.terminal = current;
  result.final_potential = irregularity_potential(current);
  result.final_residual = vertex_over_incenter_residual(current);
  if (result.final_residual < options.residual_tol) result.converged = true;
  result.trajectory.push(static_cast<double>(iter), current.points());
  // Normalize recorded times onto [0, 1].
  const double t_max = std::max(result.trajectory.times.back(), 1.0);
  for (double& t : result.trajectory.times) t /= t_max;
  return result;
}

}  // namespace simplexflows
