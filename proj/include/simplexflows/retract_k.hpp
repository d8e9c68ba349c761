#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "simplexflows/configuration.hpp"
#include "simplexflows/flows.hpp"
#include "simplexflows/retraction_paths.hpp"
#include "simplexflows/solid_angle.hpp"

namespace simplexflows {

/// Apex vertex and wide face of a configuration whose greatest solid angle
/// exceeds half the sphere volume; unique in that range. Throws NotGated
/// below the gate.
struct WideFace {
  Index apex = 0;
  std::vector<Index> face;
  double alpha = 0.0;
};
WideFace wide_face(const Configuration& config, const Tolerances& tol = {});

/// A pyramidal kind-K configuration: a regular (n-1)-simplex base with unit
/// edges and barycenter at the origin, the apex on the perpendicular line
/// through the barycenter at height between 0 and the regular height.
struct PyramidK {
  Index apex = 0;
  std::vector<Index> base;
  double height = 0.0;    // in units of the base edge
  double scale = 1.0;     // base edge length
  Matrix frame;           // columns: base-plane directions, then the axis
  double residual = 0.0;
};

/// Tests membership in the pyramidal space up to translation, rotation and
/// global scale, returning the decomposition when it holds.
std::optional<PyramidK> is_pyramid_k(const Configuration& config, double tol);

/// Canonical pyramid points: base spanning the first n-1 coordinates, apex at
/// height `height` (in base-edge units) on the last axis.
Matrix pyramid_k_points(int n, double height);

struct RetractOptions {
  bool literal_scale = false;  // paper-literal perpendicular scale reading
  Tolerances tol;
};

/// Deformation retraction of a kind-K configuration onto the pyramidal
/// space, evaluated anywhere on [0, 1]. Time [0, 1/2] carries the
/// solid-angle gated regularization (damped against the wide face above the
/// gate), [1/2, 1] regularizes the wide face in one dimension lower.
class KRetraction {
 public:
  KRetraction(const Configuration& config, const RetractOptions& options = {});

  Configuration at(double t) const;
  bool gated() const { return gated_; }
  bool flat() const { return flat_; }
  double alpha() const { return alpha_; }
  double damping() const { return eta_; }

 private:
  Matrix stage1_at(double u) const;

  Configuration input_;
  RetractOptions options_;
  double alpha_ = 0.0, eta_ = 0.0;
  bool gated_ = false, flat_ = false;
  Index apex_ = -1;
  std::vector<Index> face_;
  Vector barycenter_shift_;
  std::unique_ptr<LabeledSimplexPath> path_;
  std::unique_ptr<FaceRegularizationStage> stage2_;
};

/// One-call evaluation.
Configuration retract_k(const Configuration& config, double t,
                        const RetractOptions& options = {});

/// Uniformly sampled trajectory; with `check_embedding` every sample is
/// verified to stay in the configuration space (EmbeddingViolated otherwise).
Trajectory retract_k_trajectory(const Configuration& config, int samples,
                                const RetractOptions& options = {},
                                bool check_embedding = false);

}  // namespace simplexflows
