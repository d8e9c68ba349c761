#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "simplexflows/configuration.hpp"
#include "simplexflows/flows.hpp"
#include "simplexflows/radon.hpp"
#include "simplexflows/retract_k.hpp"
#include "simplexflows/retraction_paths.hpp"

namespace simplexflows {

/// Target parameter s(m, q) that positions an interior vertex on the segment
/// from the face centroid (s=0) to the configuration centroid (s=1):
/// s = (1-q)(1 - n m / (1-q))^{1/q} + q, extended by s = 0 on q = 0.
/// Continuous on 0 <= n m <= 1-q <= 1 minus the origin; s(0,q) = 1,
/// s(m,0) = 0 and s((1-q)/n, q) = q.
double radial_target_parameter(double m, double q, int n);

/// A pyramidal kind-L configuration: n points forming a regular unit-edge
/// face F, one vertex completing a regular n-simplex over F, and the last
/// vertex on the same axis (inside that simplex no higher than its
/// barycenter, or anywhere down to the mirrored regular apex).
struct PyramidL {
  std::vector<Index> face;
  Index delta_apex = 0;   // apex of the regular simplex
  Index inner = 0;        // the second on-axis vertex
  double apex_height = 0.0;   // in base-edge units, positive
  double inner_height = 0.0;  // signed, negative on the far side of F
  double scale = 1.0;
  double residual = 0.0;
};

std::optional<PyramidL> is_pyramid_l(const Configuration& config, double tol);

/// Canonical pyramid: regular face in the first n-1 coordinates, regular apex
/// at +height, inner vertex at `inner_height` (base-edge units) on the axis.
Matrix pyramid_l_points(int n, double inner_height);

/// The three-stage deformation retraction of kind-L configurations onto the
/// pyramidal space: stage 1 moves the Radon point onto the segment from the
/// centroid to a face centroid, stage 2 regularizes against the distinguished
/// face with damping 1-q (the face held fixed on the edge-face side), stage 3
/// regularizes the face itself one dimension lower.
class LRetraction {
 public:
  LRetraction(const Configuration& config, const RetractOptions& options = {});

  Configuration at(double t) const;  // stages on [0,1/3], [1/3,2/3], [2/3,1]
  Matrix stage1_at(double u) const;
  Matrix stage2_at(double u) const;
  Matrix stage3_at(double u) const;
  const DegeneracyClass& classification() const { return class_; }

 private:
  void build_stage2(const Matrix& entry);

  Configuration input_;
  RetractOptions options_;
  DegeneracyClass class_;

  // Stage 1 data.
  Index moving_ = -1;          // interior / boundary vertex
  Vector target_;              // its endpoint
  Index edge_v1_ = -1, edge_v2_ = -1;  // edge-face branch
  Vector target_v1_, target_v2_;

  // Stage 2 data.
  DegeneracyKind branch_ = DegeneracyKind::Interior;
  std::vector<Index> wide_face_;       // indices into the configuration
  Matrix stage2_entry_;
  double q_ = 0.0;                     // damping parameter (interior branch)
  Index far_vertex_ = -1;
  std::unique_ptr<LabeledSimplexPath> outer_path_;     // interior / boundary
  std::vector<Index> outer_index_;                     // config index per column
  std::vector<Index> face_in_outer_;
  Index apex_in_outer_ = -1;
  Vector outer_shift_;
  std::unique_ptr<LabeledSimplexPath> near_path_, far_path_;  // edge-face
  Vector near_shift_, far_shift_;
  Vector face_normal_;
  Vector face_point_;

  std::unique_ptr<FaceRegularizationStage> stage3_;
};

Configuration retract_l(const Configuration& config, double t,
                        const RetractOptions& options = {});

/// Uniform samples of the full retraction, or of a single stage when `stage`
/// is 1, 2 or 3.
Trajectory retract_l_trajectory(const Configuration& config, int samples,
                                const RetractOptions& options = {},
                                bool check_embedding = false, int stage = 0);

}  // namespace simplexflows
