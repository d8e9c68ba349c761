#pragma once

#include <vector>

#include "simplexflows/common.hpp"
#include "simplexflows/simplex.hpp"

namespace simplexflows {

/// A discretized path of point configurations on a uniform-ish time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> frames;

  void push(double t, Matrix frame) {
    times.push_back(t);
    frames.push_back(std::move(frame));
  }
};

/// Vol(x) / Vol(insphere(x)); minimized exactly by regular simplices and
/// constant on similarity orbits.
double irregularity_potential(const Simplex& simplex);

/// Gradient of the total boundary volume with respect to the vertex
/// positions (column i is the gradient at vertex i).
Matrix boundary_volume_gradient(const Simplex& simplex);

/// Gradient of the signed-volume magnitude with respect to the vertices.
Matrix volume_gradient(const Simplex& simplex);

/// Residual of the terminal characterization: how far each vertex projects
/// from the incenter of its opposite facet, normalized by the mean edge.
double vertex_over_incenter_residual(const Simplex& simplex);

struct FlowOptions {
  double initial_step = 1e-2;   // relative to the mean edge length
  int max_iters = 20000;
  double residual_tol = Tolerances{}.flow;
  int record_every = 0;         // 0 records only the endpoints
};

struct FlowResult {
  Simplex terminal;
  Trajectory trajectory;
  std::vector<double> potentials;  // one per accepted step
  bool converged = false;
  bool potential_monotone = true;
  double final_potential = 0.0;
  double final_residual = 0.0;
  int iterations = 0;
};

/// Surface-minimizing flow at fixed volume: projected gradient descent on the
/// boundary volume along the volume-constraint tangent, with backtracking,
/// volume restored by uniform rescaling and the incenter recentered at the
/// origin after every step. Increases the inradius and terminates when every
/// vertex lies over the incenter of its opposite facet, i.e. at a regular
/// simplex.
FlowResult inradius_flow(const Simplex& simplex, const FlowOptions& options = {});

}  // namespace simplexflows
