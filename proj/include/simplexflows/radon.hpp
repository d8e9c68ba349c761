#pragma once

#include <vector>

#include "simplexflows/common.hpp"
#include "simplexflows/configuration.hpp"

namespace simplexflows {

/// Radon partition of n+2 points in R^n: two disjoint index sets whose convex
/// hulls share `radon_point`. `coefficients` is the affine dependence: the
/// lambda with sum 0 and sum lambda_i p_i = 0; part1 holds the positive
/// indices. part1 is the smaller side; on size ties the side containing the
/// lowest-index point with a nonzero coefficient.
struct RadonPartition {
  std::vector<Index> part1, part2;
  Vector coefficients;
  Vector radon_point;
};

RadonPartition radon_partition(const Matrix& points,
                               double tol_rank = Tolerances{}.rank);

enum class DegeneracyKind {
  NonDegenerate,  // kind K: points span R^n
  Hyperplane,     // kind K: flat, one vertex inside the hull of the others
  Interior,       // kind L: a vertex interior to the hull of the others
  EdgeFace,       // kind L: an edge meets its opposite would-be face
  Boundary,       // kind L: a vertex lies in a would-be face
};

/// Classification of a configuration, with the combinatorial data of the
/// degeneracy and a margin for near-boundary detection. The margin is the
/// normalized distance to the nearest classification boundary (for Boundary
/// itself, the residual magnitude placing the vertex on the face).
struct DegeneracyClass {
  DegeneracyKind kind = DegeneracyKind::NonDegenerate;
  Index vertex = -1;                 // Hyperplane / Interior / Boundary
  std::pair<Index, Index> edge{-1, -1};  // EdgeFace
  std::vector<Index> face;           // opposite face (EdgeFace / Boundary)
  Vector radon_point;                // EdgeFace / Boundary
  double margin = 0.0;
};

DegeneracyClass classify(const Configuration& config, const Tolerances& tol = {});

}  // namespace simplexflows
