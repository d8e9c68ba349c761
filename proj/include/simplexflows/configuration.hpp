#pragma once

#include <vector>

#include "simplexflows/common.hpp"
#include "simplexflows/simplex.hpp"

namespace simplexflows {

enum class ComplexKind { K, L };

/// An unlabeled point configuration carrying a complex tag: kind K holds n+1
/// points (the codimension 2 skeleton of the n-simplex), kind L holds n+2
/// points (the codimension 2 skeleton of the (n+1)-simplex). Points are the
/// columns of an n x (n+1 or n+2) matrix; the stored order is incidental.
class Configuration {
 public:
  Configuration(ComplexKind kind, Matrix points);

  ComplexKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(points_.rows()); }
  Index point_count() const { return points_.cols(); }
  const Matrix& points() const { return points_; }
  Matrix& points() { return points_; }
  Vector point(Index i) const { return points_.col(i); }
  Vector barycenter() const { return points_.rowwise().mean(); }

  /// The faces of the tagged skeleton: all vertex subsets of size <= n-1,
  /// each in increasing index order.
  std::vector<std::vector<Index>> skeleton_faces() const;

 private:
  ComplexKind kind_;
  Matrix points_;
};

/// Exact distance between the convex hulls of two point sets (columns), by
/// enumeration over face pairs. Intended for the small hulls arising from
/// skeleton faces.
double convex_hull_distance(const Matrix& a, const Matrix& b);

struct EmbeddingReport {
  bool embedded = true;
  double min_disjoint_distance = 0.0;   // over disjoint face pairs
  std::vector<Index> witness_a, witness_b;  // closest offending pair if any
};

/// Checks that the tagged skeleton is embedded: convex hulls of disjoint
/// faces are disjoint (distance above tol.geom times the configuration
/// scale). Hyperplane-flat kind-K configurations with one interior vertex
/// pass, as they should.
EmbeddingReport check_embedded(const Configuration& config,
                               const Tolerances& tol = {});

/// Convenience wrapper; throws InvalidConfiguration when not embedded.
void require_embedded(const Configuration& config, const Tolerances& tol = {});

/// Least root-mean-square distance between the two configurations over all
/// point relabelings and orientation-preserving rigid motions. Used to compare
/// unlabeled configurations.
double config_distance_mod_rigid(const Matrix& a, const Matrix& b);

/// Plain sup distance between correspondingly ordered points.
double config_distance(const Matrix& a, const Matrix& b);

}  // namespace simplexflows
