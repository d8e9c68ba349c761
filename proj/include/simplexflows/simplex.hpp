#pragma once

#include <utility>
#include <vector>

#include "simplexflows/common.hpp"

namespace simplexflows {

/// An n-simplex in R^n: n+1 vertices stored as the columns of an
/// n x (n+1) matrix. Hyperplane-degenerate simplices are allowed (they occur
/// as the flat configurations of the retraction), but every n-subset of the
/// vertices must stay affinely independent.
class Simplex {
 public:
  explicit Simplex(Matrix vertices);

  int dimension() const { return static_cast<int>(points_.rows()); }
  Index vertex_count() const { return points_.cols(); }
  const Matrix& points() const { return points_; }
  Vector vertex(Index i) const { return points_.col(i); }

  Vector barycenter() const { return points_.rowwise().mean(); }

  /// Basis from vertex `base`: columns are the edge vectors to the other
  /// vertices, in increasing vertex order.
  Matrix basis(Index base = 0) const;

  /// Vertex indices of the facet opposite vertex i, in increasing order.
  std::vector<Index> facet_indices(Index opposite) const;
  Matrix facet(Index opposite) const;

  double signed_volume() const;
  double volume() const { return std::abs(signed_volume()); }

  /// Total (n-1)-volume of the boundary.
  double boundary_volume() const;

  /// True if the vertices span R^n within the relative rank tolerance.
  bool spans(double tol_rank = Tolerances{}.rank) const;

  /// Checks the invariant that every n-subset of vertices is affinely
  /// independent. Throws DegenerateSimplex when violated.
  void require_valid(double tol_rank = Tolerances{}.rank) const;

 private:
  Matrix points_;
};

/// k-volume of the simplex spanned by the columns of `pts` (k+1 points in
/// R^n, k <= n), via the Gram determinant.
double simplex_volume(const Matrix& pts);

/// Distance from `point` to the affine hull of the columns of `hull_pts`.
double affine_hull_distance(const Vector& point, const Matrix& hull_pts);

/// Orthogonal projection of `point` onto the affine hull of `hull_pts`.
Vector affine_hull_projection(const Vector& point, const Matrix& hull_pts);

/// Unit normal of the affine hull of the n columns of `face` (a hyperplane in
/// R^n), oriented so that `toward` lies on the positive side.
Vector hyperplane_normal(const Matrix& face, const Vector& toward);

struct IncenterResult {
  Vector center;
  double radius = 0.0;
};

/// Incenter and inradius, r = n Vol(x) / Vol(boundary x). The center is the
/// facet-volume weighted average of the vertices and is equidistant from all
/// facet hyperplanes.
IncenterResult incenter_inradius(const Simplex& simplex);

/// Incenter of a lower-dimensional simplex given by its vertex columns,
/// computed intrinsically in its affine hull.
Vector face_incenter(const Matrix& face_pts);

/// Mean and spread (max minus min) of all pairwise vertex distances.
std::pair<double, double> edge_length_stats(const Matrix& pts);

}  // namespace simplexflows
