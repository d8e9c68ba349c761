#pragma once

#include <utility>

#include "simplexflows/common.hpp"
#include "simplexflows/simplex.hpp"

namespace simplexflows {

/// Deterministic low-discrepancy point set on S^{n-1}, used for solid angles
/// in dimension n >= 4. Built once per dimension from an additive-recurrence
/// sequence pushed through the inverse normal CDF ("rd-gauss-v1"); the size
/// defaults to 2^20 and can be overridden with SIMPLEXFLOWS_SOBOL_SIZE.
const Matrix& sphere_sample_table(int n);

/// Number of points the table for dimension n will have.
Index sphere_sample_count();

/// Solid angle at `apex` of the cone positively spanned by the n columns of
/// `rays`: the (n-1)-dimensional spherical volume cut by the cone from a unit
/// sphere at the apex. Closed form for n=2 and n=3, sampled for n >= 4.
double solid_angle(const Vector& apex, const Matrix& rays,
                   double tol_rank = Tolerances{}.rank);

/// Solid angle of the simplex at vertex i (cone over the incident edges).
double vertex_solid_angle(const Simplex& simplex, Index vertex,
                          double tol_rank = Tolerances{}.rank);

struct GreatestSolidAngle {
  double value = 0.0;
  Index vertex = 0;
  bool degenerate = false;  // hyperplane configuration, value extended to V
};

/// Greatest solid angle over the vertices, ties broken by lowest index. On a
/// hyperplane-degenerate simplex the value is extended to half the sphere
/// volume at the unique interior vertex.
GreatestSolidAngle greatest_solid_angle(const Simplex& simplex,
                                        const Tolerances& tol = {});

/// Reparametrization of the greatest solid angle alpha on [V/2, V] onto
/// [0, 1]: 2 alpha / V - 1. Drives the damping of the wide face in the
/// retractions. Throws OutOfRange outside the domain unless clamping.
double wide_face_damping(const Simplex& simplex, bool clamp = false,
                         const Tolerances& tol = {});
double wide_face_damping_from_alpha(double alpha, int n, bool clamp = false);

/// Reparametrization 3 - 4 alpha / V of the greatest solid angle on
/// (-V/2, 3V/4], used to blend a generic regularization into the preferred
/// apex retraction. Zero at alpha = 3V/4.
double regularization_blend(const Simplex& simplex, bool clamp = false,
                            const Tolerances& tol = {});
double regularization_blend_from_alpha(double alpha, int n, bool clamp = false);

}  // namespace simplexflows
