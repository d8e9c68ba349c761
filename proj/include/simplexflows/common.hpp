#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace simplexflows {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Tolerances used throughout. `rank` is relative (rank / degeneracy
/// decisions), `geom` is for geometric membership, `flow` for flow
/// termination residuals.
struct Tolerances {
  double rank = 1e-9;
  double geom = 1e-8;
  double flow = 1e-6;
};

// ---------------------------------------------------------------------------
// Error types
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficient : Error { using Error::Error; };
struct SingularInput : Error { using Error::Error; };
struct DegenerateCone : Error { using Error::Error; };
struct DegenerateSimplex : Error { using Error::Error; };
struct InvalidConfiguration : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotGated : Error { using Error::Error; };

/// A configuration left its embedded stratum at parameter `t` along a path.
struct EmbeddingViolated : Error {
  EmbeddingViolated(const std::string& what, double t_bad)
      : Error(what), t(t_bad) {}
  double t;
};

// ---------------------------------------------------------------------------
// Sphere / simplex constants
// ---------------------------------------------------------------------------

/// Surface volume of the unit (n-1)-sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
inline double sphere_surface_volume(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Half the surface volume of S^{n-1}; the upper bound for a single solid
/// angle and for the sum of the solid angles of an n-simplex.
inline double half_sphere_volume(int n) { return 0.5 * sphere_surface_volume(n); }

/// Volume of the n-ball of radius r.
inline double ball_volume(int n, double r) {
  return std::pow(M_PI, 0.5 * n) * std::pow(r, n) / std::tgamma(0.5 * n + 1.0);
}

/// Height of a regular n-simplex with unit edges over any facet.
inline double regular_simplex_height(int n) {
  return std::sqrt((n + 1.0) / (2.0 * n));
}

}  // namespace simplexflows
