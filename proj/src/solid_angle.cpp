#include "simplexflows/solid_angle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>

namespace simplexflows {
namespace {

// Acklam's rational approximation to the inverse normal CDF, refined with one
// Halley step. Absolute error below 1e-15 on (0,1).
double inverse_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1.0 - plow;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= phigh) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

// Additive-recurrence (Kronecker) sequence in [0,1)^n using the generalized
// golden ratio; a standard low-discrepancy construction with no tables.
void fill_rd_point(int n, Index k, Vector& out) {
  double phi = 1.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (n + 1.0));
  double alpha = 1.0;
  for (int j = 0; j < n; ++j) {
    alpha /= phi;
    const double v = 0.5 + alpha * static_cast<double>(k + 1);
    out(j) = v - std::floor(v);
  }
}

Index table_size_from_env() {
  if (const char* env = std::getenv("SIMPLEXFLOWS_SOBOL_SIZE")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<Index>(v);
  }
  return Index{1} << 20;
}

double angle_2d(const Matrix& rays) {
  const Vector u = rays.col(0), v = rays.col(1);
  const double cross = u(0) * v(1) - u(1) * v(0);
  return std::atan2(std::abs(cross), u.dot(v));
}

// Van Oosterom-Strackee for a 3-ray cone.
double angle_3d(const Matrix& rays) {
  const Vector a = rays.col(0), b = rays.col(1), c = rays.col(2);
  const double la = a.norm(), lb = b.norm(), lc = c.norm();
  const double numer = std::abs(rays.determinant());
  const double denom =
      la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
  double omega = 2.0 * std::atan2(numer, denom);
  if (omega < 0.0) omega += 4.0 * M_PI;
  return omega;
}

double angle_sampled(const Matrix& rays) {
  const int n = static_cast<int>(rays.rows());
  const Matrix& table = sphere_sample_table(n);
  const Matrix coords = rays.colPivHouseholderQr().solve(table);
  Index inside = 0;
  for (Index j = 0; j < coords.cols(); ++j)
    if ((coords.col(j).array() >= 0.0).all()) ++inside;
  return sphere_surface_volume(n) * static_cast<double>(inside) /
         static_cast<double>(coords.cols());
}

}  // namespace

Index sphere_sample_count() { return table_size_from_env(); }

const Matrix& sphere_sample_table(int n) {
  static std::mutex mutex;
  static std::map<int, Matrix> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;

  const Index count = table_size_from_env();
  Matrix table(n, count);
  Vector u(n);
  for (Index k = 0; k < count; ++k) {
    fill_rd_point(n, k, u);
    for (int j = 0; j < n; ++j) table(j, k) = inverse_normal_cdf(u(j));
    const double norm = table.col(k).norm();
    table.col(k) /= norm > 0.0 ? norm : 1.0;
  }
  return tables.emplace(n, std::move(table)).first->second;
}

double solid_angle(const Vector& apex, const Matrix& rays, double tol_rank) {
  (void)apex;  // angles depend on the ray directions only
  const Index n = rays.rows();
  if (rays.cols() != n)
    throw DimensionError("solid_angle: need exactly n rays in R^n");
  Eigen::JacobiSVD<Matrix> svd(rays);
  const auto& sv = svd.singularValues();
  if (sv(n - 1) <= tol_rank * sv(0))
    throw DegenerateCone("solid_angle: rays are linearly dependent");
  if (n == 2) return angle_2d(rays);
  if (n == 3) return angle_3d(rays);
  return angle_sampled(rays);
}

double vertex_solid_angle(const Simplex& simplex, Index vertex, double tol_rank) {
  const Index n = simplex.dimension();
  Matrix rays(n, n);
  Index k = 0;
  for (Index j = 0; j <= n; ++j) {
    if (j == vertex) continue;
    rays.col(k++) = simplex.vertex(j) - simplex.vertex(vertex);
  }
  return solid_angle(simplex.vertex(vertex), rays, tol_rank);
}

GreatestSolidAngle greatest_solid_angle(const Simplex& simplex, const Tolerances& tol) {
  GreatestSolidAngle out;
  if (!simplex.spans(tol.rank)) {
    // Hyperplane configuration: extend alpha to V at the interior vertex,
    // which is the unique non-extremal one.
    const Index n = simplex.dimension();
    out.degenerate = true;
    out.value = half_sphere_volume(static_cast<int>(n));
    double best = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i <= n; ++i) {
      // Affine coordinates of vertex i over the other n points (unique in the
      // hyperplane); the interior vertex has all of them positive.
      const Matrix others = simplex.facet(i);
      Matrix system(n + 1, n);
      system.topRows(n) = others;
      system.row(n).setOnes();
      Vector rhs(n + 1);
      rhs.head(n) = simplex.vertex(i);
      rhs(n) = 1.0;
      const Vector coeff = system.colPivHouseholderQr().solve(rhs);
      const double margin = coeff.minCoeff();
      if (margin > best) {
        best = margin;
        out.vertex = i;
      }
    }
    return out;
  }
  out.value = -1.0;
  for (Index i = 0; i <= simplex.dimension(); ++i) {
    const double a = vertex_solid_angle(simplex, i, tol.rank);
    if (a > out.value + 0.0) {
      out.value = a;
      out.vertex = i;
    }
  }
  return out;
}

double wide_face_damping_from_alpha(double alpha, int n, bool clamp) {
  const double v = half_sphere_volume(n);
  double eta = 2.0 * alpha / v - 1.0;
  if (eta < 0.0 || eta > 1.0) {
    if (!clamp) throw OutOfRange("wide_face_damping: alpha outside [V/2, V]");
    eta = std::clamp(eta, 0.0, 1.0);
  }
  return eta;
}

double wide_face_damping(const Simplex& simplex, bool clamp, const Tolerances& tol) {
  const auto gsa = greatest_solid_angle(simplex, tol);
  return wide_face_damping_from_alpha(gsa.value, simplex.dimension(), clamp);
}

double regularization_blend_from_alpha(double alpha, int n, bool clamp) {
  const double v = half_sphere_volume(n);
  const double ratio = alpha / v;
  if (ratio <= -0.5 || ratio > 0.75) {
    if (!clamp) throw OutOfRange("regularization_blend: alpha outside (-V/2, 3V/4]");
    return 3.0 - 4.0 * std::clamp(ratio, -0.5, 0.75);
  }
  return 3.0 - 4.0 * ratio;
}

double regularization_blend(const Simplex& simplex, bool clamp, const Tolerances& tol) {
  const auto gsa = greatest_solid_angle(simplex, tol);
  return regularization_blend_from_alpha(gsa.value, simplex.dimension(), clamp);
}

}  // namespace simplexflows
