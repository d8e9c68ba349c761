#include <doctest.h>

#include "simplexflows/flows.hpp"
#include "simplexflows/lowdin.hpp"
#include "simplexflows/sampling.hpp"

using namespace simplexflows;

namespace {

Simplex regular_simplex_points(int n) {
  Matrix pts(n, n + 1);
  pts.col(0).setZero();
  pts.rightCols(n) = regular_simplex_basis(n);
  return Simplex(pts);
}

Matrix finite_difference(const Simplex& s, double (*f)(const Simplex&)) {
  const double h = 1e-6;
  Matrix grad(s.dimension(), s.vertex_count());
  for (Index j = 0; j < s.vertex_count(); ++j)
    for (Index i = 0; i < s.dimension(); ++i) {
      Matrix plus = s.points(), minus = s.points();
      plus(i, j) += h;
      minus(i, j) -= h;
      grad(i, j) = (f(Simplex(plus)) - f(Simplex(minus))) / (2.0 * h);
    }
  return grad;
}

}  // namespace

TEST_SUITE_BEGIN("flows");

TEST_CASE("boundary volume gradient matches finite differences") {
  Rng rng(61);
  for (int n : {2, 3, 4}) {
    const Simplex s = random_simplex(n, rng);
    const Matrix analytic = boundary_volume_gradient(s);
    const Matrix numeric = finite_difference(
        s, [](const Simplex& x) { return x.boundary_volume(); });
    CHECK((analytic - numeric).norm() < 1e-6 * (1.0 + analytic.norm()));
  }
}

TEST_CASE("volume gradient matches finite differences") {
  Rng rng(62);
  for (int n : {2, 3, 4}) {
    const Simplex s = random_simplex(n, rng);
    const Matrix analytic = volume_gradient(s);
    const Matrix numeric =
        finite_difference(s, [](const Simplex& x) { return x.volume(); });
    CHECK((analytic - numeric).norm() < 1e-6 * (1.0 + analytic.norm()));
  }
}

TEST_CASE("potential is similarity invariant") {
  Rng rng(63);
  const Simplex s = random_simplex(3, rng);
  const double base = irregularity_potential(s);
  const Matrix q = random_rotation(3, rng);
  const Vector shift = random_gaussian(3, 1, rng);
  Matrix moved = (3.7 * q * s.points()).colwise() + shift;
  CHECK(irregularity_potential(Simplex(moved)) ==
        doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("regular simplex is a fixed point") {
  const Simplex reg = regular_simplex_points(3);
  const Matrix grad_b = boundary_volume_gradient(reg);
  const Matrix grad_v = volume_gradient(reg);
  const Matrix tangent =
      grad_b - (grad_b.cwiseProduct(grad_v).sum() / grad_v.squaredNorm()) * grad_v;
  CHECK(tangent.norm() < 1e-9);

  const FlowResult result = inradius_flow(reg);
  CHECK(result.converged);
  CHECK(result.iterations == 0);
  CHECK(result.final_potential ==
        doctest::Approx(irregularity_potential(reg)).epsilon(1e-12));
}

TEST_CASE("random tetrahedra flow to the regular simplex") {
  Rng rng(64);
  for (int trial = 0; trial < 5; ++trial) {
    const Simplex s = random_simplex(3, rng);
    const double before = irregularity_potential(s);
    const FlowResult result = inradius_flow(s);
    CHECK(result.converged);
    CHECK(result.potential_monotone);
    CHECK(result.final_potential < before);
    CHECK(result.final_residual < 1e-6);
    const auto [mean, spread] = edge_length_stats(result.terminal.points());
    CHECK(spread < 1e-4 * mean);
    // Volume is preserved by the constraint projection.
    CHECK(result.terminal.volume() == doctest::Approx(s.volume()).epsilon(1e-9));
  }
}

TEST_CASE("terminal simplex satisfies the multiplier characterization") {
  // At the minimum the signed distances from the apex projection to the
  // subfaces are equal, and sum(a_i / A_i) = 1.
  Rng rng(65);
  const Simplex s = random_simplex(3, rng);
  const FlowResult result = inradius_flow(s);
  REQUIRE(result.converged);
  const Simplex& terminal = result.terminal;
  const int n = 3;
  for (Index v = 0; v <= n; ++v) {
    const Matrix face = terminal.facet(v);
    const Vector foot = affine_hull_projection(terminal.vertex(v), face);
    std::vector<double> a, alt;
    for (Index i = 0; i < face.cols(); ++i) {
      Matrix sub(face.rows(), face.cols() - 1);
      Index k = 0;
      for (Index j = 0; j < face.cols(); ++j)
        if (j != i) sub.col(k++) = face.col(j);
      // Signed distance from the foot to the subface, positive toward vertex i.
      const Vector toward = face.col(i) - affine_hull_projection(face.col(i), sub);
      const Vector offset = foot - affine_hull_projection(foot, sub);
      const double sign = offset.dot(toward) >= 0.0 ? 1.0 : -1.0;
      a.push_back(sign * offset.norm());
      alt.push_back(toward.norm());
    }
    double ratio_sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(std::abs(a[i] - a[0]) < 1e-5);
      ratio_sum += a[i] / alt[i];
    }
    CHECK(ratio_sum == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("nonconvergence is reported") {
  Rng rng(66);
  const Simplex s = random_simplex(3, rng);
  FlowOptions opts;
  opts.max_iters = 3;
  const FlowResult result = inradius_flow(s, opts);
  CHECK(!result.converged);
  CHECK(result.final_potential > 0.0);
}

TEST_SUITE_END();
