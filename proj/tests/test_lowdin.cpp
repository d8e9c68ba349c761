#include <doctest.h>

#include "simplexflows/lowdin.hpp"
#include "simplexflows/sampling.hpp"
#include "simplexflows/simplex.hpp"

using namespace simplexflows;

TEST_SUITE_BEGIN("lowdin");

TEST_CASE("orthogonal input is fixed for all t") {
  Rng rng(11);
  for (int n = 2; n <= 5; ++n) {
    const Matrix q = random_orthogonal(n, rng);
    for (double t : {0.0, 0.3, 0.7, 1.0})
      CHECK((lowdin_path(q, t) - q).norm() < 1e-12);
  }
}

TEST_CASE("diagonal closed form") {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 0) = 2.0;
  x(1, 1) = 1.0;
  const Matrix mid = lowdin_path(x, 0.5);
  CHECK(mid(0, 0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(mid(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(mid(0, 1)) < 1e-15);
  CHECK(std::abs(mid(1, 0)) < 1e-15);
}

TEST_CASE("right O(n) equivariance") {
  Rng rng(12);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix x = random_basis(n, rng);
      const Matrix q = random_orthogonal(n, rng);
      const double t = std::uniform_real_distribution<double>(0, 1)(rng);
      CHECK((lowdin_path(x * q, t) - lowdin_path(x, t) * q).norm() <
            1e-10 * x.norm());
    }
  }
}

TEST_CASE("endpoint is the nearest orthogonal matrix") {
  Rng rng(13);
  for (int n = 2; n <= 4; ++n) {
    const Matrix x = random_basis(n, rng, 1e-2);
    const Matrix polar = lowdin_path(x, 1.0);
    const double dist = (polar - x).norm();
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix y = random_orthogonal(n, rng);
      CHECK(dist <= (y - x).norm() + 1e-9);
    }
  }
}

TEST_CASE("singular input is rejected") {
  Matrix x = Matrix::Zero(3, 3);
  x(0, 0) = 1.0;
  x(1, 1) = 1.0;
  CHECK_THROWS_AS(lowdin_path(x, 0.5), SingularInput);
}

TEST_CASE("regular basis coefficients") {
  // n = 3: mu = 4 / (3 sqrt 2), nu = 1 / (3 sqrt 2).
  const auto [mu, nu] = regular_basis_coefficients(3);
  CHECK(mu == doctest::Approx(4.0 / (3.0 * std::sqrt(2.0))).epsilon(1e-15));
  CHECK(nu == doctest::Approx(1.0 / (3.0 * std::sqrt(2.0))).epsilon(1e-15));
  for (int n = 2; n <= 12; ++n) {
    const auto [m, v] = regular_basis_coefficients(n);
    CHECK(std::abs(m * m + (n - 1) * v * v - 1.0) < 1e-12);
    CHECK(std::abs(2.0 * (m - v) * (m - v) - 1.0) < 1e-12);
  }
}

TEST_CASE("regular basis spans a unit-edge simplex") {
  for (int n = 2; n <= 8; ++n) {
    const Matrix a = regular_simplex_basis(n);
    Matrix pts(n, n + 1);
    pts.col(0).setZero();
    pts.rightCols(n) = a;
    const auto [mean, spread] = edge_length_stats(pts);
    CHECK(std::abs(mean - 1.0) < 1e-12);
    CHECK(spread < 1e-12);
  }
}

TEST_CASE("base swap conjugates to an orthogonal matrix") {
  for (int n = 2; n <= 6; ++n) {
    const Matrix a = regular_simplex_basis(n);
    for (int i = 1; i <= n; ++i) {
      const Matrix b = base_vertex_swap(n, i);
      CHECK((b * b - Matrix::Identity(n, n)).norm() < 1e-14);
      const Matrix q = a * b * a.inverse();
      CHECK((q.transpose() * q - Matrix::Identity(n, n)).norm() < 1e-10);
    }
  }
}

TEST_CASE("regularization fixes the regular basis") {
  for (int n = 2; n <= 5; ++n) {
    const Matrix a = regular_simplex_basis(n);
    for (double t : {0.0, 0.4, 1.0})
      CHECK((regularization_path(a, t) - a).norm() < 1e-12);
  }
}

TEST_CASE("regularization terminates in a unit-edge simplex") {
  Rng rng(14);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix x = random_basis(n, rng);
      const Matrix end = regularization_path(x, 1.0);
      Matrix pts(n, n + 1);
      pts.col(0).setZero();
      pts.rightCols(n) = end;
      const auto [mean, spread] = edge_length_stats(pts);
      CHECK(std::abs(mean - 1.0) < 1e-8);
      CHECK(spread < 1e-8);
    }
  }
}

TEST_CASE("regularization commutes with base swaps") {
  Rng rng(15);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix x = random_basis(n, rng);
      const int i = std::uniform_int_distribution<int>(1, n)(rng);
      const double t = std::uniform_real_distribution<double>(0, 1)(rng);
      const Matrix b = base_vertex_swap(n, i);
      CHECK((regularization_path(x * b, t) - regularization_path(x, t) * b).norm() <
            1e-9 * x.norm());
    }
  }
}

TEST_CASE("regularization descends to unlabeled simplices") {
  // Regularizing x and x B_i and forgetting labels gives the same vertex set.
  Rng rng(16);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3;
    const Matrix x = random_basis(n, rng);
    const Matrix b = base_vertex_swap(n, 2);
    const double t = 0.63;
    Matrix p1(n, n + 1), p2(n, n + 1);
    p1.col(0).setZero();
    p1.rightCols(n) = regularization_path(x, t);
    p2.col(0).setZero();
    p2.rightCols(n) = regularization_path(x * b, t);
    // Compare as unlabeled sets up to translation: recentre then match.
    p1.colwise() -= p1.rowwise().mean().eval();
    p2.colwise() -= p2.rowwise().mean().eval();
    double worst = 0.0;
    for (Index i = 0; i <= n; ++i) {
      double best = 1e300;
      for (Index j = 0; j <= n; ++j)
        best = std::min(best, (p1.col(i) - p2.col(j)).norm());
      worst = std::max(worst, best);
    }
    CHECK(worst < 1e-8);
  }
}

TEST_SUITE_END();
