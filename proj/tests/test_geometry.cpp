#include <doctest.h>

#include "simplexflows/affine.hpp"
#include "simplexflows/sampling.hpp"
#include "simplexflows/simplex.hpp"
#include "simplexflows/solid_angle.hpp"

using namespace simplexflows;

namespace {

Simplex regular_tetrahedron() {
  Matrix pts(3, 4);
  pts.col(0) << 1, 1, 1;
  pts.col(1) << 1, -1, -1;
  pts.col(2) << -1, 1, -1;
  pts.col(3) << -1, -1, 1;
  return Simplex(pts);
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("planar solid angle of a quarter plane") {
  Matrix rays(2, 2);
  rays.col(0) << 1, 0;
  rays.col(1) << 0, 1;
  CHECK(solid_angle(Vector::Zero(2), rays) == doctest::Approx(M_PI / 2).epsilon(1e-14));
}

TEST_CASE("octant cone in three dimensions") {
  const Matrix rays = Matrix::Identity(3, 3);
  CHECK(solid_angle(Vector::Zero(3), rays) == doctest::Approx(M_PI / 2).epsilon(1e-13));
}

TEST_CASE("regular tetrahedron vertex cone") {
  const Simplex tetra = regular_tetrahedron();
  const double expected = std::acos(23.0 / 27.0);
  for (Index i = 0; i < 4; ++i)
    CHECK(vertex_solid_angle(tetra, i) == doctest::Approx(expected).epsilon(1e-12));
  const auto gsa = greatest_solid_angle(tetra);
  CHECK(gsa.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(gsa.vertex == 0);  // ties break to the lowest index
}

TEST_CASE("degenerate cone is rejected") {
  Matrix rays(3, 3);
  rays.col(0) << 1, 0, 0;
  rays.col(1) << 0, 1, 0;
  rays.col(2) << 1, 1, 0;
  CHECK_THROWS_AS(solid_angle(Vector::Zero(3), rays), DegenerateCone);
}

TEST_CASE("triangle angles sum to half the circle") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Simplex tri = random_simplex(2, rng);
    double sum = 0.0;
    for (Index i = 0; i < 3; ++i) sum += vertex_solid_angle(tri, i);
    CHECK(sum == doctest::Approx(M_PI).epsilon(1e-9));
  }
}

TEST_CASE("solid angle sum bound for tetrahedra") {
  Rng rng(22);
  const double v = half_sphere_volume(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Simplex tetra = random_simplex(3, rng);
    double sum = 0.0;
    for (Index i = 0; i < 4; ++i) sum += vertex_solid_angle(tetra, i);
    CHECK(sum > 0.0);
    CHECK(sum <= v + 1e-9);
  }
}

TEST_CASE("cone splitting is additive in three dimensions") {
  Rng rng(23);
  const Matrix rays = random_basis(3, rng);
  Vector interior = rays * Vector::Constant(3, 1.0);
  interior /= interior.norm();
  const double whole = solid_angle(Vector::Zero(3), rays);
  double parts = 0.0;
  for (int drop = 0; drop < 3; ++drop) {
    Matrix fan(3, 3);
    Index k = 0;
    for (int j = 0; j < 3; ++j)
      if (j != drop) fan.col(k++) = rays.col(j);
    fan.col(2) = interior;
    parts += solid_angle(Vector::Zero(3), fan);
  }
  CHECK(parts == doctest::Approx(whole).epsilon(1e-10));
}

TEST_CASE("flattened simplex extends the greatest angle to V") {
  Rng rng(24);
  const Configuration flat = flat_k_configuration(3, rng);
  const Simplex simplex(flat.points());
  const auto gsa = greatest_solid_angle(simplex);
  CHECK(gsa.degenerate);
  CHECK(gsa.value == doctest::Approx(half_sphere_volume(3)));
  CHECK(gsa.vertex == 3);  // construction puts the interior vertex last
}

TEST_CASE("damping and blend reparametrizations") {
  const double v = half_sphere_volume(3);
  CHECK(wide_face_damping_from_alpha(0.5 * v, 3) == doctest::Approx(0.0));
  CHECK(wide_face_damping_from_alpha(v, 3) == doctest::Approx(1.0));
  CHECK_THROWS_AS(wide_face_damping_from_alpha(0.25 * v, 3), OutOfRange);
  CHECK(wide_face_damping_from_alpha(0.25 * v, 3, true) == doctest::Approx(0.0));
  CHECK(regularization_blend_from_alpha(0.75 * v, 3) == doctest::Approx(0.0));
  CHECK_THROWS_AS(regularization_blend_from_alpha(0.8 * v, 3), OutOfRange);
}

TEST_CASE("induced affine map basics") {
  Rng rng(25);
  const int n = 3;
  const Matrix face = random_gaussian(n, n, rng);
  const Vector toward = random_gaussian(n, 1, rng);
  const Vector normal = hyperplane_normal(face, toward);

  SUBCASE("identity when nothing moves") {
    const AffineMap map = induced_affine_map(face, face, normal, normal);
    CHECK((map.linear - Matrix::Identity(n, n)).norm() < 1e-10);
    CHECK(map.translation.norm() < 1e-10);
  }
  SUBCASE("pure rotation is recovered") {
    const Matrix q = random_rotation(n, rng);
    const AffineMap map = induced_affine_map(face, q * face, normal, q * normal);
    CHECK((map.linear - q).norm() < 1e-9);
    CHECK(map.translation.norm() < 1e-9);
  }
  SUBCASE("round trip with the inverse") {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix other = random_gaussian(n, n, rng);
      const Vector toward2 = random_gaussian(n, 1, rng);
      const Vector normal2 = hyperplane_normal(other, toward2);
      const AffineMap fwd = induced_affine_map(face, other, normal, normal2);
      const AffineMap round = fwd.inverse().compose(fwd);
      CHECK((round.linear - Matrix::Identity(n, n)).norm() < 1e-10);
      CHECK(round.translation.norm() < 1e-10);
    }
  }
}

TEST_CASE("perpendicular scale fixes the plane") {
  Rng rng(26);
  const Matrix face = random_gaussian(3, 3, rng);
  const Vector normal = hyperplane_normal(face, random_gaussian(3, 1, rng));
  const AffineMap map = perpendicular_scale(face.col(0), normal, 0.25);
  for (Index j = 0; j < 3; ++j)
    CHECK((map.apply(face.col(j)) - face.col(j)).norm() < 1e-12);
  const Vector off = face.col(0) + 2.0 * normal;
  CHECK((map.apply(off) - (face.col(0) + 0.5 * normal)).norm() < 1e-12);
}

TEST_CASE("incenter and inradius of the regular tetrahedron") {
  // Unit-edge regular tetrahedron: r = 1 / (2 sqrt 6).
  Matrix pts = regular_tetrahedron().points() / (2.0 * std::sqrt(2.0));
  const Simplex tetra(pts);
  const auto inc = incenter_inradius(tetra);
  CHECK(inc.radius == doctest::Approx(1.0 / (2.0 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK((inc.center - tetra.barycenter()).norm() < 1e-12);
}

TEST_CASE("inradius scales linearly") {
  Rng rng(27);
  const Simplex s = random_simplex(3, rng);
  const auto base = incenter_inradius(s);
  const Simplex scaled(Matrix(2.5 * s.points()));
  CHECK(incenter_inradius(scaled).radius == doctest::Approx(2.5 * base.radius).epsilon(1e-12));
}

TEST_CASE("incenter is equidistant from all facet hyperplanes") {
  Rng rng(28);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Simplex s = random_simplex(n, rng);
      const auto inc = incenter_inradius(s);
      for (Index i = 0; i <= n; ++i) {
        const double d = affine_hull_distance(inc.center, s.facet(i));
        CHECK(std::abs(d - inc.radius) < 1e-9);
      }
    }
  }
}

TEST_CASE("inradius against the Chebyshev-center oracle") {
  // For a simplex the Chebyshev center solves a linear system: a point at
  // equal distance r from all facet hyperplanes, with inward normals.
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    const Simplex s = random_simplex(n, rng);
    Matrix system(n + 1, n + 1);
    Vector rhs(n + 1);
    for (Index i = 0; i <= n; ++i) {
      const Matrix face = s.facet(i);
      const Vector normal = hyperplane_normal(face, s.vertex(i));
      system.row(i).head(n) = normal.transpose();
      system(i, n) = -1.0;
      rhs(i) = normal.dot(face.col(0));
    }
    const Vector sol = system.colPivHouseholderQr().solve(rhs);
    const auto inc = incenter_inradius(s);
    CHECK(std::abs(sol(n) - inc.radius) < 1e-7);
    CHECK((sol.head(n) - inc.center).norm() < 1e-7);
  }
}

TEST_CASE("altitude and subface volume identity") {
  // For a facet f of a simplex: A_i Vol(g_i) = (n-1) Vol(f), with g_i the
  // subface of f opposite its vertex i and A_i that vertex's altitude in f.
  Rng rng(30);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Simplex s = random_simplex(n, rng);
      const Matrix face = s.facet(0);
      const double face_vol = simplex_volume(face);
      for (Index i = 0; i < face.cols(); ++i) {
        Matrix sub(face.rows(), face.cols() - 1);
        Index k = 0;
        for (Index j = 0; j < face.cols(); ++j)
          if (j != i) sub.col(k++) = face.col(j);
        const double altitude = affine_hull_distance(face.col(i), sub);
        CHECK(altitude * simplex_volume(sub) ==
              doctest::Approx((n - 1) * face_vol).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("simplex validity rejects bad subsets") {
  Matrix pts(3, 4);
  pts.col(0) << 0, 0, 0;
  pts.col(1) << 1, 0, 0;
  pts.col(2) << 2, 0, 0;  // collinear with the first two
  pts.col(3) << 0, 1, 0;
  CHECK_THROWS_AS(Simplex(pts).require_valid(), DegenerateSimplex);
}

TEST_SUITE_END();
