#include <doctest.h>

#include "simplexflows/radon.hpp"
#include "simplexflows/sampling.hpp"
#include "support.hpp"

using namespace simplexflows;

TEST_SUITE_BEGIN("radon");

TEST_CASE("interior point of a triangle") {
  Matrix pts(2, 4);
  pts.col(0) << 0, 0;
  pts.col(1) << 1, 0;
  pts.col(2) << 0, 1;
  pts.col(3) << 0.25, 0.25;
  const RadonPartition radon = radon_partition(pts);
  REQUIRE(radon.part1.size() == 1);
  CHECK(radon.part1[0] == 3);
  CHECK(radon.part2 == std::vector<Index>{0, 1, 2});
  CHECK((radon.radon_point - pts.col(3)).norm() < 1e-12);
  CHECK(std::abs(radon.coefficients.sum()) < 1e-12);
}

TEST_CASE("square splits into its diagonals") {
  Matrix pts(2, 4);
  pts.col(0) << 0, 0;
  pts.col(1) << 1, 0;
  pts.col(2) << 1, 1;
  pts.col(3) << 0, 1;
  const RadonPartition radon = radon_partition(pts);
  CHECK(radon.part1 == std::vector<Index>{0, 2});
  CHECK(radon.part2 == std::vector<Index>{1, 3});
  CHECK((radon.radon_point - Vector::Constant(2, 0.5)).norm() < 1e-12);
}

TEST_CASE("ambiguous dependence is rejected") {
  Matrix pts(2, 4);  // four collinear points
  for (Index j = 0; j < 4; ++j) pts.col(j) << static_cast<double>(j), 0.0;
  CHECK_THROWS_AS(radon_partition(pts), RankDeficient);
}

TEST_CASE("agreement with the brute-force oracle") {
  Rng rng(41);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix pts = random_gaussian(n, n + 2, rng);
      CHECK(testing::radon_agrees_with_brute_force(pts));
    }
  }
}

TEST_CASE("radon point lies in both hulls") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix pts = random_gaussian(3, 5, rng);
    const RadonPartition radon = radon_partition(pts);
    for (const auto& part : {radon.part1, radon.part2}) {
      Matrix hull(3, part.size());
      for (size_t k = 0; k < part.size(); ++k) hull.col(k) = pts.col(part[k]);
      CHECK(convex_hull_distance(radon.radon_point, hull) < 1e-8);
    }
  }
}

TEST_CASE("classify kind K") {
  Rng rng(43);
  SUBCASE("spanning simplex") {
    const Configuration config = random_k_configuration(3, rng);
    const DegeneracyClass cls = classify(config);
    CHECK(cls.kind == DegeneracyKind::NonDegenerate);
    CHECK(cls.margin > 1e-3);
  }
  SUBCASE("flat configuration names the interior vertex") {
    const Configuration flat = flat_k_configuration(3, rng);
    const DegeneracyClass cls = classify(flat);
    CHECK(cls.kind == DegeneracyKind::Hyperplane);
    CHECK(cls.vertex == 3);
  }
}

TEST_CASE("classify kind L") {
  Rng rng(44);
  SUBCASE("tetrahedron plus barycenter is interior") {
    Matrix pts(3, 5);
    const Simplex tetra = random_simplex(3, rng);
    pts.leftCols(4) = tetra.points();
    pts.col(4) = tetra.barycenter();
    const DegeneracyClass cls = classify(Configuration(ComplexKind::L, pts));
    CHECK(cls.kind == DegeneracyKind::Interior);
    CHECK(cls.vertex == 4);
  }
  SUBCASE("edge through the opposite face") {
    const Configuration config =
        random_l_configuration(3, rng, DegeneracyKind::EdgeFace);
    const DegeneracyClass cls = classify(config);
    CHECK(cls.kind == DegeneracyKind::EdgeFace);
    CHECK(cls.face.size() == 3);
    // The Radon point is where the edge pierces the face plane.
    Matrix face(3, 3);
    for (int k = 0; k < 3; ++k) face.col(k) = config.points().col(cls.face[k]);
    CHECK(affine_hull_distance(cls.radon_point, face) < 1e-8);
  }
  SUBCASE("vertex in a face is boundary") {
    const Configuration config =
        random_l_configuration(3, rng, DegeneracyKind::Boundary);
    const DegeneracyClass cls = classify(config);
    CHECK(cls.kind == DegeneracyKind::Boundary);
    CHECK(cls.vertex == 4);
    CHECK(cls.face.size() == 3);
  }
}

TEST_CASE("classification is stable under relabeling and rigid motions") {
  Rng rng(45);
  const Configuration config =
      random_l_configuration(3, rng, DegeneracyKind::Interior);
  const DegeneracyClass cls = classify(config);

  // Permute columns.
  std::vector<Index> perm{4, 0, 3, 1, 2};
  Matrix permuted(3, 5);
  for (Index j = 0; j < 5; ++j) permuted.col(j) = config.points().col(perm[j]);
  const DegeneracyClass cls_p = classify(Configuration(ComplexKind::L, permuted));
  CHECK(cls_p.kind == cls.kind);
  CHECK(perm[cls_p.vertex] == cls.vertex);
  CHECK(cls_p.margin == doctest::Approx(cls.margin).epsilon(1e-6));

  // Rigid motion.
  const Matrix q = random_rotation(3, rng);
  const Vector shift = random_gaussian(3, 1, rng);
  const Matrix moved = (q * config.points()).colwise() + shift;
  const DegeneracyClass cls_m = classify(Configuration(ComplexKind::L, moved));
  CHECK(cls_m.kind == cls.kind);
  CHECK(cls_m.vertex == cls.vertex);
  CHECK(cls_m.margin == doctest::Approx(cls.margin).epsilon(1e-6));
}

TEST_CASE("embedded check rejects a crossing") {
  // Flat K_4 with all four points extremal: two edges must cross.
  Matrix pts(3, 4);
  pts.col(0) << 0, 0, 0;
  pts.col(1) << 1, 0, 0;
  pts.col(2) << 1, 1, 0;
  pts.col(3) << 0, 1, 0;
  const Configuration config(ComplexKind::K, pts);
  CHECK(!check_embedded(config).embedded);
  CHECK_THROWS_AS(classify(config), InvalidConfiguration);
}

TEST_SUITE_END();
