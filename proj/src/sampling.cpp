#include "simplexflows/sampling.hpp"

namespace simplexflows {

Matrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = gauss(rng);
  return m;
}

Matrix random_orthogonal(int n, Rng& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

Matrix random_rotation(int n, Rng& rng) {
  Matrix q = random_orthogonal(n, rng);
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

Matrix random_basis(int n, Rng& rng, double min_rank_ratio) {
  for (;;) {
    Matrix x = random_gaussian(n, n, rng);
    Eigen::JacobiSVD<Matrix> svd(x);
    const auto& sv = svd.singularValues();
    if (sv(n - 1) > min_rank_ratio * sv(0)) return x;
  }
}

Simplex random_simplex(int n, Rng& rng, double min_rank_ratio) {
  Matrix pts(n, n + 1);
  pts.col(0).setZero();
  pts.rightCols(n) = random_basis(n, rng, min_rank_ratio);
  pts.colwise() -= pts.rowwise().mean().eval();
  return Simplex(std::move(pts));
}

Configuration random_k_configuration(int n, Rng& rng) {
  for (;;) {
    const Simplex s = random_simplex(n, rng);
    Configuration config(ComplexKind::K, s.points());
    if (check_embedded(config).embedded) return config;
  }
}

Configuration flat_k_configuration(int n, Rng& rng) {
  for (;;) {
    // n spanning points in the last-coordinate-zero hyperplane, one interior.
    Matrix base(n - 1, n);
    base.col(0).setZero();
    base.rightCols(n - 1) = random_basis(n - 1, rng);
    Vector weights = random_gaussian(n, 1, rng).array().abs() + 0.2;
    weights /= weights.sum();
    Matrix pts = Matrix::Zero(n, n + 1);
    pts.topLeftCorner(n - 1, n) = base;
    pts.col(n).head(n - 1) = base * weights;
    pts = (random_rotation(n, rng) * pts).eval();
    Configuration config(ComplexKind::K, pts);
    Simplex simplex(pts);
    try {
      simplex.require_valid();
    } catch (const DegenerateSimplex&) {
      continue;
    }
    if (check_embedded(config).embedded) return config;
  }
}

Configuration random_l_configuration(int n, Rng& rng, DegeneracyKind target) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Matrix pts(n, n + 2);
    if (target == DegeneracyKind::Interior) {
      const Simplex outer = random_simplex(n, rng);
      pts.leftCols(n + 1) = outer.points();
      Vector weights = random_gaussian(n + 1, 1, rng).array().abs() + 0.15;
      weights /= weights.sum();
      pts.col(n + 1) = outer.points() * weights;
    } else if (target == DegeneracyKind::Boundary) {
      const Simplex outer = random_simplex(n, rng);
      pts.leftCols(n + 1) = outer.points();
      // Put the extra vertex inside a facet of the outer simplex.
      Vector weights = random_gaussian(n, 1, rng).array().abs() + 0.25;
      weights /= weights.sum();
      pts.col(n + 1) = outer.facet(0) * weights;
    } else {
      pts = random_gaussian(n, n + 2, rng);
    }
    Configuration config(ComplexKind::L, pts);
    if (!check_embedded(config).embedded) continue;
    try {
      const DegeneracyClass cls = classify(config);
      if (cls.kind == target) return config;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error("random_l_configuration: sampling failed");
}

}  // namespace simplexflows
