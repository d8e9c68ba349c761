#pragma once

#include <utility>

#include "simplexflows/common.hpp"

namespace simplexflows {

// Eigenvalue floor for the Gram matrix, relative to its largest eigenvalue.
// Below this the basis is treated as singular (the path is undefined on
// det^{-1}(0), which is the cut locus of the orthogonal group).
inline constexpr double kGramEigenvalueFloor = 1e-14;

/// Inverse square root of the Gram matrix x^T x, by symmetric
/// eigendecomposition. Throws SingularInput below the eigenvalue floor.
template <typename Derived>
Matrix gram_inverse_sqrt(const Eigen::MatrixBase<Derived>& x) {
  const Matrix gram = x.transpose() * x;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const Vector& ev = eig.eigenvalues();
  if (ev(0) <= kGramEigenvalueFloor * ev(ev.size() - 1) || ev(0) <= 0.0)
    throw SingularInput("gram_inverse_sqrt: basis is numerically singular");
  const Vector inv_sqrt = ev.array().rsqrt();
  return eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().transpose();
}

/// Nearest orthogonal matrix in the Frobenius norm: x (x^T x)^{-1/2}.
template <typename Derived>
Matrix lowdin_orthogonalize(const Eigen::MatrixBase<Derived>& x) {
  return x * gram_inverse_sqrt(x);
}

/// Linear path from an invertible basis to its Lowdin orthogonalization:
/// (1-t) x + t x (x^T x)^{-1/2}. Equivariant under the right action of O(n);
/// at t=1 the result is orthogonal.
template <typename Derived>
Matrix lowdin_path(const Eigen::MatrixBase<Derived>& x, double t) {
  return (1.0 - t) * x + t * lowdin_orthogonalize(x);
}

/// Coefficients of the regular unit-edge simplex basis: the diagonal entry mu
/// and off-diagonal entry nu, satisfying mu^2 + (n-1) nu^2 = 1 and
/// 2 (mu - nu)^2 = 1.
inline std::pair<double, double> regular_basis_coefficients(int n) {
  if (n < 2) throw DimensionError("regular_basis_coefficients: need n >= 2");
  const double root = std::sqrt(n + 1.0);
  const double mu = (n + root - 1.0) / (std::sqrt(2.0) * n);
  const double nu = (root - 1.0) / (std::sqrt(2.0) * n);
  return {mu, nu};
}

/// The symmetric n x n matrix whose columns, together with the origin, form a
/// regular simplex with unit edge lengths.
inline Matrix regular_simplex_basis(int n) {
  const auto [mu, nu] = regular_basis_coefficients(n);
  Matrix a = Matrix::Constant(n, n, nu);
  a.diagonal().setConstant(mu);
  return a;
}

/// Column operation swapping the base vertex of a simplex basis with vertex i
/// (1-based): the identity with row i replaced by -1 everywhere. Involutive;
/// the B_i generate a representation of the symmetric group on the n+1
/// vertices, with B_i acting as the transposition (0 i).
inline Matrix base_vertex_swap(int n, int i) {
  if (i < 1 || i > n) throw DomainError("base_vertex_swap: index out of range");
  Matrix b = Matrix::Identity(n, n);
  b.row(i - 1).setConstant(-1.0);
  return b;
}

/// Regularization path for simplex bases: the Lowdin path conjugated by the
/// regular basis, Omega_t(x) = lowdin_path(x A^{-1}, t) A. Fixes O(n)*A, ends
/// in a unit-edge regular basis, and commutes with the base-vertex swaps.
template <typename Derived>
Matrix regularization_path(const Eigen::MatrixBase<Derived>& x, double t) {
  const Matrix a = regular_simplex_basis(static_cast<int>(x.rows()));
  const Matrix xa = a.transpose().colPivHouseholderQr().solve(x.transpose()).transpose();
  return lowdin_path(xa, t) * a;
}

}  // namespace simplexflows
