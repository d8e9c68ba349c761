#pragma once

#include <random>

#include "simplexflows/configuration.hpp"
#include "simplexflows/radon.hpp"
#include "simplexflows/simplex.hpp"

namespace simplexflows {

using Rng = std::mt19937_64;

Matrix random_gaussian(int rows, int cols, Rng& rng);

/// Haar-ish random element of O(n) (QR with sign-fixed diagonal).
Matrix random_orthogonal(int n, Rng& rng);

/// Random rotation in SO(n).
Matrix random_rotation(int n, Rng& rng);

/// Random invertible basis with a mild condition floor, so that equivariance
/// identities hold to the tested tolerances.
Matrix random_basis(int n, Rng& rng, double min_rank_ratio = 1e-3);

/// Random nondegenerate simplex (n+1 points).
Simplex random_simplex(int n, Rng& rng, double min_rank_ratio = 1e-3);

/// Random embedded kind-K configuration.
Configuration random_k_configuration(int n, Rng& rng);

/// Flat kind-K configuration: n points spanning a hyperplane plus a vertex
/// strictly inside their hull.
Configuration flat_k_configuration(int n, Rng& rng);

/// Random embedded kind-L configuration of the requested class.
Configuration random_l_configuration(int n, Rng& rng, DegeneracyKind target);

}  // namespace simplexflows
