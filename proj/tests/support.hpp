#pragma once

// Test-side oracles, independent of the library code paths they check.

#include <algorithm>
#include <vector>

#include "simplexflows/configuration.hpp"
#include "simplexflows/radon.hpp"

namespace simplexflows::testing {

// All unordered splits of {0..count-1} into two nonempty parts.
inline std::vector<std::pair<std::vector<Index>, std::vector<Index>>>
all_splits(Index count) {
  std::vector<std::pair<std::vector<Index>, std::vector<Index>>> splits;
  for (unsigned mask = 1; mask < (1u << (count - 1)); ++mask) {
    std::vector<Index> a, b;
    for (Index j = 0; j < count; ++j)
      ((mask >> j) & 1u ? a : b).push_back(j);
    splits.emplace_back(std::move(a), std::move(b));
  }
  return splits;
}

// Brute-force Radon oracle: enumerate every split and test convex hull
// intersection by exact distance. Returns the intersecting splits.
inline std::vector<std::pair<std::vector<Index>, std::vector<Index>>>
intersecting_splits(const Matrix& pts, double tol = 1e-9) {
  std::vector<std::pair<std::vector<Index>, std::vector<Index>>> hits;
  double scale = 0.0;
  for (Index i = 0; i < pts.cols(); ++i)
    for (Index j = i + 1; j < pts.cols(); ++j)
      scale = std::max(scale, (pts.col(i) - pts.col(j)).norm());
  for (const auto& [a, b] : all_splits(pts.cols())) {
    Matrix ha(pts.rows(), a.size()), hb(pts.rows(), b.size());
    for (size_t k = 0; k < a.size(); ++k) ha.col(k) = pts.col(a[k]);
    for (size_t k = 0; k < b.size(); ++k) hb.col(k) = pts.col(b[k]);
    if (convex_hull_distance(ha, hb) < tol * scale) hits.emplace_back(a, b);
  }
  return hits;
}

// Checks that the computed partition is among the brute-force hits and that
// the hits are exactly the supersets of it (zero-coefficient points may sit
// on either side for degenerate inputs; generic inputs give a unique hit).
inline bool radon_agrees_with_brute_force(const Matrix& pts) {
  const RadonPartition radon = radon_partition(pts);
  const auto hits = intersecting_splits(pts);
  const auto sorted = [](std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto p1 = sorted(radon.part1), p2 = sorted(radon.part2);
  for (const auto& [a, b] : hits) {
    if ((sorted(a) == p1 && sorted(b) == p2) ||
        (sorted(a) == p2 && sorted(b) == p1))
      return true;
  }
  return false;
}

}  // namespace simplexflows::testing
