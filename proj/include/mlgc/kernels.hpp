#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version that must produce bitwise-identical output; the tests and
// bench_kernels compare the two.

#include <span>
#include <vector>

#include "mlgc/types.hpp"

namespace mlgc::kernels {

/// Nearest-centroid assignment. Points and centroids are stored one per
/// column (d x n and d x k). Ties go to the lower centroid index.
void assign_nearest_serial(const Matrix& points, const Matrix& centroids, std::span<int> labels,
                           std::span<double> dist2);
void assign_nearest_parallel(const Matrix& points, const Matrix& centroids, std::span<int> labels,
                             std::span<double> dist2);

/// Picks the parallel kernel unless already inside a parallel region or the
/// problem is too small to amortise the fork.
void assign_nearest(const Matrix& points, const Matrix& centroids, std::span<int> labels,
                    std::span<double> dist2);

struct Neighbor {
  Index index = 0;
  double distance = 0.0;
};

using NeighborLists = std::vector<std::vector<Neighbor>>;

/// Brute-force k nearest neighbours of every row of `points` (n x d),
/// excluding the point itself, ordered by (distance, index).
NeighborLists knn_serial(const Matrix& points, Index kneighbors);
NeighborLists knn_parallel(const Matrix& points, Index kneighbors);

}  // namespace mlgc::kernels
