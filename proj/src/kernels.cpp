#include "mlgc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

namespace mlgc::kernels {

namespace {

inline void assign_one(const Matrix& points, const Matrix& centroids, Index p, int& label, double& d2) {
  const Index dims = points.rows();
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (Index c = 0; c < centroids.cols(); ++c) {
    double s = 0.0;
    for (Index d = 0; d < dims; ++d) {
      const double diff = points(d, p) - centroids(d, c);
      s += diff * diff;
    }
    if (s < best) {
      best = s;
      arg = static_cast<int>(c);
    }
  }
  label = arg;
  d2 = best;
}

inline std::vector<Neighbor> knn_one(const Matrix& points, Index i, Index kneighbors) {
  const Index n = points.rows();
  const Index dims = points.cols();
  std::vector<Neighbor> cand;
  cand.reserve(static_cast<std::size_t>(n - 1));
  for (Index j = 0; j < n; ++j) {
    if (j == i) continue;
    double s = 0.0;
    for (Index d = 0; d < dims; ++d) {
      const double diff = points(i, d) - points(j, d);
      s += diff * diff;
    }
    cand.push_back({j, std::sqrt(s)});
  }
  const auto keep = static_cast<std::ptrdiff_t>(std::min<Index>(kneighbors, n - 1));
  std::partial_sort(cand.begin(), cand.begin() + keep, cand.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  });
  cand.resize(static_cast<std::size_t>(keep));
  return cand;
}

}  // namespace

void assign_nearest_serial(const Matrix& points, const Matrix& centroids, std::span<int> labels,
                           std::span<double> dist2) {
  for (Index p = 0; p < points.cols(); ++p) {
    const auto u = static_cast<std::size_t>(p);
    assign_one(points, centroids, p, labels[u], dist2[u]);
  }
}

void assign_nearest_parallel(const Matrix& points, const Matrix& centroids, std::span<int> labels,
                             std::span<double> dist2) {
  const Index n = points.cols();
#pragma omp parallel for schedule(static)
  for (Index p = 0; p < n; ++p) {
    const auto u = static_cast<std::size_t>(p);
    assign_one(points, centroids, p, labels[u], dist2[u]);
  }
}

void assign_nearest(const Matrix& points, const Matrix& centroids, std::span<int> labels,
                    std::span<double> dist2) {
  if (omp_in_parallel() || points.cols() * centroids.cols() < 16384) {
    assign_nearest_serial(points, centroids, labels, dist2);
  } else {
    assign_nearest_parallel(points, centroids, labels, dist2);
  }
}

NeighborLists knn_serial(const Matrix& points, Index kneighbors) {
  NeighborLists out(static_cast<std::size_t>(points.rows()));
  for (Index i = 0; i < points.rows(); ++i) out[static_cast<std::size_t>(i)] = knn_one(points, i, kneighbors);
  return out;
}

NeighborLists knn_parallel(const Matrix& points, Index kneighbors) {
  const Index n = points.rows();
  NeighborLists out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
  for (Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = knn_one(points, i, kneighbors);
  return out;
}

}  // namespace mlgc::kernels
