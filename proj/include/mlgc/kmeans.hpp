#pragma once

#include <cstdint>
#include <vector>

#include "mlgc/graph.hpp"
#include "mlgc/types.hpp"

namespace mlgc {

struct KMeansConfig {
  Index k = 2;
  int restarts = 20;
  int max_iters = 300;
  /// Restart r is seeded with seed + r.
  std::uint64_t seed = 0;
  /// Stop when the relative objective improvement drops to tol or below.
  double tol = 1e-10;

  /// Throws InvalidArgument on k < 1, restarts < 1, max_iters < 1 or tol < 0.
  void validate() const;
};

/// One seeded k-means++ / Lloyd run.
struct KMeansRun {
  std::vector<int> labels;
  /// k x d, one centroid per row.
  Matrix centroids;
  double objective = 0.0;
  /// Objective after every assignment step, then the final value after the
  /// last centroid update. Nonincreasing.
  std::vector<double> history;
  int iterations = 0;
};

/// Rows of `points` are the observations. Throws TooFewPoints if n < k.
KMeansRun kmeans_run(const Matrix& points, Index k, std::uint64_t seed, int max_iters = 300, double tol = 1e-10);

struct KMeansResult {
  KMeansRun best;
  /// Final objective of every restart, in restart order.
  std::vector<double> restart_objectives;
  int best_restart = 0;
};

/// Best of cfg.restarts runs; ties go to the lowest restart index.
KMeansResult kmeans_restarts(const Matrix& points, const KMeansConfig& cfg);

/// Within-cluster sum of squared distances to the cluster means.
double kmeans_objective(const Matrix& points, const std::vector<int>& labels, Index k);

}  // namespace mlgc
