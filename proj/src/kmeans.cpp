#include "mlgc/kmeans.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

#include "mlgc/error.hpp"
#include "mlgc/kernels.hpp"

namespace mlgc {

void KMeansConfig::validate() const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k-means needs k >= 1");
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "k-means needs restarts >= 1");
  if (max_iters < 1) throw Error(ErrorCode::InvalidArgument, "k-means needs max_iters >= 1");
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "k-means tolerance must be >= 0");
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Index uniform_index(std::mt19937_64& rng, Index n) {
  return std::min<Index>(n - 1, static_cast<Index>(unit_uniform(rng) * static_cast<double>(n)));
}

double squared_distance(const Matrix& pts, Index p, const Matrix& centroids, Index c) {
  double s = 0.0;
  for (Index d = 0; d < pts.rows(); ++d) {
    const double diff = pts(d, p) - centroids(d, c);
    s += diff * diff;
  }
  return s;
}

// k-means++ seeding on column-major points (d x n); returns d x k centroids.
Matrix seed_centroids(const Matrix& pts, Index k, std::mt19937_64& rng) {
  const Index n = pts.cols();
  Matrix centroids(pts.rows(), k);
  centroids.col(0) = pts.col(uniform_index(rng, n));
  std::vector<double> d2(static_cast<std::size_t>(n));
  for (Index p = 0; p < n; ++p) d2[static_cast<std::size_t>(p)] = squared_distance(pts, p, centroids, 0);
  for (Index c = 1; c < k; ++c) {
    double total = 0.0;
    for (double v : d2) total += v;
    Index pick = 0;
    if (total > 0.0) {
      const double target = unit_uniform(rng) * total;
      double acc = 0.0;
      pick = -1;
      for (Index p = 0; p < n; ++p) {
        acc += d2[static_cast<std::size_t>(p)];
        if (acc > target && d2[static_cast<std::size_t>(p)] > 0.0) {
          pick = p;
          break;
        }
      }
      if (pick < 0) {
        // Rounding left target past the last positive weight.
        for (Index p = n - 1; p >= 0; --p) {
          if (d2[static_cast<std::size_t>(p)] > 0.0) {
            pick = p;
            break;
          }
        }
      }
    } else {
      pick = uniform_index(rng, n);
    }
    centroids.col(c) = pts.col(pick);
    for (Index p = 0; p < n; ++p) {
      auto& v = d2[static_cast<std::size_t>(p)];
      v = std::min(v, squared_distance(pts, p, centroids, c));
    }
  }
  return centroids;
}

// Moves each empty cluster's centroid onto the point farthest from its
// current centroid (taken from a cluster that keeps at least one member).
void repair_empty(const Matrix& pts, Matrix& centroids, std::vector<int>& labels, std::vector<double>& d2) {
  const Index k = centroids.cols();
  std::vector<Index> counts(static_cast<std::size_t>(k), 0);
  for (int l : labels) ++counts[static_cast<std::size_t>(l)];
  for (Index c = 0; c < k; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) continue;
    Index far = -1;
    double worst = -1.0;
    for (std::size_t p = 0; p < labels.size(); ++p) {
      if (counts[static_cast<std::size_t>(labels[p])] > 1 && d2[p] > worst) {
        worst = d2[p];
        far = static_cast<Index>(p);
      }
    }
    if (far < 0) break;
    const auto u = static_cast<std::size_t>(far);
    --counts[static_cast<std::size_t>(labels[u])];
    ++counts[static_cast<std::size_t>(c)];
    labels[u] = static_cast<int>(c);
    d2[u] = 0.0;
    centroids.col(c) = pts.col(far);
  }
}

void update_centroids(const Matrix& pts, const std::vector<int>& labels, Matrix& centroids) {
  const Index k = centroids.cols();
  Matrix sums = Matrix::Zero(pts.rows(), k);
  std::vector<Index> counts(static_cast<std::size_t>(k), 0);
  for (Index p = 0; p < pts.cols(); ++p) {
    const int l = labels[static_cast<std::size_t>(p)];
    sums.col(l) += pts.col(p);
    ++counts[static_cast<std::size_t>(l)];
  }
  for (Index c = 0; c < k; ++c) {
    const Index count = counts[static_cast<std::size_t>(c)];
    if (count > 0) centroids.col(c) = sums.col(c) / static_cast<double>(count);
  }
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

KMeansRun kmeans_run(const Matrix& points, Index k, std::uint64_t seed, int max_iters, double tol) {
  const Index n = points.rows();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k-means needs k >= 1");
  if (n < k) {
    std::ostringstream msg;
    msg << "k-means with k=" << k << " on " << n << " points";
    throw Error(ErrorCode::TooFewPoints, msg.str());
  }
  const Matrix pts = points.transpose();
  std::mt19937_64 rng(seed);
  Matrix centroids = seed_centroids(pts, k, rng);

  KMeansRun run;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<int> previous;
  std::vector<double> d2(static_cast<std::size_t>(n), 0.0);
  for (int iter = 0; iter < max_iters; ++iter) {
    kernels::assign_nearest(pts, centroids, labels, d2);
    repair_empty(pts, centroids, labels, d2);
    const double objective = sum(d2);
    run.iterations = iter + 1;
    const bool stalled = !run.history.empty() && run.history.back() - objective <= tol * run.history.back();
    run.history.push_back(objective);
    update_centroids(pts, labels, centroids);
    if (labels == previous || stalled) break;
    previous = labels;
  }
  run.objective = kmeans_objective(points, labels, k);
  run.history.push_back(run.objective);
  run.labels = std::move(labels);
  run.centroids = centroids.transpose();
  return run;
}

KMeansResult kmeans_restarts(const Matrix& points, const KMeansConfig& cfg) {
  cfg.validate();
  if (points.rows() < cfg.k) {
    std::ostringstream msg;
    msg << "k-means with k=" << cfg.k << " on " << points.rows() << " points";
    throw Error(ErrorCode::TooFewPoints, msg.str());
  }
  std::vector<KMeansRun> runs(static_cast<std::size_t>(cfg.restarts));
  std::vector<std::exception_ptr> errors(runs.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) {
    const auto u = static_cast<std::size_t>(r);
    try {
      runs[u] = kmeans_run(points, cfg.k, cfg.seed + static_cast<std::uint64_t>(r), cfg.max_iters, cfg.tol);
    } catch (...) {
      errors[u] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  KMeansResult out;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    out.restart_objectives.push_back(runs[r].objective);
    if (runs[r].objective < runs[static_cast<std::size_t>(out.best_restart)].objective) {
      out.best_restart = static_cast<int>(r);
    }
  }
  out.best = std::move(runs[static_cast<std::size_t>(out.best_restart)]);
  return out;
}

double kmeans_objective(const Matrix& points, const std::vector<int>& labels, Index k) {
  const Index d = points.cols();
  Matrix sums = Matrix::Zero(k, d);
  std::vector<Index> counts(static_cast<std::size_t>(k), 0);
  for (Index p = 0; p < points.rows(); ++p) {
    const int l = labels[static_cast<std::size_t>(p)];
    sums.row(l) += points.row(p);
    ++counts[static_cast<std::size_t>(l)];
  }
  double total = 0.0;
  for (Index p = 0; p < points.rows(); ++p) {
    const int l = labels[static_cast<std::size_t>(p)];
    const auto mean = sums.row(l) / static_cast<double>(counts[static_cast<std::size_t>(l)]);
    total += (points.row(p) - mean).squaredNorm();
  }
  return total;
}

}  // namespace mlgc
