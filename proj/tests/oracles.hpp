#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's numerical routines.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "mlgc/graph.hpp"
#include "mlgc/types.hpp"

namespace oracle {

using mlgc::Index;
using mlgc::Matrix;
using mlgc::Vector;

inline double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// Cyclic Jacobi rotations; returns ascending eigenvalues and eigenvectors.
inline std::pair<Vector, Matrix> jacobi_eigen(Matrix a) {
  const Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (Index p = 0; p < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Index x, Index y) { return a(x, x) < a(y, y); });
  Vector values(n);
  Matrix vectors(n, n);
  for (Index i = 0; i < n; ++i) {
    values[i] = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return {values, vectors};
}

inline Matrix random_symmetric(std::mt19937_64& rng, Index n) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = uniform(rng, -1.0, 1.0);
  return m;
}

/// Random connected weighted graph: a random spanning tree plus extra edges.
inline mlgc::Graph random_connected_graph(std::mt19937_64& rng, Index n, double extra_density = 0.3) {
  Matrix w = Matrix::Zero(n, n);
  for (Index v = 1; v < n; ++v) {
    const Index u = static_cast<Index>(uniform(rng) * static_cast<double>(v)) % v;
    w(u, v) = w(v, u) = uniform(rng, 0.1, 2.0);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (w(i, j) == 0.0 && uniform(rng) < extra_density) w(i, j) = w(j, i) = uniform(rng, 0.1, 2.0);
  return mlgc::Graph::from_dense(w);
}

/// Dense normalized Laplacian straight from the definition.
inline Matrix laplacian_by_definition(const Matrix& w) {
  const Index n = w.rows();
  Vector d = w.rowwise().sum();
  Matrix dm = d.asDiagonal();
  Matrix dinv = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) dinv(i, i) = 1.0 / std::sqrt(d[i]);
  return dinv * (dm - w) * dinv;
}

/// Orthonormal n x k basis by classical Gram-Schmidt on Gaussian columns.
inline Matrix random_orthonormal(std::mt19937_64& rng, Index n, Index k) {
  std::normal_distribution<double> g;
  Matrix q(n, k);
  for (Index c = 0; c < k; ++c) {
    Vector v(n);
    for (Index r = 0; r < n; ++r) v[r] = g(rng);
    for (int pass = 0; pass < 2; ++pass)
      for (Index p = 0; p < c; ++p) v -= q.col(p).dot(v) * q.col(p);
    q.col(c) = v / v.norm();
  }
  return q;
}

/// Minimum within-cluster sum of squares over all assignments of the rows
/// into at most k groups (restricted growth strings).
inline double kmeans_global_optimum(const Matrix& pts, int k) {
  const Index n = pts.rows();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  double best = std::numeric_limits<double>::infinity();
  std::function<void(Index, int)> rec = [&](Index i, int used) {
    if (i == n) {
      double total = 0.0;
      for (int c = 0; c < used; ++c) {
        Vector mean = Vector::Zero(pts.cols());
        int count = 0;
        for (Index p = 0; p < n; ++p)
          if (a[static_cast<std::size_t>(p)] == c) {
            mean += pts.row(p).transpose();
            ++count;
          }
        mean /= count;
        for (Index p = 0; p < n; ++p)
          if (a[static_cast<std::size_t>(p)] == c) total += (pts.row(p).transpose() - mean).squaredNorm();
      }
      best = std::min(best, total);
      return;
    }
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      a[static_cast<std::size_t>(i)] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return best;
}

/// Pair-loop Rand index.
inline double rand_index_pairs(const std::vector<int>& x, const std::vector<int>& y) {
  long agree = 0, total = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      ++total;
      if ((x[i] == x[j]) == (y[i] == y[j])) ++agree;
    }
  return static_cast<double>(agree) / static_cast<double>(total);
}

/// NMI with arithmetic-mean normalization from plogp sums over explicit
/// label maps.
inline double nmi_plogp(const std::vector<int>& x, const std::vector<int>& y) {
  const double n = static_cast<double>(x.size());
  const int kx = *std::max_element(x.begin(), x.end()) + 1;
  const int ky = *std::max_element(y.begin(), y.end()) + 1;
  std::vector<double> px(static_cast<std::size_t>(kx)), py(static_cast<std::size_t>(ky));
  std::vector<std::vector<double>> pxy(static_cast<std::size_t>(kx), std::vector<double>(static_cast<std::size_t>(ky)));
  for (std::size_t i = 0; i < x.size(); ++i) {
    px[static_cast<std::size_t>(x[i])] += 1.0 / n;
    py[static_cast<std::size_t>(y[i])] += 1.0 / n;
    pxy[static_cast<std::size_t>(x[i])][static_cast<std::size_t>(y[i])] += 1.0 / n;
  }
  auto plogp = [](double p) { return p > 0 ? p * std::log(p) : 0.0; };
  double hx = 0, hy = 0, hxy = 0;
  for (double p : px) hx -= plogp(p);
  for (double p : py) hy -= plogp(p);
  for (const auto& row : pxy)
    for (double p : row) hxy -= plogp(p);
  const double mi = hx + hy - hxy;
  if (hx + hy == 0.0) return 1.0;
  return mi / (0.5 * (hx + hy));
}

/// Purity by scanning every (cluster, class) pair.
inline double purity_scan(const std::vector<int>& pred, const std::vector<int>& truth) {
  const int kp = *std::max_element(pred.begin(), pred.end()) + 1;
  const int kt = *std::max_element(truth.begin(), truth.end()) + 1;
  long hits = 0;
  for (int c = 0; c < kp; ++c) {
    long best = 0;
    for (int t = 0; t < kt; ++t) {
      long count = 0;
      for (std::size_t i = 0; i < pred.size(); ++i) count += (pred[i] == c && truth[i] == t);
      best = std::max(best, count);
    }
    hits += best;
  }
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

}  // namespace oracle
