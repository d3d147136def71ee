// Times the serial and OpenMP versions of the data-parallel kernels and
// checks that they agree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "mlgc/kernels.hpp"

using namespace mlgc;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> gauss;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = gauss(rng);
  return m;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-16s serial=%.4fs parallel=%.4fs speedup=%.2fx identical=%s\n", name, serial, parallel,
              serial / parallel, same ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("threads=%d\n", omp_get_max_threads());
  std::mt19937_64 rng(1);

  const Index n = 200000, d = 5, k = 5;
  const Matrix points = random_matrix(rng, d, n);
  const Matrix centroids = random_matrix(rng, d, k);
  std::vector<int> ls(n), lp(n);
  std::vector<double> ds(n), dp(n);
  const double ts = best_of(5, [&] { kernels::assign_nearest_serial(points, centroids, ls, ds); });
  const double tp = best_of(5, [&] { kernels::assign_nearest_parallel(points, centroids, lp, dp); });
  report("assign_nearest", ts, tp, ls == lp && ds == dp);

  const Matrix cloud = random_matrix(rng, 2500, 2);
  kernels::NeighborLists ns, np;
  const double ks = best_of(3, [&] { ns = kernels::knn_serial(cloud, 5); });
  const double kp = best_of(3, [&] { np = kernels::knn_parallel(cloud, 5); });
  bool same = ns.size() == np.size();
  for (std::size_t i = 0; same && i < ns.size(); ++i) {
    same = ns[i].size() == np[i].size();
    for (std::size_t j = 0; same && j < ns[i].size(); ++j)
      same = ns[i][j].index == np[i][j].index && ns[i][j].distance == np[i][j].distance;
  }
  report("knn", ks, kp, same);
  return 0;
}
