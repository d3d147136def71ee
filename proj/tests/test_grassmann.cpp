#include "doctest.h"
#include "mlgc/error.hpp"
#include "mlgc/graph.hpp"
#include "mlgc/grassmann.hpp"
#include "oracles.hpp"

using namespace mlgc;

namespace {

Embedding span_of(Index n, std::initializer_list<Index> axes) {
  Matrix b = Matrix::Zero(n, static_cast<Index>(axes.size()));
  Index c = 0;
  for (Index a : axes) b(a, c++) = 1.0;
  return Embedding(b);
}

// Independent evaluations of the squared projection distance.
double d2_angles(const Embedding& a, const Embedding& b) {
  const Vector c = principal_angles(a, b).cosines;
  return (Vector::Ones(c.size()) - c.cwiseProduct(c)).sum();
}
double d2_trace(const Embedding& a, const Embedding& b) {
  return static_cast<double>(a.k()) - (a.projector() * b.projector()).trace();
}
double d2_frobenius(const Embedding& a, const Embedding& b) {
  return 0.5 * (a.projector() - b.projector()).squaredNorm();
}

Graph two_triangles(double bridge) {
  return Graph::from_edges(6, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1},
                                                {2, 3, bridge}});
}

}  // namespace

TEST_CASE("Embedding validates its basis") {
  CHECK_THROWS_AS(Embedding(Matrix::Ones(3, 1)), Error);
  CHECK_THROWS_AS(Embedding(Matrix::Identity(3, 3)), Error);
  CHECK_NOTHROW(span_of(3, {0, 2}));
}

TEST_CASE("principal angles") {
  const Embedding a = span_of(3, {0, 1});
  CHECK(principal_angles(a, a).cosines.isApprox(Vector::Ones(2)));
  CHECK(principal_angles(span_of(2, {0}), span_of(2, {1})).cosines[0] == 0.0);
  const Vector c = principal_angles(a, span_of(3, {0, 2})).cosines;
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(0.0));
  CHECK_THROWS_AS(principal_angles(a, span_of(3, {0})), Error);
  CHECK_THROWS_AS(principal_angles(a, span_of(4, {0, 1})), Error);
}

TEST_CASE("projection distance examples") {
  std::mt19937_64 rng(2);
  const Embedding a(oracle::random_orthonormal(rng, 10, 3));
  CHECK(projection_distance(a, a) <= 1e-14);
  CHECK(projection_distance(span_of(2, {0}), span_of(2, {1})) == doctest::Approx(1.0));

  const Embedding b(oracle::random_orthonormal(rng, 10, 3));
  const double d = projection_distance(a, b);
  CHECK(std::abs(d * d - d2_angles(a, b)) <= 1e-9);
  CHECK(std::abs(d * d - d2_trace(a, b)) <= 1e-9);
  CHECK(std::abs(d * d - d2_frobenius(a, b)) <= 1e-9);
}

TEST_CASE("projection distance invariants on random pairs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Index k = 1 + trial % 4;
    const Index n = k + 1 + static_cast<Index>(oracle::uniform(rng) * 20);
    const Embedding a(oracle::random_orthonormal(rng, n, k));
    const Embedding b(oracle::random_orthonormal(rng, n, k));
    const double d = projection_distance(a, b);
    CHECK(std::abs(d - projection_distance(b, a)) <= 1e-12);
    CHECK(d * d >= 0.0);
    CHECK(d * d <= static_cast<double>(k) + 1e-12);
    CHECK(std::abs(hsic_linear(a, b) + d * d - static_cast<double>(k)) <= 1e-9);

    const Matrix q = oracle::random_orthonormal(rng, k, k);
    const Embedding aq(a.basis() * q);
    CHECK(std::abs(projection_distance(aq, b) - d) <= 1e-9);
    CHECK(projection_distance(aq, a) <= 1e-8);
  }
}

TEST_CASE("distance zero exactly when projectors coincide") {
  std::mt19937_64 rng(4);
  const Embedding a(oracle::random_orthonormal(rng, 8, 2));
  const Embedding rotated(a.basis() * oracle::random_orthonormal(rng, 2, 2));
  CHECK((a.projector() - rotated.projector()).norm() <= 1e-8);
  CHECK(projection_distance(a, rotated) <= 1e-8);
  const Embedding other(oracle::random_orthonormal(rng, 8, 2));
  CHECK((a.projector() - other.projector()).norm() > 1e-8);
  CHECK(projection_distance(a, other) > 1e-8);
}

TEST_CASE("multi-subspace distance") {
  std::mt19937_64 rng(6);
  const Embedding u(oracle::random_orthonormal(rng, 8, 2));
  const std::vector<Embedding> same{u, u, u};
  CHECK(multi_projection_distance_sq(u, same) <= 1e-12);

  const std::vector<Embedding> axes{span_of(2, {0}), span_of(2, {1})};
  CHECK(multi_projection_distance_sq(span_of(2, {0}), axes) == doctest::Approx(1.0));

  std::vector<Embedding> layers;
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) {
    layers.emplace_back(oracle::random_orthonormal(rng, 8, 2));
    expected += d2_frobenius(u, layers.back());
  }
  CHECK(std::abs(multi_projection_distance_sq(u, layers) - expected) <= 1e-9);
  CHECK_THROWS_AS(multi_projection_distance_sq(u, std::vector<Embedding>{}), Error);
}

TEST_CASE("HSIC and symmetrized K-L") {
  std::mt19937_64 rng(9);
  const Embedding a(oracle::random_orthonormal(rng, 9, 3));
  CHECK(hsic_linear(a, a) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(hsic_linear(span_of(4, {0, 1}), span_of(4, {2, 3})) == 0.0);

  CHECK(symmetrized_kl(a, a, 0.7) <= 1e-12);
  CHECK(symmetrized_kl(span_of(2, {0}), span_of(2, {1}), 1.0) == doctest::Approx(0.5));
  const Embedding b(oracle::random_orthonormal(rng, 9, 3));
  const double sigma = 0.5;
  const double d2 = d2_frobenius(a, b);
  CHECK(std::abs(symmetrized_kl(a, b, sigma) - d2 / (sigma * sigma * (sigma * sigma + 1))) <= 1e-9);
  CHECK_THROWS_AS(symmetrized_kl(a, b, 0.0), Error);
}

TEST_CASE("row normalization") {
  Matrix rows(3, 2);
  rows << 0.6, 0.8, 0.3, 0.4, 0.0, 0.0;
  const NormalizedRows r = row_normalize(rows);
  CHECK(r.rows(0, 0) == doctest::Approx(0.6));
  CHECK(r.rows(1, 0) == doctest::Approx(0.6));
  CHECK(r.rows(1, 1) == doctest::Approx(0.8));
  CHECK(r.rows.row(2).norm() == 0.0);
  CHECK(r.zero_rows == std::vector<Index>{2});
}

TEST_CASE("spectral embedding separates two weakly joined triangles") {
  const SparseMatrix l = normalized_laplacian(two_triangles(1e-3));
  const Embedding u = spectral_embedding(l, 2);
  const auto [values, vectors] = oracle::jacobi_eigen(Matrix(l));
  CHECK((u.basis().transpose() * Matrix(l) * u.basis()).trace() == doctest::Approx(values[0] + values[1]).epsilon(1e-8));
  // Oracle rows from the full decomposition.
  const Matrix rows = vectors.leftCols(2);
  double within = 0.0, across = 1e300;
  for (Index i = 0; i < 6; ++i)
    for (Index j = i + 1; j < 6; ++j) {
      const double dist = (rows.row(i) - rows.row(j)).norm();
      const double mine = (u.basis().row(i) - u.basis().row(j)).norm();
      CHECK(std::abs(dist - mine) <= 1e-8);  // same span, and the sign-fixed basis is unique up to rotation
      if ((i < 3) == (j < 3)) within = std::max(within, mine);
      else across = std::min(across, mine);
    }
  CHECK(within < across);
}

TEST_CASE("spectral embedding of K_n with k = 1 is the positive constant vector") {
  std::vector<Edge> edges;
  for (Index i = 0; i < 5; ++i)
    for (Index j = i + 1; j < 5; ++j) edges.push_back({i, j, 1.0});
  const Embedding u = spectral_embedding(normalized_laplacian(Graph::from_edges(5, edges)), 1);
  CHECK((u.basis() - Matrix::Constant(5, 1, 1.0 / std::sqrt(5.0))).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("pairwise distance matrix") {
  std::mt19937_64 rng(1);
  std::vector<Embedding> e;
  e.emplace_back(oracle::random_orthonormal(rng, 6, 2));
  e.push_back(e.front());
  e.emplace_back(oracle::random_orthonormal(rng, 6, 2));
  const Matrix d = pairwise_projection_distances(e);
  CHECK(d(0, 1) <= 1e-14);
  CHECK(d(0, 2) == d(2, 0));
  CHECK(d(0, 2) > 0.0);
  CHECK(d.diagonal().isZero());
}
