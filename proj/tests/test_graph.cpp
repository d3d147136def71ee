#include "doctest.h"
#include "mlgc/error.hpp"
#include "mlgc/graph.hpp"
#include "oracles.hpp"

using namespace mlgc;

namespace {

Graph complete_graph(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("validate_graph flags each rule") {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = w(1, 0) = 1.0;
  CHECK(validate_graph(Graph::from_dense(w)).empty());

  Matrix asym = Matrix::Zero(2, 2);
  asym(0, 1) = 1.0;
  auto v = validate_graph(Graph::from_dense(asym));
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Violation{Violation::Rule::Asymmetric, 0, 1});
  CHECK(v[0].describe() == "asymmetry at (0,1)");

  Matrix loop = w;
  loop(0, 0) = 0.5;
  v = validate_graph(Graph::from_dense(loop));
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == Violation::Rule::SelfLoop);
  CHECK(v[0].describe() == "nonzero diagonal at 0");

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 1) = neg(1, 0) = -1.0;
  v = validate_graph(Graph::from_dense(neg));
  REQUIRE(v.size() == 2);
  CHECK(v[0].rule == Violation::Rule::Negative);
}

TEST_CASE("from_edges mirrors and rejects repeats") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 2.0}, {2, 1, 0.5}});
  CHECK(g.weights().coeff(1, 0) == 2.0);
  CHECK(g.weights().coeff(1, 2) == 0.5);
  CHECK(validate_graph(g).empty());
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}, {1, 0, 1.0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3, 1.0}}), Error);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}})));
  CHECK_FALSE(is_connected(Graph::from_edges(2, std::vector<Edge>{})));
  CHECK(is_connected(complete_graph(4)));
}

TEST_CASE("degree_vector") {
  CHECK(degree_vector(complete_graph(3)).isApprox(Vector::Constant(3, 2.0)));
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
  CHECK(degree_vector(star) == (Vector(4) << 3, 1, 1, 1).finished());
  const Graph one = Graph::from_edges(2, std::vector<Edge>{{0, 1, 0.5}});
  CHECK(degree_vector(one) == (Vector(2) << 0.5, 0.5).finished());
}

TEST_CASE("normalized_laplacian small cases") {
  const Graph edge = Graph::from_edges(2, std::vector<Edge>{{0, 1, 1.0}});
  const Matrix l2 = Matrix(normalized_laplacian(edge));
  CHECK(l2 == (Matrix(2, 2) << 1, -1, -1, 1).finished());
  CHECK(Matrix(normalized_adjacency(edge)) == (Matrix(2, 2) << 0, 1, 1, 0).finished());

  const Matrix l3 = Matrix(normalized_laplacian(complete_graph(3)));
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(l3(i, j) == doctest::Approx(i == j ? 1.0 : -0.5).epsilon(1e-14));
  const auto [values, vectors] = oracle::jacobi_eigen(l3);
  CHECK(values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(values[1] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(values[2] == doctest::Approx(1.5).epsilon(1e-12));

  const Matrix a3 = Matrix(normalized_adjacency(complete_graph(3)));
  CHECK(a3(0, 0) == 0.0);
  CHECK(a3(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("normalized_laplacian rejects isolated vertices") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}});
  try {
    normalized_laplacian(g);
    FAIL("expected IsolatedVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsolatedVertex);
    CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
  }
  CHECK_THROWS_AS(normalized_adjacency(g), Error);
}

TEST_CASE("Laplacian properties on random connected graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + static_cast<Index>(oracle::uniform(rng) * 20);
    const Graph g = oracle::random_connected_graph(rng, n);
    REQUIRE(validate_graph(g).empty());
    REQUIRE(is_connected(g));
    const Matrix l = Matrix(normalized_laplacian(g));
    const Matrix a = Matrix(normalized_adjacency(g));
    CHECK((l + a - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((l - oracle::laplacian_by_definition(Matrix(g.weights()))).cwiseAbs().maxCoeff() <= 1e-12);

    const auto [values, vectors] = oracle::jacobi_eigen(l);
    CHECK(values.minCoeff() >= -1e-9);
    CHECK(values.maxCoeff() <= 2.0 + 1e-9);
    CHECK(std::abs(values[0]) <= 1e-9);
    // Null vector is D^{1/2} 1.
    Vector s = degree_vector(g).cwiseSqrt();
    s.normalize();
    CHECK(std::abs(std::abs(s.dot(vectors.col(0))) - 1.0) <= 1e-9);

    const Graph scaled(g.weights() * 3.7);
    CHECK((Matrix(normalized_laplacian(scaled)) - l).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("five-vertex weighted graph spectrum stays in [0,2]") {
  std::mt19937_64 rng(5);
  const Graph g = oracle::random_connected_graph(rng, 5, 0.6);
  const auto [values, vectors] = oracle::jacobi_eigen(Matrix(normalized_laplacian(g)));
  CHECK(values.minCoeff() >= -1e-12);
  CHECK(values.maxCoeff() <= 2.0 + 1e-12);
}

TEST_CASE("MultiLayerGraph and Partition invariants") {
  CHECK_THROWS_AS(MultiLayerGraph(std::vector<Graph>{}), Error);
  std::vector<Graph> mixed{complete_graph(3), complete_graph(4)};
  CHECK_THROWS_AS(MultiLayerGraph{mixed}, Error);
  CHECK(MultiLayerGraph({complete_graph(3), complete_graph(3)}).num_layers() == 2);

  CHECK_THROWS_AS(Partition({0, 2}, 2), Error);
  CHECK_THROWS_AS(Partition({0, 0}, 3), Error);
  const Partition p({0, 0, 2}, 3);
  CHECK(p.cluster_sizes() == std::vector<Index>{2, 0, 1});
  CHECK(Partition::from_labels({1, 0, 1}).k == 2);
}
