#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlgc/types.hpp"

namespace mlgc {

struct Edge {
  Index i = 0;
  Index j = 0;
  double weight = 0.0;
};

/// Weighted undirected graph over vertices 0..n-1.
///
/// The adjacency is stored in full (both triangles). Construction does not
/// validate; use validate_graph() to check the symmetric / nonnegative /
/// zero-diagonal invariants.
class Graph {
 public:
  Graph() = default;
  explicit Graph(SparseMatrix weights);

  /// Builds from undirected edges stored once each; (j,i) is mirrored.
  /// Throws InvalidArgument on out-of-range indices or repeated pairs.
  static Graph from_edges(Index n, std::span<const Edge> edges);
  /// Takes a dense adjacency as-is (no mirroring, zeros dropped).
  static Graph from_dense(const Matrix& weights);

  Index size() const { return weights_.rows(); }
  const SparseMatrix& weights() const { return weights_; }

  /// Upper-triangle edges (i < j), ordered by (i, j).
  std::vector<Edge> edges() const;

 private:
  SparseMatrix weights_;
};

class MultiLayerGraph {
 public:
  MultiLayerGraph() = default;
  /// Throws EmptyLayerList if layers is empty, DimensionMismatch if sizes differ.
  explicit MultiLayerGraph(std::vector<Graph> layers);

  std::size_t num_layers() const { return layers_.size(); }
  Index size() const { return layers_.empty() ? 0 : layers_.front().size(); }
  const Graph& layer(std::size_t i) const { return layers_.at(i); }
  const std::vector<Graph>& layers() const { return layers_; }

 private:
  std::vector<Graph> layers_;
};

/// Hard assignment of n vertices to clusters 0..k-1. Empty clusters allowed.
struct Partition {
  std::vector<int> labels;
  int k = 1;

  Partition() = default;
  /// Throws InvalidArgument unless k >= 1, k <= n and every label is in [0,k).
  Partition(std::vector<int> labels, int k);
  /// k inferred as max(label) + 1.
  static Partition from_labels(std::vector<int> labels);

  Index size() const { return static_cast<Index>(labels.size()); }
  std::vector<Index> cluster_sizes() const;
};

struct Violation {
  enum class Rule { EmptyGraph, NotSquare, Asymmetric, Negative, NonFinite, SelfLoop };
  Rule rule;
  Index i = 0;
  Index j = 0;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate_graph(const Graph& g);

/// Breadth-first reachability over nonzero weights.
bool is_connected(const Graph& g);

Vector degree_vector(const Graph& g);

/// D^{-1/2} (D - W) D^{-1/2}. Throws IsolatedVertex on a zero degree.
SparseMatrix normalized_laplacian(const Graph& g);

/// D^{-1/2} W D^{-1/2}. Throws IsolatedVertex on a zero degree.
SparseMatrix normalized_adjacency(const Graph& g);

}  // namespace mlgc
