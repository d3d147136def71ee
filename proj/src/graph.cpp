#include "mlgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "mlgc/error.hpp"

namespace mlgc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyLayerList: return "EmptyLayerList";
    case ErrorCode::NonpositiveSigma: return "NonpositiveSigma";
    case ErrorCode::AlphaLengthMismatch: return "AlphaLengthMismatch";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::InvalidDataset: return "InvalidDataset";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Graph::Graph(SparseMatrix weights) : weights_(std::move(weights)) {
  weights_.makeCompressed();
}

Graph Graph::from_edges(Index n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
  std::set<std::pair<Index, Index>> seen;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.i << "," << e.j << ") out of range for n=" << n;
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    const auto key = std::minmax(e.i, e.j);
    if (!seen.insert(key).second) {
      std::ostringstream msg;
      msg << "edge (" << key.first << "," << key.second << ") listed twice";
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    triplets.emplace_back(e.i, e.j, e.weight);
    if (e.i != e.j) triplets.emplace_back(e.j, e.i, e.weight);
  }
  SparseMatrix w(n, n);
  w.setFromTriplets(triplets.begin(), triplets.end());
  return Graph(std::move(w));
}

Graph Graph::from_dense(const Matrix& weights) {
  return Graph(weights.sparseView(0.0, 0.0));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Index col = 0; col < weights_.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(weights_, col); it; ++it) {
      if (it.row() < it.col()) out.push_back({it.row(), it.col(), it.value()});
    }
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return out;
}

MultiLayerGraph::MultiLayerGraph(std::vector<Graph> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw Error(ErrorCode::EmptyLayerList, "multi-layer graph has no layers");
  const Index n = layers_.front().size();
  for (std::size_t i = 1; i < layers_.size(); ++i) {
    if (layers_[i].size() != n) {
      std::ostringstream msg;
      msg << "layer " << i << " has " << layers_[i].size() << " vertices, expected " << n;
      throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
  }
}

Partition::Partition(std::vector<int> l, int k_) : labels(std::move(l)), k(k_) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "partition needs k >= 1");
  if (static_cast<std::size_t>(k) > labels.size()) {
    throw Error(ErrorCode::InvalidArgument, "partition has more clusters than vertices");
  }
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] >= k) {
      std::ostringstream msg;
      msg << "label " << labels[v] << " of vertex " << v << " outside [0," << k << ")";
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
  }
}

Partition Partition::from_labels(std::vector<int> l) {
  const int k = l.empty() ? 1 : *std::max_element(l.begin(), l.end()) + 1;
  return Partition(std::move(l), k);
}

std::vector<Index> Partition::cluster_sizes() const {
  std::vector<Index> sizes(static_cast<std::size_t>(k), 0);
  for (int c : labels) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (rule) {
    case Rule::EmptyGraph: out << "graph has no vertices"; break;
    case Rule::NotSquare: out << "adjacency is not square"; break;
    case Rule::Asymmetric: out << "asymmetry at (" << i << "," << j << ")"; break;
    case Rule::Negative: out << "negative weight at (" << i << "," << j << ")"; break;
    case Rule::NonFinite: out << "non-finite weight at (" << i << "," << j << ")"; break;
    case Rule::SelfLoop: out << "nonzero diagonal at " << i; break;
  }
  return out.str();
}

std::vector<Violation> validate_graph(const Graph& g) {
  std::vector<Violation> out;
  const SparseMatrix& w = g.weights();
  if (w.rows() != w.cols()) {
    out.push_back({Violation::Rule::NotSquare, w.rows(), w.cols()});
    return out;
  }
  if (w.rows() < 1) {
    out.push_back({Violation::Rule::EmptyGraph, 0, 0});
    return out;
  }
  std::set<std::pair<Index, Index>> asymmetric;
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) {
      const Index i = it.row();
      const Index j = it.col();
      const double v = it.value();
      if (!std::isfinite(v)) out.push_back({Violation::Rule::NonFinite, i, j});
      if (v < 0.0) out.push_back({Violation::Rule::Negative, i, j});
      if (i == j) {
        if (v != 0.0) out.push_back({Violation::Rule::SelfLoop, i, i});
      } else if (w.coeff(j, i) != v) {
        asymmetric.insert(std::minmax(i, j));
      }
    }
  }
  for (const auto& [i, j] : asymmetric) out.push_back({Violation::Rule::Asymmetric, i, j});
  return out;
}

bool is_connected(const Graph& g) {
  const SparseMatrix& w = g.weights();
  const Index n = w.rows();
  if (n == 0) return false;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::queue<Index> frontier;
  frontier.push(0);
  visited[0] = 1;
  Index reached = 1;
  while (!frontier.empty()) {
    const Index v = frontier.front();
    frontier.pop();
    // Column v lists the neighbours of v (storage is symmetric).
    for (SparseMatrix::InnerIterator it(w, v); it; ++it) {
      const auto u = static_cast<std::size_t>(it.row());
      if (it.value() != 0.0 && !visited[u]) {
        visited[u] = 1;
        ++reached;
        frontier.push(it.row());
      }
    }
  }
  return reached == n;
}

Vector degree_vector(const Graph& g) {
  const SparseMatrix& w = g.weights();
  Vector d = Vector::Zero(w.rows());
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) d[it.row()] += it.value();
  }
  return d;
}

namespace {

Vector inverse_sqrt_degrees(const Graph& g) {
  const Vector d = degree_vector(g);
  Vector s(d.size());
  for (Index i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) {
      std::ostringstream msg;
      msg << "vertex " << i << " has zero degree";
      throw Error(ErrorCode::IsolatedVertex, msg.str());
    }
    s[i] = 1.0 / std::sqrt(d[i]);
  }
  return s;
}

}  // namespace

SparseMatrix normalized_adjacency(const Graph& g) {
  const Vector s = inverse_sqrt_degrees(g);
  SparseMatrix a = g.weights();
  for (Index col = 0; col < a.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
      it.valueRef() = it.value() * s[it.row()] * s[it.col()];
    }
  }
  return a;
}

SparseMatrix normalized_laplacian(const Graph& g) {
  const Vector s = inverse_sqrt_degrees(g);
  const SparseMatrix& w = g.weights();
  const Index n = w.rows();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(w.nonZeros() + n));
  // Duplicate triplets are summed, so a stored w_ii contributes -w_ii/d_i here.
  for (Index i = 0; i < n; ++i) triplets.emplace_back(i, i, 1.0);
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) {
      triplets.emplace_back(it.row(), it.col(), -(it.value() * s[it.row()] * s[it.col()]));
    }
  }
  SparseMatrix l(n, n);
  l.setFromTriplets(triplets.begin(), triplets.end());
  return l;
}

}  // namespace mlgc
