#include "mlgc/clustering.hpp"

#include <sstream>

#include "mlgc/error.hpp"

namespace mlgc {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ScSingle: return "sc-single";
    case Method::ScSum: return "sc-sum";
    case Method::ScKSum: return "sc-ksum";
    case Method::ScMl: return "sc-ml";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "sc-single") return Method::ScSingle;
  if (name == "sc-sum") return Method::ScSum;
  if (name == "sc-ksum") return Method::ScKSum;
  if (name == "sc-ml") return Method::ScMl;
  return std::nullopt;
}

namespace {

void check_graph(const Graph& g, const SpectralOptions& opts, std::size_t layer) {
  const Vector d = degree_vector(g);
  for (Index i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) {
      std::ostringstream msg;
      msg << "layer " << layer << ": vertex " << i << " has zero degree";
      throw Error(ErrorCode::IsolatedVertex, msg.str());
    }
  }
  if (!opts.allow_disconnected && !is_connected(g)) {
    std::ostringstream msg;
    msg << "layer " << layer << " is not connected";
    throw Error(ErrorCode::DisconnectedGraph, msg.str());
  }
}

// Negated sum of spectral kernels, -sum_i U_i U_i^T: its smallest
// eigenvectors are the leading eigenvectors of the kernel sum.
class NegatedKernelSum final : public SymmetricOperator {
 public:
  explicit NegatedKernelSum(const std::vector<Embedding>& parts) : parts_(parts) {}
  Index size() const override { return parts_.front().n(); }
  Matrix apply(const Matrix& x) const override {
    Matrix y = Matrix::Zero(x.rows(), x.cols());
    for (const Embedding& e : parts_) y.noalias() -= e.basis() * (e.basis().transpose() * x);
    return y;
  }
  Matrix to_dense() const override {
    Matrix out = Matrix::Zero(size(), size());
    for (const Embedding& e : parts_) out.noalias() -= e.basis() * e.basis().transpose();
    return out;
  }

 private:
  const std::vector<Embedding>& parts_;
};

}  // namespace

void check_layers(const MultiLayerGraph& mlg, const SpectralOptions& opts) {
  for (std::size_t i = 0; i < mlg.num_layers(); ++i) check_graph(mlg.layer(i), opts, i);
}

ClusterResult cluster_embedding(const Embedding& u, const KMeansConfig& kmcfg, Method method, double row_eps) {
  const NormalizedRows rows = row_normalize(u, row_eps);
  KMeansResult km = kmeans_restarts(rows.rows, kmcfg);
  ClusterResult out;
  out.partition = Partition(std::move(km.best.labels), static_cast<int>(kmcfg.k));
  out.objective = km.best.objective;
  out.restarts_summary = std::move(km.restart_objectives);
  out.method = method;
  return out;
}

ClusterResult sc_single(const Graph& g, Index k, KMeansConfig kmcfg, const SpectralOptions& opts) {
  check_graph(g, opts, 0);
  kmcfg.k = k;
  const SparseMatrix l = normalized_laplacian(g);
  return cluster_embedding(spectral_embedding(l, k, opts.eigen), kmcfg, Method::ScSingle, opts.row_eps);
}

std::vector<ClusterResult> sc_single_all(const MultiLayerGraph& mlg, Index k, const KMeansConfig& kmcfg,
                                         const SpectralOptions& opts) {
  std::vector<ClusterResult> out;
  for (const Graph& g : mlg.layers()) out.push_back(sc_single(g, k, kmcfg, opts));
  return out;
}

std::size_t best_result(std::span<const ClusterResult> results, const Partition& truth, Metric metric) {
  if (results.empty()) throw Error(ErrorCode::EmptyLayerList, "no clustering results to rank");
  std::size_t best = 0;
  double best_score = evaluate(metric, results[0].partition, truth);
  for (std::size_t i = 1; i < results.size(); ++i) {
    const double s = evaluate(metric, results[i].partition, truth);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

ClusterResult sc_sum(const MultiLayerGraph& mlg, Index k, KMeansConfig kmcfg, const SpectralOptions& opts) {
  check_layers(mlg, opts);
  SparseMatrix w = normalized_adjacency(mlg.layer(0));
  for (std::size_t i = 1; i < mlg.num_layers(); ++i) w += normalized_adjacency(mlg.layer(i));
  w.prune([](Index, Index, double v) { return v > 0.0; });
  const Graph summed(std::move(w));
  kmcfg.k = k;
  const SparseMatrix l = normalized_laplacian(summed);
  ClusterResult out =
      cluster_embedding(spectral_embedding(l, k, opts.eigen), kmcfg, Method::ScSum, opts.row_eps);
  return out;
}

ClusterResult sc_ksum(const LayerSpectra& spectra, KMeansConfig kmcfg, const SpectralOptions& opts) {
  if (spectra.num_layers() == 0) throw Error(ErrorCode::EmptyLayerList, "no layers given");
  kmcfg.k = spectra.k();
  const NegatedKernelSum kernel(spectra.embeddings);
  EigenResult eig = smallest_k_eigenpairs(kernel, spectra.k(), opts.eigen);
  return cluster_embedding(Embedding(std::move(eig.vectors)), kmcfg, Method::ScKSum, opts.row_eps);
}

ClusterResult sc_ksum(const MultiLayerGraph& mlg, Index k, KMeansConfig kmcfg, const SpectralOptions& opts) {
  check_layers(mlg, opts);
  return sc_ksum(layer_spectra(mlg, k, opts.eigen), kmcfg, opts);
}

ClusterResult sc_ml(const LayerSpectra& spectra, const MergeConfig& cfg, KMeansConfig kmcfg,
                    const SpectralOptions& opts) {
  kmcfg.k = cfg.k;
  const Embedding u = representative_subspace(spectra, cfg, opts.eigen);
  return cluster_embedding(u, kmcfg, Method::ScMl, opts.row_eps);
}

ClusterResult sc_ml(const MultiLayerGraph& mlg, const MergeConfig& cfg, KMeansConfig kmcfg,
                    const SpectralOptions& opts) {
  cfg.validate(mlg.num_layers());
  check_layers(mlg, opts);
  return sc_ml(layer_spectra(mlg, cfg.k, opts.eigen), cfg, kmcfg, opts);
}

}  // namespace mlgc
