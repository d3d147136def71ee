#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mlgc/eigensolver.hpp"
#include "mlgc/graph.hpp"
#include "mlgc/grassmann.hpp"
#include "mlgc/kmeans.hpp"
#include "mlgc/merging.hpp"
#include "mlgc/metrics.hpp"

namespace mlgc {

enum class Method { ScSingle, ScSum, ScKSum, ScMl };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct ClusterResult {
  Partition partition;
  /// Within-cluster sum of squares of the best restart.
  double objective = 0.0;
  std::vector<double> restarts_summary;
  Method method = Method::ScSingle;
};

struct SpectralOptions {
  EigenOptions eigen;
  double row_eps = 1e-12;
  /// Disconnected layers raise DisconnectedGraph unless this is set.
  /// Isolated vertices are always an error.
  bool allow_disconnected = false;
};

/// Row-normalise the embedding and run k-means on the rows.
ClusterResult cluster_embedding(const Embedding& u, const KMeansConfig& kmcfg, Method method,
                                double row_eps = 1e-12);

/// Normalized spectral clustering of a single graph.
ClusterResult sc_single(const Graph& g, Index k, KMeansConfig kmcfg, const SpectralOptions& opts = {});

/// sc_single on every layer, in layer order.
std::vector<ClusterResult> sc_single_all(const MultiLayerGraph& mlg, Index k, const KMeansConfig& kmcfg,
                                         const SpectralOptions& opts = {});

/// Index of the result scoring highest on `metric` against `truth`
/// (first one on ties).
std::size_t best_result(std::span<const ClusterResult> results, const Partition& truth, Metric metric);

/// Spectral clustering of the graph whose adjacency is the sum of the
/// layers' normalized adjacencies.
ClusterResult sc_sum(const MultiLayerGraph& mlg, Index k, KMeansConfig kmcfg, const SpectralOptions& opts = {});

/// Spectral clustering on the sum of the layers' spectral kernels U_i U_i^T,
/// using the k leading eigenvectors of the summed kernel.
ClusterResult sc_ksum(const MultiLayerGraph& mlg, Index k, KMeansConfig kmcfg, const SpectralOptions& opts = {});
ClusterResult sc_ksum(const LayerSpectra& spectra, KMeansConfig kmcfg, const SpectralOptions& opts = {});

/// Multi-layer spectral clustering through the representative subspace of
/// the modified Laplacian.
ClusterResult sc_ml(const MultiLayerGraph& mlg, const MergeConfig& cfg, KMeansConfig kmcfg,
                    const SpectralOptions& opts = {});
ClusterResult sc_ml(const LayerSpectra& spectra, const MergeConfig& cfg, KMeansConfig kmcfg,
                    const SpectralOptions& opts = {});

/// Throws DisconnectedGraph / IsolatedVertex as configured in opts.
void check_layers(const MultiLayerGraph& mlg, const SpectralOptions& opts);

}  // namespace mlgc
