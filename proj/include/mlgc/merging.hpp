#pragma once

#include <vector>

#include "mlgc/eigensolver.hpp"
#include "mlgc/graph.hpp"
#include "mlgc/grassmann.hpp"

namespace mlgc {

/// Regularisation weights and target dimension for subspace merging.
///
/// `alpha` holds either one value shared by all layers or one value per
/// layer. With per-layer weights the merged objective is
///   sum_i tr(U^T L_i U) + sum_i alpha_i (k - tr(U U^T U_i U_i^T)),
/// which reduces to the shared-weight form when all alpha_i are equal.
struct MergeConfig {
  std::vector<double> alpha{0.5};
  Index k = 2;

  static MergeConfig scalar(double alpha, Index k) { return {{alpha}, k}; }

  /// Throws InvalidArgument on negative weights or k < 1,
  /// AlphaLengthMismatch if a per-layer vector has the wrong length.
  void validate(std::size_t num_layers) const;
  double alpha_for(std::size_t layer) const { return alpha.size() == 1 ? alpha.front() : alpha.at(layer); }
};

/// Per-layer normalized Laplacians and their k-dimensional spectral embeddings.
struct LayerSpectra {
  std::vector<SparseMatrix> laplacians;
  std::vector<Embedding> embeddings;

  std::size_t num_layers() const { return laplacians.size(); }
  Index size() const { return laplacians.empty() ? 0 : laplacians.front().rows(); }
  Index k() const { return embeddings.empty() ? 0 : embeddings.front().k(); }
};

/// Layers are independent and solved in parallel.
LayerSpectra layer_spectra(const MultiLayerGraph& mlg, Index k, const EigenOptions& opts = {});

/// sum_i L_i - sum_i alpha_i U_i U_i^T, applied without forming the dense
/// low-rank part. Layers with alpha_i == 0 contribute only their Laplacian.
class ModifiedLaplacian final : public SymmetricOperator {
 public:
  ModifiedLaplacian(LayerSpectra spectra, std::vector<double> alphas);

  Index size() const override { return spectra_.size(); }
  Matrix apply(const Matrix& x) const override;
  Matrix to_dense() const override;

  const LayerSpectra& spectra() const { return spectra_; }
  const std::vector<double>& alphas() const { return alphas_; }

 private:
  LayerSpectra spectra_;
  std::vector<double> alphas_;
};

ModifiedLaplacian modified_laplacian(const MultiLayerGraph& mlg, const MergeConfig& cfg,
                                     const EigenOptions& opts = {});
ModifiedLaplacian modified_laplacian(const LayerSpectra& spectra, const MergeConfig& cfg);

struct MergeResult {
  Embedding subspace;
  /// The k smallest eigenvalues of the modified Laplacian (may be negative).
  Vector eigenvalues;
};

MergeResult merge_subspaces(const LayerSpectra& spectra, const MergeConfig& cfg, const EigenOptions& opts = {});

/// Representative subspace: smallest-k eigenvectors of the modified Laplacian.
Embedding representative_subspace(const MultiLayerGraph& mlg, const MergeConfig& cfg,
                                  const EigenOptions& opts = {});
Embedding representative_subspace(const LayerSpectra& spectra, const MergeConfig& cfg,
                                  const EigenOptions& opts = {});

/// Value of the merging objective at u (see MergeConfig).
double merge_objective(const Embedding& u, const LayerSpectra& spectra, const MergeConfig& cfg);

}  // namespace mlgc
