#include "mlgc/merging.hpp"

#include <exception>
#include <optional>
#include <sstream>

#include "mlgc/error.hpp"

namespace mlgc {

void MergeConfig::validate(std::size_t num_layers) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "merge target dimension k must be >= 1");
  if (alpha.empty()) throw Error(ErrorCode::AlphaLengthMismatch, "no alpha given");
  if (alpha.size() != 1 && alpha.size() != num_layers) {
    std::ostringstream msg;
    msg << "got " << alpha.size() << " alpha values for " << num_layers << " layers";
    throw Error(ErrorCode::AlphaLengthMismatch, msg.str());
  }
  for (double a : alpha) {
    if (!(a >= 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  }
}

LayerSpectra layer_spectra(const MultiLayerGraph& mlg, Index k, const EigenOptions& opts) {
  const auto m = static_cast<std::ptrdiff_t>(mlg.num_layers());
  if (m == 0) throw Error(ErrorCode::EmptyLayerList, "multi-layer graph has no layers");
  if (k < 1 || k >= mlg.size()) {
    std::ostringstream msg;
    msg << "k=" << k << " must satisfy 1 <= k < n=" << mlg.size();
    throw Error(ErrorCode::KOutOfRange, msg.str());
  }
  std::vector<SparseMatrix> laplacians(static_cast<std::size_t>(m));
  std::vector<std::optional<Embedding>> embeddings(static_cast<std::size_t>(m));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      laplacians[u] = normalized_laplacian(mlg.layer(u));
      embeddings[u].emplace(spectral_embedding(laplacians[u], k, opts));
    } catch (...) {
      errors[u] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  LayerSpectra out;
  out.laplacians = std::move(laplacians);
  for (auto& e : embeddings) out.embeddings.push_back(std::move(*e));
  return out;
}

ModifiedLaplacian::ModifiedLaplacian(LayerSpectra spectra, std::vector<double> alphas)
    : spectra_(std::move(spectra)), alphas_(std::move(alphas)) {
  if (spectra_.num_layers() == 0) throw Error(ErrorCode::EmptyLayerList, "no layers to merge");
  if (alphas_.size() != spectra_.num_layers()) {
    throw Error(ErrorCode::AlphaLengthMismatch, "one alpha per layer required");
  }
}

Matrix ModifiedLaplacian::apply(const Matrix& x) const {
  Matrix y = spectra_.laplacians.front() * x;
  for (std::size_t i = 1; i < spectra_.num_layers(); ++i) y += spectra_.laplacians[i] * x;
  for (std::size_t i = 0; i < spectra_.num_layers(); ++i) {
    if (alphas_[i] == 0.0) continue;
    const Matrix& u = spectra_.embeddings[i].basis();
    y.noalias() -= alphas_[i] * (u * (u.transpose() * x));
  }
  return y;
}

Matrix ModifiedLaplacian::to_dense() const {
  Matrix out = Matrix(spectra_.laplacians.front());
  for (std::size_t i = 1; i < spectra_.num_layers(); ++i) out += Matrix(spectra_.laplacians[i]);
  for (std::size_t i = 0; i < spectra_.num_layers(); ++i) {
    if (alphas_[i] == 0.0) continue;
    const Matrix& u = spectra_.embeddings[i].basis();
    out.noalias() -= alphas_[i] * (u * u.transpose());
  }
  return out;
}

ModifiedLaplacian modified_laplacian(const LayerSpectra& spectra, const MergeConfig& cfg) {
  cfg.validate(spectra.num_layers());
  if (cfg.k != spectra.k()) {
    throw Error(ErrorCode::DimensionMismatch, "merge k differs from the layer embedding dimension");
  }
  std::vector<double> alphas(spectra.num_layers());
  for (std::size_t i = 0; i < alphas.size(); ++i) alphas[i] = cfg.alpha_for(i);
  return ModifiedLaplacian(spectra, std::move(alphas));
}

ModifiedLaplacian modified_laplacian(const MultiLayerGraph& mlg, const MergeConfig& cfg,
                                     const EigenOptions& opts) {
  cfg.validate(mlg.num_layers());
  return modified_laplacian(layer_spectra(mlg, cfg.k, opts), cfg);
}

MergeResult merge_subspaces(const LayerSpectra& spectra, const MergeConfig& cfg, const EigenOptions& opts) {
  const ModifiedLaplacian lmod = modified_laplacian(spectra, cfg);
  EigenResult eig = smallest_k_eigenpairs(lmod, cfg.k, opts);
  return {Embedding(std::move(eig.vectors)), std::move(eig.values)};
}

Embedding representative_subspace(const LayerSpectra& spectra, const MergeConfig& cfg,
                                  const EigenOptions& opts) {
  return merge_subspaces(spectra, cfg, opts).subspace;
}

Embedding representative_subspace(const MultiLayerGraph& mlg, const MergeConfig& cfg,
                                  const EigenOptions& opts) {
  cfg.validate(mlg.num_layers());
  return representative_subspace(layer_spectra(mlg, cfg.k, opts), cfg, opts);
}

double merge_objective(const Embedding& u, const LayerSpectra& spectra, const MergeConfig& cfg) {
  cfg.validate(spectra.num_layers());
  const Matrix& b = u.basis();
  const double k = static_cast<double>(u.k());
  double value = 0.0;
  for (std::size_t i = 0; i < spectra.num_layers(); ++i) {
    value += (b.transpose() * (spectra.laplacians[i] * b)).trace();
    value += cfg.alpha_for(i) * (k - projector_overlap(u, spectra.embeddings[i]));
  }
  return value;
}

}  // namespace mlgc
