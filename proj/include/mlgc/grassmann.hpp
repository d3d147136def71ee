#pragma once

#include <span>
#include <vector>

#include "mlgc/eigensolver.hpp"
#include "mlgc/types.hpp"

namespace mlgc {

/// An n x k matrix with orthonormal columns; a point on the Grassmann
/// manifold G(k, n) through the span of its columns.
class Embedding {
 public:
  /// Throws InvalidArgument unless 1 <= k < n and |B^T B - I|_F <= 1e-8.
  explicit Embedding(Matrix basis);

  const Matrix& basis() const { return basis_; }
  Index n() const { return basis_.rows(); }
  Index k() const { return basis_.cols(); }

  /// Orthogonal projector B B^T (n x n; intended for small n).
  Matrix projector() const { return basis_ * basis_.transpose(); }

 private:
  Matrix basis_;
};

/// Cosines of the principal angles, descending, clamped to [0, 1].
struct PrincipalAngles {
  Vector cosines;
};

/// Smallest-k eigenvectors of a Laplacian-like operator as an embedding.
Embedding spectral_embedding(const SparseMatrix& laplacian, Index k, const EigenOptions& opts = {});
Embedding spectral_embedding(const SymmetricOperator& laplacian, Index k, const EigenOptions& opts = {});

struct NormalizedRows {
  Matrix rows;
  /// Rows whose norm was below eps; they are left as zero rows.
  std::vector<Index> zero_rows;
};

NormalizedRows row_normalize(const Matrix& rows, double eps = 1e-12);
NormalizedRows row_normalize(const Embedding& e, double eps = 1e-12);

PrincipalAngles principal_angles(const Embedding& a, const Embedding& b);

/// (sum_i sin^2 theta_i)^{1/2} over the principal angles.
double projection_distance(const Embedding& a, const Embedding& b);

/// trace(A A^T B B^T), evaluated as |A^T B|_F^2.
double projector_overlap(const Embedding& a, const Embedding& b);

/// k M - sum_i trace(U U^T U_i U_i^T) = sum_i d_proj(U, U_i)^2.
double multi_projection_distance_sq(const Embedding& u, std::span<const Embedding> layers);

/// Empirical HSIC with linear kernels on the two embeddings; equals k - d_proj^2.
double hsic_linear(const Embedding& a, const Embedding& b);

/// Symmetrised K-L divergence between the two zero-mean factor-analysis
/// models with loadings a, b and isotropic noise sigma^2.
double symmetrized_kl(const Embedding& a, const Embedding& b, double sigma);

/// M x M matrix of pairwise projection distances.
Matrix pairwise_projection_distances(std::span<const Embedding> embeddings);

}  // namespace mlgc
