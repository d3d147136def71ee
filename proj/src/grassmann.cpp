#include "mlgc/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mlgc/error.hpp"

namespace mlgc {

Embedding::Embedding(Matrix basis) : basis_(std::move(basis)) {
  const Index n = basis_.rows();
  const Index k = basis_.cols();
  if (k < 1 || k >= n) {
    std::ostringstream msg;
    msg << "embedding needs 1 <= k < n, got n=" << n << " k=" << k;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const double err = (basis_.transpose() * basis_ - Matrix::Identity(k, k)).norm();
  if (!(err <= 1e-8)) {
    std::ostringstream msg;
    msg << "embedding columns are not orthonormal (|B^T B - I|_F = " << err << ")";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

Embedding spectral_embedding(const SymmetricOperator& laplacian, Index k, const EigenOptions& opts) {
  if (k < 1 || k >= laplacian.size()) {
    std::ostringstream msg;
    msg << "embedding dimension " << k << " must satisfy 1 <= k < n=" << laplacian.size();
    throw Error(ErrorCode::KOutOfRange, msg.str());
  }
  return Embedding(smallest_k_eigenpairs(laplacian, k, opts).vectors);
}

Embedding spectral_embedding(const SparseMatrix& laplacian, Index k, const EigenOptions& opts) {
  if (k < 1 || k >= laplacian.rows()) {
    std::ostringstream msg;
    msg << "embedding dimension " << k << " must satisfy 1 <= k < n=" << laplacian.rows();
    throw Error(ErrorCode::KOutOfRange, msg.str());
  }
  return Embedding(smallest_k_eigenpairs(laplacian, k, opts).vectors);
}

NormalizedRows row_normalize(const Matrix& rows, double eps) {
  NormalizedRows out{rows, {}};
  for (Index r = 0; r < rows.rows(); ++r) {
    const double norm = rows.row(r).norm();
    if (norm < eps) {
      out.rows.row(r).setZero();
      out.zero_rows.push_back(r);
    } else {
      out.rows.row(r) /= norm;
    }
  }
  return out;
}

NormalizedRows row_normalize(const Embedding& e, double eps) { return row_normalize(e.basis(), eps); }

namespace {

void check_pair(const Embedding& a, const Embedding& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    std::ostringstream msg;
    msg << "subspaces live in different Grassmannians: G(" << a.k() << "," << a.n() << ") vs G("
        << b.k() << "," << b.n() << ")";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

}  // namespace

PrincipalAngles principal_angles(const Embedding& a, const Embedding& b) {
  check_pair(a, b);
  const Matrix overlap = a.basis().transpose() * b.basis();
  Eigen::JacobiSVD<Matrix> svd(overlap);
  Vector c = svd.singularValues().cwiseMax(0.0).cwiseMin(1.0);
  std::sort(c.data(), c.data() + c.size(), std::greater<>());
  return {c};
}

double projection_distance(const Embedding& a, const Embedding& b) {
  check_pair(a, b);
  // The singular values of (I - A A^T) B are the sines of the principal
  // angles, so the Frobenius norm of that residual is the distance. This
  // stays accurate for nearly equal subspaces, where 1 - cos^2 cancels.
  const Matrix& ba = a.basis();
  const Matrix& bb = b.basis();
  return (bb - ba * (ba.transpose() * bb)).norm();
}

double projector_overlap(const Embedding& a, const Embedding& b) {
  check_pair(a, b);
  return (a.basis().transpose() * b.basis()).squaredNorm();
}

double multi_projection_distance_sq(const Embedding& u, std::span<const Embedding> layers) {
  if (layers.empty()) throw Error(ErrorCode::EmptyLayerList, "no layer subspaces given");
  double overlap = 0.0;
  for (const Embedding& layer : layers) overlap += projector_overlap(u, layer);
  const double km = static_cast<double>(u.k()) * static_cast<double>(layers.size());
  return std::max(0.0, km - overlap);
}

double hsic_linear(const Embedding& a, const Embedding& b) { return projector_overlap(a, b); }

double symmetrized_kl(const Embedding& a, const Embedding& b, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::NonpositiveSigma, "noise level sigma must be positive");
  const double s2 = sigma * sigma;
  const double k = static_cast<double>(a.k());
  return std::max(0.0, 2.0 * k - 2.0 * projector_overlap(a, b)) / (2.0 * s2 * (s2 + 1.0));
}

Matrix pairwise_projection_distances(std::span<const Embedding> embeddings) {
  const auto m = static_cast<Index>(embeddings.size());
  Matrix d = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      d(i, j) = d(j, i) = projection_distance(embeddings[static_cast<std::size_t>(i)],
                                              embeddings[static_cast<std::size_t>(j)]);
    }
  }
  return d;
}

}  // namespace mlgc
