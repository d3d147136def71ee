#pragma once

#include <cstdint>

#include "mlgc/types.hpp"

namespace mlgc {

/// A real symmetric n x n operator, known only through products.
class SymmetricOperator {
 public:
  virtual ~SymmetricOperator() = default;
  virtual Index size() const = 0;
  /// Returns S * x for an n x b block x.
  virtual Matrix apply(const Matrix& x) const = 0;
  virtual Matrix to_dense() const = 0;
};

/// Non-owning view; the matrix must outlive the operator.
class DenseOperator final : public SymmetricOperator {
 public:
  explicit DenseOperator(const Matrix& s) : s_(s) {}
  Index size() const override { return s_.rows(); }
  Matrix apply(const Matrix& x) const override { return s_ * x; }
  Matrix to_dense() const override { return s_; }

 private:
  const Matrix& s_;
};

/// Non-owning view; the matrix must outlive the operator.
class SparseOperator final : public SymmetricOperator {
 public:
  explicit SparseOperator(const SparseMatrix& s) : s_(s) {}
  Index size() const override { return s_.rows(); }
  Matrix apply(const Matrix& x) const override { return s_ * x; }
  Matrix to_dense() const override { return Matrix(s_); }

 private:
  const SparseMatrix& s_;
};

struct EigenOptions {
  /// Relative residual target: |S v - lambda v| <= tol * max(1, |S|).
  double tol = 1e-10;
  /// Problems with n <= dense_threshold use a dense tridiagonal QR solve.
  Index dense_threshold = 512;
  /// Krylov basis cap for the thick-restarted iterative path; 0 picks a size
  /// from the block width.
  Index max_basis = 0;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Ascending eigenvalues and matching unit eigenvectors (columns).
///
/// Each column is sign-normalised so that its entry of largest magnitude is
/// nonnegative, the lowest index winning ties.
struct EigenResult {
  Vector values;
  Matrix vectors;
  /// Krylov basis size used; 0 when the dense path produced the result.
  Index basis_size = 0;
};

/// k algebraically smallest eigenpairs.
///
/// Throws KOutOfRange unless 1 <= k <= n, NotSymmetric for explicit matrices
/// that are not symmetric within 1e-10 (relative to max(1, max |s_ij|)), and
/// NoConvergence if both the block Krylov iteration and the dense fallback fail.
EigenResult smallest_k_eigenpairs(const SymmetricOperator& op, Index k, const EigenOptions& opts = {});
EigenResult smallest_k_eigenpairs(const Matrix& s, Index k, const EigenOptions& opts = {});
EigenResult smallest_k_eigenpairs(const SparseMatrix& s, Index k, const EigenOptions& opts = {});

/// Flips columns so the largest-magnitude entry (first on ties) is >= 0.
void normalize_signs(Matrix& vectors);

}  // namespace mlgc
